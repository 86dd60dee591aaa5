#include "mosa/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mosa::csv {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

struct Writer::Impl {
    std::ofstream out;
};

Writer::Writer(const std::filesystem::path& path) : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
}

Writer::~Writer() { delete impl_; }

namespace {

void write_line(std::ofstream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace

void Writer::header(const std::vector<std::string>& columns) {
    write_line(impl_->out, columns);
}

void Writer::row(const std::vector<std::string>& cells) {
    write_line(impl_->out, cells);
}

Table read_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    Table table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

}  // namespace mosa::csv
