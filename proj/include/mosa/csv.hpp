#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mosa::csv {

// Shortest round-trippable decimal form (up to 17 significant digits).
std::string format_double(double value);

class Writer {
public:
    explicit Writer(const std::filesystem::path& path);
    ~Writer();
    Writer(const Writer&) = delete;
    Writer& operator=(const Writer&) = delete;

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);

private:
    struct Impl;
    Impl* impl_;
};

// Whole-file read: header cells, then one vector of cells per data row.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
Table read_table(const std::filesystem::path& path);

}  // namespace mosa::csv
