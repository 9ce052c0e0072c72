#pragma once

#include <string>
#include <vector>

namespace eigenstrata::tools {

// column-major numeric table; NaN cells are written as "nan"
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // data[c][row]

    void add(const std::string& name, std::vector<double> values);
    std::size_t rows() const { return data.empty() ? 0 : data.front().size(); }
};

std::string format_csv(const Table& t);

// writes path.tmp then renames over path
void write_atomic(const std::string& path, const std::string& content);

}  // namespace eigenstrata::tools
