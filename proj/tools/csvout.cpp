#include "csvout.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace eigenstrata::tools {

void Table::add(const std::string& name, std::vector<double> values) {
    if (!data.empty() && values.size() != rows()) throw std::invalid_argument("column " + name + " has wrong length");
    columns.push_back(name);
    data.push_back(std::move(values));
}

std::string format_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += t.columns[c];
    }
    out += '\n';
    char buf[64];
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.data.size(); ++c) {
            if (c) out += ',';
            const double v = t.data[c][r];
            if (std::isnan(v))
                out += "nan";
            else {
                std::snprintf(buf, sizeof buf, "%.12e", v);
                out += buf;
            }
        }
        out += '\n';
    }
    return out;
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    const fs::path tmp = p.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << content;
        if (!f) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, p);
}

}  // namespace eigenstrata::tools
