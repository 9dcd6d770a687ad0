#include "ellgof/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ellgof/errors.hpp"

namespace ellgof {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // Trim surrounding whitespace; embedded quoting is not supported.
        std::size_t a = field.find_first_not_of(" \t\r");
        std::size_t b = field.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? std::string() : field.substr(a, b - a + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back(std::string());
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stod(s, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == s.size();
}

}  // namespace

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open '" + path + "'");

    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(split_fields(line));
    }
    if (rows.empty()) throw data_error("'" + path + "' contains no data");

    CsvTable table;
    std::size_t first_data = 0;
    double probe;
    for (const std::string& f : rows[0]) {
        if (!parse_double(f, probe)) {
            table.header = rows[0];
            first_data = 1;
            break;
        }
    }
    if (first_data == rows.size()) throw data_error("'" + path + "' has a header but no data rows");

    const std::size_t cols = rows[first_data].size();
    table.data.resize(rows.size() - first_data, cols);
    for (std::size_t r = first_data; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw data_error("'" + path + "' row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " fields, expected " +
                             std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            double v;
            if (!parse_double(rows[r][c], v)) {
                throw data_error("'" + path + "' row " + std::to_string(r + 1) + " column " +
                                 std::to_string(c + 1) + ": '" + rows[r][c] + "' is not a number");
            }
            table.data(r - first_data, c) = v;
        }
    }
    return table;
}

void write_csv(const std::string& path, const Eigen::MatrixXd& data,
               const std::vector<std::string>& header) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write '" + path + "'");
    if (!header.empty()) {
        if (static_cast<Eigen::Index>(header.size()) != data.cols()) {
            throw usage_error("write_csv: header width does not match the data");
        }
        for (std::size_t c = 0; c < header.size(); ++c) {
            out << (c ? "," : "") << header[c];
        }
        out << '\n';
    }
    char buf[64];
    for (Eigen::Index r = 0; r < data.rows(); ++r) {
        for (Eigen::Index c = 0; c < data.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", data(r, c));
            out << (c ? "," : "") << buf;
        }
        out << '\n';
    }
    if (!out) throw data_error("failed while writing '" + path + "'");
}

}  // namespace ellgof
