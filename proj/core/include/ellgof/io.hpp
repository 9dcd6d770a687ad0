#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace ellgof {

struct CsvTable {
    std::vector<std::string> header;  // empty when the file had none
    Eigen::MatrixXd data;
};

// Comma-separated numeric table. A header row is detected automatically: if
// any field of the first row does not parse as a number, it is taken as the
// column names. Ragged rows or non-numeric data cells raise data_error with
// the row and column position.
CsvTable read_csv(const std::string& path);

// Writes with 17 significant digits so a read round-trips bit for bit.
void write_csv(const std::string& path, const Eigen::MatrixXd& data,
               const std::vector<std::string>& header = {});

}  // namespace ellgof
