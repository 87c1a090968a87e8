#include "scp/dataset.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace scp {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(field);
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

}  // namespace

Dataset load_dataset(const std::string& path, bool has_header,
                     char delimiter) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open dataset: " + path);

  Dataset ds;
  std::string line;
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  std::size_t cols = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;

    const auto fields = split(t, delimiter);
    if (ds.variable_names.empty() && rows.empty()) {
      cols = fields.size();
      if (has_header) {
        std::set<std::string> seen;
        for (const auto& f : fields) {
          const std::string name = trim(f);
          if (name.empty())
            throw ValidationError("empty column name in header of " + path);
          if (!seen.insert(name).second)
            throw ValidationError("duplicate variable name '" + name +
                                  "' in " + path);
          ds.variable_names.push_back(name);
        }
        continue;
      }
      for (std::size_t k = 0; k < cols; ++k)
        ds.variable_names.push_back("x" + std::to_string(k + 1));
    }

    if (fields.size() != cols)
      throw ValidationError("line " + std::to_string(line_no) + " of " + path +
                            " has " + std::to_string(fields.size()) +
                            " fields, expected " + std::to_string(cols));
    std::vector<double> row;
    row.reserve(cols);
    for (std::size_t k = 0; k < cols; ++k) {
      const std::string cell = trim(fields[k]);
      if (cell.empty())
        throw ValidationError("missing value at line " +
                              std::to_string(line_no) + ", column '" +
                              ds.variable_names[k] + "' of " + path);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || !std::isfinite(v))
        throw ValidationError("non-numeric value '" + cell + "' at line " +
                              std::to_string(line_no) + ", column '" +
                              ds.variable_names[k] + "' of " + path);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw ValidationError("dataset " + path + " has no rows");

  ds.values.resize(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      ds.values(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  ds.standardized = false;
  return ds;
}

Dataset standardize(const Dataset& data) {
  Dataset out = data;
  const int n = data.n();
  for (int j = 0; j < data.d(); ++j) {
    const double mean = data.values.col(j).mean();
    const double var =
        (data.values.col(j).array() - mean).square().sum() / n;
    if (var <= 0.0 || !std::isfinite(var))
      throw ValidationError("constant column '" + data.variable_names[j] +
                            "' cannot be standardized");
    out.values.col(j) =
        (data.values.col(j).array() - mean) / std::sqrt(var);
  }
  out.standardized = true;
  return out;
}

}  // namespace scp
