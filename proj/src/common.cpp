#include "scp/common.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace scp {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(field);
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

LabeledMatrix read_labeled_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file: " + path);

  LabeledMatrix m;
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (m.names.empty()) {
      for (const auto& name : split(t, ',')) {
        const std::string n = trim(name);
        if (n.empty())
          throw ValidationError("empty variable name in " + path);
        m.names.push_back(n);
      }
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(t);
    std::string tok;
    while (ss >> tok) {
      if (tok == "nan" || tok == "NaN") {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      try {
        std::size_t used = 0;
        row.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ValidationError("non-numeric entry '" + tok + "' in " + path);
      }
    }
    if (row.size() != m.names.size())
      throw ValidationError("row " + std::to_string(rows.size() + 1) + " of " +
                            path + " has " + std::to_string(row.size()) +
                            " entries, expected " +
                            std::to_string(m.names.size()));
    rows.push_back(std::move(row));
  }
  if (m.names.empty()) throw ValidationError("no header line in " + path);
  if (rows.size() != m.names.size())
    throw ValidationError(path + " has " + std::to_string(rows.size()) +
                          " rows, expected " + std::to_string(m.names.size()));

  const int d = static_cast<int>(m.names.size());
  m.values.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.values(i, j) = rows[i][j];
  return m;
}

void write_labeled_matrix(const std::string& path,
                          const std::vector<std::string>& names,
                          const Eigen::MatrixXd& values,
                          const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write matrix file: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  for (std::size_t k = 0; k < names.size(); ++k)
    out << (k ? "," : "") << names[k];
  out << "\n";
  for (int i = 0; i < values.rows(); ++i) {
    for (int j = 0; j < values.cols(); ++j) {
      if (j) out << " ";
      const double v = values(i, j);
      if (std::isnan(v)) {
        out << "nan";
      } else if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
        out << static_cast<long long>(v);
      } else {
        out << format_double(v, 12);
      }
    }
    out << "\n";
  }
}

std::string format_double(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace scp
