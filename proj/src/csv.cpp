#include "mcb/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "mcb/errors.hpp"

namespace mcb {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& field, int row, const std::string& column) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
  if (field.empty() || end == field.c_str() || (end && *end != '\0') || errno == ERANGE)
    throw CsvError("row " + std::to_string(row) + ", column '" + column +
                   "': not a number: '" + field + "'");
  return value;
}

}  // namespace

Dataset read_dataset_csv(const std::string& path, const std::string& response_column) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw CsvError(path + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_line(line);
  if (header.empty()) throw CsvError(path + " has an empty header row");

  int response_index = -1;
  for (std::size_t c = 0; c < header.size(); ++c)
    if (header[c] == response_column) response_index = static_cast<int>(c);
  if (response_index < 0)
    throw ConfigError("response column '" + response_column + "' not found in " + path);
  if (header.size() < 2)
    throw ConfigError(path + " has no predictor columns besides the response");

  std::vector<std::vector<double>> rows;
  int row_number = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != header.size())
      throw CsvError("row " + std::to_string(row_number) + ": expected " +
                     std::to_string(header.size()) + " fields, got " +
                     std::to_string(fields.size()));
    std::vector<double> values(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c)
      values[c] = parse_number(fields[c], row_number, header[c]);
    rows.push_back(std::move(values));
  }
  if (rows.size() < 2) throw CsvError(path + " needs at least 2 data rows");

  const int n = static_cast<int>(rows.size());
  const int p = static_cast<int>(header.size()) - 1;
  Dataset data;
  data.X.resize(n, p);
  data.y.resize(n);
  for (std::size_t c = 0; c < header.size(); ++c)
    if (static_cast<int>(c) != response_index) data.names.push_back(header[c]);
  for (int i = 0; i < n; ++i) {
    int jx = 0;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (static_cast<int>(c) == response_index)
        data.y[i] = rows[i][c];
      else
        data.X(i, jx++) = rows[i][c];
    }
  }
  data.validate();
  return data;
}

void write_dataset_csv(const Dataset& data, const std::string& response_name,
                       const std::string& path) {
  data.validate();
  std::ofstream out(path);
  if (!out) throw CsvError("cannot write " + path);

  for (const auto& name : data.names) out << name << ',';
  out << response_name << '\n';

  char buf[32];
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.p(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.X(i, j));
      out << buf << ',';
    }
    std::snprintf(buf, sizeof(buf), "%.17g", data.y[i]);
    out << buf << '\n';
  }
  if (!out) throw CsvError("failed while writing " + path);
}

}  // namespace mcb
