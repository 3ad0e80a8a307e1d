#ifndef PERMSIMPLE_TESTS_FIXTURES_HPP
#define PERMSIMPLE_TESTS_FIXTURES_HPP

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixtures {

struct CensusRow {
  int n = 0;
  std::array<long long, 5> counts{}; // s c g b t
  long long total = 0;
};

inline std::vector<std::string> data_lines(const std::string &name)
{
  std::ifstream in(std::string(PERMSIMPLE_TEST_DATA) + "/" + name);
  if (!in)
    throw std::runtime_error("missing fixture " + name);
  std::vector<std::string> lines;
  std::string line;
  std::getline(in, line); // header
  while (std::getline(in, line))
    if (!line.empty())
      lines.push_back(line);
  return lines;
}

inline std::vector<CensusRow> census_table()
{
  std::vector<CensusRow> rows;
  for (auto line : data_lines("census_table.csv")) {
    for (char &ch : line)
      if (ch == ',')
        ch = ' ';
    std::istringstream in(line);
    CensusRow r;
    in >> r.n;
    for (auto &c : r.counts)
      in >> c;
    in >> r.total;
    rows.push_back(r);
  }
  return rows;
}

/// rows[n-1] is the row of degree n.
inline std::vector<std::vector<long long>> sigma_rows()
{
  std::vector<std::vector<long long>> rows;
  for (auto line : data_lines("sigma_triangle.csv")) {
    line[line.find(',')] = ' ';
    std::istringstream in(line);
    int n = 0;
    in >> n;
    std::vector<long long> row;
    long long v = 0;
    while (in >> v)
      row.push_back(v);
    rows.push_back(row);
  }
  return rows;
}

} // namespace fixtures

#endif
