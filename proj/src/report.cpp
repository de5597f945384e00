#include "kisskit/report.hpp"

#include <algorithm>
#include <set>

#include "kisskit/groups.hpp"
#include "kisskit/kiss5.hpp"
#include "kisskit/kiss6.hpp"
#include "kisskit/kiss9.hpp"

namespace kisskit {

std::string spectrum_table(const std::string& title, const std::vector<PointConfiguration>& configs,
                           bool with_aut, Exec exec) {
  std::vector<Spectrum> spectra;
  std::set<QuadScalar> ts;
  for (const auto& c : configs) {
    spectra.push_back(spectrum(c, exec));
    for (const auto& e : spectra.back()) ts.insert(e.t);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"config"};
  for (const auto& t : ts) head.push_back(t.str());
  head.push_back("pairs");
  head.push_back("antipodal");
  if (with_aut) head.push_back("|Aut|");
  cells.push_back(head);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::vector<std::string> row{configs[i].name()};
    for (const auto& t : ts) row.push_back(std::to_string(count_at(spectra[i], t)));
    row.push_back(std::to_string(total_pairs(spectra[i])));
    row.push_back(std::to_string(antipodal_count(configs[i])));
    if (with_aut) row.push_back(automorphisms(configs[i]).order.get_str());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::string out = title + "\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == 0)
        line += row[j] + std::string(width[j] - row[j].size(), ' ');
      else
        line += "  " + std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out += line + "\n";
  }
  return out;
}

std::string report_tables(Exec exec) {
  std::vector<PointConfiguration> five;
  for (Kind5 k : all_kinds5()) five.push_back(build5(k));
  std::vector<PointConfiguration> six;
  for (const char* n : {"e6", "leech6", "cs6a", "cs6b"}) six.push_back(build_named6(n));
  const std::vector<PointConfiguration> nine{build_kissing9(build_code_table()), build_modified9()};
  return spectrum_table("inner products, 40 points in dimension 5", five, true, exec) + "\n" +
         spectrum_table("inner products, 72 points in dimension 6", six, true, exec) + "\n" +
         spectrum_table("inner products, 306 points in dimension 9", nine, true, exec);
}

}  // namespace kisskit
