#include "qbop/mip_export.hpp"

#include <fstream>
#include <sstream>

namespace qbop {

std::string export_mip_lp(const CostMatrix& c, const KnapsackFamily& fam) {
  const int m = c.size();
  const Cost big = c.max_entry();
  std::ostringstream out;

  auto x = [](int i) { return "x" + std::to_string(i + 1); };
  auto y = [](int i, int j) { return "y" + std::to_string(i + 1) + "_" + std::to_string(j + 1); };

  out << "\\ quadratic balanced knapsack, M = " << big << "\n";
  out << "Minimize\n obj: u - v\n";
  out << "Subject To\n";

  out << " demand:";
  for (int i = 0; i < m; ++i) out << (i ? " + " : " ") << fam.weights()[i] << " " << x(i);
  out << " >= " << fam.demand() << "\n";

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Cost cij = c.at(i, j);
      if (cij != 0)
        out << " umax_" << i + 1 << "_" << j + 1 << ": u - " << cij << " " << y(i, j) << " >= 0\n";
      if (cij != big) {
        // v <= c y + M (1 - y)  rewritten as  v + (M - c) y <= M
        out << " vmin_" << i + 1 << "_" << j + 1 << ": v + " << big - cij << " " << y(i, j)
            << " <= " << big << "\n";
      }
    }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      out << " ylink1_" << i + 1 << "_" << j + 1 << ": " << y(i, j) << " - " << x(i) << " <= 0\n";
      out << " ylink2_" << i + 1 << "_" << j + 1 << ": " << y(i, j) << " - " << x(j) << " <= 0\n";
      out << " ylink3_" << i + 1 << "_" << j + 1 << ": ";
      if (i == j)
        out << "2 " << x(i);
      else
        out << x(i) << " + " << x(j);
      out << " - " << y(i, j) << " <= 1\n";
    }

  out << "Bounds\n";
  out << " 0 <= u <= " << big << "\n";
  out << " 0 <= v <= " << big << "\n";

  out << "Binaries\n";
  for (int i = 0; i < m; ++i) out << " " << x(i);
  out << "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out << " " << y(i, j);
    out << "\n";
  }
  out << "End\n";
  return out.str();
}

void write_mip_lp(const CostMatrix& c, const KnapsackFamily& fam, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write LP file: " + path.string());
  out << export_mip_lp(c, fam);
}

}  // namespace qbop
