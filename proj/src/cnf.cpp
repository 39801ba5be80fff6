#include "matchfactory/cnf.hpp"

#include <sstream>
#include <stdexcept>

namespace matchfactory {

std::string cnf_export(const Multigraph& g, std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("cnf_export: m must be >= 1");
  const std::uint64_t edges = g.edge_count();
  auto var = [edges](std::uint64_t e, std::uint32_t i) {
    return i * edges + e + 1;
  };
  auto adj = adjacency(g);

  std::ostringstream body;
  std::uint64_t clauses = 0;
  for (std::uint32_t i = 0; i < m; ++i)
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (auto [w, e] : adj[v]) {
        (void)w;
        body << var(e, i) << ' ';
      }
      body << "0\n";
      ++clauses;
      const auto& inc = adj[v];
      for (std::size_t a = 0; a < inc.size(); ++a)
        for (std::size_t b = a + 1; b < inc.size(); ++b) {
          body << '-' << var(inc[a].second, i) << " -" << var(inc[b].second, i)
               << " 0\n";
          ++clauses;
        }
    }
  for (std::uint64_t e = 0; e < edges; ++e)
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = i + 1; j < m; ++j) {
        body << '-' << var(e, i) << " -" << var(e, j) << " 0\n";
        ++clauses;
      }

  std::ostringstream out;
  out << "p cnf " << m * edges << ' ' << clauses << '\n' << body.str();
  return out.str();
}

}  // namespace matchfactory
