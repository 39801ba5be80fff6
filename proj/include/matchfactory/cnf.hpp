#pragma once

#include <cstdint>
#include <string>

#include "matchfactory/multigraph.hpp"

namespace matchfactory {

/// DIMACS CNF document that is satisfiable iff g contains m pairwise
/// disjoint perfect matchings. Variable x(e,i) = i*|E| + e + 1 means edge e
/// is in matching i. Clauses, in order: for every matching i and vertex v,
/// at-least-one over v's incident edges followed by pairwise at-most-one;
/// then for every edge, pairwise at-most-one across matchings. Header line
/// is exactly "p cnf <vars> <clauses>".
std::string cnf_export(const Multigraph& g, std::uint32_t m);

}  // namespace matchfactory
