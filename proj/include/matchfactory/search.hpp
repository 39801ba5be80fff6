#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "matchfactory/multigraph.hpp"

namespace matchfactory {

/// A perfect matching of the host, or absence. Works on the simple
/// projection of the allowed edges (copies cannot matter for existence) and
/// lifts every matched pair to its lowest allowed EdgeId.
std::optional<std::vector<EdgeId>> find_perfect_matching(
    const Multigraph& g, const std::vector<EdgeId>& forbidden = {});

/// Streams every perfect matching avoiding `forbidden`, parallel copies
/// distinct, in lexicographic order of the chosen edge-id sequence
/// (backtracking on the lowest uncovered vertex). The callback returns
/// false to stop; the function returns false iff it was stopped early.
bool for_each_perfect_matching(
    const Multigraph& g, const std::vector<EdgeId>& forbidden,
    const std::function<bool(const std::vector<EdgeId>&)>& cb);

struct EnumerateResult {
  std::vector<std::vector<EdgeId>> matchings;
  bool truncated = false;
};

/// All perfect matchings in deterministic order, stopping at cap with the
/// truncation flag set when more exist.
EnumerateResult enumerate_perfect_matchings(const Multigraph& g,
                                            std::uint64_t cap);

struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t matchings_enumerated = 0;
  double seconds = 0.0;
};

enum class Verdict { kYes, kNo, kUnknown };

const char* verdict_name(Verdict v);

/// Yes carries a certificate family (revalidated independently before being
/// returned); No is only reported after the search tree is exhausted;
/// Unknown means a budget stop and is never coerced to No.
struct DisjointFamilyDecision {
  Verdict verdict = Verdict::kUnknown;
  std::vector<std::vector<EdgeId>> family;
  SearchStats stats;
};

struct DisjointSearchOptions {
  SearchBudget budget;
  int workers = 1;
  /// Reuse last-level answers keyed by the remaining support graph.
  /// Whether "g minus used copies has a perfect matching" holds depends
  /// only on which endpoint pairs still have a free copy, so the cache is
  /// exact; disabling it reproduces the plain search (kept for tests and
  /// benchmarks).
  bool memoize_last_level = true;
};

/// Decides whether g contains m pairwise disjoint perfect matchings by
/// depth-first search: levels 1..m-1 enumerate perfect matchings of g minus
/// all previously used copies, the last level is an existence query. With
/// workers > 1 the top-level branches are partitioned across OpenMP
/// threads; the verdict is unaffected (the certificate may differ, and is
/// always revalidated), single-worker runs are bit-reproducible.
DisjointFamilyDecision has_disjoint_pms(const Multigraph& g, std::uint32_t m,
                                        const DisjointSearchOptions& opts = {});

}  // namespace matchfactory
