// matchfactory: construct the regular multigraph families, certify their
// structural claims, and decide disjoint perfect-matching existence.
//
// Exit codes: 0 all checks pass, 1 any check fails, 2 any check unknown,
// 3 input error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchfactory/classify.hpp"
#include "matchfactory/cnf.hpp"
#include "matchfactory/connectivity.hpp"
#include "matchfactory/constructions.hpp"
#include "matchfactory/io.hpp"
#include "matchfactory/provenance.hpp"
#include "matchfactory/report.hpp"
#include "matchfactory/search.hpp"

namespace mf = matchfactory;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - t0).count();
    t0 = now;
    return s;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mf::HVariant parse_variant(const std::string& name) {
  if (name == "base") return mf::HVariant::kBase;
  if (name == "prime") return mf::HVariant::kPrime;
  if (name == "double-prime") return mf::HVariant::kDoublePrime;
  if (name == "triple-prime") return mf::HVariant::kTriplePrime;
  throw std::invalid_argument("unknown variant: " + name);
}

void emit(const mf::VerificationReport& report, const std::string& format) {
  if (format == "json")
    std::cout << mf::to_json(report);
  else
    std::cout << mf::to_text(report);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

int cmd_construct(const std::string& family, int k,
                  const std::string& variant_name,
                  const std::string& base_path, const std::string& out,
                  const std::string& format) {
  mf::Multigraph g;
  std::string sidecar;
  if (family == "petersen") {
    auto host = mf::build_petersen_host({});
    g = host.g;
    sidecar = mf::provenance_json(host);
  } else if (family == "P") {
    auto host = mf::build_p(k);
    g = host.g;
    sidecar = mf::provenance_json(host);
  } else if (family == "Q") {
    auto q = mf::build_q(k);
    g = q.g;
    sidecar = mf::provenance_json(q);
  } else if (family == "T") {
    auto [tg, emb] = mf::build_t(k);
    g = tg;
    sidecar = mf::provenance_json(tg, emb, k);
  } else if (family == "S") {
    if (base_path.empty())
      throw std::invalid_argument("--base is required for family S");
    mf::Multigraph base = mf::parse(read_file(base_path));
    auto s = mf::build_s(base, k);
    g = s.g;
    sidecar = mf::provenance_json(s);
  } else if (family == "H") {
    auto h = mf::build_h(k, parse_variant(variant_name));
    g = h.g;
    sidecar = mf::provenance_json(h);
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  write_file(out, mf::serialize(g));
  write_file(out + ".provenance.json", sidecar);
  if (format == "dot") write_file(out + ".dot", mf::to_dot(g));
  std::cout << "wrote " << out << " (" << g.vertex_count() << " vertices, "
            << g.edge_count() << " edges)\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::vector<std::string>& checks,
               std::uint32_t m, const mf::DisjointSearchOptions& search_opts,
               const std::string& format) {
  mf::Multigraph g = mf::parse(read_file(path));
  mf::VerificationReport report;
  report.subject = path;
  Timer total;
  Timer lap;
  for (const std::string& check : checks) {
    if (check == "order") {
      report.checks.push_back(mf::make_check(
          "order", "def:r-graph", "even order",
          g.vertex_count() % 2 == 0
              ? "even order"
              : "odd order (" + std::to_string(g.vertex_count()) + ")",
          lap.lap()));
    } else if (check == "regular") {
      auto r = mf::is_regular(g);
      report.checks.push_back(mf::make_check(
          "regular", "def:regular", "regular",
          r ? "regular" : "irregular", lap.lap()));
      if (r) report.checks.back().computed = "regular r=" + std::to_string(*r);
      if (r) report.checks.back().expected = report.checks.back().computed;
    } else if (check == "connectivity") {
      auto deg = g.degrees();
      std::uint32_t mindeg =
          deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
      std::uint64_t lambda = mf::edge_connectivity(g);
      report.checks.push_back(mf::make_check(
          "connectivity", "def:edge-connectivity",
          "lambda = min degree = " + std::to_string(mindeg),
          "lambda = " + std::to_string(lambda) +
              (lambda == mindeg ? " = min degree" : " < min degree"),
          lap.lap()));
      report.checks.back().status = lambda == mindeg
                                        ? mf::CheckResult::Status::kPass
                                        : mf::CheckResult::Status::kFail;
      report.checks.back().expected = "lambda = min degree";
      report.checks.back().computed = "lambda = " + std::to_string(lambda) +
                                      ", min degree = " +
                                      std::to_string(mindeg);
    } else if (check == "rgraph") {
      std::string computed = "no";
      try {
        auto r = mf::is_r_graph(g);
        computed = r ? "r-graph r=" + std::to_string(*r) : "no";
      } catch (const std::invalid_argument&) {
        computed = "no";
      }
      mf::CheckResult c = mf::make_check("rgraph", "def:r-graph", "r-graph",
                                         computed, lap.lap());
      c.status = computed.rfind("r-graph", 0) == 0
                     ? mf::CheckResult::Status::kPass
                     : mf::CheckResult::Status::kFail;
      report.checks.push_back(c);
    } else if (check == "disjoint-pm") {
      mf::DisjointFamilyDecision d = mf::has_disjoint_pms(g, m, search_opts);
      report.search_stats = d.stats;
      mf::CheckResult c;
      c.claim = "disjoint-pm m=" + std::to_string(m);
      c.anchor = "op:has-disjoint-pms";
      c.expected = "definitive (yes or no)";
      c.computed = mf::verdict_name(d.verdict);
      c.seconds = lap.lap();
      c.status = d.verdict == mf::Verdict::kUnknown
                     ? mf::CheckResult::Status::kUnknown
                     : mf::CheckResult::Status::kPass;
      report.checks.push_back(c);
    } else {
      throw std::invalid_argument("unknown check: " + check);
    }
  }
  report.total_seconds = total.lap();
  emit(report, format);
  return report.exit_code();
}

int cmd_certify(std::uint32_t r, const mf::DisjointSearchOptions& search_opts,
                const std::string& format) {
  mf::Counterexample ce = mf::counterexample(r);
  const mf::Multigraph& g = ce.h.g;
  mf::VerificationReport report;
  report.subject = "counterexample r=" + std::to_string(r) + " (H k=" +
                   std::to_string(ce.h.k) + " " +
                   mf::variant_name(ce.h.variant) + ")";
  Timer total;
  Timer lap;

  report.checks.push_back(mf::make_check(
      "order", "lem:order-60", "60", std::to_string(g.vertex_count()),
      lap.lap()));
  auto reg = mf::is_regular(g);
  report.checks.push_back(mf::make_check(
      "regularity", "thm:dispatch", "r=" + std::to_string(r),
      reg ? "r=" + std::to_string(*reg) : "irregular", lap.lap()));
  report.checks.push_back(mf::make_check(
      "edge-connectivity", "thm:dispatch",
      std::to_string(ce.claimed_connectivity),
      std::to_string(mf::edge_connectivity(g)), lap.lap()));
  auto rg = mf::is_r_graph(g);
  report.checks.push_back(mf::make_check(
      "odd-cut-condition", "def:r-graph", "r-graph r=" + std::to_string(r),
      rg ? "r-graph r=" + std::to_string(*rg) : "no", lap.lap()));

  mf::DisjointFamilyDecision d =
      mf::has_disjoint_pms(g, ce.missing_family_size, search_opts);
  report.search_stats = d.stats;
  {
    mf::CheckResult c;
    c.claim = "no " + std::to_string(ce.missing_family_size) +
              " disjoint perfect matchings";
    c.anchor = "thm:dispatch";
    c.expected = "no";
    c.computed = mf::verdict_name(d.verdict);
    c.seconds = lap.lap();
    switch (d.verdict) {
      case mf::Verdict::kNo: c.status = mf::CheckResult::Status::kPass; break;
      case mf::Verdict::kYes: c.status = mf::CheckResult::Status::kFail; break;
      case mf::Verdict::kUnknown:
        c.status = mf::CheckResult::Status::kUnknown;
        break;
    }
    report.checks.push_back(c);
  }

  // Structural evidence: the variant equals H_{k+1} minus the matching
  // copies that were not added. Carries the claim when the search above is
  // over budget.
  if (ce.h.variant != mf::HVariant::kBase) {
    mf::HFamily base = mf::build_h(ce.h.k, mf::HVariant::kBase);
    mf::PmFamily fam = mf::pm_family_n(base);
    mf::Multigraph sum = mf::add_matchings(
        base.g, {fam.n[0], fam.n[1], fam.n[2], fam.n[3]});
    mf::HFamily direct = mf::build_h(ce.h.k + 1, mf::HVariant::kBase);
    std::vector<mf::VertexId> identity(sum.vertex_count());
    for (mf::VertexId v = 0; v < sum.vertex_count(); ++v) identity[v] = v;
    bool lemma8 = mf::edge_multiset_equal(sum, direct.g, identity);

    // Delete the copies of the members this variant does not include.
    std::vector<int> removed;
    switch (ce.h.variant) {
      case mf::HVariant::kPrime: removed = {3}; break;
      case mf::HVariant::kDoublePrime: removed = {1, 2, 3}; break;
      case mf::HVariant::kTriplePrime: removed = {2, 3}; break;
      default: break;
    }
    std::vector<mf::EdgeId> doomed;
    mf::EdgeId base_edges = base.g.edge_count();
    for (int mi : removed)
      for (mf::EdgeId offset = 0; offset < 30; ++offset)
        doomed.push_back(base_edges + 30 * mi + offset);
    mf::Multigraph reduced = mf::delete_edges(sum, doomed).graph;
    bool identity_holds =
        lemma8 && mf::edge_multiset_equal(reduced, ce.h.g, identity);
    report.checks.push_back(mf::make_check(
        "variant identity (H minus matchings)", "lem:h-recursion", "holds",
        identity_holds ? "holds" : "violated", lap.lap()));
  }

  report.total_seconds = total.lap();
  emit(report, format);
  return report.exit_code();
}

int cmd_oracle(const std::string& suite, const std::string& format) {
  mf::VerificationReport report;
  report.subject = "oracle " + suite;
  Timer total;
  Timer lap;
  if (suite == "petersen") {
    auto [g, lab] = mf::petersen();
    auto en = mf::enumerate_perfect_matchings(g, 100);
    report.checks.push_back(mf::make_check(
        "perfect matching count", "prop:six-matchings", "6",
        std::to_string(en.matchings.size()), lap.lap()));
    const mf::CanonicalMatchings& cm = mf::canonical_matchings();
    std::set<mf::EdgeId> inter;
    bool singleton = true;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        std::vector<mf::EdgeId> x;
        std::set_intersection(cm.m[i].begin(), cm.m[i].end(),
                              cm.m[j].begin(), cm.m[j].end(),
                              std::back_inserter(x));
        singleton = singleton && x.size() == 1;
        if (x.size() == 1) inter.insert(x[0]);
      }
    report.checks.push_back(mf::make_check(
        "pair-to-edge map is a bijection", "prop:six-matchings",
        "15 distinct singleton intersections",
        singleton ? std::to_string(inter.size()) +
                        " distinct singleton intersections"
                  : "non-singleton intersection",
        lap.lap()));
  } else if (suite == "lemma3") {
    for (int j = 0; j < 6; ++j)
      report.checks.push_back(mf::make_check(
          "forced type j=" + std::to_string(j), "lem:forced-type", "holds",
          mf::verify_forced_type(j) ? "holds" : "violated", lap.lap()));
  } else if (suite == "lemma2") {
    int cases = 0;
    bool all = true;
    std::vector<std::vector<int>> multisets;
    for (int a = 0; a < 6; ++a) {
      multisets.push_back({a});
      for (int b = a; b < 6; ++b) {
        multisets.push_back({a, b});
        for (int c = b; c < 6; ++c) multisets.push_back({a, b, c});
      }
    }
    for (const auto& m : multisets) {
      all = all && mf::verify_subcollection_lemma(m);
      ++cases;
    }
    report.checks.push_back(mf::make_check(
        "subcollection containment over " + std::to_string(cases) +
            " multisets",
        "lem:subcollection", "holds", all ? "holds" : "violated", lap.lap()));
  } else if (suite == "phi") {
    mf::ApexHost host = mf::build_apex_host(1);
    auto en = mf::enumerate_perfect_matchings(host.g, 1000000);
    std::uint64_t pairs = 0, violations = 0;
    for (std::size_t a = 0; a < en.matchings.size(); ++a)
      for (std::size_t b = a + 1; b < en.matchings.size(); ++b) {
        std::set<mf::EdgeId> sa(en.matchings[a].begin(),
                                en.matchings[a].end());
        bool disjoint = true;
        for (mf::EdgeId e : en.matchings[b])
          if (sa.count(e)) {
            disjoint = false;
            break;
          }
        if (!disjoint) continue;
        ++pairs;
        auto [phi1, om1] = mf::phi_omega(
            {en.matchings[a], en.matchings[b]}, host.v1);
        auto [phi2, om2] = mf::phi_omega(
            {en.matchings[a], en.matchings[b]}, host.v2);
        if (om1 != 1 || om2 != 1) ++violations;
      }
    report.checks.push_back(mf::make_check(
        "omega(phi(V^i)) = 1 over " + std::to_string(pairs) +
            " disjoint pairs",
        "lem:boundary-parity", "0 violations",
        std::to_string(violations) + " violations", lap.lap()));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  report.total_seconds = total.lap();
  emit(report, format);
  return report.exit_code();
}

int cmd_extend(const std::string& path, const std::string& cover_spec,
               const std::string& out, const std::string& format) {
  mf::Multigraph g = mf::parse(read_file(path));
  std::vector<mf::VertexId> cover;
  if (cover_spec == "auto") {
    cover = mf::min_vertex_cover(g);
  } else {
    nlohmann::json doc = nlohmann::json::parse(read_file(cover_spec));
    if (!doc.is_array())
      throw std::invalid_argument("cover file must be a JSON array");
    for (const auto& v : doc) cover.push_back(v.get<mf::VertexId>());
  }
  mf::VerificationReport report;
  report.subject = path + " (meredith extension, cover size " +
                   std::to_string(cover.size()) + ")";
  Timer total;
  Timer lap;

  std::uint64_t conn_before = mf::edge_connectivity(g);
  auto reg_before = mf::is_regular(g);
  mf::Multigraph ext = mf::meredith_simple(g, cover);
  write_file(out, mf::serialize(ext));

  bool simple = true;
  for (const auto& members : mf::pair_classes(ext).members)
    simple = simple && members.size() == 1;
  report.checks.push_back(mf::make_check("simple output", "op:meredith",
                                         "simple", simple ? "simple" : "has parallel edges",
                                         lap.lap()));
  auto reg_after = mf::is_regular(ext);
  report.checks.push_back(mf::make_check(
      "regularity preserved", "op:meredith",
      reg_before ? "r=" + std::to_string(*reg_before) : "irregular",
      reg_after ? "r=" + std::to_string(*reg_after) : "irregular",
      lap.lap()));
  std::uint64_t conn_after = mf::edge_connectivity(ext);
  report.checks.push_back(mf::make_check(
      "connectivity preserved", "op:meredith", std::to_string(conn_before),
      std::to_string(conn_after), lap.lap()));
  std::uint32_t t = reg_before ? *reg_before : 0;
  std::uint64_t expect_order =
      g.vertex_count() + cover.size() * (t >= 1 ? 2 * t - 2 : 0);
  report.checks.push_back(mf::make_check(
      "order", "op:meredith",
      std::to_string(expect_order) + " (n + |cover|*(2r-2))",
      std::to_string(ext.vertex_count()) + " (n + |cover|*(2r-2))",
      lap.lap()));
  if (t >= 1) {
    std::cout << "note: resulting order " << ext.vertex_count() << " = 70r-10 "
              << "for the 60-vertex family at r=" << t
              << "; the closed form 70(r-1) = " << 70 * (t - 1)
              << " does not match this count\n";
  }
  report.total_seconds = total.lap();
  emit(report, format);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "matchfactory: regular multigraph families, their certification, and "
      "exact disjoint perfect-matching decisions"};
  app.require_subcommand(1);

  // Reserved for future randomized heuristics; exact algorithms ignore it.
  if (const char* seed = std::getenv("MATCHFACTORY_SEED")) (void)seed;

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  auto* construct = app.add_subcommand("construct", "Build a family graph");
  std::string family, variant = "base", base_path, out = "graph.json";
  int k = 1;
  construct->add_option("--family", family, "petersen|P|Q|T|S|H")->required();
  construct->add_option("--k", k, "Family parameter k >= 1");
  construct->add_option("--variant", variant,
                        "H variant: base|prime|double-prime|triple-prime");
  construct->add_option("--base", base_path, "Base cubic graph file (S)");
  construct->add_option("--out", out, "Output path")->required();

  auto* verify = app.add_subcommand("verify", "Check a graph file");
  std::string verify_path;
  std::vector<std::string> checks{"order", "regular", "connectivity",
                                  "rgraph"};
  std::uint32_t m = 2;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  int workers = 1;
  verify->add_option("file", verify_path, "Edge-list document")->required();
  verify->add_option("--checks", checks,
                     "order|regular|connectivity|rgraph|disjoint-pm")
      ->delimiter(',');
  verify->add_option("--m", m, "Family size for disjoint-pm");
  verify->add_option("--budget-nodes", budget_nodes,
                     "Search node budget (0 = unlimited)");
  verify->add_option("--budget-seconds", budget_seconds,
                     "Search time budget (0 = unlimited)");
  verify->add_option("--workers", workers,
                     "Search workers (1 = bit-reproducible)");

  auto* certify = app.add_subcommand(
      "certify", "Build counterexample(r) and certify its claims");
  std::uint32_t r = 4;
  certify->add_option("--r", r, "Degree r >= 4")->required();
  certify->add_option("--budget-nodes", budget_nodes,
                      "Search node budget (0 = default: unlimited for r=4, "
                      "20M for r>=5)");
  certify->add_option("--budget-seconds", budget_seconds,
                      "Search time budget (0 = default: unlimited for r=4, "
                      "60s for r>=5)");
  certify->add_option("--workers", workers, "Search workers");

  auto* oracle = app.add_subcommand("oracle", "Brute-force claim suites");
  std::string suite;
  oracle->add_option("--suite", suite, "petersen|lemma3|lemma2|phi")
      ->required();

  auto* extend = app.add_subcommand("extend",
                                    "Meredith-extend a vertex cover");
  std::string extend_path, cover_spec = "auto", extend_out = "extended.json";
  extend->add_option("file", extend_path, "Edge-list document")->required();
  extend->add_option("--cover", cover_spec,
                     "auto or a JSON array file of vertex ids");
  extend->add_option("--out", extend_out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  try {
    mf::DisjointSearchOptions search_opts;
    if (budget_nodes > 0) search_opts.budget.max_nodes = budget_nodes;
    if (budget_seconds > 0) search_opts.budget.max_seconds = budget_seconds;
    search_opts.workers = workers;

    if (construct->parsed())
      return cmd_construct(family, k, variant, base_path, out, format);
    if (verify->parsed())
      return cmd_verify(verify_path, checks, m, search_opts, format);
    if (certify->parsed()) {
      if (r >= 5 && budget_nodes == 0 && budget_seconds == 0) {
        search_opts.budget.max_nodes = 20'000'000;
        search_opts.budget.max_seconds = 60.0;
      }
      return cmd_certify(r, search_opts, format);
    }
    if (oracle->parsed()) return cmd_oracle(suite, format);
    if (extend->parsed())
      return cmd_extend(extend_path, cover_spec, extend_out, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
