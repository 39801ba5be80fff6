#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "matchfactory/classify.hpp"
#include "matchfactory/constructions.hpp"
#include "matchfactory/search.hpp"

using namespace matchfactory;

TEST_CASE("classify_type recognizes base and added copies") {
  PetersenHost p1 = build_p(1);  // P + M0
  const auto& cm = canonical_matchings();

  // the added copy of M0 occupies ids 15..19
  std::vector<EdgeId> added{15, 16, 17, 18, 19};
  CHECK(classify_type(p1, added) == 0);
  CHECK(classify_type(p1, cm.m[3]) == 3);

  // mixed-copy type-0 matching: some spokes base, some from the added copy
  std::vector<EdgeId> mixed{15, cm.m[0][1], 17, cm.m[0][3], 19};
  CHECK(classify_type(p1, mixed) == 0);

  // non-matchings do not classify
  CHECK(!classify_type(p1, {0, 1}).has_value());
}

TEST_CASE("every perfect matching of a petersen host classifies") {
  PetersenHost host = build_petersen_host({0, 2, 5});
  for_each_perfect_matching(host.g, {}, [&](const std::vector<EdgeId>& pm) {
    CHECK(classify_type(host, pm).has_value());
    return true;
  });
}

TEST_CASE("classify_q_block reads off the family types") {
  for (int k = 1; k <= 2; ++k) {
    HFamily h = build_h(k, HVariant::kBase);
    PmFamily fam = pm_family_n(h);
    for (int b = 0; b < 3; ++b) {
      CHECK(classify_q_block(h, b, fam.n[0]) == fam.types[0][b]);
      CHECK(classify_q_block(h, b, fam.n[1]) == fam.types[1][b]);
    }
    // the type conventions match: N1 makes block 0 type (1,3), block 1
    // type (3,0)
    CHECK(fam.types[1][0] == QBlockType{1, 3, 1});
    CHECK(fam.types[1][1] == QBlockType{3, 0, 2});
    CHECK(fam.types[1][2] == QBlockType{4, 1, 2});
            CHECK(fam.types[0][0] == QBlockType{0, 4, 1});
  }
}

TEST_CASE("classify_q_block rejects bad input") {
  HFamily h = build_h(1, HVariant::kBase);
  CHECK_THROWS_AS(classify_q_block(h, 0, {0, 1, 2}), std::invalid_argument);
  HFamily variant = build_h(1, HVariant::kDoublePrime);
  PmFamily fam = pm_family_n(build_h(1, HVariant::kBase));
  CHECK_THROWS_AS(classify_q_block(variant, 0, fam.n[0]),
                  std::invalid_argument);
}

TEST_CASE("find_typed_pm realizes and refuses type vectors") {
  HFamily h = build_h(1, HVariant::kBase);

  // all (0,4) exists (the N0 shape)
  auto n0 = find_typed_pm(h, {QBlockType{0, 4}, {0, 4}, {0, 4}});
  REQUIRE(n0.has_value());
  for (int b = 0; b < 3; ++b)
    CHECK(classify_q_block(h, b, *n0) == QBlockType{0, 4, 1});

  // all (0,3): still all-z1-external, feasible
  auto n03 = find_typed_pm(h, {QBlockType{0, 3}, {0, 3}, {0, 3}});
  REQUIRE(n03.has_value());
  for (int b = 0; b < 3; ++b)
    CHECK(classify_q_block(h, b, *n03) == QBlockType{0, 3, 1});

  // all z2-external: three blocks cannot share triangle edges in pairs
  CHECK(!find_typed_pm(h, {QBlockType{3, 0}, {3, 0}, {3, 0}}).has_value());
  // two z1-external blocks: the remaining block cannot be matched outside
  CHECK(!find_typed_pm(h, {QBlockType{0, 4}, {0, 4}, {3, 0}}).has_value());

  // malformed pairs throw
  CHECK_THROWS_AS(find_typed_pm(h, {QBlockType{0, 1}, {0, 4}, {0, 4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_typed_pm(h, {QBlockType{2, 3}, {0, 4}, {0, 4}}),
                  std::invalid_argument);
}

TEST_CASE("find_typed_pm respects forbidden sets on H_2") {
  HFamily h = build_h(2, HVariant::kBase);
  PmFamily fam = pm_family_n(h);
  TypedPmOptions opts;
  for (EdgeId e : fam.n[0]) opts.forbidden.push_back(e);
  for (EdgeId e : fam.n[1]) opts.forbidden.push_back(e);
  auto n2 = find_typed_pm(h, fam.types[2], opts);
  REQUIRE(n2.has_value());
  std::set<EdgeId> stale(opts.forbidden.begin(), opts.forbidden.end());
  for (EdgeId e : *n2) CHECK(!stale.count(e));
}

TEST_CASE("phi_omega") {
  auto [w0, om0] = phi_omega({{0, 2}, {5, 7}}, {});
  CHECK(om0 == 0);
  CHECK(w0 == std::vector<std::uint8_t>{0, 0});

  auto [w1, om1] = phi_omega({{0, 2, 4}}, {0, 2, 4});
  CHECK(om1 == 1);
  CHECK(w1 == std::vector<std::uint8_t>{1});

  CHECK_THROWS_AS(phi_omega({{0, 1}, {1, 2}}, {}), std::invalid_argument);
}

TEST_CASE("forced-type check holds for every j") {
  for (int j = 0; j < 6; ++j) CHECK(verify_forced_type(j));
  CHECK_THROWS_AS(verify_forced_type(6), std::invalid_argument);
}

TEST_CASE("subcollection check on small multisets") {
  CHECK(verify_subcollection_lemma({0}));
  CHECK(verify_subcollection_lemma({0, 0}));
  CHECK(verify_subcollection_lemma({0, 1, 3}));
  CHECK_THROWS_AS(verify_subcollection_lemma({}), std::invalid_argument);
  CHECK_THROWS_AS(verify_subcollection_lemma({0, 1, 2, 3}),
                  std::invalid_argument);
}
