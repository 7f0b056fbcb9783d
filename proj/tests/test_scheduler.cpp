#include <doctest.h>

#include "chainface/crown.hpp"
#include "chainface/scheduler.hpp"
#include "helpers.hpp"

using namespace chainface;

namespace {

ActivityWeights zero_weights(const Poset& P) {
  std::map<int, Rat> w;
  for (int x = 1; x <= P.size(); ++x) w[x] = 0;
  return ActivityWeights(P, w);
}

ActivityWeights indicator(const Poset& P, int element) {
  std::map<int, Rat> w;
  for (int x = 1; x <= P.size(); ++x) w[x] = x == element ? 1 : 0;
  return ActivityWeights(P, w);
}

}  // namespace

TEST_SUITE_BEGIN("scheduler");

TEST_CASE("earliest finishing time") {
  Poset p4 = load_poset("p4");
  CHECK(eft(p4, zero_weights(p4)) == 0);
  CHECK(eft(p4, indicator(p4, 5)) == 1);

  Poset chain = build_poset(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  std::map<int, Rat> ones;
  for (int x = 1; x <= 5; ++x) ones[x] = 1;
  CHECK(eft(chain, ActivityWeights(chain, ones)) == 5);

  // Negative weights are fine: tie detection stays exact.
  std::map<int, Rat> mixed;
  for (int x = 1; x <= p4.size(); ++x) mixed[x] = rat(3 - x, 2);
  Rat best;
  bool first = true;
  for (const Chain& c : maximal_chains(p4)) {
    Rat t = ActivityWeights(p4, mixed).chain_total(c);
    if (first || t > best) best = t;
    first = false;
  }
  CHECK(eft(p4, ActivityWeights(p4, mixed)) == best);
}

TEST_CASE("critical chains") {
  Poset p4 = load_poset("p4");
  auto all_zero = critical_chains(p4, zero_weights(p4));
  CHECK(all_zero.critical == maximal_chains(p4));

  auto spike = critical_chains(p4, indicator(p4, 5));
  CHECK(spike.critical == fam(p4, "12579;12589;13579;13589"));
  CHECK(spike.eft == 1);
  CHECK(spike.totals.size() == maximal_chains(p4).size());

  Poset p2 = load_poset("p2");
  auto one = critical_chains(p2, indicator(p2, 1));
  CHECK(one.critical == fam(p2, "125;1278;135;1368"));

  // Every chain in the report attains or undercuts the EFT.
  for (const auto& [c, t] : spike.totals) {
    CHECK(t <= spike.eft);
    CHECK((t == spike.eft) == spike.critical.contains(c));
  }
}

TEST_CASE("missing weights are rejected") {
  Poset p2 = load_poset("p2");
  std::map<int, Rat> partial{{1, Rat(1)}};
  CHECK_THROWS_AS(ActivityWeights(p2, partial), MissingWeightError);
}

TEST_CASE("multicritical points") {
  Poset p2 = load_poset("p2");
  CHECK_FALSE(multicritical(p2, fam(p2, "125;1368;478")).has_value());

  Poset p4 = load_poset("p4");
  auto square = fam(p4, "12579;12589;13579;13589");
  auto w = multicritical(p4, square);
  REQUIRE(w.has_value());
  CHECK(critical_chains(p4, *w).critical == square);

  auto whole = multicritical(p4, maximal_chains(p4));
  REQUIRE(whole.has_value());
  for (int x = 1; x <= p4.size(); ++x) CHECK(whole->at(x) == 0);
}

TEST_CASE("positive rescaling preserves the critical set") {
  Poset p3 = load_poset("p3");
  std::map<int, Rat> w;
  for (int x = 1; x <= p3.size(); ++x) w[x] = rat((x * 7) % 5, 3);
  ActivityWeights base(p3, w);
  auto rep = critical_chains(p3, base);
  std::map<int, Rat> scaled;
  for (int x = 1; x <= p3.size(); ++x) scaled[x] = w[x] * rat(5, 2);
  auto rep2 = critical_chains(p3, ActivityWeights(p3, scaled));
  CHECK(rep2.critical == rep.critical);
  CHECK(rep2.eft == rep.eft * Rat(5, 2));
}

TEST_CASE("critical sets carry no incomplete structure") {
  Poset p4 = load_poset("p4");
  for (int e = 1; e <= p4.size(); ++e) {
    auto rep = critical_chains(p4, indicator(p4, e));
    CHECK(classify_structure(p4, rep.critical).verdict !=
          Verdict::IncompleteStructure);
  }
}

TEST_SUITE_END();
