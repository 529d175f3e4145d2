#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <random>

#include "solvcrit/catalog.hpp"
#include "solvcrit/criterion.hpp"

using namespace solvcrit;

namespace {

std::vector<GroupOrder> orders(std::initializer_list<GroupOrder> xs) { return xs; }

// Exhaustive C x D search, without the representative reduction.
bool full_pair_search(const ElementTable& t, const ConjugacyClass& c, const ConjugacyClass& d) {
  for (auto i : c.members)
    for (auto j : d.members)
      if (two_generator_verdict(t[i], t[j]).solvable)
        return true;
  return false;
}

} // namespace

TEST_CASE("check_criterion examples") {
  auto s4 = check_criterion(make_symmetric(4));
  CHECK(s4.holds);
  CHECK_FALSE(s4.counterexample);
  CHECK(s4.class_pairs.size() == s4.classes.size() * s4.classes.size());
  for (const auto& w : s4.class_pairs) {
    REQUIRE(w.witness);
    CHECK(is_solvable(generated_subgroup({w.witness->first, w.witness->second})));
  }

  CHECK(check_criterion(make_cyclic(6)).holds);

  auto a5 = check_criterion(make_alternating(5));
  CHECK_FALSE(a5.holds);
  REQUIRE(a5.counterexample);
  const auto& c = a5.classes[a5.counterexample->first];
  const auto& d = a5.classes[a5.counterexample->second];
  CHECK(c.order_of_elements == 3);
  CHECK(d.order_of_elements == 5);
  // exhaustive recheck of the counterexample pair
  ElementTable t(make_alternating(5));
  CHECK_FALSE(full_pair_search(t, c, d));
}

TEST_CASE("representative reduction matches full class-pair search") {
  for (const auto& g : {make_alternating(5), make_symmetric(4), make_psl2(7), make_frobenius20(),
                        make_symmetric(5)}) {
    CAPTURE(g.label());
    ElementTable t(g);
    auto classes = conjugacy_classes(t);
    SubgroupVerdictCache cache;
    auto report = check_criterion(t, classes, cache);
    for (const auto& w : report.class_pairs)
      CHECK(w.witness.has_value() ==
            full_pair_search(t, classes[w.class_c], classes[w.class_d]));
  }
}

TEST_CASE("subgroup verdicts are conjugation invariant") {
  std::mt19937 rng(5);
  for (const auto& g : {make_alternating(6), make_psl2(7), make_symmetric(5)}) {
    auto elems = g.elements();
    for (int t = 0; t < 60; ++t) {
      const auto& x = elems[rng() % elems.size()];
      const auto& y = elems[rng() % elems.size()];
      const auto& h = elems[rng() % elems.size()];
      CHECK(two_generator_verdict(x, y) ==
            two_generator_verdict(conjugate(x, h), conjugate(y, h)));
    }
  }
}

TEST_CASE("verify_witness_pair examples") {
  auto a5 = verify_witness_pair(make_alternating(5), 3, 5);
  CHECK(a5.verified);
  CHECK(a5.outcome_orders() == orders({60}));
  CHECK_FALSE(a5.counterexample);

  auto a6 = verify_witness_pair(make_alternating(6), 3, 5);
  CHECK(a6.verified);
  for (auto o : a6.outcome_orders())
    CHECK((o == 60 || o == 360));

  auto bad = verify_witness_pair(make_alternating(5), 2, 3);
  CHECK_FALSE(bad.verified);
  REQUIRE(bad.counterexample);
  auto h = generated_subgroup({bad.counterexample->first, bad.counterexample->second});
  CHECK(is_solvable(h));
  CHECK(h.order() == 12);
  // <(1 2)(3 4), (1 2 3)> is one such solvable subgroup
  CHECK(two_generator_verdict(parse_cycles("(1 2)(3 4)", 5), parse_cycles("(1 2 3)", 5)) ==
        SubgroupVerdict{12, true});

  auto l27 = verify_witness_pair(make_psl2(7), 2, 7);
  CHECK(l27.verified);
  CHECK(l27.outcome_orders() == orders({168}));

  // (q+1)/2, (q-1)/2 only works from q = 8 on: PSL(2,7) contains S4 = <4-cycle, 3-cycle>
  auto l27_43 = verify_witness_pair(make_psl2(7), 4, 3);
  CHECK_FALSE(l27_43.verified);
  REQUIRE(l27_43.counterexample);
  CHECK(two_generator_verdict(l27_43.counterexample->first, l27_43.counterexample->second) ==
        SubgroupVerdict{24, true});
  for (unsigned q : {8u, 9u, 11u, 13u}) {
    unsigned k = q % 2 ? 2 : 1;
    Group g = make_psl2(q);
    auto r = verify_witness_pair(g, (q + 1) / k, (q - 1) / k);
    CHECK(r.verified);
    CHECK(r.outcome_orders() == orders({g.order()}));
  }

  CHECK_THROWS_AS(verify_witness_pair(make_alternating(5), 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_witness_pair(make_alternating(5), 3, 6), std::invalid_argument);
}

TEST_CASE("witness verification is symmetric in (a, b)") {
  for (const auto& g : {make_alternating(5), make_alternating(6), make_psl2(7)}) {
    auto spectrum = order_spectrum(g).orders;
    for (auto a : spectrum)
      for (auto b : spectrum)
        CHECK(verify_witness_pair(g, a, b).verified == verify_witness_pair(g, b, a).verified);
  }
}

TEST_CASE("search_witness_pairs") {
  auto a5 = search_witness_pairs(make_alternating(5), false);
  auto has = [](const auto& v, std::uint64_t a, std::uint64_t b) {
    return std::find(v.begin(), v.end(), std::make_pair(a, b)) != v.end();
  };
  CHECK(has(a5, 3, 5));
  CHECK_FALSE(has(a5, 2, 5));
  CHECK(std::is_sorted(a5.begin(), a5.end()));

  CHECK(search_witness_pairs(make_symmetric(4), false).empty());
  CHECK(search_witness_pairs(make_symmetric(4), true).empty());

  auto primes = search_witness_pairs(make_alternating(5), true);
  for (auto [a, b] : primes)
    CHECK(a < b);
  CHECK(has(primes, 3, 5));
}

TEST_CASE("cache and worker count never change reports") {
  Group a6 = make_alternating(6);
  auto base = verify_witness_pair(a6, 3, 5, {1, false});
  for (unsigned workers : {1u, 2u, 4u})
    for (bool cache : {false, true}) {
      auto r = verify_witness_pair(a6, 3, 5, {workers, cache});
      CHECK(r.verified == base.verified);
      CHECK(r.outcomes == base.outcomes);
      CHECK(r.pairs_checked == base.pairs_checked);
    }

  Group a5 = make_alternating(5);
  auto ref = verify_witness_pair(a5, 2, 5, {1, false});
  CHECK_FALSE(ref.verified);
  for (unsigned workers : {2u, 3u, 8u}) {
    auto r = verify_witness_pair(a5, 2, 5, {workers, true});
    CHECK(r.counterexample == ref.counterexample);
    CHECK(r.outcomes == ref.outcomes);
  }

  auto c1 = check_criterion(a6, {1, false});
  auto c4 = check_criterion(a6, {4, true});
  CHECK(c1.holds == c4.holds);
  CHECK(c1.counterexample == c4.counterexample);
  CHECK(c1.pairs_checked == c4.pairs_checked);
  for (std::size_t i = 0; i < c1.class_pairs.size(); ++i)
    CHECK(c1.class_pairs[i].witness == c4.class_pairs[i].witness);

  // Repeated queries hit the cache without changing the verdict.
  SubgroupVerdictCache cache;
  auto x = parse_cycles("(1 2 3)", 5), y = parse_cycles("(1 2 3 4 5)", 5);
  auto v1 = cache.verdict(x, y);
  auto v2 = cache.verdict(y, x);
  CHECK(v1 == v2);
  CHECK(cache.hits() == 1);
  CHECK(cache.size() == 1);
}
