// Brute-force reference computations for the tests. None of these touch the
// stabilizer chain or the factorisation code they are used to check.
#ifndef SOLVCRIT_TESTS_ORACLES_HPP
#define SOLVCRIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

#include "solvcrit/numbertheory.hpp"
#include "solvcrit/permutation.hpp"

namespace oracle {

using solvcrit::Permutation;
using ElementSet = std::unordered_set<Permutation>;

// Closure of the generators under right multiplication.
inline ElementSet closure(const std::vector<Permutation>& gens) {
  ElementSet seen{Permutation(gens.front().degree())};
  std::vector<Permutation> frontier{Permutation(gens.front().degree())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

// Subgroup generated by all commutators of all element pairs.
inline ElementSet commutator_subgroup(const ElementSet& group) {
  std::vector<Permutation> elems(group.begin(), group.end());
  std::vector<Permutation> comms;
  ElementSet distinct;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      Permutation c = solvcrit::commutator(a, b);
      if (distinct.insert(c).second)
        comms.push_back(c);
    }
  return closure(comms);
}

// Orders of the derived series, computed from full element sets.
inline std::vector<std::size_t> derived_series_orders(const std::vector<Permutation>& gens) {
  ElementSet g = closure(gens);
  std::vector<std::size_t> orders{g.size()};
  while (g.size() > 1) {
    ElementSet h = commutator_subgroup(g);
    if (h.size() == g.size())
      break;
    orders.push_back(h.size());
    g = std::move(h);
  }
  return orders;
}

// Conjugacy class sizes by testing conjugation against every group element.
inline std::multiset<std::size_t> class_sizes(const ElementSet& group) {
  std::vector<Permutation> elems(group.begin(), group.end());
  ElementSet assigned;
  std::multiset<std::size_t> sizes;
  for (const auto& x : elems) {
    if (assigned.count(x))
      continue;
    ElementSet cls;
    for (const auto& g : elems)
      cls.insert(g.inverse() * x * g);
    assigned.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

inline std::vector<std::vector<std::uint32_t>> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<std::uint32_t>> out;
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool is_even(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& c : p.cycles())
    transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

// --- number theory -------------------------------------------------------

inline std::vector<std::uint64_t> trial_factor(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      f.push_back(d);
      n /= d;
    }
  if (n > 1)
    f.push_back(n);
  return f;
}

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Multiplicative order of q modulo the prime r (r does not divide q).
inline std::uint64_t mult_order(std::uint64_t q, std::uint64_t r) {
  std::uint64_t x = q % r, k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % r);
    ++k;
  }
  return k;
}

// Phi_k(q) by recursive division of q^k - 1 by Phi_d(q) over proper divisors.
inline solvcrit::UInt128 cyclotomic_by_division(unsigned k, solvcrit::UInt128 q) {
  solvcrit::UInt128 v = 1;
  for (unsigned i = 0; i < k; ++i)
    v *= q;
  v -= 1;
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0)
      v /= cyclotomic_by_division(d, q);
  return v;
}

} // namespace oracle

#endif
