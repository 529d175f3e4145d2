#ifndef SOLVCRIT_CRITERION_HPP
#define SOLVCRIT_CRITERION_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "solvcrit/structure.hpp"

namespace solvcrit {

struct SubgroupVerdict {
  GroupOrder order;
  bool solvable;

  friend auto operator<=>(const SubgroupVerdict&, const SubgroupVerdict&) = default;
};

// Solvability verdicts for two-generator subgroups, memoised on the raw
// sorted generator pair. Thread-safe.
class SubgroupVerdictCache {
public:
  explicit SubgroupVerdictCache(bool enabled = true) : enabled_(enabled) {}

  SubgroupVerdict verdict(const Permutation& x, const Permutation& y);

  std::size_t hits() const;
  std::size_t size() const;

private:
  struct PairHash {
    std::size_t operator()(const std::pair<Permutation, Permutation>& p) const noexcept;
  };

  bool enabled_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<Permutation, Permutation>, SubgroupVerdict, PairHash> table_;
  std::atomic<std::size_t> hits_{0};
};

// Verdict for <x, y> computed without any cache.
SubgroupVerdict two_generator_verdict(const Permutation& x, const Permutation& y);

struct CriterionOptions {
  unsigned workers = 1;
  bool use_cache = true;
};

struct ClassPairWitness {
  std::size_t class_c;
  std::size_t class_d;
  std::optional<std::pair<Permutation, Permutation>> witness; // solvable <x,y>
  std::uint64_t pairs_scanned;
};

struct CriterionReport {
  bool holds;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample; // class indices
  std::uint64_t pairs_checked;                                       // (x, y) pairs examined
  std::vector<ClassPairWitness> class_pairs;                         // every ordered pair
  std::vector<ConjugacyClass> classes;
};

// For every ordered class pair (C, D), looks for x in C and y in D with <x,y>
// solvable. x is fixed to the class representative: <x^g, y^g> = <x, y>^g, so
// any solvable pair over C x D can be conjugated to one over {rep C} x D.
CriterionReport check_criterion(const Group& group, const CriterionOptions& options = {},
                                std::uint64_t cap = default_enumeration_cap());
CriterionReport check_criterion(const ElementTable& table,
                                const std::vector<ConjugacyClass>& classes,
                                SubgroupVerdictCache& cache, const CriterionOptions& options = {});

struct WitnessReport {
  std::uint64_t a;
  std::uint64_t b;
  bool verified;
  // Distinct (subgroup order, solvable) outcomes with their pair counts.
  std::map<SubgroupVerdict, std::uint64_t> outcomes;
  std::optional<std::pair<Permutation, Permutation>> counterexample;
  std::uint64_t pairs_checked;

  std::vector<GroupOrder> outcome_orders() const;
};

// Checks <x, y> for x over the representatives of the classes of order a and
// y over all elements of order b, in enumeration order, stopping at the first
// solvable subgroup. Throws std::invalid_argument when a or b is not an
// element order of G.
WitnessReport verify_witness_pair(const Group& group, std::uint64_t a, std::uint64_t b,
                                  const CriterionOptions& options = {},
                                  std::uint64_t cap = default_enumeration_cap());
WitnessReport verify_witness_pair(const ElementTable& table,
                                  const std::vector<ConjugacyClass>& classes, std::uint64_t a,
                                  std::uint64_t b, SubgroupVerdictCache& cache,
                                  const CriterionOptions& options = {});

// All unordered {a, b} (a <= b) from oe(G) that are witness pairs, ascending.
// With restrict_to_primes, only distinct primes a < b are tried.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
search_witness_pairs(const Group& group, bool restrict_to_primes,
                     const CriterionOptions& options = {},
                     std::uint64_t cap = default_enumeration_cap());
std::vector<std::pair<std::uint64_t, std::uint64_t>>
search_witness_pairs(const ElementTable& table, const std::vector<ConjugacyClass>& classes,
                     bool restrict_to_primes, SubgroupVerdictCache& cache,
                     const CriterionOptions& options = {});

} // namespace solvcrit

#endif
