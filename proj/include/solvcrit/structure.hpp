#ifndef SOLVCRIT_STRUCTURE_HPP
#define SOLVCRIT_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "solvcrit/group.hpp"

namespace solvcrit {

struct SolvabilityResult {
  bool solvable;
  // |G|, |G'|, |G''|, ... ending at 1 or at the first repeated order.
  std::vector<GroupOrder> series_orders;
};

// [G,G] as the normal closure of the commutators of G's generators.
Group derived_subgroup(const Group& group);
SolvabilityResult derived_series(const Group& group);
inline bool is_solvable(const Group& group) { return derived_series(group).solvable; }

// The full element list of a group with lookups by element and by order.
// Built once and shared by class, spectrum and criterion computations.
class ElementTable {
public:
  explicit ElementTable(const Group& group, std::uint64_t cap = default_enumeration_cap());

  const Group& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint64_t order_of(std::size_t i) const { return orders_[i]; }

  // Enumeration index of p; throws std::out_of_range when p is not in G.
  std::size_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

  // Indices of elements of order exactly m, ascending.
  const std::vector<std::size_t>& indices_of_order(std::uint64_t m) const;

private:
  Group group_;
  std::vector<Permutation> elements_;
  std::vector<std::uint64_t> orders_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_order_;
};

struct ConjugacyClass {
  std::string name;                  // e.g. "5B": element order plus a letter
  Permutation representative;        // member with the smallest enumeration index
  std::size_t representative_index;
  std::uint64_t size;
  std::uint64_t order_of_elements;
  std::vector<std::size_t> members;  // enumeration indices, ascending
};

// Classes sorted by (element order, size, representative index).
std::vector<ConjugacyClass> conjugacy_classes(const ElementTable& table);
std::vector<ConjugacyClass> conjugacy_classes(const Group& group,
                                              std::uint64_t cap = default_enumeration_cap());

struct OrderSpectrum {
  std::vector<std::uint64_t> orders; // ascending
  GroupOrder group_order;

  bool contains(std::uint64_t m) const;
};

OrderSpectrum order_spectrum(const ElementTable& table);
OrderSpectrum order_spectrum(const Group& group, std::uint64_t cap = default_enumeration_cap());

std::vector<Permutation> elements_of_order(const Group& group, std::uint64_t m,
                                           std::uint64_t cap = default_enumeration_cap());

} // namespace solvcrit

#endif
