#ifndef SOLVCRIT_GROUP_HPP
#define SOLVCRIT_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "solvcrit/permutation.hpp"

namespace solvcrit {

using GroupOrder = std::uint64_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// Reads SOLVCRIT_ENUM_CAP once; falls back to kDefaultEnumerationCap.
std::uint64_t default_enumeration_cap();

class CapExceeded : public std::runtime_error {
public:
  CapExceeded(GroupOrder order, std::uint64_t cap);
  GroupOrder order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

private:
  GroupOrder order_;
  std::uint64_t cap_;
};

// Base and strong generating set built by deterministic Schreier-Sims.
//
// Level i stabilises base points 0..i-1 (0-based) and stores the orbit of
// base point i under its strong generators together with one coset
// representative per orbit point: rep(beta) maps base[i] to beta.
// A new base point is always the smallest point moved by the element that
// forced it, so the base depends only on the generator list.
class StabilizerChain {
public:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;                       // discovery order
    std::vector<std::optional<Permutation>> reps;   // indexed by point
  };

  explicit StabilizerChain(std::size_t degree);

  // Adds g if it is not already a member and restores the BSGS property.
  // Returns true when the group grew.
  bool extend(const Permutation& g);

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const; // 1-based

  GroupOrder order() const;
  bool contains(const Permutation& p) const;

  // Every element exactly once; the order depends only on the chain.
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

private:
  struct SiftResult {
    Permutation residue;
    std::size_t level; // levels_.size() when every level was passed
  };
  SiftResult sift(Permutation g, std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  void add_strong_generator(const Permutation& g, std::size_t up_to_level);
  void complete(std::size_t start_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

// Immutable permutation group: generators plus the chain built from them.
class Group {
public:
  // Throws std::invalid_argument on an empty list or mixed degrees.
  explicit Group(std::vector<Permutation> generators, std::string label = {});

  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return chain_; }
  const std::string& label() const { return label_; }
  std::size_t degree() const { return chain_.degree(); }

  GroupOrder order() const { return chain_.order(); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

  // Deterministic element list; throws CapExceeded when |G| > cap.
  std::vector<Permutation> elements(std::uint64_t cap = default_enumeration_cap()) const;
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t cap = default_enumeration_cap()) const;

  Group with_label(std::string label) const;

private:
  Group(std::vector<Permutation> generators, StabilizerChain chain, std::string label);
  friend Group normal_closure_unchecked(const Group&, const std::vector<Permutation>&);

  std::vector<Permutation> generators_;
  StabilizerChain chain_;
  std::string label_;
};

Group build_group(std::vector<Permutation> generators, std::string label = {});
inline GroupOrder group_order(const Group& g) { return g.order(); }
inline bool contains(const Group& g, const Permutation& p) { return g.contains(p); }
std::vector<Permutation> enumerate_elements(const Group& g,
                                            std::uint64_t cap = default_enumeration_cap());
Group generated_subgroup(const std::vector<Permutation>& elements);

// Smallest normal subgroup of G containing S. Throws std::invalid_argument
// when some element of S lies outside G.
Group normal_closure(const Group& group, const std::vector<Permutation>& elements);
// As normal_closure, for callers that already know S is inside G.
Group normal_closure_unchecked(const Group& group, const std::vector<Permutation>& elements);

} // namespace solvcrit

#endif
