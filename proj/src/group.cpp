#include "solvcrit/group.hpp"

#include <cstdlib>
#include <deque>
#include <limits>

namespace solvcrit {

std::uint64_t default_enumeration_cap() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("SOLVCRIT_ENUM_CAP");
    if (!env || !*env)
      return kDefaultEnumerationCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
      return kDefaultEnumerationCap;
    return static_cast<std::uint64_t>(v);
  }();
  return cap;
}

CapExceeded::CapExceeded(GroupOrder order, std::uint64_t cap)
    : std::runtime_error("group order " + std::to_string(order) + " exceeds enumeration cap " +
                         std::to_string(cap) +
                         " (raise SOLVCRIT_ENUM_CAP or use a smaller group)"),
      order_(order), cap_(cap) {}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {
  if (degree == 0)
    throw std::invalid_argument("degree must be positive");
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& lvl : levels_)
    b.push_back(lvl.base_point + 1);
  return b;
}

GroupOrder StabilizerChain::order() const {
  GroupOrder n = 1;
  for (const auto& lvl : levels_) {
    GroupOrder k = lvl.orbit.size();
    if (n > std::numeric_limits<GroupOrder>::max() / k)
      throw std::overflow_error("group order does not fit in 64 bits");
    n *= k;
  }
  return n;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& lvl = levels_[l];
    Point beta = g[lvl.base_point];
    if (!lvl.reps[beta])
      return {std::move(g), l};
    g = g * lvl.reps[beta]->inverse();
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(degree_));
  auto r = sift(p, 0);
  return r.level == levels_.size() && r.residue.is_identity();
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  auto& lvl = levels_[level];
  lvl.orbit.assign(1, lvl.base_point);
  lvl.reps.assign(degree_, std::nullopt);
  lvl.reps[lvl.base_point] = Permutation(degree_);
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    Point delta = lvl.orbit[k];
    for (const auto& s : lvl.generators) {
      Point gamma = s[delta];
      if (!lvl.reps[gamma]) {
        lvl.reps[gamma] = *lvl.reps[delta] * s;
        lvl.orbit.push_back(gamma);
      }
    }
  }
}

void StabilizerChain::add_strong_generator(const Permutation& g, std::size_t up_to_level) {
  if (up_to_level == levels_.size()) {
    Level lvl;
    lvl.base_point = static_cast<Point>(g.first_moved());
    levels_.push_back(std::move(lvl));
  }
  for (std::size_t l = 0; l <= up_to_level; ++l) {
    // Only levels whose base prefix g fixes receive it.
    bool fixes_prefix = true;
    for (std::size_t t = 0; t < l && fixes_prefix; ++t)
      fixes_prefix = g[levels_[t].base_point] == levels_[t].base_point;
    if (fixes_prefix) {
      levels_[l].generators.push_back(g);
      rebuild_orbit(l);
    }
  }
}

bool StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_)
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(g.degree()) +
                                " vs " + std::to_string(degree_));
  if (g.is_identity() || contains(g))
    return false;
  std::size_t deepest = 0;
  while (deepest < levels_.size() && g[levels_[deepest].base_point] == levels_[deepest].base_point)
    ++deepest;
  add_strong_generator(g, deepest);
  complete(deepest);
  return true;
}

void StabilizerChain::complete(std::size_t start_level) {
  // Holt's SCHREIERSIMS: every Schreier generator at level i must sift through
  // levels i+1.. ; a failure adds the residue and restarts from its level.
  long i = static_cast<long>(std::min(start_level, levels_.size() - 1));
  while (i >= 0) {
    bool grew = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !grew; ++k) {
      for (std::size_t s = 0; s < levels_[li].generators.size() && !grew; ++s) {
        const auto& lvl = levels_[li];
        Point beta = lvl.orbit[k];
        const Permutation& gen = lvl.generators[s];
        Permutation ub_s = *lvl.reps[beta] * gen;
        const Permutation& target = *lvl.reps[gen[beta]];
        if (ub_s == target)
          continue;
        auto r = sift(ub_s * target.inverse(), li + 1);
        if (r.level == levels_.size() && r.residue.is_identity())
          continue;
        std::size_t j = r.level;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base_point = static_cast<Point>(r.residue.first_moved());
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].generators.push_back(r.residue);
          rebuild_orbit(l);
        }
        i = static_cast<long>(j);
        grew = true;
      }
    }
    if (!grew)
      --i;
  }
}

void StabilizerChain::for_each_element(const std::function<void(const Permutation&)>& fn) const {
  if (levels_.empty()) {
    fn(Permutation(degree_));
    return;
  }
  // element = u_{k-1} * ... * u_1 * u_0 with u_l a representative at level l
  auto rec = [&](auto&& self, std::size_t level, const Permutation& acc) -> void {
    const auto& lvl = levels_[level];
    for (Point beta : lvl.orbit) {
      Permutation next = acc * *lvl.reps[beta];
      if (level == 0)
        fn(next);
      else
        self(self, level - 1, next);
    }
  };
  rec(rec, levels_.size() - 1, Permutation(degree_));
}

// ---------------------------------------------------------------------------
// Group

namespace {

std::size_t checked_degree(const std::vector<Permutation>& gens) {
  if (gens.empty())
    throw std::invalid_argument("generator list must be nonempty");
  std::size_t n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n)
      throw std::invalid_argument("generators have mixed degrees");
  return n;
}

} // namespace

Group::Group(std::vector<Permutation> generators, std::string label)
    : generators_(std::move(generators)), chain_(checked_degree(generators_)),
      label_(std::move(label)) {
  for (const auto& g : generators_)
    chain_.extend(g);
}

Group::Group(std::vector<Permutation> generators, StabilizerChain chain, std::string label)
    : generators_(std::move(generators)), chain_(std::move(chain)), label_(std::move(label)) {}

bool Group::contains(const Permutation& p) const { return chain_.contains(p); }

void Group::for_each_element(const std::function<void(const Permutation&)>& fn,
                             std::uint64_t cap) const {
  GroupOrder n = order();
  if (n > cap)
    throw CapExceeded(n, cap);
  chain_.for_each_element(fn);
}

std::vector<Permutation> Group::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  GroupOrder n = order();
  if (n > cap)
    throw CapExceeded(n, cap);
  out.reserve(static_cast<std::size_t>(n));
  chain_.for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

Group Group::with_label(std::string label) const {
  Group copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Group build_group(std::vector<Permutation> generators, std::string label) {
  return Group(std::move(generators), std::move(label));
}

std::vector<Permutation> enumerate_elements(const Group& g, std::uint64_t cap) {
  return g.elements(cap);
}

Group generated_subgroup(const std::vector<Permutation>& elements) { return Group(elements); }

Group normal_closure_unchecked(const Group& group, const std::vector<Permutation>& elements) {
  StabilizerChain chain(group.degree());
  std::vector<Permutation> gens;
  std::deque<Permutation> work;
  for (const auto& s : elements) {
    if (s.degree() != group.degree())
      throw std::invalid_argument("element degree does not match group degree");
    if (chain.extend(s)) {
      gens.push_back(s);
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    Permutation n = std::move(work.front());
    work.pop_front();
    for (const auto& g : group.generators()) {
      Permutation c = conjugate(n, g);
      if (chain.extend(c)) {
        gens.push_back(c);
        work.push_back(std::move(c));
      }
    }
  }
  if (gens.empty())
    gens.emplace_back(group.degree());
  return Group(std::move(gens), std::move(chain), {});
}

Group normal_closure(const Group& group, const std::vector<Permutation>& elements) {
  for (const auto& s : elements)
    if (!group.contains(s))
      throw std::invalid_argument("normal_closure: element " + s.to_string() +
                                  " is not in the group");
  return normal_closure_unchecked(group, elements);
}

} // namespace solvcrit
