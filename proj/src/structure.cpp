#include "solvcrit/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace solvcrit {

Group derived_subgroup(const Group& group) {
  const auto& gens = group.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure_unchecked(group, comms);
}

SolvabilityResult derived_series(const Group& group) {
  SolvabilityResult out{false, {group.order()}};
  Group current = group;
  while (out.series_orders.back() != 1) {
    Group next = derived_subgroup(current);
    GroupOrder n = next.order();
    if (n == out.series_orders.back())
      return out; // perfect: the series is stuck above 1
    out.series_orders.push_back(n);
    current = std::move(next);
  }
  out.solvable = true;
  return out;
}

// ---------------------------------------------------------------------------

ElementTable::ElementTable(const Group& group, std::uint64_t cap)
    : group_(group), elements_(group.elements(cap)) {
  orders_.reserve(elements_.size());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    orders_.push_back(elements_[i].order());
    index_.emplace(elements_[i], i);
    by_order_[orders_.back()].push_back(i);
  }
}

std::size_t ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::out_of_range("element " + p.to_string() + " is not in the group");
  return it->second;
}

const std::vector<std::size_t>& ElementTable::indices_of_order(std::uint64_t m) const {
  static const std::vector<std::size_t> none;
  auto it = by_order_.find(m);
  return it == by_order_.end() ? none : it->second;
}

std::vector<ConjugacyClass> conjugacy_classes(const ElementTable& table) {
  const auto& gens = table.group().generators();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(table.size(), unassigned);
  std::vector<ConjugacyClass> classes;

  for (std::size_t start = 0; start < table.size(); ++start) {
    if (class_of[start] != unassigned)
      continue;
    const std::size_t id = classes.size();
    std::vector<std::size_t> members{start};
    class_of[start] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Permutation& x = table[members[k]];
      for (const auto& g : gens) {
        std::size_t j = table.index_of(conjugate(x, g));
        if (class_of[j] == unassigned) {
          class_of[j] = id;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ConjugacyClass c{{}, table[start], start, members.size(), table.order_of(start),
                     std::move(members)};
    classes.push_back(std::move(c));
  }

  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::tie(a.order_of_elements, a.size, a.representative_index) <
           std::tie(b.order_of_elements, b.size, b.representative_index);
  });

  std::map<std::uint64_t, int> letters;
  for (auto& c : classes) {
    int k = letters[c.order_of_elements]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('A' + k % 26));
      k = k / 26 - 1;
    } while (k >= 0);
    c.name = std::to_string(c.order_of_elements) + suffix;
  }
  return classes;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& group, std::uint64_t cap) {
  return conjugacy_classes(ElementTable(group, cap));
}

bool OrderSpectrum::contains(std::uint64_t m) const {
  return std::binary_search(orders.begin(), orders.end(), m);
}

OrderSpectrum order_spectrum(const ElementTable& table) {
  OrderSpectrum s{{}, table.group().order()};
  for (std::size_t i = 0; i < table.size(); ++i)
    s.orders.push_back(table.order_of(i));
  std::sort(s.orders.begin(), s.orders.end());
  s.orders.erase(std::unique(s.orders.begin(), s.orders.end()), s.orders.end());
  return s;
}

OrderSpectrum order_spectrum(const Group& group, std::uint64_t cap) {
  OrderSpectrum s{{}, group.order()};
  group.for_each_element([&](const Permutation& p) { s.orders.push_back(p.order()); }, cap);
  std::sort(s.orders.begin(), s.orders.end());
  s.orders.erase(std::unique(s.orders.begin(), s.orders.end()), s.orders.end());
  return s;
}

std::vector<Permutation> elements_of_order(const Group& group, std::uint64_t m,
                                           std::uint64_t cap) {
  std::vector<Permutation> out;
  group.for_each_element(
      [&](const Permutation& p) {
        if (p.order() == m)
          out.push_back(p);
      },
      cap);
  return out;
}

} // namespace solvcrit
