#include "solvcrit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace solvcrit {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
}

} // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0)
    throw std::invalid_argument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty())
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw std::invalid_argument("image array is not a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_one_based(std::span<const Point> images) {
  std::vector<Point> v;
  v.reserve(images.size());
  for (Point x : images) {
    if (x == 0)
      throw std::invalid_argument("point 0 is not a valid 1-based label");
    v.push_back(x - 1);
  }
  return from_images(std::move(v));
}

Point Permutation::image(Point i) const {
  if (i == 0 || i > images_.size())
    throw std::out_of_range("point " + std::to_string(i) + " out of range 1.." +
                            std::to_string(images_.size()));
  return images_[i - 1] + 1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Permutation result(degree());
  while (e) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      moved.push_back(static_cast<Point>(i + 1));
  return moved;
}

std::size_t Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return images_.size();
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<Point> out(p.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation conjugate(const Permutation& x, const Permutation& g) {
  require_same_degree(x, g);
  // x^g maps g(i) -> g(x(i))
  std::vector<Point> out(x.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[g[i]] = g[x[i]];
  return Permutation::from_images(std::move(out));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw std::invalid_argument("degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("cycle notation: " + what + " at offset " + std::to_string(pos) +
                                " in \"" + std::string(text) + "\"");
  };

  for (skip_ws(); pos < text.size(); skip_ws()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected integer");
      unsigned long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > degree)
          fail("point out of range 1.." + std::to_string(degree));
        ++pos;
      }
      if (value == 0)
        fail("point out of range 1.." + std::to_string(degree));
      auto pt = static_cast<Point>(value - 1);
      if (used[pt])
        fail("repeated point " + std::to_string(value));
      used[pt] = true;
      cycle.push_back(pt);
    }
    // "()" is accepted as the empty cycle so that identity output round-trips.
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

} // namespace solvcrit
