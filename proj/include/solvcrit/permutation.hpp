#ifndef SOLVCRIT_PERMUTATION_HPP
#define SOLVCRIT_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace solvcrit {

using Point = std::uint32_t;

// A bijection of {1..n}. Points are 1-based in the public interface and stored
// 0-based internally.
//
// Products are read left to right: (p * q) applies p first, then q, so
// (p * q).image(i) == q.image(p.image(i)). Every module uses this convention.
class Permutation {
public:
  explicit Permutation(std::size_t degree = 1);

  // `images` holds 0-based images; throws if it is not a bijection.
  static Permutation from_images(std::vector<Point> images);
  // 1-based images, as a user would write them.
  static Permutation from_one_based(std::span<const Point> images);
  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }

  // 1-based.
  Point image(Point i) const;
  // 0-based, unchecked.
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  // Least k >= 1 with p^k = 1 (lcm of cycle lengths).
  std::uint64_t order() const;

  // Moved points, 1-based, ascending.
  std::vector<Point> support() const;
  // 0-based smallest moved point, or degree() when the identity.
  std::size_t first_moved() const;

  // Cycles of length >= 2, each starting at its smallest point, 1-based.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// "apply p, then q"
Permutation compose(const Permutation& p, const Permutation& q);

// x^g = g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);

// [a,b] = a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

// Parses `perm := cycle*; cycle := '(' int (ws int)* ')'`. Throws
// std::invalid_argument on out-of-range or repeated points and on bad syntax.
Permutation parse_cycles(std::string_view text, std::size_t degree);

inline std::uint64_t element_order(const Permutation& p) { return p.order(); }
inline std::vector<Point> support(const Permutation& p) { return p.support(); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace solvcrit

template <>
struct std::hash<solvcrit::Permutation> : solvcrit::PermutationHash {};

#endif
