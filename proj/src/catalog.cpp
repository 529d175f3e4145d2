#include "solvcrit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "solvcrit/numbertheory.hpp"

namespace solvcrit {

namespace {

GroupOrder factorial(unsigned m) {
  GroupOrder r = 1;
  for (unsigned i = 2; i <= m; ++i)
    r *= i;
  return r;
}

Group checked(Group g, GroupOrder expected) {
  if (g.order() != expected)
    throw std::logic_error(g.label() + ": constructed order " + std::to_string(g.order()) +
                           ", expected " + std::to_string(expected));
  return g;
}

Permutation cycle_on(std::size_t degree, unsigned first, unsigned last) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (unsigned i = first; i < last; ++i)
    img[i - 1] = i;
  img[last - 1] = first - 1;
  return Permutation::from_images(std::move(img));
}

} // namespace

Group make_alternating(unsigned m) {
  if (m < 3)
    throw std::invalid_argument("alternating group needs degree at least 3");
  std::vector<Permutation> gens{cycle_on(m, 1, 3)};
  if (m > 3)
    gens.push_back(m % 2 ? cycle_on(m, 1, m) : cycle_on(m, 2, m));
  return checked(Group(std::move(gens), "A" + std::to_string(m)), factorial(m) / 2);
}

Group make_symmetric(unsigned m) {
  if (m < 3)
    throw std::invalid_argument("symmetric group needs degree at least 3");
  return checked(Group({cycle_on(m, 1, m), cycle_on(m, 1, 2)}, "S" + std::to_string(m)),
                 factorial(m));
}

Group make_cyclic(unsigned n) {
  if (n < 1)
    throw std::invalid_argument("cyclic group needs n >= 1");
  Permutation g = n == 1 ? Permutation(1) : cycle_on(n, 1, n);
  return checked(Group({g}, "C" + std::to_string(n)), n);
}

Group make_dihedral(unsigned n) {
  if (n < 1)
    throw std::invalid_argument("dihedral group needs n >= 1");
  std::string label = "D" + std::to_string(n);
  if (n == 1)
    return checked(Group({parse_cycles("(1 2)", 2)}, label), 2);
  if (n == 2)
    return checked(Group({parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)}, label), 4);
  // rotation and the reflection i -> n+1-i
  std::vector<Point> refl(n);
  for (unsigned i = 0; i < n; ++i)
    refl[i] = n - 1 - i;
  return checked(Group({cycle_on(n, 1, n), Permutation::from_images(std::move(refl))}, label),
                 2 * GroupOrder{n});
}

Group make_frobenius20() {
  // x -> x+1 and x -> 2x on GF(5), point v+1 for field element v
  return checked(Group({parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 3 5 4)", 5)}, "F20"), 20);
}

// ---------------------------------------------------------------------------

namespace {

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = [&] {
    for (unsigned x = 1; x < p; ++x)
      if (x * m.back() % p == 1)
        return x;
    return 1u;
  }();
  while (a.size() > dm) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly decode(unsigned v, unsigned p, unsigned len) {
  Poly f(len);
  for (unsigned i = 0; i < len; ++i, v /= p)
    f[i] = v % p;
  return f;
}

bool irreducible(const Poly& f, unsigned p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i)
      count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = decode(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

} // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
  if (q < 2 || q > 1024)
    throw std::invalid_argument("field size must be in 2..1024");
  PrimePower pp = [&] {
    try {
      return PrimePower::of(q);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
    }
  }();
  p_ = static_cast<unsigned>(pp.p);
  k_ = pp.k;

  Poly mod;
  for (unsigned low = 0; low < q_; ++low) {
    Poly f = decode(low, p_, k_);
    f.push_back(1);
    if (irreducible(f, p_)) {
      mod = std::move(f);
      break;
    }
  }
  if (mod.empty())
    throw std::runtime_error("no irreducible polynomial found for GF(" + std::to_string(q) + ")");
  modulus_.assign(mod.begin(), mod.end() - 1);

  mul_.assign(std::size_t{q_} * q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    Poly fa = decode(a, p_, k_);
    for (unsigned b = 0; b < q_; ++b) {
      Poly fb = decode(b, p_, k_);
      Poly prod(2 * k_, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
      Poly r = poly_mod(prod, mod, p_);
      unsigned v = 0;
      for (std::size_t i = r.size(); i-- > 0;)
        v = v * p_ + r[i];
      mul_[a * q_ + b] = v;
    }
  }

  primitive_ = 0;
  for (unsigned g = 1; g < q_ && !primitive_; ++g) {
    unsigned x = g, order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q_ - 1)
      primitive_ = g;
  }
  if (!primitive_)
    throw std::runtime_error("no primitive element found for GF(" + std::to_string(q) + ")");
}

unsigned FiniteField::add(unsigned a, unsigned b) const {
  unsigned r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_)
    r += (a % p_ + b % p_) % p_ * scale;
  return r;
}

unsigned FiniteField::neg(unsigned a) const {
  unsigned r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i, a /= p_, scale *= p_)
    r += (p_ - a % p_) % p_ * scale;
  return r;
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0)
    throw std::domain_error("zero has no inverse");
  for (unsigned b = 1; b < q_; ++b)
    if (mul(a, b) == 1)
      return b;
  throw std::logic_error("field element without inverse");
}

Group make_psl2(unsigned q) {
  if (q < 4 || q > 32)
    throw std::invalid_argument("make_psl2: q must be a prime power in 4..32");
  FiniteField f(q);
  const unsigned inf = q;
  const unsigned nu2 = f.mul(f.primitive_element(), f.primitive_element());
  const unsigned minus_one = f.neg(1);

  std::vector<Point> shift(q + 1), scale(q + 1), invert(q + 1);
  shift[inf] = scale[inf] = inf;
  invert[inf] = 0;
  invert[0] = inf;
  for (unsigned x = 0; x < q; ++x) {
    shift[x] = f.add(x, 1);
    scale[x] = f.mul(nu2, x);
    if (x != 0)
      invert[x] = f.mul(minus_one, f.inv(x));
  }
  Group g({Permutation::from_images(std::move(shift)), Permutation::from_images(std::move(scale)),
           Permutation::from_images(std::move(invert))},
          "psl2:" + std::to_string(q));
  const GroupOrder expected = GroupOrder{q} * (GroupOrder{q} * q - 1) / std::gcd(2u, q - 1);
  if (g.order() != expected)
    throw std::runtime_error("make_psl2(" + std::to_string(q) + "): generated order " +
                             std::to_string(g.order()) + ", expected " + std::to_string(expected));
  return g;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<unsigned> parse_suffix(std::string_view s) {
  if (s.empty() || s.size() > 6)
    return std::nullopt;
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    return std::nullopt;
  return v;
}

} // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("SOLVCRIT_DATA_DIR"); env && *env)
    return env;
#ifdef SOLVCRIT_DATA_DIR
  return SOLVCRIT_DATA_DIR;
#else
  return "data";
#endif
}

Group resolve_group(std::string_view name, const std::filesystem::path& data_dir) {
  auto unknown = [&] { return DataError("unknown group name: " + std::string(name)); };
  try {
    if (name == "F20")
      return make_frobenius20();
    if (name.rfind("psl2:", 0) == 0) {
      auto q = parse_suffix(name.substr(5));
      if (!q)
        throw unknown();
      return make_psl2(*q);
    }
    if (name.size() >= 2 && std::string_view("ASCD").find(name[0]) != std::string_view::npos) {
      if (auto n = parse_suffix(name.substr(1))) {
        switch (name[0]) {
        case 'A': return make_alternating(*n);
        case 'S': return make_symmetric(*n);
        case 'C': return make_cyclic(*n);
        case 'D': return make_dihedral(*n);
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(name) + ": " + e.what());
  }
  std::string file = std::string(name) + ".grp";
  if (name.find('/') == std::string_view::npos && std::filesystem::exists(data_dir / file))
    return load_group_file(data_dir / file);
  throw unknown();
}

} // namespace solvcrit
