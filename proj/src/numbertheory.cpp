#include "solvcrit/numbertheory.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace solvcrit {

namespace {

using boost::multiprecision::cpp_int;

cpp_int to_big(UInt128 v) {
  cpp_int r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

UInt128 from_big(const cpp_int& v) {
  const cpp_int mask = (cpp_int(1) << 64) - 1;
  auto hi = static_cast<std::uint64_t>(static_cast<cpp_int>(v >> 64));
  auto lo = static_cast<std::uint64_t>(static_cast<cpp_int>(v & mask));
  return (UInt128{hi} << 64) | lo;
}

void require_exponent(unsigned e) {
  if (e == 0)
    throw std::invalid_argument("exponent e must be positive");
}

// Distinct primes of q^e - 1, assembled from the factorisations of the
// cyclotomic values Phi_d(q), d | e, whose product is q^e - 1.
std::vector<UInt128> distinct_primes_of_power_minus_one(UInt128 q, unsigned e) {
  std::vector<UInt128> primes;
  for (std::uint64_t d : divisors(e)) {
    UInt128 v = cyclotomic_value(static_cast<unsigned>(d), q);
    if (v < 2)
      continue;
    auto f = factorize(v);
    primes.insert(primes.end(), f.begin(), f.end());
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

DivisorSet large_part(DivisorSet base, UInt128 q, unsigned e, DivisorFlavor flavor) {
  DivisorSet out{flavor, q, e, {}, std::nullopt};
  const UInt128 next = UInt128{e} + 1;
  bool has_e_plus_one = false;
  for (UInt128 r : base.primes) {
    if (r > next)
      out.primes.push_back(r);
    else if (r == next)
      has_e_plus_one = true;
  }
  if (has_e_plus_one) {
    const UInt128 qe_minus_one = checked_pow(q, e) - 1;
    if (qe_minus_one % (next * next) == 0)
      out.square_entry = next * next;
  }
  return out;
}

} // namespace

std::string_view flavor_name(DivisorFlavor f) {
  switch (f) {
  case DivisorFlavor::ppd: return "ppd";
  case DivisorFlavor::bppd: return "bppd";
  case DivisorFlavor::lpd: return "lpd";
  case DivisorFlavor::lbpd: return "lbpd";
  }
  return "?";
}

int mobius(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("mobius(0) is undefined");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  if (n > 1)
    mu = -mu;
  return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d)
      continue;
    small.push_back(d);
    if (d != n / d)
      large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

UInt128 cyclotomic_value(unsigned k, UInt128 q) {
  if (k == 0 || k > 120)
    throw std::out_of_range("cyclotomic_value: k must be in 1..120");
  if (q < 2)
    throw std::out_of_range("cyclotomic_value: q must be at least 2");
  checked_pow(q, k);
  cpp_int numerator = 1, denominator = 1;
  const cpp_int big_q = to_big(q);
  for (std::uint64_t d : divisors(k)) {
    int mu = mobius(k / d);
    if (mu == 0)
      continue;
    cpp_int term = boost::multiprecision::pow(big_q, static_cast<unsigned>(d)) - 1;
    (mu > 0 ? numerator : denominator) *= term;
  }
  if (numerator % denominator != 0)
    throw std::logic_error("cyclotomic_value: inexact division");
  return from_big(numerator / denominator);
}

DivisorSet ppd(UInt128 q, unsigned e) {
  require_exponent(e);
  if (q < 2)
    throw std::out_of_range("ppd: q must be at least 2");
  checked_pow(q, e);
  DivisorSet out{DivisorFlavor::ppd, q, e, {}, std::nullopt};
  for (UInt128 r : distinct_primes_of_power_minus_one(q, e)) {
    // r must not divide q^i - 1 for any 0 < i < e
    bool primitive = true;
    UInt128 x = q % r;
    for (unsigned i = 1; i < e && primitive; ++i) {
      if (x == 1)
        primitive = false;
      x = mulmod(x, q, r);
    }
    if (primitive)
      out.primes.push_back(r);
  }
  return out;
}

DivisorSet bppd(const PrimePower& q, unsigned e) {
  require_exponent(e);
  DivisorSet out = ppd(q.p, q.k * e);
  out.flavor = DivisorFlavor::bppd;
  out.q = q.q;
  out.e = e;
  return out;
}

DivisorSet lpd(UInt128 q, unsigned e) { return large_part(ppd(q, e), q, e, DivisorFlavor::lpd); }

DivisorSet lbpd(const PrimePower& q, unsigned e) {
  return large_part(bppd(q, e), q.q, e, DivisorFlavor::lbpd);
}

bool zsigmondy_empty(UInt128 q, unsigned e) {
  if (q < 2 || e < 2)
    throw std::invalid_argument("zsigmondy_empty: requires q >= 2 and e >= 2");
  const bool mersenne = is_prime(q) && ((q + 1) & q) == 0;
  if (mersenne && e == 2)
    return true;
  return (q == 2 && e == 6) || (q == 4 && e == 3) || (q == 8 && e == 2);
}

bool lbpd_empty_closed_form(UInt128 q, unsigned e) {
  if (q < 2 || e < 3)
    throw std::invalid_argument("lbpd_empty_closed_form: requires q >= 2 and e >= 3");
  static constexpr std::array<std::pair<unsigned, unsigned>, 9> exceptions{{
      {2, 4}, {2, 6}, {2, 10}, {2, 12}, {2, 18}, {3, 4}, {3, 6}, {4, 3}, {5, 6}}};
  return std::any_of(exceptions.begin(), exceptions.end(),
                     [&](const auto& x) { return q == x.first && e == x.second; });
}

std::pair<std::uint64_t, std::uint64_t> alternating_pair(std::uint64_t m) {
  if (m < 5)
    throw std::invalid_argument("alternating_pair: m must be at least 5");
  std::uint64_t p = 0, q = 0;
  bool explicit_window = true;
  if (m <= 6) {
    p = 3, q = 5;
  } else if (m <= 10) {
    p = 5, q = 7;
  } else if (m >= 14 && m <= 16) {
    p = 11, q = 13;
  } else {
    explicit_window = false;
    q = m;
    while (!is_prime(q))
      --q;
    p = m / 2 + 1;
    while (!is_prime(p))
      ++p;
    if (p + 3 > q)
      throw std::logic_error("alternating_pair: no gap of 3 between primes for m = " +
                             std::to_string(m));
  }
  // The explicit windows allow p = m/2 (m = 6, 10); the general rule is strict.
  const bool lower_ok = explicit_window ? 2 * p >= m : 2 * p > m;
  if (!lower_ok || !(p < q) || q > m)
    throw std::logic_error("alternating_pair: selected pair violates m/2 <= p < q <= m");
  return {p, q};
}

} // namespace solvcrit
