#ifndef SOLVCRIT_NUMBERTHEORY_HPP
#define SOLVCRIT_NUMBERTHEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace solvcrit {

using UInt128 = unsigned __int128;

// Every value handled here stays below 2^96; larger inputs throw
// std::out_of_range instead of wrapping.
inline constexpr UInt128 kValueLimit = UInt128{1} << 96;

std::string to_string(UInt128 v);
// Decimal only; throws std::invalid_argument on junk or overflow of 128 bits.
UInt128 parse_uint128(std::string_view text);

UInt128 mulmod(UInt128 a, UInt128 b, UInt128 m);
UInt128 powmod(UInt128 base, UInt128 exp, UInt128 m);
UInt128 gcd(UInt128 a, UInt128 b);

// q^e, throwing std::out_of_range unless the result is below 2^96.
UInt128 checked_pow(UInt128 q, unsigned e);

// Trial division, Miller-Rabin to the first 13 prime bases (deterministic
// below 3.317e24) and a strong Lucas test above that (BPSW).
bool is_prime(UInt128 n);

// Prime factors with multiplicity, ascending. Trial division to 10^6, then
// Brent's variant of Pollard rho with fixed seeds. Requires 2 <= n < 2^96.
std::vector<UInt128> factorize(UInt128 n);

struct PrimePower {
  UInt128 p;
  unsigned k;
  UInt128 q;

  // Throws std::invalid_argument unless q = p^k with p prime, k >= 1.
  static PrimePower of(UInt128 q);
};

enum class DivisorFlavor { ppd, bppd, lpd, lbpd };
std::string_view flavor_name(DivisorFlavor f);

struct DivisorSet {
  DivisorFlavor flavor;
  UInt128 q;
  unsigned e;
  std::vector<UInt128> primes;         // ascending
  std::optional<UInt128> square_entry; // (e+1)^2 for the large flavours only

  bool empty() const { return primes.empty() && !square_entry; }
};

// Primes r | q^e - 1 with r not dividing q^i - 1 for 0 < i < e. q may be any
// integer >= 2 here; the basic variants require a prime power.
DivisorSet ppd(UInt128 q, unsigned e);
DivisorSet bppd(const PrimePower& q, unsigned e);
DivisorSet lpd(UInt128 q, unsigned e);
DivisorSet lbpd(const PrimePower& q, unsigned e);

// Closed forms for bppd(q,e) = {} (e >= 2) and Lbpd(q,e) = {} (e >= 3).
bool zsigmondy_empty(UInt128 q, unsigned e);
bool lbpd_empty_closed_form(UInt128 q, unsigned e);

// Primes p < q used to generate nonsolvable subgroups of A_m, m >= 5.
std::pair<std::uint64_t, std::uint64_t> alternating_pair(std::uint64_t m);

int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Phi_k(q) as the product over d | k of (q^d - 1)^mu(k/d). Requires
// 1 <= k <= 120, q >= 2 and q^k < 2^96.
UInt128 cyclotomic_value(unsigned k, UInt128 q);

} // namespace solvcrit

#endif
