// 128-bit modular arithmetic, primality and factorisation.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "solvcrit/numbertheory.hpp"

namespace solvcrit {

namespace {

constexpr UInt128 kU64Limit = UInt128{1} << 64;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i])
        continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

UInt128 addmod(UInt128 a, UInt128 b, UInt128 m) {
  // a, b < m < 2^127
  UInt128 s = a + b;
  return s >= m ? s - m : s;
}

UInt128 submod(UInt128 a, UInt128 b, UInt128 m) { return a >= b ? a - b : a + (m - b); }

UInt128 half_mod(UInt128 a, UInt128 m) {
  // m odd
  return (a & 1) ? (a + m) >> 1 : a >> 1;
}

UInt128 isqrt(UInt128 n) {
  if (n == 0)
    return 0;
  UInt128 x = static_cast<UInt128>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n)
    --x;
  while ((x + 1) * (x + 1) <= n)
    ++x;
  return x;
}

bool miller_rabin(UInt128 n, UInt128 a) {
  UInt128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  UInt128 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1)
    return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1)
      return true;
  }
  return false;
}

// Jacobi symbol (a/n), n odd positive.
int jacobi(UInt128 a, UInt128 n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      unsigned r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5)
        result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3)
      result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge's parameters (P = 1).
bool strong_lucas(UInt128 n) {
  UInt128 root = isqrt(n);
  if (root * root == n)
    return false;
  long long d_signed = 5;
  UInt128 d_mod;
  for (;;) {
    UInt128 mag = static_cast<UInt128>(d_signed < 0 ? -d_signed : d_signed);
    d_mod = d_signed < 0 ? (n - mag % n) % n : mag % n;
    int j = jacobi(d_mod, n);
    if (j == -1)
      break;
    if (j == 0 && mag != n)
      return false;
    d_signed = d_signed < 0 ? -d_signed + 2 : -(d_signed + 2);
  }
  // Q = (1 - D) / 4
  long long q_signed = (1 - d_signed) / 4;
  UInt128 q_mag = static_cast<UInt128>(q_signed < 0 ? -q_signed : q_signed);
  UInt128 q_mod = q_signed < 0 ? (n - q_mag % n) % n : q_mag % n;

  UInt128 d = n + 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  UInt128 u = 1, v = 1, qk = q_mod; // U_1, V_1, Q^1 (P = 1)
  int top = 127;
  while (((d >> top) & 1) == 0)
    --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    u = mulmod(u, v, n);
    v = submod(mulmod(v, v, n), addmod(qk, qk, n), n);
    qk = mulmod(qk, qk, n);
    if ((d >> bit) & 1) {
      UInt128 u_next = half_mod(addmod(u, v, n), n);
      UInt128 v_next = half_mod(addmod(mulmod(d_mod, u, n), v, n), n);
      u = u_next;
      v = v_next;
      qk = mulmod(qk, q_mod, n);
    }
  }
  if (u == 0 || v == 0)
    return true;
  for (int r = 1; r < s; ++r) {
    v = submod(mulmod(v, v, n), addmod(qk, qk, n), n);
    if (v == 0)
      return true;
    qk = mulmod(qk, qk, n);
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Returns a nontrivial factor of the odd composite n.
UInt128 brent_rho(UInt128 n) {
  std::uint64_t seed = 0x5eed5eedULL;
  for (;;) {
    const UInt128 c = UInt128{splitmix64(seed)} % (n - 1) + 1;
    UInt128 y = UInt128{splitmix64(seed)} % n;
    auto f = [&](UInt128 x) { return addmod(mulmod(x, x, n), c, n); };
    constexpr unsigned batch = 128;
    UInt128 g = 1, r = 1, prod = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (UInt128 i = 0; i < r; ++i)
        y = f(y);
      for (UInt128 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (UInt128 i = 0; i < batch && i < r - k; ++i) {
          y = f(y);
          prod = mulmod(prod, x > y ? x - y : y - x, n);
        }
        g = gcd(prod, n);
      }
      r <<= 1;
    }
    if (g == n) {
      // Backtrack one step at a time from the last saved state.
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_into(UInt128 n, std::vector<UInt128>& out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  UInt128 d = brent_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

std::string to_string(UInt128 v) {
  if (v == 0)
    return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

UInt128 parse_uint128(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("expected a nonnegative integer");
  UInt128 v = 0;
  const UInt128 max = ~UInt128{0};
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("expected a nonnegative integer, got \"" + std::string(text) +
                                  "\"");
    unsigned digit = static_cast<unsigned>(ch - '0');
    if (v > (max - digit) / 10)
      throw std::invalid_argument("integer too large: " + std::string(text));
    v = v * 10 + digit;
  }
  return v;
}

UInt128 mulmod(UInt128 a, UInt128 b, UInt128 m) {
  if (m < kU64Limit)
    return (a % m) * (b % m) % m;
  if (m >= kValueLimit)
    throw std::out_of_range("mulmod: modulus must be below 2^96");
  a %= m;
  b %= m;
  // Horner over the three 32-bit limbs of b; every intermediate stays below 2^128.
  constexpr UInt128 mask = 0xffffffffULL;
  UInt128 r = a * ((b >> 64) & mask) % m;
  r = ((r << 32) % m + a * ((b >> 32) & mask) % m) % m;
  r = ((r << 32) % m + a * (b & mask) % m) % m;
  return r;
}

UInt128 powmod(UInt128 base, UInt128 exp, UInt128 m) {
  if (m == 1)
    return 0;
  UInt128 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1)
      result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

UInt128 gcd(UInt128 a, UInt128 b) {
  while (b) {
    UInt128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

UInt128 checked_pow(UInt128 q, unsigned e) {
  UInt128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q != 0 && r > (kValueLimit - 1) / q)
      throw std::out_of_range(to_string(q) + "^" + std::to_string(e) + " is not below 2^96");
    r *= q;
  }
  if (r >= kValueLimit)
    throw std::out_of_range(to_string(q) + "^" + std::to_string(e) + " is not below 2^96");
  return r;
}

bool is_prime(UInt128 n) {
  if (n < 2)
    return false;
  static constexpr std::array<unsigned, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : bases) {
    if (n == p)
      return true;
    if (n % p == 0)
      return false;
  }
  for (unsigned p : bases)
    if (!miller_rabin(n, p))
      return false;
  // 3317044064679887385961981: below this the 13 bases are a proof.
  static const UInt128 deterministic_bound = parse_uint128("3317044064679887385961981");
  if (n < deterministic_bound)
    return true;
  return strong_lucas(n);
}

std::vector<UInt128> factorize(UInt128 n) {
  if (n < 2 || n >= kValueLimit)
    throw std::out_of_range("factorize: n must satisfy 2 <= n < 2^96, got " + to_string(n));
  std::vector<UInt128> out;
  for (std::uint32_t p : small_primes()) {
    if (UInt128{p} * p > n)
      break;
    if (n < kU64Limit) {
      auto m = static_cast<std::uint64_t>(n);
      while (m % p == 0) {
        out.push_back(p);
        m /= p;
      }
      n = m;
    } else {
      while (n % p == 0) {
        out.push_back(p);
        n /= p;
      }
    }
  }
  if (n > 1) {
    constexpr std::uint64_t trial_limit = 1'000'000;
    if (n < UInt128{trial_limit} * trial_limit)
      out.push_back(n);
    else
      factor_into(n, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimePower PrimePower::of(UInt128 q) {
  if (q < 2 || q >= kValueLimit)
    throw std::invalid_argument("not a prime power: " + to_string(q));
  auto f = factorize(q);
  if (f.front() != f.back())
    throw std::invalid_argument("not a prime power: " + to_string(q));
  return {f.front(), static_cast<unsigned>(f.size()), q};
}

} // namespace solvcrit
