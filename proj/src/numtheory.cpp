#include "gk/numtheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "gk/errors.hpp"

namespace gk {

namespace {

constexpr u64 kSieveBound = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kSieveBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kSieveBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle variant; deterministic because the polynomial shifts are
// tried in a fixed order.
u64 brent_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = (mulmod(y, y, n) + c) % n;
      ++lam;
      u64 diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

bool is_power_of_two(u64 x) { return x >= 2 && (x & (x - 1)) == 0; }

// Least m with base^m = 1 (mod r), r an odd prime not dividing base.
u64 odd_prime_order(u64 base, u64 r) {
  u64 order = r - 1;
  for (const auto& [f, mult] : factorize(r - 1).factors) {
    (void)mult;
    while (order % f == 0 && powmod(base, order / f, r) == 1) order /= f;
  }
  return order;
}

}  // namespace

u64 Factorization::recompose() const {
  u64 v = 1;
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // This base set is a known deterministic witness set below 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n < 1 || n > kMaxValue) throw invalid_input("factorize: value out of range");
  Factorization f;
  f.value = n;
  std::vector<u64> primes;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    if (n <= kSieveBound * kSieveBound && is_prime(n)) {
      primes.push_back(n);
    } else {
      factor_rec(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p) {
      ++f.factors.back().second;
    } else {
      f.factors.emplace_back(p, 1);
    }
  }
  return f;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& [p, e] : factorize(n).factors) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const size_t base = out.size();
    u64 pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<u64> checked_pow(u64 q, unsigned m) {
  u64 r = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (r > kMaxValue / q) return std::nullopt;
    r *= q;
  }
  return r;
}

u64 mult_order(u64 q, u64 r) {
  if (!is_prime(r)) throw invalid_input("mult_order: r must be prime");
  if (q < 2) throw invalid_input("mult_order: q must be >= 2");
  if (r == 2) {
    if (q % 2 == 0) throw invalid_input("mult_order: r = 2 requires odd q");
    return q % 4 == 1 ? 1 : 2;
  }
  if (q % r == 0) throw invalid_input("mult_order: gcd(q, r) != 1");
  return odd_prime_order(q, r);
}

u64 mult_order_plain(u64 q, u64 r) {
  if (!is_prime(r)) throw invalid_input("mult_order_plain: r must be prime");
  if (q < 2) throw invalid_input("mult_order_plain: q must be >= 2");
  if (r == 2) {
    if (q % 2 == 0) throw invalid_input("mult_order_plain: r = 2 requires odd q");
    return 1;
  }
  if (q % r == 0) throw invalid_input("mult_order_plain: gcd(q, r) != 1");
  return odd_prime_order(q, r);
}

std::vector<u64> primitive_prime_divisors(u64 q, unsigned m) {
  if (q < 2) throw invalid_input("primitive_prime_divisors: q must be >= 2");
  if (m < 1) throw invalid_input("primitive_prime_divisors: m must be >= 1");
  auto qm = checked_pow(q, m);
  if (!qm) throw cap_exceeded("primitive_prime_divisors: q^m exceeds the 63-bit cap");
  std::vector<u64> out;
  for (u64 r : prime_divisors(*qm - 1)) {
    if (mult_order(q, r) == m) out.push_back(r);
  }
  return out;
}

u64 r_part(u64 x, u64 r) {
  if (x < 1) throw invalid_input("r_part: x must be >= 1");
  if (!is_prime(r)) throw invalid_input("r_part: r must be prime");
  u64 part = 1;
  while (x % r == 0) {
    part *= r;
    x /= r;
  }
  return part;
}

FermatMersenne fermat_mersenne(u64 p) {
  if (!is_prime(p)) throw invalid_input("fermat_mersenne: p must be prime");
  return FermatMersenne{is_power_of_two(p - 1), is_power_of_two(p + 1)};
}

std::vector<std::pair<unsigned, unsigned>> gerono_solutions(u64 p, u64 q) {
  if (!is_prime(p) || !is_prime(q)) throw invalid_input("gerono_solutions: p, q must be prime");
  if (p == q) throw invalid_input("gerono_solutions: p and q must differ");
  std::vector<std::pair<unsigned, unsigned>> out;
  if (p == 3 && q == 2) out.emplace_back(2, 3);  // 9 - 8 = 1
  // a = 1: q^b = p - 1
  {
    u64 rest = p - 1;
    unsigned b = 0;
    while (rest % q == 0) {
      rest /= q;
      ++b;
    }
    if (rest == 1 && b >= 1) out.emplace_back(1, b);
  }
  // b = 1: p^a = q + 1
  {
    u64 rest = q + 1;
    unsigned a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    if (rest == 1 && a >= 1) out.emplace_back(a, 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gk
