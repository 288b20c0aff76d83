#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gk {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest value handled anywhere in the library.  Powers q^m beyond this
// are reported as cap errors, never wrapped.
inline constexpr u64 kMaxValue = (u64{1} << 63) - 1;

struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, int>> factors;  // (prime, multiplicity), primes increasing

  u64 recompose() const;
};

bool is_prime(u64 n);

// Complete factorization of 1 <= n <= 2^63-1.  n = 1 gives an empty list.
Factorization factorize(u64 n);

// Distinct prime divisors of n, increasing.
std::vector<u64> prime_divisors(u64 n);

// All divisors of n, increasing.
std::vector<u64> divisors(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// q^m if it fits below 2^63, otherwise nullopt.
std::optional<u64> checked_pow(u64 q, unsigned m);

// e(r, q): for odd prime r coprime to q, the least m with q^m = 1 (mod r).
// For r = 2 (q odd) the graph convention applies: 1 when q = 1 (mod 4),
// otherwise 2.
u64 mult_order(u64 q, u64 r);

// Plain multiplicative order, r = 2 included (always 1 for odd q).  This is
// the order used for field-degree computations.
u64 mult_order_plain(u64 q, u64 r);

// R_m(q): primes r dividing q^m - 1 with e(r, q) = m, for any integer
// q >= 2.  Empty exactly in the Zsigmondy exception cases.  Throws
// cap_exceeded when q^m does not fit below 2^63.
std::vector<u64> primitive_prime_divisors(u64 q, unsigned m);

// (x)_r: the largest power of the prime r dividing x.
u64 r_part(u64 x, u64 r);

struct FermatMersenne {
  bool is_fermat = false;    // p - 1 is a power of two (>= 2)
  bool is_mersenne = false;  // p + 1 is a power of two (>= 2)
};

FermatMersenne fermat_mersenne(u64 p);

// All (a, b) with p^a - q^b = 1 and p^a <= 2^63-1, via the classical case
// split: (p^a, q^b) is (3^2, 2^3), (p, 2^b) or (2^a, q).
std::vector<std::pair<unsigned, unsigned>> gerono_solutions(u64 p, u64 q);

}  // namespace gk
