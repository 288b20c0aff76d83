#include "gk/gf.hpp"

#include <algorithm>

#include "gk/errors.hpp"

namespace gk {

namespace {

constexpr u64 kTableLimit = 256;  // build p^k x p^k tables below this

using Poly = std::vector<u64>;  // coefficients, low degree first, over Z/p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
  const std::size_t k = f.size() - 1;  // f monic of degree k
  while (a.size() > k) {
    u64 lead = a.back();
    std::size_t shift = a.size() - 1 - k;
    if (lead != 0) {
      for (std::size_t i = 0; i <= k; ++i) {
        u64& c = a[shift + i];
        c = (c + (p - lead) * f[i]) % p;
      }
    }
    trim(a);
    if (a.size() <= k) break;
  }
  trim(a);
  return a;
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    // make b monic
    u64 lead = b.back();
    if (lead != 1) {
      u64 inv = powmod(lead, p - 2, p);
      for (u64& c : b) c = c * inv % p;
    }
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^j) mod f, computed by repeated p-th powering.
Poly frobenius_power(const Poly& f, u64 p, unsigned j) {
  Poly x{0, 1};
  Poly g = poly_mod(x, f, p);
  for (unsigned i = 0; i < j; ++i) g = poly_powmod(std::move(g), p, f, p);
  return g;
}

bool is_irreducible(const Poly& f, u64 p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  // Rabin: x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for prime r | k.
  Poly xk = frobenius_power(f, p, k);
  Poly x{0, 1};
  Poly diff = xk;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (u64 r : prime_divisors(k)) {
    Poly g = frobenius_power(f, p, k / static_cast<unsigned>(r));
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly d = poly_gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace

Field::Field(u64 p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw invalid_input("Field: characteristic must be prime");
  if (k < 1) throw invalid_input("Field: degree must be >= 1");
  auto size = checked_pow(p, k);
  if (!size || *size > (u64{1} << 32)) throw cap_exceeded("Field: p^k above the 2^32 cap");
  size_ = *size;

  // Deterministic modulus: scan monic degree-k polynomials by coefficient index.
  u64 limit = size_;
  for (u64 idx = 0;; ++idx) {
    if (idx >= limit) throw internal_error("Field: no irreducible polynomial found");
    Poly f(k + 1, 0);
    u64 rest = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  reduction_.assign(k >= 1 ? k - 1 : 0, {});
  if (k > 1) {
    // Row i holds x^(k+i) mod f as k coefficients.
    Poly cur(modulus_.begin(), modulus_.end() - 1);  // x^k = -(low part)
    for (u64& c : cur) c = (p - c) % p;
    cur.resize(k, 0);
    for (unsigned i = 0; i + 1 < k; ++i) {
      reduction_[i] = cur;
      // multiply by x and reduce
      Poly next(k, 0);
      for (unsigned j = 0; j + 1 < k; ++j) next[j + 1] = cur[j];
      u64 lead = cur[k - 1];
      if (lead != 0) {
        for (unsigned j = 0; j < k; ++j) {
          next[j] = (next[j] + lead * ((p - modulus_[j]) % p)) % p;
        }
      }
      cur = next;
    }
  }

  if (size_ <= kTableLimit) {
    mul_table_.resize(size_ * size_);
    for (u64 a = 0; a < size_; ++a) {
      for (u64 b = 0; b <= a; ++b) {
        u64 v = mul_general(a, b);
        mul_table_[a * size_ + b] = v;
        mul_table_[b * size_ + a] = v;
      }
    }
    inv_table_.assign(size_, 0);
    for (u64 a = 1; a < size_; ++a) {
      if (inv_table_[a]) continue;
      for (u64 b = 1; b < size_; ++b) {
        if (mul_table_[a * size_ + b] == 1) {
          inv_table_[a] = b;
          inv_table_[b] = a;
          break;
        }
      }
    }
  }
  if (size_ <= kTableLimit) {
    frob_table_.resize(size_);
    for (u64 a = 0; a < size_; ++a) frob_table_[a] = pow(a, p_);
  }
}

u64 Field::add(u64 a, u64 b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) return (a + b) % p_;
  u64 out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

u64 Field::neg(u64 a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return (p_ - a) % p_;
  u64 out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::mul_general(u64 a, u64 b) const {
  if (k_ == 1) return a * b % p_;
  u64 da[64], db[64];
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  u64 prod[128] = {0};
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // fold x^(k+i) via the reduction rows
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    u64 c = prod[i];
    if (c != 0) {
      const auto& row = reduction_[i - k_];
      for (unsigned j = 0; j < k_; ++j) prod[j] = (prod[j] + c * row[j]) % p_;
    }
    if (i == k_) break;
  }
  u64 out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += prod[i] * mult;
    mult *= p_;
  }
  return out;
}

u64 Field::mul(u64 a, u64 b) const {
  if (!mul_table_.empty()) return mul_table_[a * size_ + b];
  return mul_general(a, b);
}

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a == 0) throw invalid_input("Field: inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, size_ - 2);
}

u64 Field::frobenius(u64 a, unsigned e) const {
  e %= k_;
  if (!frob_table_.empty()) {
    for (unsigned i = 0; i < e; ++i) a = frob_table_[a];
    return a;
  }
  for (unsigned i = 0; i < e; ++i) a = pow(a, p_);
  return a;
}

u64 Field::element_order(u64 a) const {
  if (a == 0) throw invalid_input("Field: order of zero");
  if (unit_group_factors_.empty()) unit_group_factors_ = factorize(size_ - 1).factors;
  u64 order = size_ - 1;
  for (const auto& [f, mult] : unit_group_factors_) {
    (void)mult;
    while (order % f == 0 && pow(a, order / f) == 1) order /= f;
  }
  return order;
}

}  // namespace gk
