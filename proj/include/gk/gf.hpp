#pragma once

#include <memory>
#include <vector>

#include "gk/numtheory.hpp"

namespace gk {

// GF(p^k) with a deterministic modulus: the first irreducible monic
// polynomial of degree k in the lexicographic enumeration by constant-first
// coefficient index.  Elements are indices in [0, p^k): the index digits in
// base p are the polynomial coordinates, so index 1 is the field's one.
class Field {
 public:
  Field(u64 p, unsigned k);

  u64 p() const { return p_; }
  unsigned degree() const { return k_; }
  u64 size() const { return size_; }

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;

  // x -> x^(p^e), e applications of the p-power map.
  u64 frobenius(u64 a, unsigned e) const;

  // Multiplicative order of a unit.
  u64 element_order(u64 a) const;

  // Modulus coefficients c0..ck (monic, ck = 1).
  const std::vector<u64>& modulus() const { return modulus_; }

 private:
  u64 mul_general(u64 a, u64 b) const;

  u64 p_;
  unsigned k_;
  u64 size_;
  std::vector<u64> modulus_;
  // x^(k+i) reduced mod the modulus, i = 0..k-2, as coefficient rows.
  std::vector<std::vector<u64>> reduction_;
  // Dense tables for small fields (hot loops in the enumeration kernels).
  std::vector<u64> mul_table_;
  std::vector<u64> inv_table_;
  std::vector<u64> frob_table_;  // one application of x -> x^p
  mutable std::vector<std::pair<u64, int>> unit_group_factors_;  // of p^k - 1, lazy
};

}  // namespace gk
