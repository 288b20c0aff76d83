#pragma once

#include <string>

#include "gk/blueprint.hpp"
#include "gk/order_set.hpp"

namespace gk {

struct EnumConfig {
  u64 cap = 10'000'000;       // element count cap for any enumeration
  u64 scan_cap = 10'000'000;  // full scans allowed up to this many candidates
  u64 seed = 0x2b67f0a1d3c4e5ull;
  bool parallel = true;
};

struct SpectrumResult {
  std::string group_name;
  u64 group_order = 0;          // 0 when it does not fit below 2^64
  std::string group_order_str;  // always the exact decimal
  OrderSet omega;
};

// Element orders of A_n (or S_n) through cycle types: the lcm of each
// partition of n, restricted to even partitions for the alternating group.
SpectrumResult spectrum_alternating(int n, bool symmetric);

enum class ClassicalFamily { PSL2, PGL2, PSL3, PSU3, PSp4, PSU4, PSp6 };

struct ClassicalRequest {
  ClassicalFamily family = ClassicalFamily::PSL2;
  u64 q = 0;
  // Extend by the field-automorphism subgroup generated by frobenius^field_aut
  // of the matrix field (0 = none).
  unsigned field_aut = 0;
  // PSL2, odd q only: instead of a plain extension, adjoin the coset pairing
  // non-square determinants with frobenius^field_aut (the third index-two
  // subgroup of the full automorphism group, M10-style).
  bool mixed_diag_field = false;
};

// Enumerates the matrix group modulo its scalars: a full scan of the
// ambient matrix space when small enough, otherwise a breadth-first closure
// from a seeded random generating set whose size must match the order
// formula.
SpectrumResult spectrum_classical(const ClassicalRequest& req, const EnumConfig& cfg = {});

// Enumerates all (vector, complement exponent) pairs of the blueprint group
// and computes element orders through the semidirect product law.  Requires
// every tower's x to be materialized.
SpectrumResult spectrum_blueprint(const SolvableBlueprint& b, const EnumConfig& cfg = {});

}  // namespace gk
