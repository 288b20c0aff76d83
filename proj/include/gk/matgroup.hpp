#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gk/gf.hpp"
#include "gk/numtheory.hpp"

namespace gk {

// Canonical byte encoding of a group element: matrix entries row-major,
// bit-packed, plus the field-automorphism power for semilinear elements.
// The all-zero key never encodes a valid element, so it doubles as the
// empty slot of the flat hash set.
struct Key {
  u64 lo = 0;
  u64 hi = 0;

  friend bool operator==(const Key&, const Key&) = default;
  friend auto operator<=>(const Key& a, const Key& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    u64 x = k.lo + 0x9e3779b97f4a7c15ull * (k.hi + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

using u32 = std::uint32_t;

// Matrix with an optional twist: aut counts applications of the p-power
// Frobenius applied on the right factor during multiplication.
struct Element {
  std::array<u32, 36> m{};  // row-major, field element indices
  unsigned aut = 0;
};

enum class MembershipKind { GeneralLinear, SpecialLinear, Symplectic, SpecialUnitary };

// Fixed subgroup of a semilinear matrix group modulo scalars, described by
// a membership predicate, a scalar subgroup used to canonicalize cosets and
// an allowed set of automorphism powers.  For two-dimensional linear groups
// an optional determinant-class pairing carves out mixed cosets.
struct GroupContext {
  const Field* field = nullptr;
  int n = 0;
  unsigned bits = 0;             // per-entry key width
  unsigned aut_modulus = 1;      // field degree; aut powers live mod this
  std::vector<unsigned> auts;    // allowed automorphism powers, contains 0
  std::vector<u64> scalars;      // scalar subgroup for coset canonicalization
  bool full_scalars = false;     // all nonzero scalars: normalize first entry
  MembershipKind kind = MembershipKind::SpecialLinear;
  unsigned conj_power = 0;       // unitary conjugation = frobenius^conj_power
  // Allowed (determinant-is-nonsquare, aut power) pairs; empty = no pairing.
  std::vector<std::pair<bool, unsigned>> det_aut_classes;

  u64 space_size() const;        // candidate count for a full scan
};

Element identity_element(const GroupContext& ctx);
Element multiply(const GroupContext& ctx, const Element& a, const Element& b);
bool is_member(const GroupContext& ctx, const Element& e);
u64 determinant(const GroupContext& ctx, const Element& e);
Key canonical_key(const GroupContext& ctx, const Element& e);
Element decode_key(const GroupContext& ctx, const Key& k);

// Full scan of the ambient matrix space (times allowed automorphism powers),
// collecting canonical keys of the members.  Serial reference and OpenMP
// versions compute identical results.
std::vector<Key> scan_space_serial(const GroupContext& ctx);
std::vector<Key> scan_space_parallel(const GroupContext& ctx);

// Breadth-first closure of a generating set under multiplication, as
// canonical coset keys.  Aborts past `cap` elements.
std::vector<Key> bfs_closure(const GroupContext& ctx, std::span<const Element> gens,
                             u64 cap);

// Random member of the base group (aut = 0), found by rejection sampling of
// the matrix space.
Element sample_member(const GroupContext& ctx, std::mt19937_64& rng);

// Orders of the listed cosets (group modulo the scalar subgroup), as a
// sorted unique list.  Serial reference and OpenMP versions.
std::vector<u64> coset_orders_serial(const GroupContext& ctx, std::span<const Key> keys);
std::vector<u64> coset_orders_parallel(const GroupContext& ctx, std::span<const Key> keys);

}  // namespace gk
