#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gk/numtheory.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

struct PrimePower {
  u64 p = 0;
  unsigned m = 0;
  u64 q = 0;

  static PrimePower of(u64 q);  // throws invalid_input unless q is a prime power
};

enum class Family {
  Alternating,
  Sporadic,
  Linear,
  Unitary,
  Symplectic,
  OrthogonalOdd,
  OrthogonalEven,
  Exceptional,
};

enum class ExceptionalType {
  None,
  G2,
  F4,
  E6,
  E7,
  E8,
  TwistedE6,  // 2E6
  TriD4,      // 3D4
  TwistedB2,  // 2B2 (Suzuki)
  TwistedG2,  // 2G2 (Ree)
  TwistedF4,  // 2F4 (Ree; q = 2 denotes the derived Tits group)
};

// Outer content of an almost simple group G with socle S, as predicates.
struct OuterProfile {
  bool pi_quotient_in_pi_S = true;  // pi(G/S) inside pi(S)
  bool two_divides_index = false;   // 2 divides |G : S|
  bool contains_inndiag = false;    // Inndiag(S) <= G
  bool contains_graph_aut = false;  // S<g> <= G up to conjugacy (linear, n >= 3)
  std::optional<std::string> is_exactly;  // named-group tag where flags cannot separate
};

struct AlmostSimpleDescriptor {
  Family family = Family::Alternating;
  int n = 0;                      // alternating degree, or the Lie dimension
  std::optional<PrimePower> q;    // field parameter for Lie-type families
  int sign = 0;                   // +1 / -1 for the even orthogonal family
  ExceptionalType ex = ExceptionalType::None;
  std::string sporadic_name;
  OuterProfile outer;

  std::string label() const;
};

// Rewrites the exceptional isomorphisms onto canonical socles and rejects
// the excluded parameter pairs.  Idempotent.
AlmostSimpleDescriptor canonicalize(AlmostSimpleDescriptor d);

// ---- certificates ------------------------------------------------------------

struct SymbolicAtom {
  enum class Kind { Characteristic, FixedPrime, RSet };
  Kind kind = Kind::RSet;
  u64 value = 0;   // Characteristic / FixedPrime
  unsigned k = 0;  // RSet index, relative to the descriptor's q
};

enum class WitnessRole { RSetMember, Characteristic, Plain };

struct WitnessPrime {
  u64 prime = 0;
  WitnessRole role = WitnessRole::RSetMember;
  u64 base = 0;    // mult_order(base, prime) == k for R-set members
  unsigned k = 0;

  friend bool operator==(const WitnessPrime&, const WitnessPrime&) = default;
};

struct WitnessSpec {
  enum class Kind { Characteristic, Plain, Fixed, LeastOfRSet, LeastOddOfRSet };
  Kind kind = Kind::Fixed;
  u64 value = 0;  // Characteristic / Plain / Fixed
  u64 base = 0;
  unsigned k = 0;
};

struct SymbolicCertificate {
  bool positive = false;
  std::vector<SymbolicAtom> clique_a, clique_b;  // positive
  std::vector<WitnessSpec> witness;              // negative
  bool cited = false;  // negative without a reproduced triple
};

enum class CertKind { Partition, Witness, Cited, Unresolved };

struct ConcreteCertificate {
  CertKind kind = CertKind::Cited;
  std::array<std::vector<u64>, 2> cliques;
  PrimeGraph partition_graph;
  std::vector<WitnessPrime> witness;
  std::string unresolved_reason;
};

// Resolves R-set atoms against concrete primitive-prime-divisor sets: full
// sets for clique sides, least members for witnesses.  An empty or
// out-of-range R-set without a fixed substitution downgrades the
// certificate to Unresolved (the verdict itself stands).
ConcreteCertificate concretize_certificate(const SymbolicCertificate& cert,
                                           const std::optional<PrimePower>& q);

// ---- verdicts ---------------------------------------------------------------

struct Verdict {
  bool no_3_coclique = false;
  std::string rule;  // decision-table row id
  std::string group_label;
  std::vector<u64> pi_socle;  // when computable within range
  SymbolicCertificate symbolic;
  ConcreteCertificate certificate;
  // The fallback triple reported for the q = 16 linear rows.
  std::optional<std::array<u64, 3>> special_triple;
  std::vector<WitnessPrime> special_declared;
  std::string note;
};

// The two readings of the unitary characteristic-two condition: whether the
// diagonal requirement is keyed on (q-1)_3 = 3 or on (q+1)_3 = 3.
enum class Psu3Reading { QMinusOne, QPlusOne };

struct ClassifyOptions {
  Psu3Reading psu3_reading = Psu3Reading::QMinusOne;
};

Verdict classify(const AlmostSimpleDescriptor& d, const ClassifyOptions& opt = {});

// Named descriptors: fixed names plus the A<n> / S<n> / PGL2_<q> /
// PSL2_<q> / PSL2_<q>_2 patterns.
AlmostSimpleDescriptor preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace gk
