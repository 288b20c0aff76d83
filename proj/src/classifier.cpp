#include "gk/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "gk/errors.hpp"

namespace gk {

namespace {


bool power_of_two(u64 x) { return x >= 2 && (x & (x - 1)) == 0; }

const std::set<std::string>& sporadic_names() {
  static const std::set<std::string> names{
      "M11", "M12", "M22", "M23", "M24", "J1",  "J2",   "J3",  "J4", "Co1", "Co2", "Co3", "HS",
      "McL", "He",  "Ru",  "Suz", "ON",  "Fi22", "Fi23", "Fi24'", "HN", "Ly", "Th", "B",  "M"};
  return names;
}

}  // namespace

PrimePower PrimePower::of(u64 q) {
  if (q < 2 || q > kMaxValue) throw invalid_input("PrimePower: q out of range");
  Factorization f = factorize(q);
  if (f.factors.size() != 1) throw invalid_input("PrimePower: q is not a prime power");
  return PrimePower{f.factors[0].first, static_cast<unsigned>(f.factors[0].second), q};
}

std::string AlmostSimpleDescriptor::label() const {
  if (outer.is_exactly) return *outer.is_exactly;
  std::string base;
  auto qs = [&] { return "(" + std::to_string(q ? q->q : 0) + ")"; };
  switch (family) {
    case Family::Alternating:
      return (outer.two_divides_index ? "S" : "A") + std::to_string(n);
    case Family::Sporadic:
      base = sporadic_name;
      break;
    case Family::Linear:
      if (n == 2 && outer.contains_inndiag && q && q->m == 1 && q->p != 2)
        base = "PGL2" + qs();
      else
        base = "PSL" + std::to_string(n) + qs();
      break;
    case Family::Unitary:
      base = "PSU" + std::to_string(n) + qs();
      break;
    case Family::Symplectic:
      base = "PSp" + std::to_string(n) + qs();
      break;
    case Family::OrthogonalOdd:
      base = "POmega" + std::to_string(n) + qs();
      break;
    case Family::OrthogonalEven:
      base = "POmega" + std::to_string(n) + (sign > 0 ? "+" : "-") + qs();
      break;
    case Family::Exceptional:
      switch (ex) {
        case ExceptionalType::G2: base = "G2" + qs(); break;
        case ExceptionalType::F4: base = "F4" + qs(); break;
        case ExceptionalType::E6: base = "E6" + qs(); break;
        case ExceptionalType::E7: base = "E7" + qs(); break;
        case ExceptionalType::E8: base = "E8" + qs(); break;
        case ExceptionalType::TwistedE6: base = "2E6" + qs(); break;
        case ExceptionalType::TriD4: base = "3D4" + qs(); break;
        case ExceptionalType::TwistedB2: base = "2B2" + qs(); break;
        case ExceptionalType::TwistedG2: base = "2G2" + qs(); break;
        case ExceptionalType::TwistedF4:
          base = (q && q->q == 2) ? "2F4(2)'" : "2F4" + qs();
          break;
        default: base = "?"; break;
      }
      break;
  }
  std::string marks;
  if (!outer.pi_quotient_in_pi_S) marks += ",pi-outside";
  if (family != Family::Alternating && outer.two_divides_index) marks += ",2|idx";
  if (outer.contains_inndiag && !(family == Family::Linear && n == 2 && q && q->m == 1))
    marks += ",inndiag";
  if (outer.contains_graph_aut) marks += ",graph";
  if (!marks.empty()) base += "{" + marks.substr(1) + "}";
  return base;
}

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw invalid_input(message);
}

void validate_profile(const AlmostSimpleDescriptor& d) {
  const OuterProfile& o = d.outer;
  if (o.contains_graph_aut)
    require(d.family == Family::Linear && d.n >= 3,
            "outer profile: a graph automorphism exists only for linear socles of rank >= 3");
  if (d.family == Family::Alternating || d.family == Family::Sporadic)
    require(!o.contains_inndiag, "outer profile: inndiag flag is meaningless for this socle");
  if (d.family == Family::Linear && d.q && d.q->p == 2 && d.n == 2)
    require(!o.two_divides_index || d.q->m % 2 == 0,
            "outer profile: even index requires an even-order outer group");
}

// Inndiag(S) = S makes the flag vacuous; normalize it to true.
void normalize_inndiag(AlmostSimpleDescriptor& d) {
  if (!d.q) return;
  u64 outdiag = 1;
  switch (d.family) {
    case Family::Linear: outdiag = std::gcd<u64>(d.n, d.q->q - 1); break;
    case Family::Unitary: outdiag = std::gcd<u64>(d.n, d.q->q + 1); break;
    case Family::Symplectic: outdiag = std::gcd<u64>(2, d.q->q - 1); break;
    default: break;
  }
  if (outdiag == 1) d.outer.contains_inndiag = true;
}

}  // namespace

AlmostSimpleDescriptor canonicalize(AlmostSimpleDescriptor d) {
  switch (d.family) {
    case Family::Alternating:
      require(d.n >= 5, "alternating socle needs n >= 5");
      require(!d.q, "alternating socle takes no field parameter");
      break;
    case Family::Sporadic:
      require(sporadic_names().count(d.sporadic_name) == 1,
              "unknown sporadic socle '" + d.sporadic_name + "'");
      break;
    case Family::Linear: {
      require(d.n >= 2 && d.q.has_value(), "linear socle needs n >= 2 and q");
      const u64 q = d.q->q;
      require(!(d.n == 2 && (q == 2 || q == 3)), "PSL2(2) and PSL2(3) are not simple");
      OuterProfile o = d.outer;
      if (d.n == 2 && (q == 4 || q == 5 || q == 9)) {
        AlmostSimpleDescriptor out;
        out.family = Family::Alternating;
        out.n = q == 9 ? 6 : 5;
        out.outer.pi_quotient_in_pi_S = o.pi_quotient_in_pi_S;
        // the diagonal part has index two over these socles
        out.outer.two_divides_index = o.two_divides_index || (q != 4 && o.contains_inndiag);
        if (q == 9) {
          if (o.is_exactly)
            out.outer.is_exactly = o.is_exactly;
          else if (o.contains_inndiag && !o.two_divides_index)
            out.outer.is_exactly = "PGL2(9)";
        }
        return canonicalize(out);
      }
      if (d.n == 3 && q == 2) {
        AlmostSimpleDescriptor out;
        out.family = Family::Linear;
        out.n = 2;
        out.q = PrimePower::of(7);
        out.outer.pi_quotient_in_pi_S = o.pi_quotient_in_pi_S;
        // all order-two outer content of this socle becomes diagonal over PSL2(7)
        out.outer.contains_inndiag = o.contains_graph_aut || o.two_divides_index;
        out.outer.two_divides_index = out.outer.contains_inndiag;
        return canonicalize(out);
      }
      if (d.n == 4 && q == 2) {
        AlmostSimpleDescriptor out;
        out.family = Family::Alternating;
        out.n = 8;
        out.outer.pi_quotient_in_pi_S = o.pi_quotient_in_pi_S;
        out.outer.two_divides_index = o.two_divides_index || o.contains_graph_aut;
        return canonicalize(out);
      }
      break;
    }
    case Family::Unitary:
      require(d.n >= 3 && d.q.has_value(), "unitary socle needs n >= 3 and q");
      require(!(d.n == 3 && d.q->q == 2), "PSU3(2) is not simple");
      break;
    case Family::Symplectic: {
      require(d.n >= 4 && d.n % 2 == 0 && d.q.has_value(),
              "symplectic socle needs even n >= 4 and q");
      require(!(d.n == 4 && d.q->q == 2), "PSp4(2) is not simple");
      if (d.n == 4 && d.q->q == 3) {
        AlmostSimpleDescriptor out;
        out.family = Family::Unitary;
        out.n = 4;
        out.q = PrimePower::of(2);
        out.outer.pi_quotient_in_pi_S = d.outer.pi_quotient_in_pi_S;
        out.outer.two_divides_index = d.outer.two_divides_index || d.outer.contains_inndiag;
        return canonicalize(out);
      }
      break;
    }
    case Family::OrthogonalOdd:
      require(d.n >= 7 && d.n % 2 == 1 && d.q.has_value(),
              "odd orthogonal socle needs odd n >= 7 and q");
      require(d.q->p != 2,
              "odd-dimensional orthogonal groups in characteristic two coincide with "
              "the symplectic family");
      break;
    case Family::OrthogonalEven:
      require(d.n >= 8 && d.n % 2 == 0 && d.q.has_value(),
              "even orthogonal socle needs even n >= 8 and q");
      require(d.sign == 1 || d.sign == -1, "even orthogonal socle needs a sign");
      break;
    case Family::Exceptional: {
      require(d.q.has_value(), "exceptional socle needs q");
      const u64 q = d.q->q;
      switch (d.ex) {
        case ExceptionalType::G2:
          require(q >= 3, "G2(2) is not simple (its derived group is PSU3(3))");
          break;
        case ExceptionalType::TwistedB2:
          require(d.q->p == 2 && d.q->m % 2 == 1 && q >= 8,
                  "2B2 needs q = 2^(2k+1) >= 8");
          break;
        case ExceptionalType::TwistedG2:
          require(d.q->p == 3 && d.q->m % 2 == 1 && q >= 27,
                  "2G2 needs q = 3^(2k+1) >= 27");
          break;
        case ExceptionalType::TwistedF4:
          // q = 2 denotes the simple derived (Tits) group
          require(d.q->p == 2 && d.q->m % 2 == 1, "2F4 needs q = 2^(2k+1)");
          break;
        case ExceptionalType::None:
          throw invalid_input("exceptional socle needs a type");
        default:
          break;
      }
      break;
    }
  }
  normalize_inndiag(d);
  validate_profile(d);
  return d;
}

// ---- certificate machinery ---------------------------------------------------

namespace {

SymbolicAtom atom_char() { return {SymbolicAtom::Kind::Characteristic, 0, 0}; }
SymbolicAtom atom_fixed(u64 v) { return {SymbolicAtom::Kind::FixedPrime, v, 0}; }
SymbolicAtom atom_rset(unsigned k) { return {SymbolicAtom::Kind::RSet, 0, k}; }

WitnessSpec w_char() { return {WitnessSpec::Kind::Characteristic, 0, 0, 0}; }
WitnessSpec w_plain(u64 v) { return {WitnessSpec::Kind::Plain, v, 0, 0}; }
WitnessSpec w_fixed(u64 v, u64 base, unsigned k) { return {WitnessSpec::Kind::Fixed, v, base, k}; }
WitnessSpec w_least(u64 base, unsigned k) { return {WitnessSpec::Kind::LeastOfRSet, 0, base, k}; }
WitnessSpec w_least_odd(u64 base, unsigned k) {
  return {WitnessSpec::Kind::LeastOddOfRSet, 0, base, k};
}

struct UnresolvedSet {
  std::string reason;
};

std::vector<u64> rset_or_throw(u64 base, unsigned k) {
  try {
    return primitive_prime_divisors(base, k);
  } catch (const cap_exceeded& e) {
    throw UnresolvedSet{std::string("R_") + std::to_string(k) + "(" + std::to_string(base) +
                        ") is out of range"};
  }
}

}  // namespace

ConcreteCertificate concretize_certificate(const SymbolicCertificate& cert,
                                           const std::optional<PrimePower>& q) {
  ConcreteCertificate out;
  if (cert.positive) {
    try {
      std::array<std::vector<u64>, 2> sides;
      const std::vector<SymbolicAtom>* atom_sides[2] = {&cert.clique_a, &cert.clique_b};
      for (int s = 0; s < 2; ++s) {
        for (const SymbolicAtom& a : *atom_sides[s]) {
          switch (a.kind) {
            case SymbolicAtom::Kind::Characteristic:
              if (!q) throw internal_error("certificate: characteristic atom without q");
              sides[s].push_back(q->p);
              break;
            case SymbolicAtom::Kind::FixedPrime:
              sides[s].push_back(a.value);
              break;
            case SymbolicAtom::Kind::RSet: {
              if (!q) throw internal_error("certificate: R-set atom without q");
              for (u64 r : rset_or_throw(q->q, a.k)) sides[s].push_back(r);
              break;
            }
          }
        }
        std::sort(sides[s].begin(), sides[s].end());
        sides[s].erase(std::unique(sides[s].begin(), sides[s].end()), sides[s].end());
      }
      std::vector<u64> vertices;
      std::vector<std::pair<u64, u64>> edges;
      for (int s = 0; s < 2; ++s) {
        for (std::size_t i = 0; i < sides[s].size(); ++i) {
          vertices.push_back(sides[s][i]);
          for (std::size_t j = i + 1; j < sides[s].size(); ++j)
            edges.emplace_back(sides[s][i], sides[s][j]);
        }
      }
      out.cliques = sides;
      out.partition_graph = PrimeGraph::make(std::move(vertices), std::move(edges));
      if (out.partition_graph.size() != out.cliques[0].size() + out.cliques[1].size())
        throw internal_error("certificate: clique sides overlap");
      out.kind = CertKind::Partition;
    } catch (const UnresolvedSet& u) {
      out.kind = CertKind::Unresolved;
      out.unresolved_reason = u.reason;
    }
    return out;
  }

  if (cert.cited) {
    out.kind = CertKind::Cited;
    return out;
  }

  try {
    for (const WitnessSpec& w : cert.witness) {
      switch (w.kind) {
        case WitnessSpec::Kind::Characteristic:
          if (!q) throw internal_error("certificate: characteristic witness without q");
          out.witness.push_back({q->p, WitnessRole::Characteristic, 0, 0});
          break;
        case WitnessSpec::Kind::Plain:
          out.witness.push_back({w.value, WitnessRole::Plain, 0, 0});
          break;
        case WitnessSpec::Kind::Fixed:
          if (mult_order(w.base, w.value) != w.k)
            throw internal_error("certificate: fixed witness fails its declared R-set");
          out.witness.push_back({w.value, WitnessRole::RSetMember, w.base, w.k});
          break;
        case WitnessSpec::Kind::LeastOfRSet:
        case WitnessSpec::Kind::LeastOddOfRSet: {
          std::vector<u64> rset = rset_or_throw(w.base, w.k);
          if (w.kind == WitnessSpec::Kind::LeastOddOfRSet)
            rset.erase(std::remove(rset.begin(), rset.end(), u64{2}), rset.end());
          if (rset.empty())
            throw UnresolvedSet{std::string("R_") + std::to_string(w.k) + "(" +
                                std::to_string(w.base) + ") has no eligible member"};
          out.witness.push_back({rset.front(), WitnessRole::RSetMember, w.base, w.k});
          break;
        }
      }
    }
    out.kind = CertKind::Witness;
  } catch (const UnresolvedSet& u) {
    out.kind = CertKind::Unresolved;
    out.witness.clear();
    out.unresolved_reason = u.reason;
  }
  return out;
}

// ---- socle prime sets ----------------------------------------------------------

namespace {

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  for (u64 v = 2; v <= n; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

std::vector<u64> pi_from_rsets(const PrimePower& q, const std::vector<unsigned>& ks) {
  std::set<u64> pi{q.p};
  for (unsigned k : ks) {
    for (u64 r : primitive_prime_divisors(q.q, k)) pi.insert(r);
  }
  return {pi.begin(), pi.end()};
}

// Socle prime sets for the positive rows (throws cap_exceeded out of range).
std::vector<u64> pi_socle_of(const AlmostSimpleDescriptor& d) {
  switch (d.family) {
    case Family::Alternating:
      return primes_up_to(static_cast<u64>(d.n));
    case Family::Sporadic:
      if (d.sporadic_name == "J2") return {2, 3, 5, 7};
      return {};
    case Family::Linear:
      if (d.n == 2) return pi_from_rsets(*d.q, {1, 2});
      if (d.n == 3) return pi_from_rsets(*d.q, {1, 2, 3});
      if (d.n == 4) return pi_from_rsets(*d.q, {1, 2, 3, 4});
      return {};
    case Family::Unitary:
      if (d.n == 3) return pi_from_rsets(*d.q, {1, 2, 6});
      if (d.n == 4) return pi_from_rsets(*d.q, {1, 2, 4, 6});
      if (d.n == 5 && d.q->q == 2) return {2, 3, 5, 11};
      return {};
    case Family::Symplectic:
      if (d.n == 4) return pi_from_rsets(*d.q, {1, 2, 4});
      if (d.n == 6 && d.q->q == 2) return {2, 3, 5, 7};
      return {};
    case Family::OrthogonalEven:
      if (d.n == 8 && d.q->q == 2 && d.sign == 1) return {2, 3, 5, 7};
      return {};
    case Family::Exceptional:
      if (d.ex == ExceptionalType::TriD4 && d.q->q == 2) return {2, 3, 7, 13};
      return {};
    default:
      return {};
  }
}

// ---- verdict assembly ----------------------------------------------------------

Verdict make_positive(const AlmostSimpleDescriptor& d, std::string rule,
                      std::vector<SymbolicAtom> a, std::vector<SymbolicAtom> b,
                      std::string note = "") {
  Verdict v;
  v.no_3_coclique = true;
  v.rule = std::move(rule);
  v.group_label = d.label();
  v.note = std::move(note);
  v.symbolic.positive = true;
  v.symbolic.clique_a = std::move(a);
  v.symbolic.clique_b = std::move(b);
  v.certificate = concretize_certificate(v.symbolic, d.q);
  try {
    v.pi_socle = pi_socle_of(d);
  } catch (const cap_exceeded&) {
    v.pi_socle.clear();
  }
  if (v.certificate.kind == CertKind::Partition && !v.pi_socle.empty()) {
    std::vector<u64> covered(v.certificate.cliques[0]);
    covered.insert(covered.end(), v.certificate.cliques[1].begin(),
                   v.certificate.cliques[1].end());
    std::sort(covered.begin(), covered.end());
    if (covered != v.pi_socle)
      throw internal_error("positive certificate does not partition pi(S) for " +
                           v.group_label);
  }
  return v;
}

Verdict make_negative(const AlmostSimpleDescriptor& d, std::string rule,
                      std::vector<WitnessSpec> witness, std::string note = "") {
  Verdict v;
  v.no_3_coclique = false;
  v.rule = std::move(rule);
  v.group_label = d.label();
  v.note = std::move(note);
  v.symbolic.positive = false;
  v.symbolic.witness = std::move(witness);
  v.certificate = concretize_certificate(v.symbolic, d.q);
  return v;
}

Verdict make_negative_cited(const AlmostSimpleDescriptor& d, std::string rule,
                            std::string note) {
  Verdict v;
  v.no_3_coclique = false;
  v.rule = std::move(rule);
  v.group_label = d.label();
  v.note = std::move(note);
  v.symbolic.positive = false;
  v.symbolic.cited = true;
  v.certificate = concretize_certificate(v.symbolic, d.q);
  return v;
}

std::vector<SymbolicAtom> atoms_fixed(std::initializer_list<u64> primes) {
  std::vector<SymbolicAtom> out;
  for (u64 p : primes) out.push_back(atom_fixed(p));
  return out;
}

// ---- family handlers -----------------------------------------------------------

Verdict classify_alternating(const AlmostSimpleDescriptor& d) {
  const int n = d.n;
  const bool sym = d.outer.two_divides_index;
  switch (n) {
    case 5:
      if (sym) return make_positive(d, "alternating:symmetric-5-8", atoms_fixed({2, 3}), atoms_fixed({5}));
      return make_negative(d, "alternating:small", {w_plain(2), w_plain(3), w_plain(5)});
    case 6: {
      bool extension = sym || d.outer.is_exactly.has_value();
      if (extension) {
        bool pgl_shape = d.outer.is_exactly && *d.outer.is_exactly == "PGL2(9)";
        auto a = pgl_shape ? atoms_fixed({2, 5}) : atoms_fixed({2, 3});
        auto b = pgl_shape ? atoms_fixed({3}) : atoms_fixed({5});
        return make_positive(d, "alternating:a6-extension", std::move(a), std::move(b));
      }
      return make_negative(d, "alternating:small", {w_plain(2), w_plain(3), w_plain(5)});
    }
    case 7:
      if (sym) return make_negative(d, "alternating:small", {w_plain(3), w_plain(5), w_plain(7)});
      return make_negative(d, "alternating:small", {w_plain(2), w_plain(5), w_plain(7)});
    case 8:
      if (sym) return make_positive(d, "alternating:symmetric-5-8", atoms_fixed({2, 3, 5}), atoms_fixed({7}));
      return make_negative(d, "alternating:small", {w_plain(2), w_plain(5), w_plain(7)});
    case 9:
    case 10:
      return make_positive(d, "alternating:socle-9-10-12", atoms_fixed({2, 3, 5}), atoms_fixed({7}));
    case 11:
      return make_negative(d, "alternating:small", {w_plain(5), w_plain(7), w_plain(11)});
    case 12:
      return make_positive(d, "alternating:socle-9-10-12", atoms_fixed({2, 3, 5, 7}), atoms_fixed({11}));
    default:
      break;
  }
  if (n <= 17)
    return make_negative(d, "alternating:7-11-13", {w_plain(7), w_plain(11), w_plain(13)});
  // three odd primes strictly between (n+1)/2 and n stay pairwise non-adjacent
  std::vector<WitnessSpec> w;
  for (u64 v = (static_cast<u64>(n) + 1) / 2 + 1; v < static_cast<u64>(n) && w.size() < 3; ++v) {
    if (v % 2 == 1 && is_prime(v)) w.push_back(w_plain(v));
  }
  if (w.size() < 3) throw internal_error("alternating witness: prime interval too thin");
  return make_negative(d, "alternating:large", std::move(w));
}

Verdict classify_sporadic(const AlmostSimpleDescriptor& d) {
  if (d.sporadic_name == "J2")
    return make_positive(d, "sporadic:j2", atoms_fixed({2, 3, 5}), atoms_fixed({7}));
  return make_negative_cited(d, "sporadic:coclique-cited",
                             "an odd coclique triple exists in every sporadic socle except J2; "
                             "it is not reproduced here");
}

Verdict classify_linear2(const AlmostSimpleDescriptor& d) {
  const PrimePower& q = *d.q;
  if (q.p == 2) {
    if (q.q == 8) {
      if (d.outer.is_exactly && *d.outer.is_exactly == "Aut(PSL2(8))")
        return make_positive(d, "linear2:aut-psl2-8", atoms_fixed({2, 3}), atoms_fixed({7}));
      return make_negative(d, "linear2:q8",
                           {w_char(), w_fixed(3, 8, 2), w_fixed(7, 8, 1)},
                           "only the full automorphism group is coclique-free here");
    }
    if (q.m % 2 == 0 && q.m >= 4 && d.outer.two_divides_index)
      return make_positive(d, "linear2:even-field-ext",
                           {atom_char(), atom_rset(1)}, {atom_rset(2)});
    if (q.q == 64)
      return make_negative(d, "linear2:even", {w_char(), w_fixed(7, 2, 3), w_fixed(13, 2, 12)});
    return make_negative(d, "linear2:even", {w_char(), w_least(2, q.m), w_least(2, 2 * q.m)});
  }

  // odd characteristic; q = 4, 5, 9 were canonicalized away
  const bool boundary = power_of_two(q.q - 1) || power_of_two(q.q + 1);
  if (boundary) {
    // q is prime here: a proper power next to a power of two does not exist
    FermatMersenne fm = fermat_mersenne(q.p);
    if (d.outer.contains_inndiag)
      return make_positive(d, "linear2:pgl-fermat-mersenne", {atom_char()},
                           {atom_rset(1), atom_rset(2)});
    std::vector<WitnessSpec> w{w_fixed(2, q.p, fm.is_fermat ? 1 : 2),
                               fm.is_fermat ? w_least_odd(q.p, 2) : w_least_odd(q.p, 1),
                               w_char()};
    return make_negative(d, "linear2:fermat-mersenne-socle", std::move(w));
  }
  return make_negative(d, "linear2:generic",
                       {w_char(), w_least_odd(q.p, q.m), w_least_odd(q.p, 2 * q.m)});
}

Verdict classify_linear3(const AlmostSimpleDescriptor& d) {
  const PrimePower& q = *d.q;
  if (q.q == 4) {
    static const std::set<std::string> named{"PGL3(4).f", "PGL3(4).g", "Aut(PSL3(4))"};
    bool positive = (d.outer.is_exactly && named.count(*d.outer.is_exactly)) ||
                    (d.outer.contains_inndiag && d.outer.contains_graph_aut);
    if (positive)
      return make_positive(d, "linear3:q4-named", {atom_char(), atom_rset(1), atom_rset(2)},
                           {atom_rset(3)});
    const OuterProfile& o = d.outer;
    if (!o.contains_inndiag && !o.contains_graph_aut && !o.two_divides_index && !o.is_exactly)
      return make_negative(d, "linear3:q4",
                           {w_char(), w_fixed(3, 4, 1), w_fixed(5, 4, 2)},
                           "the socle's graph is edgeless on {2,3,5,7}");
    return make_negative_cited(d, "linear3:q4",
                               "negative by the named-extension table; no reproduced triple "
                               "for this outer shape");
  }

  if (q.p == 2) {  // m >= 3
    bool c3 = r_part(q.q - 1, 3) == 3;
    bool positive = c3 ? (d.outer.contains_inndiag && d.outer.contains_graph_aut)
                       : d.outer.contains_graph_aut;
    if (positive)
      return make_positive(d, c3 ? "linear3:even-inndiag-graph" : "linear3:even-graph",
                           {atom_char(), atom_rset(1), atom_rset(2)}, {atom_rset(3)});
    if (c3 && !d.outer.contains_inndiag)
      return make_negative(d, "linear3:even-no-inndiag",
                           {w_fixed(3, 2, 2), w_least(2, 2 * q.m), w_least(2, 3 * q.m)});
    if (q.m == 3)
      return make_negative(d, "linear3:even-no-graph",
                           {w_char(), w_fixed(3, 2, 2), w_least(2, 9)});
    if (q.q == 16) {
      Verdict v = make_negative(d, "linear3:even-no-graph",
                                {w_char(), w_fixed(17, 2, 8), w_fixed(13, 2, 12)});
      v.special_triple = {{17, 13, 7}};
      v.special_declared = {{17, WitnessRole::RSetMember, 2, 8},
                            {13, WitnessRole::RSetMember, 2, 12},
                            {7, WitnessRole::RSetMember, 2, 3}};
      return v;
    }
    return make_negative(d, "linear3:even-no-graph",
                         {w_char(), w_least(2, 2 * q.m), w_least(2, 3 * q.m)});
  }

  // odd characteristic
  if (q.m == 1 && power_of_two(q.q + 1)) {  // Mersenne prime
    bool c3 = r_part(q.p - 1, 3) == 3;
    if (!c3)
      return make_positive(d, "linear3:mersenne", {atom_char(), atom_rset(1), atom_rset(2)},
                           {atom_rset(3)});
    if (d.outer.contains_inndiag)
      return make_positive(d, "linear3:mersenne-inndiag",
                           {atom_char(), atom_rset(1), atom_rset(2)}, {atom_rset(3)});
    return make_negative(d, "linear3:mersenne-no-inndiag",
                         {w_fixed(3, q.p, 1), w_char(), w_least(q.p, 3)});
  }
  return make_negative(d, "linear3:odd-generic",
                       {w_char(), w_least_odd(q.p, 2 * q.m), w_least(q.p, 3 * q.m)});
}

Verdict classify_linear4(const AlmostSimpleDescriptor& d) {
  const PrimePower& q = *d.q;
  if (q.q == 4) {
    static const std::set<std::string> named{"PSL4(4).f", "PSL4(4).g", "Aut(PSL4(4))"};
    bool positive =
        (d.outer.is_exactly && named.count(*d.outer.is_exactly)) || d.outer.contains_graph_aut;
    if (positive)
      return make_positive(d, "linear4:q4-named", {atom_char(), atom_rset(2), atom_rset(4)},
                           {atom_rset(1), atom_rset(3)});
    return make_negative_cited(d, "linear4:q4",
                               "negative by the named-extension table; the generic triple "
                               "hits an empty primitive-divisor set here");
  }
  if (q.p == 2) {  // m >= 3
    if (d.outer.contains_graph_aut)
      return make_positive(d, "linear4:even-graph", {atom_char(), atom_rset(2), atom_rset(4)},
                           {atom_rset(1), atom_rset(3)});
    if (q.q == 16) {
      Verdict v = make_negative(d, "linear4:even-no-graph",
                                {w_char(), w_fixed(13, 2, 12), w_fixed(257, 2, 16)});
      v.special_triple = {{257, 13, 7}};
      v.special_declared = {{257, WitnessRole::RSetMember, 2, 16},
                            {13, WitnessRole::RSetMember, 2, 12},
                            {7, WitnessRole::RSetMember, 2, 3}};
      return v;
    }
    return make_negative(d, "linear4:even-no-graph",
                         {w_char(), w_least(2, 3 * q.m), w_least(2, 4 * q.m)});
  }
  return make_negative(d, "linear4:odd",
                       {w_char(), w_least(q.p, 3 * q.m), w_least(q.p, 4 * q.m)});
}

Verdict classify_linear_high(const AlmostSimpleDescriptor& d) {
  const PrimePower& q = *d.q;
  const unsigned n = static_cast<unsigned>(d.n);
  if (q.m == 2 && n == 5 && q.p == 2)
    return make_negative(d, "linear:high-rank",
                         {w_fixed(7, 4, 3), w_fixed(17, 4, 4), w_fixed(31, 4, 5)});
  if (q.m == 1 && n == 6 && q.p == 2)
    return make_negative(d, "linear:high-rank",
                         {w_fixed(31, 2, 5), w_fixed(5, 2, 4), w_fixed(7, 2, 3)});
  if (q.m == 1 && (n == 7 || n == 8) && q.p == 2)
    return make_negative(d, "linear:high-rank",
                         {w_fixed(5, 2, 4), w_fixed(31, 2, 5), w_fixed(127, 2, 7)});
  return make_negative(d, "linear:high-rank",
                       {w_least(q.p, q.m * n), w_least(q.p, q.m * (n - 1)),
                        w_least(q.p, q.m * (n - 2))});
}

Verdict classify_unitary3(const AlmostSimpleDescriptor& d, const ClassifyOptions& opt) {
  const PrimePower& q = *d.q;
  if (q.p == 2) {  // m >= 2
    bool c3 = opt.psu3_reading == Psu3Reading::QMinusOne ? r_part(q.q - 1, 3) == 3
                                                         : r_part(q.q + 1, 3) == 3;
    if (d.outer.two_divides_index && (!c3 || d.outer.contains_inndiag))
      return make_positive(d, c3 ? "unitary3:even-inndiag" : "unitary3:even",
                           {atom_char(), atom_rset(1), atom_rset(2)}, {atom_rset(6)});
    if (!d.outer.two_divides_index)
      return make_negative(d, "unitary3:even-odd-index",
                           {w_char(), w_least(2, q.m), w_least(2, 6 * q.m)});
    return make_negative(d, "unitary3:even-no-inndiag",
                         {w_fixed(3, 2, 2), w_least(2, q.m), w_least(2, 6 * q.m)});
  }

  if (q.q == 9)
    return make_positive(d, "unitary3:q9-socle", {atom_char(), atom_rset(1), atom_rset(2)},
                         {atom_rset(6)});
  if (power_of_two(q.q - 1)) {  // Fermat prime (m = 1)
    bool c3 = r_part(q.p + 1, 3) == 3;
    if (!c3)
      return make_positive(d, "unitary3:fermat", {atom_char(), atom_rset(1), atom_rset(2)},
                           {atom_rset(6)});
    if (d.outer.contains_inndiag)
      return make_positive(d, "unitary3:fermat-inndiag",
                           {atom_char(), atom_rset(1), atom_rset(2)}, {atom_rset(6)});
    return make_negative(d, "unitary3:fermat-no-inndiag",
                         {w_fixed(3, q.p, 2), w_char(), w_least(q.p, 6)});
  }
  return make_negative(d, "unitary3:odd-generic",
                       {w_char(), w_least_odd(q.p, q.m), w_least(q.p, 6 * q.m)});
}

Verdict classify_unitary(const AlmostSimpleDescriptor& d, const ClassifyOptions& opt) {
  const PrimePower& q = *d.q;
  if (d.n == 3) return classify_unitary3(d, opt);
  if (d.n == 4) {
    if (q.q == 2)
      return make_positive(d, "unitary4:q2-socle", atoms_fixed({2, 3}), atoms_fixed({5}));
    if (q.p == 2) {
      if (d.outer.two_divides_index)
        return make_positive(d, "unitary4:even", {atom_char(), atom_rset(1), atom_rset(4)},
                             {atom_rset(2), atom_rset(6)});
      return make_negative(d, "unitary4:even-odd-index",
                           {w_char(), w_least(2, 4 * q.m), w_least(2, 6 * q.m)});
    }
    return make_negative(d, "unitary4:odd",
                         {w_char(), w_least(q.p, 4 * q.m), w_least(q.p, 6 * q.m)});
  }
  if (d.n == 5) {
    if (q.q == 2) {
      if (d.outer.two_divides_index)
        return make_positive(d, "unitary5:q2-aut", atoms_fixed({2, 3, 5}), atoms_fixed({11}));
      return make_negative(d, "unitary5:q2-socle",
                           {w_char(), w_fixed(5, 2, 4), w_fixed(11, 2, 10)});
    }
    return make_negative(d, "unitary5:generic",
                         {w_least(q.p, 4 * q.m), w_least(q.p, 6 * q.m), w_least(q.p, 10 * q.m)});
  }
  if (d.n == 6) {
    if (q.q == 4)
      return make_negative(d, "unitary6",
                           {w_fixed(13, 2, 12), w_fixed(17, 2, 8), w_fixed(41, 2, 20)});
    return make_negative(d, "unitary6",
                         {w_least(q.p, 3 * q.m), w_least(q.p, 4 * q.m), w_least(q.p, 10 * q.m)});
  }
  const unsigned n = static_cast<unsigned>(d.n);
  const unsigned m = q.m;
  std::vector<WitnessSpec> w;
  switch (n % 4) {
    case 1:
      w = {w_least(q.p, 2 * m * n), w_least(q.p, 2 * m * (n - 2)), w_least(q.p, m * (n - 1))};
      break;
    case 3:
      w = {w_least(q.p, 2 * m * n), w_least(q.p, 2 * m * (n - 2)), w_least(q.p, m * (n - 3))};
      break;
    case 0:
      w = {w_least(q.p, 2 * m * (n - 1)), w_least(q.p, 2 * m * (n - 3)), w_least(q.p, m * n)};
      break;
    default:  // n = 2 mod 4
      w = {w_least(q.p, 2 * m * (n - 1)), w_least(q.p, 2 * m * (n - 3)),
           w_least(q.p, m * (n - 2))};
      break;
  }
  return make_negative(d, "unitary:high-rank", std::move(w));
}

// Shared triple for PSp_n(q), n >= 6 even, (n, q) != (6, 2).
std::vector<WitnessSpec> symplectic_witness(unsigned n, const PrimePower& q) {
  if (n == 6) {
    if (q.q == 4) return {w_fixed(7, 4, 3), w_fixed(17, 4, 4), w_fixed(13, 4, 6)};
    return {w_least(q.p, 3 * q.m), w_least(q.p, 4 * q.m), w_least(q.p, 6 * q.m)};
  }
  if (n == 8 && q.q == 2) return {w_fixed(5, 2, 4), w_fixed(7, 2, 3), w_fixed(17, 2, 8)};
  if (n == 10 && q.q == 2) return {w_fixed(7, 2, 3), w_fixed(17, 2, 8), w_fixed(31, 2, 5)};
  return {w_least(q.p, q.m * n), w_least(q.p, q.m * (n - 2)), w_least(q.p, q.m * (n - 4))};
}

Verdict classify_symplectic(const AlmostSimpleDescriptor& d) {
  const PrimePower& q = *d.q;
  if (d.n == 4)
    return make_positive(d, "symplectic4", {atom_char(), atom_rset(1), atom_rset(2)},
                         {atom_rset(4)},
                         "partition derived from the rank-two torus structure");
  if (d.n == 6 && q.q == 2)
    return make_positive(d, "symplectic6:q2-socle", atoms_fixed({2, 3, 5}), atoms_fixed({7}));
  return make_negative(d, d.n == 6 ? "symplectic6" : "symplectic:high-rank",
                       symplectic_witness(static_cast<unsigned>(d.n), q));
}

Verdict classify_orthogonal_odd(const AlmostSimpleDescriptor& d) {
  // same prime graph as the symplectic group one dimension down
  return make_negative(d, "orthodd:via-symplectic",
                       symplectic_witness(static_cast<unsigned>(d.n - 1), *d.q));
}

Verdict classify_orthogonal_even(const AlmostSimpleDescriptor& d) {
  const PrimePower& q = *d.q;
  if (d.n == 8 && q.q == 2 && d.sign == 1)
    return make_positive(d, "ortheven:o8plus2-socle", atoms_fixed({2, 3, 5}), atoms_fixed({7}));
  if (d.n == 8 && q.q == 2 && d.sign == -1)
    return make_negative(d, "ortheven", {w_fixed(7, 2, 3), w_fixed(13, 2, 12), w_fixed(17, 2, 8)});
  return make_negative(d, "ortheven", symplectic_witness(static_cast<unsigned>(d.n - 2), q));
}

Verdict classify_exceptional(const AlmostSimpleDescriptor& d) {
  const PrimePower& q = *d.q;
  const unsigned m = q.m;
  switch (d.ex) {
    case ExceptionalType::E8:
      return make_negative(d, "exceptional:e8",
                           {w_least(q.p, 30 * m), w_least(q.p, 24 * m), w_least(q.p, 20 * m)});
    case ExceptionalType::E7:
      return make_negative(d, "exceptional:e7",
                           {w_least(q.p, 18 * m), w_least(q.p, 14 * m), w_least(q.p, 12 * m)});
    case ExceptionalType::E6:
      return make_negative(d, "exceptional:e6",
                           {w_least(q.p, 9 * m), w_least(q.p, 8 * m), w_least(q.p, 5 * m)});
    case ExceptionalType::TwistedE6:
      return make_negative(d, "exceptional:2e6",
                           {w_least(q.p, 18 * m), w_least(q.p, 12 * m), w_least(q.p, 10 * m)});
    case ExceptionalType::F4:
      return make_negative(d, "exceptional:f4",
                           {w_least(q.p, 12 * m), w_least(q.p, 8 * m), w_least(q.p, 4 * m)});
    case ExceptionalType::TriD4:
      if (q.q == 2)
        return make_positive(d, "exceptional:3d4-q2-socle", atoms_fixed({2, 3, 7}),
                             atoms_fixed({13}));
      if (q.q == 4)
        return make_negative(d, "exceptional:3d4",
                             {w_fixed(7, 4, 3), w_fixed(13, 4, 6), w_fixed(241, 4, 12)});
      return make_negative(d, "exceptional:3d4",
                           {w_least(q.p, 3 * m), w_least(q.p, 6 * m), w_least(q.p, 12 * m)});
    case ExceptionalType::G2:
      if (q.q == 4)
        return make_negative(d, "exceptional:g2",
                             {w_fixed(13, 4, 6), w_fixed(7, 4, 3), w_fixed(5, 4, 2)});
      if (q.q == 8)
        return make_negative(d, "exceptional:g2",
                             {w_fixed(19, 8, 6), w_fixed(73, 8, 3), w_fixed(7, 8, 1)});
      return make_negative(d, "exceptional:g2",
                           {w_least(q.p, 6 * m), w_least(q.p, 3 * m), w_least(q.p, 2 * m)});
    case ExceptionalType::TwistedF4:
      if (q.q == 2)
        return make_negative(d, "exceptional:2f4-tits",
                             {w_fixed(3, 2, 2), w_fixed(5, 2, 4), w_fixed(13, 2, 12)});
      if (q.q == 8)
        return make_negative(d, "exceptional:2f4",
                             {w_char(), w_fixed(19, 8, 6), w_fixed(37, 8, 12)});
      return make_negative(d, "exceptional:2f4",
                           {w_least(2, 2 * m), w_least(2, 4 * m), w_least(2, 6 * m)});
    case ExceptionalType::TwistedB2:
      return make_negative(d, "exceptional:2b2",
                           {w_char(), w_least(2, m), w_least(2, 4 * m)});
    case ExceptionalType::TwistedG2:
      return make_negative(d, "exceptional:2g2",
                           {w_least(3, m), w_least(3, 2 * m), w_least(3, 6 * m)});
    default:
      throw invalid_input("exceptional socle needs a type");
  }
}

}  // namespace

Verdict classify(const AlmostSimpleDescriptor& input, const ClassifyOptions& opt) {
  AlmostSimpleDescriptor d = canonicalize(input);
  if (!d.outer.pi_quotient_in_pi_S) {
    return make_negative_cited(
        d, "remark:pi-outside",
        "the index contributes a prime outside pi(S); together with two primitive "
        "divisors this forces a coclique triple");
  }
  switch (d.family) {
    case Family::Alternating: return classify_alternating(d);
    case Family::Sporadic: return classify_sporadic(d);
    case Family::Linear:
      if (d.n == 2) return classify_linear2(d);
      if (d.n == 3) return classify_linear3(d);
      if (d.n == 4) return classify_linear4(d);
      return classify_linear_high(d);
    case Family::Unitary: return classify_unitary(d, opt);
    case Family::Symplectic: return classify_symplectic(d);
    case Family::OrthogonalOdd: return classify_orthogonal_odd(d);
    case Family::OrthogonalEven: return classify_orthogonal_even(d);
    case Family::Exceptional: return classify_exceptional(d);
  }
  throw internal_error("classify: unhandled family");
}

// ---- presets -------------------------------------------------------------------

namespace {

std::string normalize_name(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (c == '(' || c == ')' || c == '.' || c == '-' || c == ' ') {
      out.push_back('_');
    } else if (c == '+') {
      out.push_back('P');
    } else if (c == '\'') {
      // drop
    } else {
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  // collapse repeated and trailing underscores
  std::string collapsed;
  for (char c : out) {
    if (c == '_' && (collapsed.empty() || collapsed.back() == '_')) continue;
    collapsed.push_back(c);
  }
  while (!collapsed.empty() && collapsed.back() == '_') collapsed.pop_back();
  return collapsed;
}

AlmostSimpleDescriptor alt(int n, bool sym, std::optional<std::string> exactly = {}) {
  AlmostSimpleDescriptor d;
  d.family = Family::Alternating;
  d.n = n;
  d.outer.two_divides_index = sym;
  d.outer.is_exactly = std::move(exactly);
  return d;
}

AlmostSimpleDescriptor lie(Family f, int n, u64 q) {
  AlmostSimpleDescriptor d;
  d.family = f;
  d.n = n;
  d.q = PrimePower::of(q);
  return d;
}

AlmostSimpleDescriptor exceptional(ExceptionalType t, u64 q) {
  AlmostSimpleDescriptor d;
  d.family = Family::Exceptional;
  d.ex = t;
  d.n = 0;
  d.q = PrimePower::of(q);
  return d;
}

}  // namespace

AlmostSimpleDescriptor preset(const std::string& name) {
  const std::string key = normalize_name(name);

  // fixed named groups
  if (key == "M10") return alt(6, true, "M10");
  if (key == "AUT_A6") return alt(6, true, "Aut(A6)");
  if (key == "PGL2_9") return alt(6, true, "PGL2(9)");
  if (key == "S6") return alt(6, true, "S6");
  if (key == "J2" || sporadic_names().count(name)) {
    AlmostSimpleDescriptor d;
    d.family = Family::Sporadic;
    d.sporadic_name = key == "J2" ? "J2" : name;
    return d;
  }
  if (key == "AUT_PSL2_8") {
    auto d = lie(Family::Linear, 2, 8);
    d.outer.is_exactly = "Aut(PSL2(8))";
    return d;
  }
  if (key == "AUT_PSL3_2") {
    auto d = lie(Family::Linear, 3, 2);
    d.outer.contains_graph_aut = true;
    d.outer.two_divides_index = true;
    return d;
  }
  if (key == "PGL3_4_F" || key == "PGL3_4_G" || key == "AUT_PSL3_4") {
    auto d = lie(Family::Linear, 3, 4);
    d.outer.contains_inndiag = true;
    if (key == "PGL3_4_F") d.outer.is_exactly = "PGL3(4).f";
    if (key == "PGL3_4_G") {
      d.outer.is_exactly = "PGL3(4).g";
      d.outer.contains_graph_aut = true;
    }
    if (key == "AUT_PSL3_4") {
      d.outer.is_exactly = "Aut(PSL3(4))";
      d.outer.contains_graph_aut = true;
      d.outer.two_divides_index = true;
    }
    return d;
  }
  if (key == "PSL4_4_F" || key == "PSL4_4_G" || key == "AUT_PSL4_4") {
    auto d = lie(Family::Linear, 4, 4);
    if (key == "PSL4_4_F") d.outer.is_exactly = "PSL4(4).f";
    if (key == "PSL4_4_G") {
      d.outer.is_exactly = "PSL4(4).g";
      d.outer.contains_graph_aut = true;
    }
    if (key == "AUT_PSL4_4") {
      d.outer.is_exactly = "Aut(PSL4(4))";
      d.outer.contains_graph_aut = true;
      d.outer.two_divides_index = true;
    }
    return d;
  }
  if (key == "AUT_PSU5_2") {
    auto d = lie(Family::Unitary, 5, 2);
    d.outer.two_divides_index = true;
    return d;
  }
  if (key == "PSU5_2") return lie(Family::Unitary, 5, 2);
  if (key == "PSU3_9") return lie(Family::Unitary, 3, 9);
  if (key == "PSU4_2") return lie(Family::Unitary, 4, 2);
  if (key == "PSP4_3") return lie(Family::Symplectic, 4, 3);
  if (key == "PSP6_2") return lie(Family::Symplectic, 6, 2);
  if (key == "POMEGA8P_2") {
    auto d = lie(Family::OrthogonalEven, 8, 2);
    d.sign = 1;
    return d;
  }
  if (key == "3D4_2") return exceptional(ExceptionalType::TriD4, 2);
  if (key == "TITS" || key == "2F4_2") return exceptional(ExceptionalType::TwistedF4, 2);

  // patterns: A<n>, S<n>, PSL2_<q>, PGL2_<q>, PSL2_<q>_2, PSU3_<q>, PSU3_<q>_2
  auto parse_num = [](const std::string& s, std::size_t from,
                      std::size_t to) -> std::optional<u64> {
    if (from >= to) return std::nullopt;
    u64 v = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      v = v * 10 + static_cast<u64>(s[i] - '0');
    }
    return v;
  };
  if ((key.size() >= 2) && (key[0] == 'A' || key[0] == 'S')) {
    if (auto n = parse_num(key, 1, key.size())) {
      if (*n >= 5 && *n <= 1000) return alt(static_cast<int>(*n), key[0] == 'S');
    }
  }
  for (const auto& [prefix, fam, inndiag] :
       {std::tuple<std::string, Family, bool>{"PSL2_", Family::Linear, false},
        std::tuple<std::string, Family, bool>{"PGL2_", Family::Linear, true}}) {
    if (key.rfind(prefix, 0) == 0) {
      std::string rest = key.substr(prefix.size());
      bool ext2 = false;
      if (rest.size() > 2 && rest.substr(rest.size() - 2) == "_2") {
        ext2 = true;
        rest = rest.substr(0, rest.size() - 2);
      }
      if (auto q = parse_num(rest, 0, rest.size())) {
        auto d = lie(fam, 2, *q);
        d.outer.contains_inndiag = inndiag;
        d.outer.two_divides_index = ext2 || (inndiag && PrimePower::of(*q).p != 2);
        return d;
      }
    }
  }
  if (key.rfind("PSU3_", 0) == 0) {
    std::string rest = key.substr(5);
    bool ext = false;
    if (rest.size() > 2 && (rest.substr(rest.size() - 2) == "_2" || rest.substr(rest.size() - 2) == "_4")) {
      ext = true;
      rest = rest.substr(0, rest.size() - 2);
    }
    if (auto q = parse_num(rest, 0, rest.size())) {
      auto d = lie(Family::Unitary, 3, *q);
      d.outer.two_divides_index = ext;
      return d;
    }
  }
  throw invalid_input("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"A<n>",        "S<n>",         "PSL2_<q>",     "PSL2_<q>_2",  "PGL2_<q>",
          "PGL2_9",      "M10",          "Aut_A6",       "Aut_PSL2_8",  "Aut_PSL3_2",
          "PGL3_4_f",    "PGL3_4_g",     "Aut_PSL3_4",   "PSL4_4_f",    "PSL4_4_g",
          "Aut_PSL4_4",  "Aut_PSU5_2",   "PSU5_2",       "PSU3_9",      "PSU3_<q>",
          "PSU3_<q>_2",  "PSU4_2",       "PSP4_3",       "PSP6_2",      "POmega8+_2",
          "3D4_2",       "Tits",         "J2",           "<sporadic names>"};
}

}  // namespace gk
