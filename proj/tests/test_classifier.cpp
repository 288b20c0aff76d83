#include <algorithm>
#include <set>

#include "doctest.h"
#include "gk/blueprint.hpp"
#include "gk/classifier.hpp"
#include "gk/errors.hpp"
#include "gk/json_io.hpp"

using namespace gk;

namespace {

std::set<u64> witness_set(const Verdict& v) {
  std::set<u64> out;
  for (const auto& w : v.certificate.witness) out.insert(w.prime);
  return out;
}

// Every R-set-declared witness prime must verify against its declared order.
void check_witness_declarations(const Verdict& v) {
  for (const auto& w : v.certificate.witness) {
    CHECK(is_prime(w.prime));
    if (w.role == WitnessRole::RSetMember) CHECK(mult_order(w.base, w.prime) == w.k);
  }
}

// Positive verdicts must realize analytically through the pipeline.
void check_positive_realizes(const Verdict& v) {
  REQUIRE(v.certificate.kind == CertKind::Partition);
  const auto& g = v.certificate.partition_graph;
  auto bp = realize(g, {v.certificate.cliques[0], v.certificate.cliques[1]});
  auto report = verify(bp, g, 1'000'000);
  CHECK(report.analytic_match);
  // partition covers pi(S)
  if (!v.pi_socle.empty()) {
    std::vector<u64> covered(v.certificate.cliques[0]);
    covered.insert(covered.end(), v.certificate.cliques[1].begin(),
                   v.certificate.cliques[1].end());
    std::sort(covered.begin(), covered.end());
    CHECK(covered == v.pi_socle);
  }
}

AlmostSimpleDescriptor linear(int n, u64 q) {
  AlmostSimpleDescriptor d;
  d.family = Family::Linear;
  d.n = n;
  d.q = PrimePower::of(q);
  return d;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("canonicalize rewrites exceptional isomorphisms") {
  auto a6 = canonicalize(linear(2, 9));
  CHECK(a6.family == Family::Alternating);
  CHECK(a6.n == 6);

  auto a8 = canonicalize(linear(4, 2));
  CHECK(a8.family == Family::Alternating);
  CHECK(a8.n == 8);

  auto psl27 = canonicalize(linear(3, 2));
  CHECK(psl27.family == Family::Linear);
  CHECK(psl27.n == 2);
  CHECK(psl27.q->q == 7);

  auto a5 = canonicalize(linear(2, 4));
  CHECK(a5.n == 5);
  auto a5b = canonicalize(linear(2, 5));
  CHECK(a5b.n == 5);

  AlmostSimpleDescriptor sp43;
  sp43.family = Family::Symplectic;
  sp43.n = 4;
  sp43.q = PrimePower::of(3);
  auto u42 = canonicalize(sp43);
  CHECK(u42.family == Family::Unitary);
  CHECK(u42.n == 4);
  CHECK(u42.q->q == 2);

  AlmostSimpleDescriptor u35;
  u35.family = Family::Unitary;
  u35.n = 3;
  u35.q = PrimePower::of(5);
  auto same = canonicalize(u35);
  CHECK(same.family == Family::Unitary);
  CHECK(same.q->q == 5);

  // idempotence
  for (const auto& d : {a6, a8, psl27, u42, same}) {
    auto again = canonicalize(d);
    CHECK(again.family == d.family);
    CHECK(again.n == d.n);
    CHECK((again.q.has_value() == d.q.has_value() && (!d.q || again.q->q == d.q->q)));
  }
}

TEST_CASE("canonicalize rejects excluded socles") {
  CHECK_THROWS_AS(canonicalize(linear(2, 2)), invalid_input);
  CHECK_THROWS_AS(canonicalize(linear(2, 3)), invalid_input);
  AlmostSimpleDescriptor u32;
  u32.family = Family::Unitary;
  u32.n = 3;
  u32.q = PrimePower::of(2);
  CHECK_THROWS_AS(canonicalize(u32), invalid_input);
  AlmostSimpleDescriptor sp42;
  sp42.family = Family::Symplectic;
  sp42.n = 4;
  sp42.q = PrimePower::of(2);
  CHECK_THROWS_AS(canonicalize(sp42), invalid_input);
  CHECK_THROWS_AS(preset("G2_2_is_not_a_preset"), invalid_input);
  AlmostSimpleDescriptor g22;
  g22.family = Family::Exceptional;
  g22.ex = ExceptionalType::G2;
  g22.q = PrimePower::of(2);
  CHECK_THROWS_AS(canonicalize(g22), invalid_input);
}

TEST_CASE("pgl2(7): positive with cliques {7} | {2,3}") {
  auto v = classify(preset("PGL2_7"));
  CHECK(v.no_3_coclique);
  CHECK(v.rule == "linear2:pgl-fermat-mersenne");
  CHECK(v.certificate.cliques[0] == std::vector<u64>{7});
  CHECK(v.certificate.cliques[1] == std::vector<u64>{2, 3});
  check_positive_realizes(v);
}

TEST_CASE("pgl2 positives are exactly the boundary primes in range") {
  const std::set<u64> expected_positive{5, 7, 9, 17, 31};
  for (u64 q : {5ull, 7ull, 8ull, 9ull, 11ull, 13ull, 16ull, 17ull, 19ull, 25ull, 27ull, 31ull}) {
    auto v = classify(preset("PGL2_" + std::to_string(q)));
    CHECK(v.no_3_coclique == (expected_positive.count(q) == 1));
    auto s = classify(preset("PSL2_" + std::to_string(q)));
    CHECK(!s.no_3_coclique);  // no bare socle in this range is coclique-free
    check_witness_declarations(s);
  }
  // the even-field extension at q = 16
  auto ext = classify(preset("PSL2_16_2"));
  CHECK(ext.no_3_coclique);
  CHECK(ext.rule == "linear2:even-field-ext");
  CHECK(ext.certificate.cliques[0] == std::vector<u64>{2, 3, 5});
  CHECK(ext.certificate.cliques[1] == std::vector<u64>{17});
  check_positive_realizes(ext);
}

TEST_CASE("psl2(11) with diagonal: the quoted witness triple") {
  auto v = classify(preset("PGL2_11"));
  CHECK(!v.no_3_coclique);
  CHECK(witness_set(v) == std::set<u64>{11, 5, 3});
  check_witness_declarations(v);
}

TEST_CASE("alternating table, 5 <= n <= 18") {
  const std::set<int> alt_positive{9, 10, 12};
  const std::set<int> sym_positive{5, 6, 8, 9, 10, 12};
  for (int n = 5; n <= 18; ++n) {
    auto a = classify(preset("A" + std::to_string(n)));
    CHECK(a.no_3_coclique == (alt_positive.count(n) == 1));
    auto s = classify(preset("S" + std::to_string(n)));
    CHECK(s.no_3_coclique == (sym_positive.count(n) == 1));
    for (const auto& v : {a, s}) {
      if (v.no_3_coclique)
        check_positive_realizes(v);
      else
        check_witness_declarations(v);
    }
  }
  // the a6 extensions are all positive
  for (const char* name : {"S6", "PGL2_9", "M10", "Aut_A6"}) {
    auto v = classify(preset(name));
    CHECK(v.no_3_coclique);
    CHECK(v.rule == "alternating:a6-extension");
    check_positive_realizes(v);
  }
  auto a19 = classify(preset("A19"));
  CHECK(!a19.no_3_coclique);
  CHECK(witness_set(a19) == std::set<u64>{11, 13, 17});
  auto a30 = classify(preset("A30"));
  CHECK(witness_set(a30) == std::set<u64>{17, 19, 23});
}

TEST_CASE("paper-quoted witness triples") {
  struct Row {
    AlmostSimpleDescriptor d;
    std::set<u64> expected;
  };
  std::vector<Row> rows;
  rows.push_back({linear(5, 4), {7, 17, 31}});
  rows.push_back({linear(6, 2), {5, 7, 31}});
  rows.push_back({linear(7, 2), {5, 31, 127}});
  rows.push_back({linear(8, 2), {5, 31, 127}});
  {
    AlmostSimpleDescriptor d;
    d.family = Family::Unitary;
    d.n = 6;
    d.q = PrimePower::of(4);
    rows.push_back({d, {13, 17, 41}});
  }
  {
    AlmostSimpleDescriptor d;
    d.family = Family::Symplectic;
    d.n = 8;
    d.q = PrimePower::of(2);
    rows.push_back({d, {5, 7, 17}});
    d.n = 10;
    rows.push_back({d, {7, 17, 31}});
    d.n = 6;
    d.q = PrimePower::of(4);
    rows.push_back({d, {7, 17, 13}});
  }
  {
    AlmostSimpleDescriptor d;
    d.family = Family::Exceptional;
    d.ex = ExceptionalType::TriD4;
    d.q = PrimePower::of(4);
    rows.push_back({d, {7, 13, 241}});
    d.ex = ExceptionalType::TwistedF4;
    d.q = PrimePower::of(2);
    rows.push_back({d, {3, 5, 13}});
    d.q = PrimePower::of(8);
    rows.push_back({d, {2, 19, 37}});
    d.ex = ExceptionalType::G2;
    d.q = PrimePower::of(4);
    rows.push_back({d, {13, 7, 5}});
    d.q = PrimePower::of(8);
    rows.push_back({d, {19, 73, 7}});
    d.ex = ExceptionalType::E8;
    d.q = PrimePower::of(2);
    rows.push_back({d, {331, 241, 41}});
  }
  for (const auto& row : rows) {
    auto v = classify(row.d);
    CHECK(!v.no_3_coclique);
    CHECK(witness_set(v) == row.expected);
    check_witness_declarations(v);
  }
}

TEST_CASE("psl3(16) and psl4(16) fallback triples") {
  // the fallback row concerns groups above the diagonal subgroup that lack
  // the graph automorphism
  auto d3 = linear(3, 16);
  d3.outer.contains_inndiag = true;
  auto v3 = classify(d3);
  CHECK(!v3.no_3_coclique);
  REQUIRE(v3.special_triple.has_value());
  CHECK(*v3.special_triple == std::array<u64, 3>{17, 13, 7});
  for (const auto& w : v3.special_declared) CHECK(mult_order(w.base, w.prime) == w.k);

  auto v4 = classify(linear(4, 16));
  REQUIRE(v4.special_triple.has_value());
  CHECK(*v4.special_triple == std::array<u64, 3>{257, 13, 7});
  for (const auto& w : v4.special_declared) CHECK(mult_order(w.base, w.prime) == w.k);
}

TEST_CASE("linear rank 3 and 4 tables") {
  // Mersenne socles
  auto psl3_127 = classify(linear(3, 127));  // (127-1)_3 = 9
  CHECK(psl3_127.no_3_coclique);
  CHECK(psl3_127.rule == "linear3:mersenne");
  check_positive_realizes(psl3_127);

  auto psl3_7 = classify(linear(3, 7));  // (7-1)_3 = 3: needs the diagonal
  CHECK(!psl3_7.no_3_coclique);
  auto pgl3_7 = linear(3, 7);
  pgl3_7.outer.contains_inndiag = true;
  auto v = classify(pgl3_7);
  CHECK(v.no_3_coclique);
  CHECK(v.rule == "linear3:mersenne-inndiag");
  check_positive_realizes(v);

  auto psl3_5 = classify(linear(3, 5));  // Fermat side is negative for the linear family
  CHECK(!psl3_5.no_3_coclique);
  CHECK(witness_set(psl3_5) == std::set<u64>{5, 3, 31});

  auto psl3_3 = classify(linear(3, 3));  // 3 = 2^2 - 1, (3-1)_3 = 1
  CHECK(psl3_3.no_3_coclique);
  CHECK(psl3_3.certificate.cliques[0] == std::vector<u64>{2, 3});
  CHECK(psl3_3.certificate.cliques[1] == std::vector<u64>{13});
  check_positive_realizes(psl3_3);

  // even characteristic with a graph automorphism
  auto psl3_8 = linear(3, 8);
  psl3_8.outer.contains_graph_aut = true;
  auto v8 = classify(psl3_8);  // (8-1)_3 = 1: S<g> suffices
  CHECK(v8.no_3_coclique);
  CHECK(v8.rule == "linear3:even-graph");
  check_positive_realizes(v8);
  CHECK(!classify(linear(3, 8)).no_3_coclique);

  auto psl3_16 = linear(3, 16);  // (16-1)_3 = 3: needs inndiag and graph
  psl3_16.outer.contains_graph_aut = true;
  CHECK(!classify(psl3_16).no_3_coclique);
  psl3_16.outer.contains_inndiag = true;
  auto v16 = classify(psl3_16);
  CHECK(v16.no_3_coclique);
  CHECK(v16.rule == "linear3:even-inndiag-graph");
  check_positive_realizes(v16);

  auto psl4_8 = linear(4, 8);
  CHECK(!classify(psl4_8).no_3_coclique);
  psl4_8.outer.contains_graph_aut = true;
  auto v48 = classify(psl4_8);
  CHECK(v48.no_3_coclique);
  CHECK(v48.rule == "linear4:even-graph");
  check_positive_realizes(v48);

  auto psl4_3 = classify(linear(4, 3));
  CHECK(!psl4_3.no_3_coclique);
  check_witness_declarations(psl4_3);

  // q = 4 named rows
  for (const char* name : {"PGL3_4_f", "PGL3_4_g", "Aut_PSL3_4", "PSL4_4_f", "PSL4_4_g",
                           "Aut_PSL4_4"}) {
    auto nv = classify(preset(name));
    CHECK(nv.no_3_coclique);
    check_positive_realizes(nv);
  }
  CHECK(!classify(linear(3, 4)).no_3_coclique);
  CHECK(!classify(linear(4, 4)).no_3_coclique);
}

TEST_CASE("unitary tables") {
  // q = 9 socle and the Fermat rows
  auto u39 = classify(preset("PSU3_9"));
  CHECK(u39.no_3_coclique);
  CHECK(u39.certificate.cliques[0] == std::vector<u64>{2, 3, 5});
  CHECK(u39.certificate.cliques[1] == std::vector<u64>{73});
  check_positive_realizes(u39);

  AlmostSimpleDescriptor u3;
  u3.family = Family::Unitary;
  u3.n = 3;

  u3.q = PrimePower::of(17);  // (17+1)_3 = 9: positive outright
  auto v17 = classify(u3);
  CHECK(v17.no_3_coclique);
  CHECK(v17.rule == "unitary3:fermat");
  check_positive_realizes(v17);

  u3.q = PrimePower::of(5);  // (5+1)_3 = 3: diagonal required
  CHECK(!classify(u3).no_3_coclique);
  u3.outer.contains_inndiag = true;
  auto v5 = classify(u3);
  CHECK(v5.no_3_coclique);
  CHECK(v5.rule == "unitary3:fermat-inndiag");
  check_positive_realizes(v5);
  u3.outer.contains_inndiag = false;

  u3.q = PrimePower::of(7);  // 7 - 1 = 6 is not a power of two
  auto v7 = classify(u3);
  CHECK(!v7.no_3_coclique);
  check_witness_declarations(v7);

  // characteristic two: index parity decides at q = 4
  auto s = classify(preset("PSU3_4"));
  CHECK(!s.no_3_coclique);
  CHECK(witness_set(s) == std::set<u64>{2, 3, 13});
  auto s2 = classify(preset("PSU3_4_2"));
  CHECK(s2.no_3_coclique);
  CHECK(s2.certificate.cliques[0] == std::vector<u64>{2, 3, 5});
  CHECK(s2.certificate.cliques[1] == std::vector<u64>{13});
  check_positive_realizes(s2);

  // n = 4
  auto u42 = classify(preset("PSU4_2"));
  CHECK(u42.no_3_coclique);
  CHECK(u42.certificate.cliques[0] == std::vector<u64>{2, 3});
  CHECK(u42.certificate.cliques[1] == std::vector<u64>{5});
  check_positive_realizes(u42);

  AlmostSimpleDescriptor u44;
  u44.family = Family::Unitary;
  u44.n = 4;
  u44.q = PrimePower::of(4);
  CHECK(!classify(u44).no_3_coclique);
  u44.outer.two_divides_index = true;
  auto v44 = classify(u44);
  CHECK(v44.no_3_coclique);
  CHECK(v44.rule == "unitary4:even");
  check_positive_realizes(v44);

  // n = 5 at q = 2
  auto aut_u52 = classify(preset("Aut_PSU5_2"));
  CHECK(aut_u52.no_3_coclique);
  CHECK(aut_u52.certificate.cliques[0] == std::vector<u64>{2, 3, 5});
  CHECK(aut_u52.certificate.cliques[1] == std::vector<u64>{11});
  check_positive_realizes(aut_u52);
  auto u52 = classify(preset("PSU5_2"));
  CHECK(!u52.no_3_coclique);
  CHECK(witness_set(u52) == std::set<u64>{2, 5, 11});
  check_witness_declarations(u52);
}

TEST_CASE("psu3 readings differ exactly at odd m = +-1 mod 6") {
  AlmostSimpleDescriptor d;
  d.family = Family::Unitary;
  d.n = 3;
  d.q = PrimePower::of(32);  // m = 5
  d.outer.two_divides_index = true;

  ClassifyOptions qminus;  // default
  ClassifyOptions qplus;
  qplus.psu3_reading = Psu3Reading::QPlusOne;

  auto a = classify(d, qminus);
  auto b = classify(d, qplus);
  CHECK(a.no_3_coclique);
  CHECK(!b.no_3_coclique);

  d.outer.contains_inndiag = true;
  CHECK(classify(d, qminus).no_3_coclique);
  CHECK(classify(d, qplus).no_3_coclique);

  // at q = 4 the readings agree for every profile
  for (const char* name : {"PSU3_4", "PSU3_4_2", "PSU3_4_4"}) {
    auto da = preset(name);
    CHECK(classify(da, qminus).no_3_coclique == classify(da, qplus).no_3_coclique);
  }
}

TEST_CASE("symplectic and orthogonal tables") {
  AlmostSimpleDescriptor sp;
  sp.family = Family::Symplectic;
  sp.n = 4;
  for (u64 q : {4ull, 5ull, 7ull, 9ull}) {
    sp.q = PrimePower::of(q);
    auto v = classify(sp);
    CHECK(v.no_3_coclique);
    CHECK(v.rule == "symplectic4");
    check_positive_realizes(v);
  }
  sp.q = PrimePower::of(4);
  sp.outer.pi_quotient_in_pi_S = false;
  CHECK(!classify(sp).no_3_coclique);
  sp.outer.pi_quotient_in_pi_S = true;

  auto sp62 = classify(preset("PSP6_2"));
  CHECK(sp62.no_3_coclique);
  CHECK(sp62.certificate.cliques[0] == std::vector<u64>{2, 3, 5});
  check_positive_realizes(sp62);

  AlmostSimpleDescriptor o7;
  o7.family = Family::OrthogonalOdd;
  o7.n = 7;
  o7.q = PrimePower::of(3);
  auto vo = classify(o7);
  CHECK(!vo.no_3_coclique);
  CHECK(witness_set(vo) == std::set<u64>{13, 5, 7});
  check_witness_declarations(vo);
  o7.q = PrimePower::of(4);
  CHECK_THROWS_AS(classify(o7), invalid_input);  // even q is the symplectic family

  auto o8 = classify(preset("POmega8+_2"));
  CHECK(o8.no_3_coclique);
  CHECK(o8.certificate.cliques[0] == std::vector<u64>{2, 3, 5});
  check_positive_realizes(o8);

  AlmostSimpleDescriptor o8m;
  o8m.family = Family::OrthogonalEven;
  o8m.n = 8;
  o8m.sign = -1;
  o8m.q = PrimePower::of(2);
  auto vm = classify(o8m);
  CHECK(!vm.no_3_coclique);
  CHECK(witness_set(vm) == std::set<u64>{7, 13, 17});
  check_witness_declarations(vm);

  AlmostSimpleDescriptor o10;
  o10.family = Family::OrthogonalEven;
  o10.n = 10;
  o10.sign = 1;
  o10.q = PrimePower::of(2);
  auto v10 = classify(o10);
  CHECK(!v10.no_3_coclique);
  CHECK(witness_set(v10) == std::set<u64>{5, 7, 17});
}

TEST_CASE("sporadic table") {
  auto j2 = classify(preset("J2"));
  CHECK(j2.no_3_coclique);
  CHECK(j2.certificate.cliques[0] == std::vector<u64>{2, 3, 5});
  CHECK(j2.certificate.cliques[1] == std::vector<u64>{7});
  check_positive_realizes(j2);

  for (const char* name : {"M11", "M24", "Co1", "B", "M"}) {
    auto v = classify(preset(name));
    CHECK(!v.no_3_coclique);
    CHECK(v.certificate.kind == CertKind::Cited);
  }
}

TEST_CASE("3d4(2) positive, aut(psl2(8)) and aut(psl3(2)) named rows") {
  auto d42 = classify(preset("3D4_2"));
  CHECK(d42.no_3_coclique);
  CHECK(d42.certificate.cliques[0] == std::vector<u64>{2, 3, 7});
  CHECK(d42.certificate.cliques[1] == std::vector<u64>{13});
  check_positive_realizes(d42);

  auto aut8 = classify(preset("Aut_PSL2_8"));
  CHECK(aut8.no_3_coclique);
  CHECK(aut8.certificate.cliques[0] == std::vector<u64>{2, 3});
  CHECK(aut8.certificate.cliques[1] == std::vector<u64>{7});
  check_positive_realizes(aut8);
  CHECK(!classify(preset("PSL2_8")).no_3_coclique);

  // Aut(PSL3(2)) canonicalizes onto PGL2(7)
  auto aut32 = classify(preset("Aut_PSL3_2"));
  CHECK(aut32.no_3_coclique);
  CHECK(aut32.rule == "linear2:pgl-fermat-mersenne");
}

TEST_CASE("remark: a prime outside pi(S) forces a negative verdict") {
  for (const char* name : {"J2", "A9", "PGL2_7", "PSU4_2", "PSP6_2", "3D4_2"}) {
    auto d = preset(name);
    d.outer.pi_quotient_in_pi_S = false;
    auto v = classify(d);
    CHECK(!v.no_3_coclique);
    CHECK(v.rule == "remark:pi-outside");
  }
}

TEST_CASE("unresolved certificates keep the verdict") {
  // q = 7^2: the odd part of R_2(7) is empty and no substitution is on file
  auto v = classify(linear(2, 49));
  CHECK(!v.no_3_coclique);
  CHECK(v.certificate.kind == CertKind::Unresolved);

  // out-of-range R-sets degrade the certificate, not the verdict
  auto big = classify(linear(2, u64{1} << 40));
  CHECK(!big.no_3_coclique);
  CHECK(big.certificate.kind == CertKind::Unresolved);
}

TEST_CASE("classify is stable under canonicalize") {
  for (const char* name : {"PSL2_9", "PGL2_9", "A6", "PSU4_2", "PSP4_3", "PGL2_7", "S8"}) {
    auto d = preset(name);
    auto v1 = classify(d);
    auto v2 = classify(canonicalize(d));
    CHECK(v1.no_3_coclique == v2.no_3_coclique);
    CHECK(v1.rule == v2.rule);
  }
}

TEST_CASE("descriptor and verdict json round-trips") {
  auto d = preset("PSU3_4_2");
  auto j = descriptor_to_json(d);
  auto back = descriptor_from_json(j);
  CHECK(back.family == d.family);
  CHECK(back.n == d.n);
  CHECK(back.q->q == d.q->q);
  CHECK(back.outer.two_divides_index == d.outer.two_divides_index);

  auto v = classify(d);
  auto jv = verdict_to_json(v);
  CHECK(jv.at("no_3_coclique").get<bool>() == v.no_3_coclique);
  CHECK(jv.at("certificate").at("kind") == "two_clique_partition");

  auto neg = classify(preset("PSL2_11"));
  auto jn = verdict_to_json(neg);
  CHECK(jn.at("certificate").at("kind") == "witness");
}

TEST_CASE("m10 is carried as a positive row") {
  // The named extension rows over the degree-six alternating socle are all
  // positive in the table this classifier implements.
  auto v = classify(preset("M10"));
  CHECK(v.no_3_coclique);
  check_positive_realizes(v);
}

}  // TEST_SUITE
