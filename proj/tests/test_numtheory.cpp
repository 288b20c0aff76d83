#include <algorithm>
#include <set>

#include "doctest.h"
#include "gk/errors.hpp"
#include "gk/numtheory.hpp"

using namespace gk;

TEST_SUITE("numtheory") {

TEST_CASE("factorize basics") {
  CHECK(factorize(1).factors.empty());
  auto f = factorize(127);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == std::pair<u64, int>{127, 1});

  // 2^24 - 1, computed by trial division plus primality checks
  auto g = factorize(16777215);
  std::vector<std::pair<u64, int>> expected{{3, 2}, {5, 1}, {7, 1}, {13, 1}, {17, 1}, {241, 1}};
  CHECK(g.factors == expected);

  CHECK_THROWS_AS(factorize(0), invalid_input);
  CHECK_THROWS_AS(factorize((u64{1} << 63) + 1), invalid_input);
}

TEST_CASE("factorization round-trip") {
  // fixed pseudo-random sample plus structured values
  u64 state = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < 200; ++i) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    u64 n = state % kMaxValue + 1;
    auto f = factorize(n);
    CHECK(f.recompose() == n);
    for (const auto& [p, e] : f.factors) {
      (void)e;
      CHECK(is_prime(p));
    }
    for (std::size_t j = 1; j < f.factors.size(); ++j)
      CHECK(f.factors[j - 1].first < f.factors[j].first);
  }
  CHECK(factorize((u64{1} << 61) - 1).factors ==
        std::vector<std::pair<u64, int>>{{(u64{1} << 61) - 1, 1}});
}

TEST_CASE("mult_order with the r = 2 convention") {
  CHECK(mult_order(2, 3) == 2);
  CHECK(mult_order(17, 2) == 1);  // 17 = 1 mod 4
  CHECK(mult_order(7, 2) == 2);
  CHECK(mult_order_plain(7, 2) == 1);
  CHECK(mult_order(4, 7) == 3);
  CHECK(mult_order(2, 241) == 24);
  CHECK_THROWS_AS(mult_order(6, 3), invalid_input);
  CHECK_THROWS_AS(mult_order(4, 2), invalid_input);
}

TEST_CASE("primitive prime divisor examples") {
  CHECK(primitive_prime_divisors(2, 6).empty());
  CHECK(primitive_prime_divisors(2, 1).empty());
  CHECK(primitive_prime_divisors(2, 2) == std::vector<u64>{3});
  auto r12_4 = primitive_prime_divisors(4, 12);
  CHECK(std::count(r12_4.begin(), r12_4.end(), 241) == 1);
  CHECK_THROWS_AS(primitive_prime_divisors(3, 63), cap_exceeded);
}

TEST_CASE("primitive prime divisors: order property and disjointness") {
  for (u64 q : {2ull, 3ull, 4ull, 5ull, 9ull, 16ull}) {
    std::set<u64> seen;
    for (unsigned m = 1; m <= 12; ++m) {
      if (!checked_pow(q, m)) break;
      for (u64 r : primitive_prime_divisors(q, m)) {
        CHECK(powmod(q, m, r) == 1);
        for (u64 d : divisors(m)) {
          if (d == m || r == 2) continue;
          CHECK(powmod(q, d, r) != 1);
        }
        CHECK(!seen.count(r));  // R_i and R_j disjoint
        seen.insert(r);
        CHECK(q % r != 0);  // disjoint from pi(q)
      }
    }
  }
}

TEST_CASE("r_part") {
  CHECK(r_part(126, 3) == 9);
  CHECK(r_part(6, 3) == 3);
  CHECK(r_part(5, 3) == 1);
  CHECK_THROWS_AS(r_part(10, 4), invalid_input);
}

TEST_CASE("fermat / mersenne predicates") {
  CHECK(fermat_mersenne(17).is_fermat);
  CHECK(!fermat_mersenne(17).is_mersenne);
  CHECK(fermat_mersenne(127).is_mersenne);
  CHECK(!fermat_mersenne(127).is_fermat);
  auto e = fermat_mersenne(11);
  CHECK((!e.is_fermat && !e.is_mersenne));
  auto three = fermat_mersenne(3);
  CHECK((three.is_fermat && three.is_mersenne));
  CHECK_THROWS_AS(fermat_mersenne(9), invalid_input);
}

TEST_CASE("gerono solutions match brute force") {
  auto brute = [](u64 p, u64 q) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned a = 1;; ++a) {
      auto pa = checked_pow(p, a);
      if (!pa) break;
      u64 target = *pa - 1;
      u64 qb = 1;
      for (unsigned b = 1;; ++b) {
        if (qb > target / q) break;
        qb *= q;
        if (qb == target) out.emplace_back(a, b);
        if (qb >= target) break;
      }
    }
    return out;
  };
  CHECK(gerono_solutions(2, 3) == std::vector<std::pair<unsigned, unsigned>>{{2, 1}});
  CHECK(gerono_solutions(7, 5).empty());
  // the (3, 2) pair has both 3 - 2 = 1 and 9 - 8 = 1
  CHECK(gerono_solutions(3, 2) == std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 3}});

  std::vector<u64> primes;
  for (u64 n = 2; n <= 1000; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  for (u64 p : primes) {
    for (u64 q : primes) {
      if (p == q) continue;
      auto fast = gerono_solutions(p, q);
      auto slow = brute(p, q);
      std::sort(slow.begin(), slow.end());
      CHECK(fast == slow);
    }
  }
}

}  // TEST_SUITE
