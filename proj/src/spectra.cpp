#include "gk/spectra.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gk/errors.hpp"
#include "gk/gf.hpp"
#include "gk/matgroup.hpp"

namespace gk {

namespace {

// ---- alternating / symmetric ------------------------------------------------

std::string factorial_decimal(int n, bool halve) {
  // schoolbook digit vector; n <= 40
  std::vector<u32> digits{1};
  auto mul_small = [&](u64 f) {
    u64 carry = 0;
    for (auto& d : digits) {
      u64 v = static_cast<u64>(d) * f + carry;
      d = static_cast<u32>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(static_cast<u32>(carry % 10));
      carry /= 10;
    }
  };
  for (int i = 2; i <= n; ++i) mul_small(static_cast<u64>(i));
  if (halve) {
    // divide the digit vector by two (n! is even for n >= 2)
    u64 rem = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
      u64 v = rem * 10 + digits[i];
      digits[i] = static_cast<u32>(v / 2);
      rem = v % 2;
    }
    while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
  }
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) out.push_back(static_cast<char>('0' + digits[i]));
  return out;
}

void partitions_rec(int remaining, int max_part, int parts, u64 lcm_so_far, bool symmetric,
                    int n, std::set<u64>& orders) {
  if (remaining == 0) {
    if (symmetric || (n - parts) % 2 == 0) orders.insert(lcm_so_far);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    partitions_rec(remaining - part, part, parts + 1, std::lcm<u64, u64>(lcm_so_far, part),
                   symmetric, n, orders);
  }
}

// ---- classical groups -------------------------------------------------------

struct ModelSpec {
  GroupContext ctx;
  std::unique_ptr<Field> field;
  u64 expected = 0;  // order of the enumerated (projective, extended) group
  std::string name;
};

u64 gcd64(u64 a, u64 b) { return std::gcd(a, b); }

// |PSL2| etc. via u128 guarded against the enumeration cap.
u64 projective_order(ClassicalFamily fam, u64 q) {
  u128 o = 0;
  switch (fam) {
    case ClassicalFamily::PSL2:
      o = (u128)q * (q - 1) * (q + 1) / gcd64(2, q - 1);
      break;
    case ClassicalFamily::PGL2:
      o = (u128)q * (q - 1) * (q + 1);
      break;
    case ClassicalFamily::PSL3:
      o = (u128)q * q * q * (q * q - 1) * (q * q * q - 1) / gcd64(3, q - 1);
      break;
    case ClassicalFamily::PSU3:
      o = (u128)q * q * q * (q * q - 1) * (q * q * q + 1) / gcd64(3, q + 1);
      break;
    case ClassicalFamily::PSp4:
      o = (u128)q * q * q * q * (q * q - 1) * ((u128)q * q * q * q - 1) / gcd64(2, q - 1);
      break;
    case ClassicalFamily::PSU4:
      o = (u128)q * q * q * q * q * q * (q * q - 1) * (q * q * q + 1) *
          ((u128)q * q * q * q - 1) / gcd64(4, q + 1);
      break;
    case ClassicalFamily::PSp6: {
      u128 q2 = (u128)q * q;
      o = (u128)q * q * q * q * q * q * q * q * q * (q2 - 1) * (q2 * q2 - 1) *
          (q2 * q2 * q2 - 1) / gcd64(2, q - 1);
      break;
    }
  }
  if (o > (u128)~u64{0}) throw cap_exceeded("classical group order exceeds 64 bits");
  return static_cast<u64>(o);
}

ModelSpec build_model(const ClassicalRequest& req) {
  ModelSpec ms;
  const u64 q = req.q;
  if (q < 2) throw invalid_input("classical oracle: q must be a prime power >= 2");
  Factorization qf = factorize(q);
  if (qf.factors.size() != 1) throw invalid_input("classical oracle: q must be a prime power");
  const u64 p = qf.factors[0].first;
  const unsigned m = static_cast<unsigned>(qf.factors[0].second);

  int n = 0;
  unsigned matrix_degree = m;  // degree of the matrix field over p
  switch (req.family) {
    case ClassicalFamily::PSL2:
    case ClassicalFamily::PGL2:
      n = 2;
      if (q < 4) throw invalid_input("classical oracle: PSL2 needs q >= 4");
      break;
    case ClassicalFamily::PSL3:
      n = 3;
      break;
    case ClassicalFamily::PSU3:
      n = 3;
      matrix_degree = 2 * m;
      break;
    case ClassicalFamily::PSp4:
      n = 4;
      break;
    case ClassicalFamily::PSU4:
      n = 4;
      matrix_degree = 2 * m;
      break;
    case ClassicalFamily::PSp6:
      n = 6;
      break;
  }

  ms.field = std::make_unique<Field>(p, matrix_degree);
  GroupContext& ctx = ms.ctx;
  ctx.field = ms.field.get();
  ctx.n = n;
  ctx.bits = static_cast<unsigned>(std::bit_width(ms.field->size() - 1));
  if (static_cast<unsigned>(n * n) * ctx.bits > 120)
    throw cap_exceeded("classical oracle: key encoding too wide for this field/dimension");
  ctx.aut_modulus = matrix_degree;

  ctx.auts = {0};
  unsigned ext_factor = 1;
  if (req.field_aut != 0) {
    unsigned e = req.field_aut % matrix_degree;
    if (e == 0) throw invalid_input("classical oracle: trivial field automorphism requested");
    std::set<unsigned> sub;
    for (unsigned v = 0; !sub.count(v); v = (v + e) % matrix_degree) sub.insert(v);
    ctx.auts.assign(sub.begin(), sub.end());
    ext_factor = static_cast<unsigned>(ctx.auts.size());
  }

  const Field& F = *ms.field;
  auto scalar_subgroup = [&](u64 exponent_gcd) {
    // scalars lambda with lambda^exponent_gcd = 1
    std::vector<u64> out;
    for (u64 a = 1; a < F.size(); ++a) {
      if (F.pow(a, exponent_gcd) == 1) out.push_back(a);
    }
    return out;
  };

  std::string qs = std::to_string(q);
  switch (req.family) {
    case ClassicalFamily::PSL2:
      ctx.kind = MembershipKind::SpecialLinear;
      ctx.scalars = scalar_subgroup(gcd64(2, q - 1));
      ms.name = "PSL2(" + qs + ")";
      break;
    case ClassicalFamily::PGL2:
      ctx.kind = MembershipKind::GeneralLinear;
      ctx.full_scalars = true;
      ms.name = "PGL2(" + qs + ")";
      break;
    case ClassicalFamily::PSL3:
      ctx.kind = MembershipKind::SpecialLinear;
      ctx.scalars = scalar_subgroup(gcd64(3, q - 1));
      ms.name = "PSL3(" + qs + ")";
      break;
    case ClassicalFamily::PSU3:
      ctx.kind = MembershipKind::SpecialUnitary;
      ctx.conj_power = m;  // x -> x^q on GF(q^2)
      ctx.scalars = scalar_subgroup(gcd64(3, q + 1));
      ms.name = "PSU3(" + qs + ")";
      break;
    case ClassicalFamily::PSp4:
      ctx.kind = MembershipKind::Symplectic;
      ctx.scalars = scalar_subgroup(gcd64(2, q - 1));
      ms.name = "PSp4(" + qs + ")";
      break;
    case ClassicalFamily::PSU4:
      ctx.kind = MembershipKind::SpecialUnitary;
      ctx.conj_power = m;
      ctx.scalars = scalar_subgroup(gcd64(4, q + 1));
      ms.name = "PSU4(" + qs + ")";
      break;
    case ClassicalFamily::PSp6:
      ctx.kind = MembershipKind::Symplectic;
      ctx.scalars = scalar_subgroup(gcd64(2, q - 1));
      ms.name = "PSp6(" + qs + ")";
      break;
  }

  if (req.mixed_diag_field) {
    if (req.family != ClassicalFamily::PSL2 || p == 2 || req.field_aut == 0)
      throw invalid_input("classical oracle: mixed coset needs PSL2, odd q, field power");
    // Index-two subgroup pairing non-square determinants with the twist.
    ctx.kind = MembershipKind::GeneralLinear;
    ctx.full_scalars = true;
    ctx.scalars.clear();
    ctx.det_aut_classes = {{false, 0}, {true, req.field_aut % matrix_degree}};
    ext_factor = 2;
    ms.name = "PSL2(" + qs + ").2fd";
    ms.expected = projective_order(ClassicalFamily::PSL2, q) * 2;
  } else {
    ms.expected = projective_order(req.family, q) * ext_factor;
    if (req.field_aut != 0) ms.name += "." + std::to_string(ext_factor);
  }
  return ms;
}

OrderSet orders_from_keys(const GroupContext& ctx, const std::vector<Key>& keys, bool parallel) {
  std::vector<u64> orders =
      parallel ? coset_orders_parallel(ctx, keys) : coset_orders_serial(ctx, keys);
  return OrderSet::from_values(std::move(orders));
}

}  // namespace

SpectrumResult spectrum_alternating(int n, bool symmetric) {
  if (n < 5 || n > 40) throw invalid_input("alternating oracle: n must be in [5, 40]");
  std::set<u64> orders;
  partitions_rec(n, n, 0, 1, symmetric, n, orders);
  SpectrumResult res;
  res.group_name = (symmetric ? "S" : "A") + std::to_string(n);
  res.group_order_str = factorial_decimal(n, !symmetric);
  if (res.group_order_str.size() <= 19) {
    u64 v = 0;
    bool fits = true;
    for (char c : res.group_order_str) {
      if (v > (~u64{0} - static_cast<u64>(c - '0')) / 10) {
        fits = false;
        break;
      }
      v = v * 10 + static_cast<u64>(c - '0');
    }
    if (fits) res.group_order = v;
  }
  res.omega = OrderSet::from_values({orders.begin(), orders.end()});
  return res;
}

SpectrumResult spectrum_classical(const ClassicalRequest& req, const EnumConfig& cfg) {
  ModelSpec ms = build_model(req);
  if (ms.expected > cfg.cap) throw cap_exceeded("classical oracle: group order above the cap");

  std::vector<Key> keys;
  if (ms.ctx.space_size() <= cfg.scan_cap) {
    keys = cfg.parallel ? scan_space_parallel(ms.ctx) : scan_space_serial(ms.ctx);
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Element> gens;
    gens.push_back(sample_member(ms.ctx, rng));
    gens.push_back(sample_member(ms.ctx, rng));
    for (unsigned a : ms.ctx.auts) {
      if (a != 0) {
        Element twist = identity_element(ms.ctx);
        twist.aut = a;
        gens.push_back(twist);
        break;  // one twist generator spans the cyclic automorphism part
      }
    }
    if (!ms.ctx.det_aut_classes.empty())
      throw internal_error("classical oracle: mixed cosets require a full scan");
    int attempts = 0;
    while (true) {
      keys = bfs_closure(ms.ctx, gens, cfg.cap);
      if (keys.size() == ms.expected) break;
      if (keys.size() > ms.expected)
        throw internal_error("classical oracle: closure exceeds the order formula");
      if (++attempts > 12)
        throw internal_error("classical oracle: generating-set closure mismatch");
      gens.push_back(sample_member(ms.ctx, rng));
    }
  }

  if (keys.size() != ms.expected)
    throw internal_error("classical oracle: enumerated size disagrees with the order formula");

  SpectrumResult res;
  res.group_name = ms.name;
  res.group_order = ms.expected;
  res.group_order_str = std::to_string(ms.expected);
  res.omega = orders_from_keys(ms.ctx, keys, cfg.parallel);
  return res;
}

SpectrumResult spectrum_blueprint(const SolvableBlueprint& b, const EnumConfig& cfg) {
  const u64 order = blueprint_order(b);  // throws on overflow
  if (order > cfg.cap) throw cap_exceeded("blueprint oracle: group order above the cap");

  struct TowerData {
    std::unique_ptr<Field> field;
    u64 d = 1;
    // act[j][v] = x^j * v; the action of c^k on this tower is act[k mod d].
    std::vector<std::vector<u32>> act;
  };

  u64 complement = 1;
  for (u64 q : b.pi2) complement *= q;

  std::vector<TowerData> towers;
  u64 field_total = 1;
  for (const Tower& t : b.towers) {
    TowerData td;
    td.field = std::make_unique<Field>(t.p, static_cast<unsigned>(t.m));
    if (!t.x_index.has_value())
      throw cap_exceeded("blueprint oracle: tower field too large, x not materialized");
    td.d = t.acting_product();
    const Field& F = *td.field;
    const u64 sz = F.size();
    td.act.assign(td.d, std::vector<u32>(sz));
    for (u64 v = 0; v < sz; ++v) {
      td.act[0][v] = static_cast<u32>(v);
      if (td.d > 1) td.act[1][v] = static_cast<u32>(F.mul(*t.x_index, v));
    }
    for (u64 j = 2; j < td.d; ++j) {
      for (u64 v = 0; v < sz; ++v) td.act[j][v] = td.act[1][td.act[j - 1][v]];
    }
    field_total *= sz;
    towers.push_back(std::move(td));
  }

  const std::size_t nt = b.towers.size();
  // element = (vector of field indices, complement exponent)
  auto decode = [&](u64 idx, std::vector<u64>& v, u64& k) {
    for (std::size_t i = 0; i < nt; ++i) {
      v[i] = idx % towers[i].field->size();
      idx /= towers[i].field->size();
    }
    k = idx;
  };
  // (v, k)(w, l) = (v + c^k . w, k + l mod N)
  auto mul_into = [&](std::vector<u64>& v, u64& k, const std::vector<u64>& w, u64 l) {
    for (std::size_t i = 0; i < nt; ++i) {
      u64 acted = towers[i].act[k % towers[i].d][w[i]];
      v[i] = towers[i].field->add(v[i], acted);
    }
    k = (k + l) % complement;
  };
  auto is_identity = [&](const std::vector<u64>& v, u64 k) {
    if (k != 0) return false;
    for (std::size_t i = 0; i < nt; ++i) {
      if (v[i] != 0) return false;
    }
    return true;
  };

  const u64 total = field_total * complement;
  const auto group_order_factors = factorize(total).factors;

  // g^e by square-and-multiply through the product law.
  auto power = [&](const std::vector<u64>& v0, u64 k0, u64 e, std::vector<u64>& rv, u64& rk) {
    rv.assign(nt, 0);
    rk = 0;
    std::vector<u64> bv = v0;
    u64 bk = k0;
    while (e) {
      if (e & 1) mul_into(rv, rk, bv, bk);
      e >>= 1;
      if (e) {
        std::vector<u64> sv = bv;
        u64 sk = bk;
        mul_into(sv, sk, bv, bk);
        bv = std::move(sv);
        bk = sk;
      }
    }
  };
  // order by divisor reduction of the group order
  auto order_of = [&](const std::vector<u64>& v0, u64 k0) {
    u64 ord = total;
    std::vector<u64> rv;
    u64 rk;
    for (const auto& [f, mult] : group_order_factors) {
      (void)mult;
      while (ord % f == 0) {
        power(v0, k0, ord / f, rv, rk);
        if (!is_identity(rv, rk)) break;
        ord /= f;
      }
    }
    return ord;
  };

  std::set<u64> orders;
#ifdef _OPENMP
  if (cfg.parallel) {
    int threads = omp_get_max_threads();
    std::vector<std::set<u64>> buckets(threads);
#pragma omp parallel
    {
      std::set<u64>& local = buckets[omp_get_thread_num()];
      std::vector<u64> v(nt);
      u64 k;
#pragma omp for schedule(dynamic, 1024)
      for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        decode(static_cast<u64>(idx), v, k);
        local.insert(order_of(v, k));
      }
    }
    for (const auto& bkt : buckets) orders.insert(bkt.begin(), bkt.end());
  } else
#endif
  {
    std::vector<u64> v(nt);
    u64 k;
    for (u64 idx = 0; idx < total; ++idx) {
      decode(idx, v, k);
      orders.insert(order_of(v, k));
    }
  }

  SpectrumResult res;
  res.group_name = "blueprint[" + std::to_string(order) + "]";
  res.group_order = order;
  res.group_order_str = std::to_string(order);
  res.omega = OrderSet::from_values({orders.begin(), orders.end()});
  return res;
}

}  // namespace gk
