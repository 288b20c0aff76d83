#include "gk/matgroup.hpp"

#include <algorithm>
#include <bit>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gk/errors.hpp"

namespace gk {

namespace {

constexpr u64 kOrderIterationGuard = 100'000'000;

struct FlatKeySet {
  explicit FlatKeySet(u64 expected) {
    u64 cap = 16;
    while (cap * 5 < expected * 8) cap <<= 1;  // keep load factor below 5/8
    slots.assign(cap, Key{});
    mask = cap - 1;
  }

  bool insert(const Key& k) {
    std::size_t at = KeyHash{}(k)&mask;
    while (true) {
      Key& slot = slots[at];
      if (slot == Key{}) {
        slot = k;
        ++count;
        if ((count + 1) * 8 > slots.size() * 5) grow();
        return true;
      }
      if (slot == k) return false;
      at = (at + 1) & mask;
    }
  }

  void grow() {
    std::vector<Key> old = std::move(slots);
    slots.assign(old.size() * 2, Key{});
    mask = slots.size() - 1;
    count = 0;
    for (const Key& k : old) {
      if (!(k == Key{})) insert(k);
    }
  }

  std::vector<Key> slots;
  u64 mask = 0;
  u64 count = 0;
};

}  // namespace

u64 GroupContext::space_size() const {
  u64 total = auts.size();
  const u64 sz = field->size();
  for (int i = 0; i < n * n; ++i) {
    if (total > (u64{1} << 62) / sz) return u64{1} << 62;  // saturate
    total *= sz;
  }
  return total;
}

Element identity_element(const GroupContext& ctx) {
  Element e;
  for (int i = 0; i < ctx.n; ++i) e.m[i * ctx.n + i] = 1;
  return e;
}

Element multiply(const GroupContext& ctx, const Element& a, const Element& b) {
  const Field& F = *ctx.field;
  const int n = ctx.n;
  Element c;
  c.aut = (a.aut + b.aut) % ctx.aut_modulus;
  // twist: apply frobenius^a.aut to b's entries while multiplying
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u64 acc = 0;
      for (int k = 0; k < n; ++k) {
        u64 bkj = F.frobenius(b.m[k * n + j], a.aut);
        acc = F.add(acc, F.mul(a.m[i * n + k], bkj));
      }
      c.m[i * n + j] = static_cast<u32>(acc);
    }
  }
  return c;
}

u64 determinant(const GroupContext& ctx, const Element& e) {
  const Field& F = *ctx.field;
  const int n = ctx.n;
  u64 a[6][6];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = e.m[i * n + j];
  u64 det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a[pivot][j], a[col][j]);
      det = F.neg(det);
    }
    det = F.mul(det, a[col][col]);
    u64 inv = F.inv(a[col][col]);
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      u64 factor = F.mul(a[row][col], inv);
      for (int j = col; j < n; ++j) a[row][j] = F.sub(a[row][j], F.mul(factor, a[col][j]));
    }
  }
  return det;
}

namespace {

bool preserves_symplectic_form(const GroupContext& ctx, const Element& e) {
  // J = [[0, I], [-I, 0]]; checks M^T J M = J.
  const Field& F = *ctx.field;
  const int n = ctx.n, h = n / 2;
  auto entry_J = [&](int i, int j) -> u64 {
    if (i < h && j == i + h) return 1;
    if (i >= h && j == i - h) return F.neg(1);
    return 0;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u64 acc = 0;
      for (int k = 0; k < n; ++k) {
        u64 jk = 0;
        // (J M)_{k j}
        if (k < h)
          jk = e.m[(k + h) * n + j];
        else
          jk = F.neg(e.m[(k - h) * n + j]);
        acc = F.add(acc, F.mul(e.m[k * n + i], jk));  // (M^T)_{i k} = M_{k i}
      }
      if (acc != entry_J(i, j)) return false;
    }
  }
  return true;
}

bool preserves_hermitian_identity(const GroupContext& ctx, const Element& e) {
  // conj(M)^T M = I with conj = frobenius^conj_power.
  const Field& F = *ctx.field;
  const int n = ctx.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u64 acc = 0;
      for (int k = 0; k < n; ++k) {
        u64 conj = F.frobenius(e.m[k * n + i], ctx.conj_power);
        acc = F.add(acc, F.mul(conj, e.m[k * n + j]));
      }
      if (acc != (i == j ? u64{1} : u64{0})) return false;
    }
  }
  return true;
}

bool det_is_nonsquare(const Field& F, u64 det) {
  // odd characteristic only; x is a square iff x^((q-1)/2) = 1
  return F.pow(det, (F.size() - 1) / 2) != 1;
}

}  // namespace

bool is_member(const GroupContext& ctx, const Element& e) {
  u64 det = determinant(ctx, e);
  if (det == 0) return false;
  switch (ctx.kind) {
    case MembershipKind::GeneralLinear:
      break;
    case MembershipKind::SpecialLinear:
      if (det != 1) return false;
      break;
    case MembershipKind::Symplectic:
      if (!preserves_symplectic_form(ctx, e)) return false;
      break;
    case MembershipKind::SpecialUnitary:
      if (det != 1 || !preserves_hermitian_identity(ctx, e)) return false;
      break;
  }
  if (!ctx.det_aut_classes.empty()) {
    bool nonsquare = det_is_nonsquare(*ctx.field, det);
    for (const auto& [d, a] : ctx.det_aut_classes) {
      if (d == nonsquare && a == e.aut) return true;
    }
    return false;
  }
  return true;
}

namespace {

Key pack(const GroupContext& ctx, const Element& e) {
  Key k;
  unsigned pos = 0;
  for (int i = 0; i < ctx.n * ctx.n; ++i) {
    u64 v = e.m[i];
    if (pos < 64) {
      k.lo |= v << pos;
      if (pos + ctx.bits > 64) k.hi |= v >> (64 - pos);
    } else {
      k.hi |= v << (pos - 64);
    }
    pos += ctx.bits;
  }
  k.hi |= static_cast<u64>(e.aut) << 56;
  return k;
}

}  // namespace

Key canonical_key(const GroupContext& ctx, const Element& e) {
  const Field& F = *ctx.field;
  const int nn = ctx.n * ctx.n;
  if (ctx.full_scalars) {
    // scale so that the first nonzero entry becomes 1
    Element scaled = e;
    for (int i = 0; i < nn; ++i) {
      if (scaled.m[i] != 0) {
        u64 inv = F.inv(scaled.m[i]);
        if (inv != 1) {
          for (int j = 0; j < nn; ++j) scaled.m[j] = static_cast<u32>(F.mul(inv, scaled.m[j]));
        }
        break;
      }
    }
    return pack(ctx, scaled);
  }
  Key best = pack(ctx, e);
  for (u64 lambda : ctx.scalars) {
    if (lambda == 1) continue;
    Element scaled = e;
    for (int j = 0; j < nn; ++j) scaled.m[j] = static_cast<u32>(F.mul(lambda, scaled.m[j]));
    Key k = pack(ctx, scaled);
    if (k < best) best = k;
  }
  return best;
}

Element decode_key(const GroupContext& ctx, const Key& k) {
  Element e;
  const u64 mask = (ctx.bits == 64) ? ~u64{0} : ((u64{1} << ctx.bits) - 1);
  unsigned pos = 0;
  for (int i = 0; i < ctx.n * ctx.n; ++i) {
    u64 v;
    if (pos < 64) {
      v = k.lo >> pos;
      if (pos + ctx.bits > 64) v |= k.hi << (64 - pos);
    } else {
      v = k.hi >> (pos - 64);
    }
    e.m[i] = static_cast<u32>(v & mask);
    pos += ctx.bits;
  }
  e.aut = static_cast<unsigned>(k.hi >> 56);
  return e;
}

namespace {

Element element_from_index(const GroupContext& ctx, u64 idx) {
  Element e;
  const u64 sz = ctx.field->size();
  for (int i = 0; i < ctx.n * ctx.n; ++i) {
    e.m[i] = static_cast<u32>(idx % sz);
    idx /= sz;
  }
  e.aut = ctx.auts[static_cast<std::size_t>(idx)];
  return e;
}

std::vector<Key> scan_space_impl(const GroupContext& ctx, bool parallel) {
  const u64 total = ctx.space_size();
  if (total >= (u64{1} << 62)) throw cap_exceeded("scan_space: candidate space too large");
  std::vector<std::vector<Key>> buckets;

#ifdef _OPENMP
  if (parallel) {
    int threads = omp_get_max_threads();
    buckets.resize(threads);
#pragma omp parallel
    {
      std::vector<Key>& local = buckets[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        Element e = element_from_index(ctx, static_cast<u64>(idx));
        if (is_member(ctx, e)) local.push_back(canonical_key(ctx, e));
      }
    }
  } else
#endif
  {
    (void)parallel;
    buckets.resize(1);
    for (u64 idx = 0; idx < total; ++idx) {
      Element e = element_from_index(ctx, idx);
      if (is_member(ctx, e)) buckets[0].push_back(canonical_key(ctx, e));
    }
  }

  std::vector<Key> out;
  std::size_t n = 0;
  for (const auto& b : buckets) n += b.size();
  out.reserve(n);
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Key> scan_space_serial(const GroupContext& ctx) { return scan_space_impl(ctx, false); }
std::vector<Key> scan_space_parallel(const GroupContext& ctx) { return scan_space_impl(ctx, true); }

std::vector<Key> bfs_closure(const GroupContext& ctx, std::span<const Element> gens, u64 cap) {
  FlatKeySet visited(1 << 16);
  std::vector<Key> frontier;
  std::vector<Key> all;

  Key id = canonical_key(ctx, identity_element(ctx));
  visited.insert(id);
  frontier.push_back(id);
  all.push_back(id);

  while (!frontier.empty()) {
    Key cur = frontier.back();
    frontier.pop_back();
    Element e = decode_key(ctx, cur);
    for (const Element& g : gens) {
      Key next = canonical_key(ctx, multiply(ctx, e, g));
      if (visited.insert(next)) {
        if (all.size() >= cap) throw cap_exceeded("bfs_closure: enumeration cap exceeded");
        frontier.push_back(next);
        all.push_back(next);
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

Element sample_member(const GroupContext& ctx, std::mt19937_64& rng) {
  const u64 sz = ctx.field->size();
  while (true) {
    Element e;
    for (int i = 0; i < ctx.n * ctx.n; ++i) e.m[i] = static_cast<u32>(rng() % sz);
    e.aut = 0;
    if (ctx.det_aut_classes.empty()) {
      if (is_member(ctx, e)) return e;
    } else {
      // base subgroup: square determinant, no twist
      u64 det = determinant(ctx, e);
      if (det != 0 && !det_is_nonsquare(*ctx.field, det)) return e;
    }
  }
}

namespace {

u64 coset_order(const GroupContext& ctx, const Key& id, const Element& x) {
  Element power = x;
  u64 order = 1;
  while (canonical_key(ctx, power) != id) {
    power = multiply(ctx, power, x);
    ++order;
    if (order > kOrderIterationGuard) throw internal_error("coset_order: runaway order loop");
  }
  return order;
}

std::vector<u64> coset_orders_impl(const GroupContext& ctx, std::span<const Key> keys,
                                   bool parallel) {
  Key id = canonical_key(ctx, identity_element(ctx));
  std::vector<std::set<u64>> buckets;

#ifdef _OPENMP
  if (parallel) {
    int threads = omp_get_max_threads();
    buckets.resize(threads);
#pragma omp parallel
    {
      std::set<u64>& local = buckets[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 512)
      for (long long i = 0; i < static_cast<long long>(keys.size()); ++i) {
        local.insert(coset_order(ctx, id, decode_key(ctx, keys[i])));
      }
    }
  } else
#endif
  {
    (void)parallel;
    buckets.resize(1);
    for (const Key& k : keys) buckets[0].insert(coset_order(ctx, id, decode_key(ctx, k)));
  }

  std::set<u64> merged;
  for (const auto& b : buckets) merged.insert(b.begin(), b.end());
  return {merged.begin(), merged.end()};
}

}  // namespace

std::vector<u64> coset_orders_serial(const GroupContext& ctx, std::span<const Key> keys) {
  return coset_orders_impl(ctx, keys, false);
}

std::vector<u64> coset_orders_parallel(const GroupContext& ctx, std::span<const Key> keys) {
  return coset_orders_impl(ctx, keys, true);
}

}  // namespace gk
