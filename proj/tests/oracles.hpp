// Copyright 2026 The ftk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations. Nothing here includes the library:
// sets are plain bitmasks, rationals are pairs of machine integers, and every
// topology is found by scanning all subsets of the carrier.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using Family = std::set<Mask>;
using Relation = std::vector<std::vector<bool>>;

inline bool in(Mask m, int i) { return (m >> i) & 1U; }
inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// ------------------------------------------------------------------ topology

/// {O : ∀x∈O ∃N ∈ nbhds(x), N ⊆ O}
inline Family rule_scan(int n, const std::function<std::vector<Mask>(int)>& nbhds) {
  std::vector<std::vector<Mask>> at(n);
  for (int x = 0; x < n; ++x) at[x] = nbhds(x);
  Family out;
  for (Mask o = 0; o <= full(n); ++o) {
    bool open = true;
    for (int x = 0; x < n && open; ++x) {
      if (!in(o, x)) continue;
      open = std::any_of(at[x].begin(), at[x].end(), [&](Mask b) { return sub(b, o); });
    }
    if (open) out.insert(o);
  }
  return out;
}

/// All unions of members of `basis`: O qualifies iff it equals the union of
/// the basis members it contains.
inline Family union_scan(int n, const std::vector<Mask>& basis) {
  Family out;
  for (Mask o = 0; o <= full(n); ++o) {
    Mask u = 0;
    for (Mask b : basis)
      if (sub(b, o)) u |= b;
    if (u == o) out.insert(o);
  }
  return out;
}

inline bool is_topology(int n, const Family& f) {
  if (!f.count(0) || !f.count(full(n))) return false;
  for (Mask a : f)
    for (Mask b : f)
      if (!f.count(a | b) || !f.count(a & b)) return false;
  return true;
}

/// f : src → dst is continuous iff every preimage of an open is open.
inline bool continuous(int nsrc, const Family& src, const Family& dst, const std::vector<int>& f) {
  for (Mask v : dst) {
    Mask pre = 0;
    for (int x = 0; x < nsrc; ++x)
      if (in(v, f[x])) pre |= Mask{1} << x;
    if (!src.count(pre)) return false;
  }
  return true;
}

/// Every topology on n ≤ 4 points, by scanning all families of subsets.
inline std::vector<Family> all_topologies(int n) {
  const int sets = 1 << n;
  std::vector<Mask> middle;
  for (Mask s = 1; s + 1 < static_cast<Mask>(sets); ++s) middle.push_back(s);
  std::vector<Family> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    Family f{0, full(n)};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if ((pick >> k) & 1U) f.insert(middle[k]);
    if (is_topology(n, f)) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------- preorders

inline bool is_preorder(const Relation& r) {
  const int n = static_cast<int>(r.size());
  for (int x = 0; x < n; ++x)
    if (!r[x][x]) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (r[x][y] && r[y][z] && !r[x][z]) return false;
  return true;
}

/// All preorders on n points by filtering every relation.
inline std::vector<Relation> all_preorders(int n) {
  std::vector<Relation> out;
  const int cells = n * n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    Relation r(n, std::vector<bool>(n));
    for (int k = 0; k < cells; ++k) r[k / n][k % n] = (bits >> k) & 1U;
    if (is_preorder(r)) out.push_back(std::move(r));
  }
  return out;
}

/// A random relation closed under reflexivity and transitivity.
inline Relation random_preorder(int n, std::mt19937_64& rng, double density = 0.3) {
  std::bernoulli_distribution coin(density);
  Relation r(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r[x][y] = x == y || coin(rng);
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (r[x][k] && r[k][y]) r[x][y] = true;
  return r;
}

/// Up-closed subsets.
inline Family up_closed_sets(const Relation& r) {
  const int n = static_cast<int>(r.size());
  Family out;
  for (Mask o = 0; o <= full(n); ++o) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (in(o, x) && r[x][y] && !in(o, y)) ok = false;
    if (ok) out.insert(o);
  }
  return out;
}

/// x ≤ y iff every open containing x contains y.
inline Relation specialization(int n, const Family& t) {
  Relation r(n, std::vector<bool>(n, true));
  for (Mask o : t)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (in(o, x) && !in(o, y)) r[x][y] = false;
  return r;
}

// ------------------------------------------------------- fibrous preorders

/// Raw tables: op[i*ni+j], N[i*nx+x] as masks, d[(i*nx+x)*nx+y] (-1 off R).
struct RawFp {
  int ni = 1, nx = 1;
  std::vector<int> op;
  std::vector<Mask> nbhd;
  std::vector<int> d;

  Mask at(int i, int x) const { return nbhd[i * nx + x]; }
  int partial(int i, int x, int y) const { return d[(i * nx + x) * nx + y]; }
};

struct AxiomVerdict {
  bool c1 = true, c2 = true, c3 = true;
  bool all() const { return c1 && c2 && c3; }
};

inline AxiomVerdict axioms(const RawFp& fp) {
  AxiomVerdict v;
  for (int i = 0; i < fp.ni; ++i)
    for (int x = 0; x < fp.nx; ++x) {
      if (!in(fp.at(i, x), x)) v.c1 = false;
      for (int y = 0; y < fp.nx; ++y) {
        if (!in(fp.at(i, x), y)) continue;
        const int j = fp.partial(i, x, y);
        for (int z = 0; z < fp.nx; ++z)
          if (in(fp.at(j, y), z) && !in(fp.at(i, x), z)) v.c2 = false;
      }
      for (int j = 0; j < fp.ni; ++j)
        if (!sub(fp.at(fp.op[i * fp.ni + j], x), fp.at(i, x) & fp.at(j, x))) v.c3 = false;
    }
  return v;
}

/// The topology by the neighbourhood rule over N(i,x).
inline Family topology(const RawFp& fp) {
  return rule_scan(fp.nx, [&](int x) {
    std::vector<Mask> out;
    for (int i = 0; i < fp.ni; ++i) out.push_back(fp.at(i, x));
    return out;
  });
}

/// x ≤^{g_j(x)} y ⇒ f(x) ≤^j f(y) for all x, y, j.
inline bool morphism(const RawFp& src, const RawFp& dst, const std::vector<int>& f,
                     const std::vector<std::vector<int>>& g) {
  for (int j = 0; j < src.ni; ++j)
    for (int x = 0; x < src.nx; ++x)
      for (int y = 0; y < src.nx; ++y)
        if (in(src.at(g[j][x], x), y) && !in(dst.at(j, f[x]), f[y])) return false;
  return true;
}

// ------------------------------------------------------------------ rationals

/// p/q with q > 0, small enough for 64-bit cross multiplication.
struct Frac {
  long long p = 0, q = 1;
};

inline bool lt(Frac a, Frac b) { return a.p * b.q < b.p * a.q; }
inline bool le(Frac a, Frac b) { return a.p * b.q <= b.p * a.q; }
inline bool eq(Frac a, Frac b) { return a.p * b.q == b.p * a.q; }
inline Frac add(Frac a, Frac b) {
  Frac r{a.p * b.q + b.p * a.q, a.q * b.q};
  const long long g = std::gcd(r.p < 0 ? -r.p : r.p, r.q);
  if (g > 1) r = {r.p / g, r.q / g};
  return r;
}
inline Frac mid(Frac a, Frac b) {
  Frac s = add(a, b);
  return {s.p, s.q * 2};
}

// ------------------------------------------------------------ pseudometrics

/// All symmetric zero-diagonal matrices over `values` obeying the triangle
/// inequality, by backtracking over the upper triangle.
inline std::vector<std::vector<Frac>> all_pseudometrics(int n, const std::vector<Frac>& values) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<std::vector<Frac>> out;
  std::vector<Frac> d(n * n);
  std::vector<bool> set(n * n, false);
  for (int x = 0; x < n; ++x) set[x * n + x] = true;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pairs.size()) {
      out.push_back(d);
      return;
    }
    auto [a, b] = pairs[k];
    for (Frac v : values) {
      d[a * n + b] = d[b * n + a] = v;
      bool ok = true;
      for (int z = 0; z < n && ok; ++z) {
        if (z == a || z == b || !set[a * n + z] || !set[z * n + b]) continue;
        const Frac az = d[a * n + z], zb = d[z * n + b];
        if (lt(add(az, zb), v) || lt(add(v, zb), az) || lt(add(v, az), zb)) ok = false;
      }
      if (!ok) continue;
      set[a * n + b] = set[b * n + a] = true;
      rec(k + 1);
      set[a * n + b] = set[b * n + a] = false;
    }
  };
  rec(0);
  return out;
}

/// d < 1/n
inline bool in_ball(Frac d, int n) { return d.p * n < d.q; }

/// Smallest k with 1/k ≤ 1/n − d, for d < 1/n: k = ⌈n·q / (q − n·p)⌉.
inline long long min_index(Frac d, int n) {
  const long long num = static_cast<long long>(n) * d.q;
  const long long den = d.q - static_cast<long long>(n) * d.p;
  return (num + den - 1) / den;
}

/// Union closure of the open balls {y : d(x,y) < 1/n}, n = 1..cap.
inline Family ball_topology(int nx, const std::vector<Frac>& d, int cap) {
  std::vector<Mask> balls;
  for (int n = 1; n <= cap; ++n)
    for (int x = 0; x < nx; ++x) {
      Mask b = 0;
      for (int y = 0; y < nx; ++y)
        if (in_ball(d[x * nx + y], n)) b |= Mask{1} << y;
      balls.push_back(b);
    }
  return union_scan(nx, balls);
}

/// Largest index ∂ needs over all related triples with n ≤ cap.
inline long long required_cap(int nx, const std::vector<Frac>& d, int cap) {
  long long need = 1;
  for (int n = 1; n <= cap; ++n)
    for (int k = 0; k < nx * nx; ++k)
      if (in_ball(d[k], n)) need = std::max(need, min_index(d[k], n));
  return need;
}

// ---------------------------------------------------------- worked examples

/// Least n ≤ 64 with a + 2^{-n}·a' < 1 for every sampled a' = j/den, j < den.
inline int semiring_brute(Frac a, long long den) {
  for (int n = 0; n <= 62; ++n) {
    bool ok = true;
    for (long long j = 0; j < den && ok; ++j) {
      const Frac step{j, den * (1LL << n)};
      if (!lt(add(a, step), Frac{1, 1})) ok = false;
    }
    if (ok) return n;
  }
  return -1;
}

/// Least n with e + 2^{-n} < 1.
inline int sqrt_brute(Frac e) {
  for (int n = 0; n <= 62; ++n)
    if (lt(add(e, Frac{1, 1LL << n}), Frac{1, 1})) return n;
  return -1;
}

struct Interval {
  Frac lo, hi;
  bool lo_closed, hi_closed;
};

inline bool member(const std::vector<Interval>& s, Frac x) {
  for (const auto& iv : s) {
    const bool above = iv.lo_closed ? le(iv.lo, x) : lt(iv.lo, x);
    const bool below = iv.hi_closed ? le(x, iv.hi) : lt(x, iv.hi);
    if (above && below) return true;
  }
  return false;
}

/// Membership is constant between consecutive endpoints, so a point of the
/// set lacks a right margin only if it is an endpoint whose right gap (probed
/// at its midpoint) leaves the set. Returns the smallest such endpoint.
inline std::optional<Frac> sorgenfrey_failure(const std::vector<Interval>& s) {
  std::vector<Frac> ends;
  for (const auto& iv : s) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
  }
  std::sort(ends.begin(), ends.end(), lt);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const Frac x = ends[k];
    if (k > 0 && eq(ends[k - 1], x)) continue;
    if (!member(s, x)) continue;
    Frac next = add(x, Frac{1, 1});
    for (std::size_t m = k + 1; m < ends.size(); ++m)
      if (lt(x, ends[m])) {
        next = ends[m];
        break;
      }
    if (!member(s, mid(x, next))) return x;
  }
  return std::nullopt;
}

// -------------------------------------------------------------------- modules

/// Additive monoid on 0..n-1 given by a table.
struct RawMonoid {
  int n = 1;
  int zero = 0;
  std::vector<int> add;
  int plus(int a, int b) const { return add[a * n + b]; }
};

inline RawMonoid cyclic(int n) {
  RawMonoid m{n, 0, std::vector<int>(n * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.add[a * n + b] = (a + b) % n;
  return m;
}

inline Mask translate(const RawMonoid& m, int x, Mask s) {
  Mask out = 0;
  for (int a = 0; a < m.n; ++a)
    if (in(s, a)) out |= Mask{1} << m.plus(x, a);
  return out;
}

/// Idempotent additive maps e (e(0) = 0, e(a+b) = e(a)+e(b), e∘e = e).
inline std::vector<std::vector<int>> idempotent_endomorphisms(const RawMonoid& m) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(m.n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == m.n) {
      if (e[m.zero] != m.zero) return;
      for (int a = 0; a < m.n; ++a)
        if (e[e[a]] != e[a]) return;
      for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
          if (e[m.plus(a, b)] != m.plus(e[a], e[b])) return;
      out.push_back(e);
      return;
    }
    for (int v = 0; v < m.n; ++v) {
      e[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// Module data over a magma with table op (ni × ni); xi[n][x].
struct RawModule {
  RawMonoid m;
  int ni = 1;
  std::vector<int> op;
  std::vector<std::vector<int>> xi;
  Mask s = 1;

  Mask scaled(int n) const {
    Mask out = 0;
    for (int a = 0; a < m.n; ++a)
      if (in(s, a)) out |= Mask{1} << xi[n][a];
    return out;
  }
};

/// (a): 0 ∈ S and some α : S → I with a + ξ(α(a), a') ∈ S for all a, a' ∈ S.
inline bool module_a(const RawModule& md) {
  if (!in(md.s, md.m.zero)) return false;
  for (int a = 0; a < md.m.n; ++a) {
    if (!in(md.s, a)) continue;
    bool some = false;
    for (int n = 0; n < md.ni && !some; ++n) {
      bool all = true;
      for (int a2 = 0; a2 < md.m.n && all; ++a2)
        if (in(md.s, a2) && !in(md.s, md.m.plus(a, md.xi[n][a2]))) all = false;
      some = all;
    }
    if (!some) return false;
  }
  return true;
}

/// (b): 0 ∈ S and every y ∈ S has some n with y + S_n ⊆ S.
inline bool module_b(const RawModule& md) {
  if (!in(md.s, md.m.zero)) return false;
  for (int y = 0; y < md.m.n; ++y) {
    if (!in(md.s, y)) continue;
    bool some = false;
    for (int n = 0; n < md.ni && !some; ++n) some = sub(translate(md.m, y, md.scaled(n)), md.s);
    if (!some) return false;
  }
  return true;
}

/// (c) for a given τ.
inline bool module_c(const RawModule& md, const Family& tau) {
  if (!in(md.s, md.m.zero) || !tau.count(md.s)) return false;
  for (int x = 0; x < md.m.n; ++x)
    for (int n = 0; n < md.ni; ++n)
      if (!tau.count(translate(md.m, x, md.scaled(n)))) return false;
  for (Mask u : tau)
    for (int x = 0; x < md.m.n; ++x) {
      if (!in(u, x)) continue;
      bool some = false;
      for (int n = 0; n < md.ni && !some; ++n) some = sub(translate(md.m, x, md.scaled(n)), u);
      if (!some) return false;
    }
  return true;
}

/// {O : ∀x∈O ∃n x + S_n ⊆ O}
inline Family module_rule(const RawModule& md) {
  return rule_scan(md.m.n, [&](int x) {
    std::vector<Mask> out;
    for (int n = 0; n < md.ni; ++n) out.push_back(translate(md.m, x, md.scaled(n)));
    return out;
  });
}

/// ξ(n,a) ∈ S for every n and a ∈ S.
inline bool module_closure(const RawModule& md) {
  for (int n = 0; n < md.ni; ++n)
    if (!sub(md.scaled(n), md.s)) return false;
  return true;
}

}  // namespace oracle
