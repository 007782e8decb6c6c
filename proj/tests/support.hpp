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

// Test-side builders, adapters to the oracle types and seeded generators.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ftk/ftk.hpp"
#include "oracles.hpp"

namespace support {

using ftk::Carrier;
using ftk::FibrousPreorder;
using ftk::FiniteTopology;
using ftk::Subset;
using ftk::UnitaryMagma;

// ----------------------------------------------------------------- builders

inline Carrier labels(std::initializer_list<const char*> ls) {
  std::vector<std::string> v;
  for (const char* l : ls) v.emplace_back(l);
  return Carrier(std::move(v));
}

inline Subset set_of(std::initializer_list<std::size_t> xs) {
  Subset s;
  for (std::size_t x : xs) s = s.with(x);
  return s;
}

inline ftk::Preorder preorder(const Carrier& c, std::vector<std::pair<std::size_t, std::size_t>> leq) {
  return ftk::Preorder::from_pairs(c, leq);
}

/// a ≤ b on {a,b}.
inline ftk::Preorder chain_ab() { return preorder(labels({"a", "b"}), {{0, 0}, {0, 1}, {1, 1}}); }

inline FiniteTopology topology(const Carrier& c, std::vector<Subset> opens) {
  return FiniteTopology(c, std::move(opens));
}

/// d(x,y)=0, d(x,z)=d(y,z)=1/2 on {x,y,z}.
inline ftk::RationalPseudometric pseudometric3() {
  using ftk::Rational;
  const Rational h(1, 2);
  return {labels({"x", "y", "z"}), {0, 0, h, 0, 0, h, h, h, 0}};
}

/// max on {m0..m(k-1)} with unit m0.
inline UnitaryMagma max_magma(std::size_t k) {
  std::vector<std::string> ls;
  std::vector<std::size_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    ls.push_back("m" + std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = std::max(i, j);
  }
  return UnitaryMagma::from_indices(std::move(ls), 0, std::move(table), UnitaryMagma::Kind::Table);
}

// ----------------------------------------------------------------- adapters

inline oracle::Family family(const FiniteTopology& t) {
  oracle::Family out;
  for (Subset s : t.opens()) out.insert(s.bits());
  return out;
}

inline oracle::RawFp raw(const FibrousPreorder& fp) {
  oracle::RawFp r;
  r.ni = static_cast<int>(fp.magma().size());
  r.nx = static_cast<int>(fp.carrier().size());
  for (int i = 0; i < r.ni; ++i)
    for (int j = 0; j < r.ni; ++j) r.op.push_back(static_cast<int>(fp.magma().op(i, j)));
  r.d.assign(static_cast<std::size_t>(r.ni * r.nx * r.nx), -1);
  for (int i = 0; i < r.ni; ++i)
    for (int x = 0; x < r.nx; ++x) {
      r.nbhd.push_back(fp.up(i, x).bits());
      for (int y = 0; y < r.nx; ++y)
        if (auto j = fp.partial(i, x, y)) r.d[(i * r.nx + x) * r.nx + y] = static_cast<int>(*j);
    }
  return r;
}

inline oracle::Relation relation(const ftk::Preorder& p) {
  const std::size_t n = p.carrier().size();
  oracle::Relation r(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r[x][y] = p.leq(x, y);
  return r;
}

inline ftk::Preorder preorder_of(const oracle::Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r[x][y]) pairs.emplace_back(x, y);
  return ftk::Preorder::from_pairs(Carrier::numbered(n), pairs);
}

// --------------------------------------------------------------- generators

/// A magma of size ≤ 4 whose operation never lowers the rank of its
/// arguments: capped multiplication, capped addition, max, or trivial.
/// rank[i] orders indices from coarsest to finest.
struct RankedMagma {
  UnitaryMagma magma;
  std::vector<std::size_t> rank;
};

inline RankedMagma random_ranked_magma(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> family(0, 3);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  const std::size_t k = size(rng);
  UnitaryMagma m;
  switch (family(rng)) {
    case 0: m = ftk::capped_nat_mult(k); break;
    case 1: m = ftk::capped_nat_add(k - 1); break;
    case 2: m = max_magma(k); break;
    default: m = ftk::trivial_magma(); break;
  }
  std::vector<std::size_t> rank(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rank[i] = i;
  return {std::move(m), std::move(rank)};
}

/// ∂^i(x,y) drawn uniformly from {j : N(j,y) ⊆ N(i,x)}; nullopt if empty.
inline std::optional<FibrousPreorder> with_random_partial(const UnitaryMagma& m, const Carrier& c,
                                                          const std::vector<Subset>& nbhd,
                                                          std::mt19937_64& rng) {
  const std::size_t ni = m.size(), nx = c.size();
  std::vector<ftk::RelTriple> rel;
  std::vector<ftk::PartialEntry> partial;
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t x = 0; x < nx; ++x) {
      const Subset nix = nbhd[i * nx + x];
      for (std::size_t y : nix.elements()) {
        std::vector<std::size_t> js;
        for (std::size_t j = 0; j < ni; ++j)
          if (nbhd[j * nx + y].subset_of(nix)) js.push_back(j);
        if (js.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, js.size() - 1);
        rel.push_back({i, x, y});
        partial.push_back({i, x, y, js[pick(rng)]});
      }
    }
  return FibrousPreorder::from_triples(m, c, rel, partial);
}

/// Neighbourhoods as up-sets of a chain of preorders, coarsest at rank 0.
inline std::vector<Subset> chained_preorder_nbhds(const RankedMagma& rm, std::size_t nx, std::mt19937_64& rng) {
  const std::size_t levels = rm.magma.size();
  std::vector<oracle::Relation> chain(levels);
  std::bernoulli_distribution dense(0.5);
  chain[levels - 1] = oracle::random_preorder(static_cast<int>(nx), rng, dense(rng) ? 0.1 : 0.3);
  for (std::size_t l = levels - 1; l-- > 0;) {
    oracle::Relation r = chain[l + 1];
    std::bernoulli_distribution coin(0.2);
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < nx; ++y)
        if (coin(rng)) r[x][y] = true;
    for (std::size_t k = 0; k < nx; ++k)
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < nx; ++y)
          if (r[x][k] && r[k][y]) r[x][y] = true;
    chain[l] = std::move(r);
  }
  std::vector<Subset> nbhd(levels * nx);
  for (std::size_t i = 0; i < levels; ++i)
    for (std::size_t x = 0; x < nx; ++x) {
      Subset s;
      for (std::size_t y = 0; y < nx; ++y)
        if (chain[rm.rank[i]][x][y]) s = s.with(y);
      nbhd[i * nx + x] = s;
    }
  return nbhd;
}

/// Nested random sets N(i,x) ∋ x, shrinking with rank; C2 may be unsatisfiable.
inline std::vector<Subset> nested_random_nbhds(const RankedMagma& rm, std::size_t nx, std::mt19937_64& rng) {
  const std::size_t levels = rm.magma.size();
  std::vector<Subset> by_level(levels * nx);
  std::bernoulli_distribution keep(0.6);
  for (std::size_t x = 0; x < nx; ++x) {
    Subset cur = Subset::full(nx);
    for (std::size_t l = 0; l < levels; ++l) {
      Subset next = Subset::singleton(x);
      for (std::size_t y : cur.elements())
        if (y != x && keep(rng)) next = next.with(y);
      by_level[l * nx + x] = cur = next;
    }
  }
  std::vector<Subset> nbhd(levels * nx);
  for (std::size_t i = 0; i < levels; ++i)
    for (std::size_t x = 0; x < nx; ++x) nbhd[i * nx + x] = by_level[rm.rank[i] * nx + x];
  return nbhd;
}

/// A fibrous preorder passing C1–C3 with |X| ≤ max_x and |I| ≤ 4.
inline FibrousPreorder random_valid_fp(std::mt19937_64& rng, std::size_t max_x = 5) {
  std::uniform_int_distribution<std::size_t> size(1, max_x);
  std::bernoulli_distribution nested(0.5);
  for (;;) {
    const RankedMagma rm = random_ranked_magma(rng);
    const std::size_t nx = size(rng);
    const Carrier c = Carrier::numbered(nx);
    const auto nbhd = nested(rng) ? nested_random_nbhds(rm, nx, rng) : chained_preorder_nbhds(rm, nx, rng);
    if (auto fp = with_random_partial(rm.magma, c, nbhd, rng)) return *fp;
  }
}

/// An unconstrained fibrous preorder: random relation and random ∂.
inline FibrousPreorder random_raw_fp(std::mt19937_64& rng, std::size_t max_x = 4) {
  std::uniform_int_distribution<std::size_t> size(1, max_x);
  std::bernoulli_distribution coin(0.6);
  const RankedMagma rm = random_ranked_magma(rng);
  const std::size_t nx = size(rng), ni = rm.magma.size();
  std::uniform_int_distribution<std::size_t> idx(0, ni - 1);
  return FibrousPreorder::from_rule(rm.magma, Carrier::numbered(nx),
                                    [&](std::size_t, std::size_t, std::size_t) -> std::optional<std::size_t> {
                                      if (!coin(rng)) return std::nullopt;
                                      return idx(rng);
                                    });
}

/// A fibrous preorder passing C1–C3 over the given magma on nx points.
inline FibrousPreorder random_valid_fp_on(const RankedMagma& rm, std::size_t nx, std::mt19937_64& rng) {
  std::bernoulli_distribution nested(0.5);
  for (;;) {
    const auto nbhd = nested(rng) ? nested_random_nbhds(rm, nx, rng) : chained_preorder_nbhds(rm, nx, rng);
    if (auto fp = with_random_partial(rm.magma, Carrier::numbered(nx), nbhd, rng)) return *fp;
  }
}

// ------------------------------------------------------------------ modules

inline ftk::FiniteMonoid klein_monoid() {
  std::vector<std::size_t> add(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) add[a * 4 + b] = a ^ b;
  return ftk::FiniteMonoid(Carrier({"00", "01", "10", "11"}), 0, std::move(add));
}

inline oracle::RawMonoid raw(const ftk::FiniteMonoid& m) {
  oracle::RawMonoid r{static_cast<int>(m.size()), static_cast<int>(m.zero()), {}};
  for (std::size_t v : m.table()) r.add.push_back(static_cast<int>(v));
  return r;
}

inline oracle::RawModule raw(const ftk::ModuleData& md) {
  oracle::RawModule r{raw(md.monoid), static_cast<int>(md.magma.size()), {}, {}, md.s.bits()};
  for (std::size_t i = 0; i < md.magma.size(); ++i)
    for (std::size_t j = 0; j < md.magma.size(); ++j) r.op.push_back(static_cast<int>(md.magma.op(i, j)));
  for (std::size_t n = 0; n < md.magma.size(); ++n) {
    r.xi.emplace_back();
    for (std::size_t x = 0; x < md.monoid.size(); ++x) r.xi.back().push_back(static_cast<int>(md.act(n, x)));
  }
  return r;
}

/// Every module over capped_nat_mult(2) with ξ(1,·) = id, ξ(2,·) an
/// idempotent additive map, and S ∋ 0.
inline std::vector<ftk::ModuleData> module_family(const ftk::FiniteMonoid& m) {
  std::vector<ftk::ModuleData> out;
  const std::size_t nb = m.size();
  for (const auto& e : oracle::idempotent_endomorphisms(raw(m))) {
    std::vector<std::size_t> xi(2 * nb);
    for (std::size_t x = 0; x < nb; ++x) {
      xi[x] = x;
      xi[nb + x] = static_cast<std::size_t>(e[x]);
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nb); ++bits) {
      const Subset s = Subset::from_bits(bits);
      if (!s.contains(m.zero())) continue;
      out.push_back({m, ftk::capped_nat_mult(2), xi, s, std::nullopt});
    }
  }
  return out;
}

/// The fixed corpus shared by the topology and conversion properties.
inline std::vector<FibrousPreorder> valid_fp_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FibrousPreorder> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_valid_fp(rng));
  return out;
}

}  // namespace support
