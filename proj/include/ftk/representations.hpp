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

// Equivalent presentations of an I-cartesian space and the conversions
// fibrous preorder -> neighbourhood map -> ternary relation -> (eta, gamma)
// -> fibrous preorder. Every existential witness is resolved to the first
// magma element in declared order, so conversions are deterministic. The
// cycle preserves the induced topology, not the witness maps themselves.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftk/error.hpp"
#include "ftk/fibrous_preorder.hpp"
#include "ftk/finite_topology.hpp"
#include "ftk/magma.hpp"
#include "ftk/subset.hpp"

namespace ftk {

/// N : I×X → P(X), stored row-major as sets[n*|X| + x].
struct NeighborhoodMap {
  UnitaryMagma magma;
  Carrier carrier;
  std::vector<Subset> sets;

  Subset at(std::size_t n, std::size_t x) const { return sets[n * carrier.size() + x]; }
};

/// R ⊆ I×X×X with p : R → I. rel[n*|X| + x] is {y : (n,x,y) ∈ R};
/// p[(n*|X| + x)*|X| + y] is meaningful only on R.
struct TernaryRep {
  UnitaryMagma magma;
  Carrier carrier;
  std::vector<Subset> rel;
  std::vector<std::size_t> p;

  Subset at(std::size_t n, std::size_t x) const { return rel[n * carrier.size() + x]; }
  std::size_t witness(std::size_t n, std::size_t x, std::size_t y) const {
    return p[(n * carrier.size() + x) * carrier.size() + y];
  }
};

/// η : I×X → τ and γ on {(U,x) : x ∈ U ∈ τ}. gamma[u*|X| + x] is γ(U,x) for
/// the u-th open of the stored topology in canonical order.
struct EtaGammaRep {
  UnitaryMagma magma;
  Carrier carrier;
  FiniteTopology topology;
  std::vector<Subset> eta;
  std::vector<std::optional<std::size_t>> gamma;

  Subset eta_at(std::size_t n, std::size_t x) const { return eta[n * carrier.size() + x]; }

  std::optional<std::size_t> gamma_at(Subset u, std::size_t x) const {
    const std::size_t pos = topology.position(u);
    if (pos == FiniteTopology::npos || !u.contains(x)) return std::nullopt;
    return gamma[pos * carrier.size() + x];
  }
};

/// Which reading of (c)(ii) to check. The default asks for N(k,y) ⊆ N(n,x)
/// at each y ∈ N(n,x); the alternative reads the witness at x.
enum class NeighbourhoodWitness { AtY, AtX };

namespace detail {

inline void require_shape(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::SchemaError, what);
}

inline Witness nx_witness(const UnitaryMagma& m, const Carrier& c, std::size_t n, std::size_t x) {
  return {{"n", m.label(n)}, {"x", c.label(x)}};
}

}  // namespace detail

inline Report validate_rep(const NeighborhoodMap& nm,
                           NeighbourhoodWitness form = NeighbourhoodWitness::AtY) {
  const std::size_t ni = nm.magma.size(), nx = nm.carrier.size();
  detail::require_shape(nm.sets.size() == ni * nx, "neighbourhood map must be total on I×X");
  for (Subset s : nm.sets) detail::require_shape(nm.carrier.contains(s), "neighbourhood leaves the carrier");
  Report r;
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nx; ++x)
      if (!nm.at(n, x).contains(x)) r.add("(c)(i)", detail::nx_witness(nm.magma, nm.carrier, n, x));
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nx; ++x) {
      const Subset nnx = nm.at(n, x);
      nnx.for_each([&](std::size_t y) {
        const std::size_t at = form == NeighbourhoodWitness::AtY ? y : x;
        for (std::size_t k = 0; k < ni; ++k)
          if (nm.at(k, at).subset_of(nnx)) return;
        r.add("(c)(ii)", {{"n", nm.magma.label(n)}, {"x", nm.carrier.label(x)},
                          {"y", nm.carrier.label(y)}});
      });
    }
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t m = 0; m < ni; ++m)
      for (std::size_t x = 0; x < nx; ++x)
        if (!nm.at(nm.magma.op(n, m), x).subset_of(nm.at(n, x) & nm.at(m, x)))
          r.add("(c)(iii)", {{"n", nm.magma.label(n)}, {"m", nm.magma.label(m)},
                             {"x", nm.carrier.label(x)}});
  return r;
}

inline Report validate_rep(const TernaryRep& tr) {
  const std::size_t ni = tr.magma.size(), nx = tr.carrier.size();
  detail::require_shape(tr.rel.size() == ni * nx, "relation must be indexed by I×X");
  detail::require_shape(tr.p.size() == ni * nx * nx, "witness map must be indexed by I×X×X");
  for (Subset s : tr.rel) detail::require_shape(tr.carrier.contains(s), "relation leaves the carrier");
  Report r;
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nx; ++x)
      if (!tr.at(n, x).contains(x)) r.add("(d)(i)", detail::nx_witness(tr.magma, tr.carrier, n, x));
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nx; ++x) {
      const Subset row = tr.at(n, x);
      row.for_each([&](std::size_t y) {
        const std::size_t k = tr.witness(n, x, y);
        if (k >= ni) {
          r.add("(d)(p)", {{"n", tr.magma.label(n)}, {"x", tr.carrier.label(x)},
                           {"y", tr.carrier.label(y)}});
          return;
        }
        (tr.at(k, y) - row).for_each([&](std::size_t z) {
          r.add("(d)(ii)", {{"n", tr.magma.label(n)}, {"x", tr.carrier.label(x)},
                            {"y", tr.carrier.label(y)}, {"z", tr.carrier.label(z)}});
        });
      });
    }
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t m = 0; m < ni; ++m)
      for (std::size_t x = 0; x < nx; ++x)
        (tr.at(tr.magma.op(n, m), x) - (tr.at(n, x) & tr.at(m, x))).for_each([&](std::size_t y) {
          r.add("(d)(iii)", {{"n", tr.magma.label(n)}, {"m", tr.magma.label(m)},
                             {"x", tr.carrier.label(x)}, {"y", tr.carrier.label(y)}});
        });
  return r;
}

inline Report validate_rep(const EtaGammaRep& eg) {
  const std::size_t ni = eg.magma.size(), nx = eg.carrier.size();
  detail::require_shape(eg.eta.size() == ni * nx, "eta must be total on I×X");
  detail::require_shape(eg.gamma.size() == eg.topology.size() * nx,
                        "gamma must be indexed by opens × carrier");
  detail::require_shape(eg.topology.carrier() == eg.carrier, "topology lives on another carrier");
  Report r = validate_topology(eg.topology);
  const Carrier& c = eg.carrier;
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nx; ++x)
      if (!eg.topology.contains(eg.eta_at(n, x)))
        r.add("(e)(open)", {{"n", eg.magma.label(n)}, {"x", c.label(x)},
                            {"eta", c.render(eg.eta_at(n, x))}});
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nx; ++x)
      if (!eg.eta_at(n, x).contains(x)) r.add("(e)(i)", detail::nx_witness(eg.magma, c, n, x));
  const auto& opens = eg.topology.opens();
  for (std::size_t u = 0; u < opens.size(); ++u)
    opens[u].for_each([&](std::size_t x) {
      const auto g = eg.gamma[u * nx + x];
      if (!g || *g >= ni) {
        r.add("(e)(gamma)", {{"U", c.render(opens[u])}, {"x", c.label(x)}});
      } else if (!eg.eta_at(*g, x).subset_of(opens[u])) {
        r.add("(e)(ii)", {{"U", c.render(opens[u])}, {"x", c.label(x)}, {"gamma", eg.magma.label(*g)}});
      }
    });
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t m = 0; m < ni; ++m)
      for (std::size_t x = 0; x < nx; ++x)
        if (!eg.eta_at(eg.magma.op(n, m), x).subset_of(eg.eta_at(n, x) & eg.eta_at(m, x)))
          r.add("(e)(iii)", {{"n", eg.magma.label(n)}, {"m", eg.magma.label(m)}, {"x", c.label(x)}});
  return r;
}

template <class Rep>
void require_valid(const Rep& rep) {
  const Report r = validate_rep(rep);
  if (!r.passed())
    throw Error(ErrorCode::ValidationFailed,
                "representation fails " + r.violations.front().condition,
                r.violations.front().witness);
}

inline NeighborhoodMap fp_to_nmap(const FibrousPreorder& fp) {
  require_axioms(fp);
  NeighborhoodMap nm{fp.magma(), fp.carrier(), {}};
  for (std::size_t n = 0; n < fp.magma().size(); ++n)
    for (std::size_t x = 0; x < fp.carrier().size(); ++x) nm.sets.push_back(fp.up(n, x));
  return nm;
}

/// R = {(n,x,y) : y ∈ N(n,x)}; p(n,x,y) = first k with N(k,y) ⊆ N(n,x).
inline TernaryRep nmap_to_ternary(const NeighborhoodMap& nm) {
  require_valid(nm);
  const std::size_t ni = nm.magma.size(), nx = nm.carrier.size();
  TernaryRep tr{nm.magma, nm.carrier, nm.sets, std::vector<std::size_t>(ni * nx * nx, 0)};
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nx; ++x)
      nm.at(n, x).for_each([&](std::size_t y) {
        for (std::size_t k = 0; k < ni; ++k)
          if (nm.at(k, y).subset_of(nm.at(n, x))) {
            tr.p[(n * nx + x) * nx + y] = k;
            return;
          }
        throw Error(ErrorCode::NoWitnessK, "no k with N(k,y) inside N(n,x)",
                    {{"n", nm.magma.label(n)}, {"x", nm.carrier.label(x)},
                     {"y", nm.carrier.label(y)}});
      });
  return tr;
}

/// η = N_R; τ = unions of the N_R sets; γ(U,x) = first k with N_R(k,x) ⊆ U.
inline EtaGammaRep ternary_to_etagamma(const TernaryRep& tr) {
  require_valid(tr);
  const std::size_t ni = tr.magma.size(), nx = tr.carrier.size();
  FiniteTopology topology = union_closure(tr.carrier, tr.rel);
  std::vector<std::optional<std::size_t>> gamma(topology.size() * nx);
  const auto& opens = topology.opens();
  for (std::size_t u = 0; u < opens.size(); ++u)
    opens[u].for_each([&](std::size_t x) {
      for (std::size_t k = 0; k < ni; ++k)
        if (tr.at(k, x).subset_of(opens[u])) {
          gamma[u * nx + x] = k;
          return;
        }
      throw Error(ErrorCode::NoWitnessK, "no k with N_R(k,x) inside U",
                  {{"U", tr.carrier.render(opens[u])}, {"x", tr.carrier.label(x)}});
    });
  return EtaGammaRep{tr.magma, tr.carrier, std::move(topology), tr.rel, std::move(gamma)};
}

/// x ≤^i y ⇔ y ∈ η(i,x); ∂^i(x,y) = γ(η(i,x), y).
inline FibrousPreorder etagamma_to_fp(const EtaGammaRep& eg) {
  require_valid(eg);
  return FibrousPreorder::from_rule(eg.magma, eg.carrier,
                                    [&](std::size_t i, std::size_t x, std::size_t y)
                                        -> std::optional<std::size_t> {
                                      const Subset e = eg.eta_at(i, x);
                                      if (!e.contains(y)) return std::nullopt;
                                      return eg.gamma_at(e, y);
                                    });
}

inline FiniteTopology induced_topology_of(const FibrousPreorder& fp) { return induced_topology(fp); }

inline FiniteTopology induced_topology_of(const NeighborhoodMap& nm) {
  require_valid(nm);
  return union_closure(nm.carrier, nm.sets);
}

inline FiniteTopology induced_topology_of(const TernaryRep& tr) {
  require_valid(tr);
  return union_closure(tr.carrier, tr.rel);
}

/// Returns the stored topology after checking it is the one generated by η.
inline FiniteTopology induced_topology_of(const EtaGammaRep& eg) {
  require_valid(eg);
  if (!(union_closure(eg.carrier, eg.eta) == eg.topology))
    throw Error(ErrorCode::InconsistentTopology,
                "stored topology differs from the one generated by eta");
  return eg.topology;
}

}  // namespace ftk
