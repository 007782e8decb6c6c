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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftk/algebra.hpp"
#include "ftk/error.hpp"
#include "ftk/fibrous_preorder.hpp"
#include "ftk/finite_topology.hpp"
#include "ftk/magma.hpp"
#include "ftk/representations.hpp"
#include "ftk/subset.hpp"

namespace ftk {

// ------------------------------------------------------------ S_n families

/// A monoid with subsets S_n ⊆ B and maps α_n : S_n → I, one per magma
/// element. alpha[n][a] is α_n(a) for a ∈ S_n.
struct SnFamily {
  FiniteMonoid monoid;
  UnitaryMagma magma;
  std::vector<Subset> s;
  std::vector<std::vector<std::optional<std::size_t>>> alpha;
};

/// (i) 0 ∈ S_n; (ii) a, a' ∈ S_n and a' ∈ S_{α_n(a)} ⇒ a + a' ∈ S_n;
/// (iii) S_{n·m} ⊆ S_n ∩ S_m.
inline Report check_sn_family(const SnFamily& sf) {
  const std::size_t ni = sf.magma.size(), nb = sf.monoid.size();
  const Carrier& B = sf.monoid.elements();
  if (sf.s.size() != ni || sf.alpha.size() != ni)
    throw Error(ErrorCode::TableShape, "need S_n and alpha_n for every magma element");
  for (std::size_t n = 0; n < ni; ++n) {
    if (!B.contains(sf.s[n])) throw Error(ErrorCode::SchemaError, "S_n leaves the monoid");
    if (sf.alpha[n].size() != nb) throw Error(ErrorCode::TableShape, "alpha_n must be indexed by monoid elements");
    sf.s[n].for_each([&](std::size_t a) {
      if (!sf.alpha[n][a] || *sf.alpha[n][a] >= ni)
        throw Error(ErrorCode::SchemaError, "alpha_n must map S_n into the magma",
                    {{"n", sf.magma.label(n)}, {"a", B.label(a)}});
    });
  }
  Report r;
  for (std::size_t n = 0; n < ni; ++n)
    if (!sf.s[n].contains(sf.monoid.zero())) r.add("i", {{"n", sf.magma.label(n)}});
  for (std::size_t n = 0; n < ni; ++n)
    sf.s[n].for_each([&](std::size_t a) {
      const Subset next = sf.s[n] & sf.s[*sf.alpha[n][a]];
      next.for_each([&](std::size_t a2) {
        if (!sf.s[n].contains(sf.monoid.plus(a, a2)))
          r.add("ii", {{"n", sf.magma.label(n)}, {"a", B.label(a)}, {"a'", B.label(a2)}});
      });
    });
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t m = 0; m < ni; ++m)
      if (!sf.s[sf.magma.op(n, m)].subset_of(sf.s[n] & sf.s[m]))
        r.add("iii", {{"n", sf.magma.label(n)}, {"m", sf.magma.label(m)}});
  return r;
}

/// x ≤^n y iff x + a = y for some a ∈ S_n (the first such a is used);
/// ∂^n(x,y) = α_n(a)·n. N(n,x) is the coset x + S_n.
inline FibrousPreorder fp_from_sn_family(const SnFamily& sf) {
  const Report r = check_sn_family(sf);
  if (!r.passed()) {
    Witness w = r.violations.front().witness;
    w.insert(w.begin(), {"condition", r.violations.front().condition});
    throw Error(ErrorCode::FamilyConditionFailed,
                "family condition (" + r.violations.front().condition + ") fails", w);
  }
  const FiniteMonoid& M = sf.monoid;
  return FibrousPreorder::from_rule(
      sf.magma, M.elements(), [&](std::size_t n, std::size_t x, std::size_t y) -> std::optional<std::size_t> {
        std::optional<std::size_t> d;
        sf.s[n].for_each([&](std::size_t a) {
          if (!d && M.plus(x, a) == y) d = sf.magma.op(*sf.alpha[n][a], n);
        });
        return d;
      });
}

// ----------------------------------------------------------------- modules

/// A monoid with an action ξ : I×B → B and a distinguished S ⊆ B.
struct ModuleData {
  FiniteMonoid monoid;
  UnitaryMagma magma;
  std::vector<std::size_t> xi;  // xi[n*|B| + x]
  Subset s;
  /// α : S → I, indexed by monoid element. Optional; searched when absent.
  std::optional<std::vector<std::optional<std::size_t>>> alpha;

  std::size_t act(std::size_t n, std::size_t x) const { return xi[n * monoid.size() + x]; }

  /// S_n = ξ(n, S)
  Subset scaled(std::size_t n) const {
    Subset out;
    s.for_each([&](std::size_t a) { out = out.with(act(n, a)); });
    return out;
  }
};

namespace detail {

inline void require_module_shape(const ModuleData& md) {
  const std::size_t ni = md.magma.size(), nb = md.monoid.size();
  if (md.xi.size() != ni * nb) throw Error(ErrorCode::TableShape, "xi must be total on I×B");
  for (std::size_t v : md.xi)
    if (v >= nb) throw Error(ErrorCode::NotClosed, "xi takes a value outside B");
  if (!md.monoid.elements().contains(md.s)) throw Error(ErrorCode::SchemaError, "S leaves the monoid");
  if (md.alpha) {
    if (md.alpha->size() != nb) throw Error(ErrorCode::TableShape, "alpha must be indexed by monoid elements");
    md.s.for_each([&](std::size_t a) {
      if (!(*md.alpha)[a] || *(*md.alpha)[a] >= ni)
        throw Error(ErrorCode::SchemaError, "alpha must map S into the magma",
                    {{"a", md.monoid.label(a)}});
    });
  }
}

}  // namespace detail

/// ξ(1,x) = x, ξ(n,0) = 0, ξ(n,x+y) = ξ(n,x) + ξ(n,y),
/// ξ(n·m,x) = ξ(n,ξ(m,x)) = ξ(m,ξ(n,x)).
inline Report validate_action(const ModuleData& md) {
  detail::require_module_shape(md);
  const auto& I = md.magma;
  const auto& M = md.monoid;
  const std::size_t ni = I.size(), nb = M.size();
  Report r;
  for (std::size_t x = 0; x < nb; ++x)
    if (md.act(I.unit(), x) != x) r.add("unit", {{"x", M.label(x)}});
  for (std::size_t n = 0; n < ni; ++n)
    if (md.act(n, M.zero()) != M.zero()) r.add("zero", {{"n", I.label(n)}});
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t x = 0; x < nb; ++x)
      for (std::size_t y = 0; y < nb; ++y)
        if (md.act(n, M.plus(x, y)) != M.plus(md.act(n, x), md.act(n, y)))
          r.add("additive", {{"n", I.label(n)}, {"x", M.label(x)}, {"y", M.label(y)}});
  for (std::size_t n = 0; n < ni; ++n)
    for (std::size_t m = 0; m < ni; ++m)
      for (std::size_t x = 0; x < nb; ++x) {
        const std::size_t lhs = md.act(I.op(n, m), x);
        if (lhs != md.act(n, md.act(m, x)))
          r.add("compatible", {{"n", I.label(n)}, {"m", I.label(m)}, {"x", M.label(x)}});
        else if (lhs != md.act(m, md.act(n, x)))
          r.add("commuting", {{"n", I.label(n)}, {"m", I.label(m)}, {"x", M.label(x)}});
      }
  return r;
}

enum class ModuleKind { A, B, C };

struct ModuleConditionReport {
  Report report;
  /// α actually used for kind (a): the supplied one, or the first n with
  /// a + S_n ⊆ S for each a ∈ S when none was supplied.
  std::optional<std::vector<std::optional<std::size_t>>> alpha;

  bool passed() const { return report.passed(); }
};

namespace detail {

/// First n with a + S_n ⊆ target.
inline std::optional<std::size_t> first_shrinking_index(const ModuleData& md, std::size_t a, Subset target) {
  for (std::size_t n = 0; n < md.magma.size(); ++n)
    if (md.monoid.translate(a, md.scaled(n)).subset_of(target)) return n;
  return std::nullopt;
}

}  // namespace detail

/// Checks one of the three equivalent conditions on (S, α) or (S, γ). Kind C
/// needs the topology τ the conditions refer to; γ is searched, not supplied.
inline ModuleConditionReport check_module_condition(const ModuleData& md, ModuleKind kind,
                                                    const FiniteTopology* topology = nullptr) {
  detail::require_module_shape(md);
  const auto& I = md.magma;
  const auto& M = md.monoid;
  const Carrier& B = M.elements();
  ModuleConditionReport out;
  Report& r = out.report;
  if (kind == ModuleKind::C && topology == nullptr)
    throw Error(ErrorCode::MissingTopology, "condition (c) refers to a topology");
  const std::string tag = kind == ModuleKind::A ? "(a)" : kind == ModuleKind::B ? "(b)" : "(c)";

  if (!md.s.contains(M.zero())) r.add(tag + "(i)", {{"zero", M.label(M.zero())}});

  switch (kind) {
    case ModuleKind::A: {
      if (md.alpha) {
        out.alpha = md.alpha;
        md.s.for_each([&](std::size_t a) {
          const std::size_t n = *(*md.alpha)[a];
          md.s.for_each([&](std::size_t a2) {
            if (!md.s.contains(M.plus(a, md.act(n, a2))))
              r.add("(a)(ii)", {{"a", B.label(a)}, {"a'", B.label(a2)}, {"alpha", I.label(n)}});
          });
        });
      } else {
        std::vector<std::optional<std::size_t>> alpha(M.size());
        md.s.for_each([&](std::size_t a) {
          alpha[a] = detail::first_shrinking_index(md, a, md.s);
          if (!alpha[a]) r.add("(a)(ii)", {{"a", B.label(a)}});
        });
        if (r.passed()) out.alpha = std::move(alpha);
      }
      break;
    }
    case ModuleKind::B:
      md.s.for_each([&](std::size_t y) {
        if (!detail::first_shrinking_index(md, y, md.s)) r.add("(b)(ii)", {{"y", B.label(y)}});
      });
      break;
    case ModuleKind::C: {
      if (!(topology->carrier() == B)) throw Error(ErrorCode::SchemaError, "topology lives on another carrier");
      if (!topology->contains(md.s)) r.add("(c)(S)", {{"S", B.render(md.s)}});
      for (std::size_t x = 0; x < M.size(); ++x)
        for (std::size_t n = 0; n < I.size(); ++n) {
          const Subset coset = M.translate(x, md.scaled(n));
          if (!topology->contains(coset))
            r.add("(c)(ii)", {{"x", B.label(x)}, {"n", I.label(n)}, {"coset", B.render(coset)}});
        }
      for (Subset u : topology->opens())
        u.for_each([&](std::size_t x) {
          if (!detail::first_shrinking_index(md, x, u))
            r.add("(c)(iii)", {{"U", B.render(u)}, {"x", B.label(x)}});
        });
      break;
    }
  }
  return out;
}

/// Cosets x + S_n for every (n, x).
inline std::vector<Subset> module_cosets(const ModuleData& md) {
  std::vector<Subset> out;
  for (std::size_t n = 0; n < md.magma.size(); ++n) {
    const Subset sn = md.scaled(n);
    for (std::size_t x = 0; x < md.monoid.size(); ++x) out.push_back(md.monoid.translate(x, sn));
  }
  return out;
}

/// {O : ∀x∈O ∃n x + S_n ⊆ O} by a full subset scan. No conditions are
/// assumed, so the result need not be a topology.
inline FiniteTopology module_rule_family(const ModuleData& md) {
  detail::require_module_shape(md);
  const auto cosets = module_cosets(md);
  const std::size_t nb = md.monoid.size(), ni = md.magma.size();
  return neighbourhood_rule_scan(md.monoid.elements(), [&](std::size_t x) {
    std::vector<Subset> at;
    for (std::size_t n = 0; n < ni; ++n) at.push_back(cosets[n * nb + x]);
    return at;
  });
}

/// The topology determined by S. Requires condition (b) (equivalently (a)).
/// Throws InvalidTopology when the determined family is not closed under
/// intersection, which can happen when ξ(n, S) ⊄ S.
inline FiniteTopology module_topology(const ModuleData& md) {
  const ModuleConditionReport b = check_module_condition(md, ModuleKind::B);
  if (!b.passed())
    throw Error(ErrorCode::ConditionFailed, "condition " + b.report.violations.front().condition + " fails",
                b.report.violations.front().witness);
  FiniteTopology t = union_closure(md.monoid.elements(), module_cosets(md));
  if (md.monoid.size() <= exhaustive_bound() && !(module_rule_family(md) == t))
    throw Error(ErrorCode::Internal, "coset closure disagrees with the subset scan");
  const Report v = validate_topology(t);
  if (!v.passed())
    throw Error(ErrorCode::InvalidTopology,
                "the family determined by S is not closed under " + v.violations.front().condition,
                v.violations.front().witness);
  return t;
}

/// The fibrous preorder x ≤^n y iff y = x + ξ(n,a) for some a ∈ S (first a
/// used), ∂^n(x,y) = α(a)·n.
inline FibrousPreorder module_fibrous_preorder(const ModuleData& md,
                                               const std::vector<std::optional<std::size_t>>& alpha) {
  const auto& M = md.monoid;
  return FibrousPreorder::from_rule(
      md.magma, M.elements(), [&](std::size_t n, std::size_t x, std::size_t y) -> std::optional<std::size_t> {
        std::optional<std::size_t> d;
        md.s.for_each([&](std::size_t a) {
          if (!d && M.plus(x, md.act(n, a)) == y) d = md.magma.op(*alpha[a], n);
        });
        return d;
      });
}

struct MoreoverReport {
  /// ξ(n,a) ∈ S for all n, a ∈ S.
  bool closure = false;
  Witness closure_witness;
  /// The coset fibrous preorder passes C1–C3 and η(n,x) = x + S_n satisfies
  /// (e)(i)–(iii) for the determined family.
  bool cartesian = false;
  Report cartesian_failures;

  bool agree() const { return closure == cartesian; }
};

/// Evaluates both sides of the closure ⇔ cartesian equivalence on one
/// instance. Requires condition (a).
inline MoreoverReport check_moreover_clause(const ModuleData& md) {
  const ModuleConditionReport a = check_module_condition(md, ModuleKind::A);
  if (!a.passed())
    throw Error(ErrorCode::ConditionFailed, "condition " + a.report.violations.front().condition + " fails",
                a.report.violations.front().witness);
  const auto& I = md.magma;
  const auto& M = md.monoid;
  MoreoverReport out;
  out.closure = true;
  for (std::size_t n = 0; n < I.size() && out.closure; ++n)
    md.s.for_each([&](std::size_t s) {
      if (out.closure && !md.s.contains(md.act(n, s))) {
        out.closure = false;
        out.closure_witness = {{"n", I.label(n)}, {"a", M.label(s)}, {"image", M.label(md.act(n, s))}};
      }
    });

  const FibrousPreorder fp = module_fibrous_preorder(md, *a.alpha);
  Report failures = to_report(fp, check_axioms(fp));

  const FiniteTopology tau = module_rule_family(md);
  const std::size_t nb = M.size();
  EtaGammaRep eg{I, M.elements(), tau, module_cosets(md),
                 std::vector<std::optional<std::size_t>>(tau.size() * nb)};
  const auto& opens = tau.opens();
  for (std::size_t u = 0; u < opens.size(); ++u)
    opens[u].for_each([&](std::size_t x) { eg.gamma[u * nb + x] = detail::first_shrinking_index(md, x, opens[u]); });
  failures.append(validate_rep(eg));

  out.cartesian = failures.passed();
  out.cartesian_failures = std::move(failures);
  return out;
}

/// γ(η(n,x),y) = γ(η(1,x),y)·n for every n, x and y ∈ η(n,x).
inline Report check_beta_decomposition(const EtaGammaRep& eg) {
  require_valid(eg);
  const auto& I = eg.magma;
  const Carrier& X = eg.carrier;
  const std::size_t one = I.unit();
  Report r;
  for (std::size_t n = 0; n < I.size(); ++n)
    for (std::size_t x = 0; x < X.size(); ++x) {
      const Subset enx = eg.eta_at(n, x);
      const Subset e1x = eg.eta_at(one, x);
      enx.for_each([&](std::size_t y) {
        const Witness w{{"n", I.label(n)}, {"x", X.label(x)}, {"y", X.label(y)}};
        if (!e1x.contains(y)) {
          r.add("beta-domain", w);
          return;
        }
        const std::size_t lhs = *eg.gamma_at(enx, y);
        const std::size_t rhs = I.op(*eg.gamma_at(e1x, y), n);
        if (lhs != rhs) {
          Witness full = w;
          full.emplace_back("lhs", I.label(lhs));
          full.emplace_back("rhs", I.label(rhs));
          r.add("beta", full);
        }
      });
    }
  return r;
}

}  // namespace ftk
