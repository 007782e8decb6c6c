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

#include <random>

#include <gtest/gtest.h>

#include "ftk/ftk.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace {

using namespace ftk;
using support::labels;
using support::set_of;

const Carrier kAB = labels({"a", "b"});

FibrousPreorder chain_fp() { return from_preorder(support::chain_ab()); }
FibrousPreorder metric_fp() { return from_pseudometric(support::pseudometric3(), 2); }

NeighborhoodMap constant_nmap(const UnitaryMagma& m, const Carrier& c, bool discrete) {
  NeighborhoodMap nm{m, c, {}};
  for (std::size_t n = 0; n < m.size(); ++n)
    for (std::size_t x = 0; x < c.size(); ++x) nm.sets.push_back(discrete ? Subset::singleton(x) : c.full());
  return nm;
}

TEST(ValidateRep, DiscreteAndIndiscreteNmaps) {
  const UnitaryMagma m = capped_nat_mult(3);
  EXPECT_TRUE(validate_rep(constant_nmap(m, kAB, true)).passed());
  EXPECT_TRUE(validate_rep(constant_nmap(m, kAB, false)).passed());
}

TEST(ValidateRep, TernaryMissingReflexiveTriple) {
  TernaryRep tr = nmap_to_ternary(fp_to_nmap(chain_fp()));
  tr.rel[1] = Subset{};
  const Report r = validate_rep(tr);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations[0].condition, "(d)(i)");
  EXPECT_EQ(format_witness(r.violations[0].witness), "n=1, x=b");
}

TEST(ValidateRep, TernaryWitnessOutOfRangeAndEscape) {
  TernaryRep tr = nmap_to_ternary(fp_to_nmap(metric_fp()));
  tr.p[(1 * 3 + 0) * 3 + 1] = 7;
  EXPECT_TRUE(validate_rep(tr).has("(d)(p)"));
  // p(2,x,y) = 1 points at N(1,y) = X, which escapes N(2,x) = {x,y}.
  tr.p[(1 * 3 + 0) * 3 + 1] = 0;
  const Report r = validate_rep(tr);
  ASSERT_TRUE(r.has("(d)(ii)"));
  EXPECT_EQ(format_witness(r.violations[0].witness), "n=2, x=x, y=y, z=z");
}

TEST(ValidateRep, NmapFailures) {
  NeighborhoodMap nm = fp_to_nmap(chain_fp());
  nm.sets[0] = set_of({1});
  EXPECT_TRUE(validate_rep(nm).has("(c)(i)"));

  // N(1,a) = {a,b}, N(1,b) = {a,b}, N(2,·) discrete on capped_nat_mult(2): C3-type failure.
  NeighborhoodMap nm2{capped_nat_mult(2), kAB, {kAB.full(), kAB.full(), set_of({0}), set_of({1})}};
  EXPECT_TRUE(validate_rep(nm2).passed());
  std::swap(nm2.sets[0], nm2.sets[2]);
  std::swap(nm2.sets[1], nm2.sets[3]);
  const Report r = validate_rep(nm2);
  EXPECT_TRUE(r.has("(c)(iii)"));
  EXPECT_FALSE(r.has("(c)(ii)"));

  // A single index with N(a) = {a,b} and N(b) = {b,c}: nothing fits inside N(a) at b.
  NeighborhoodMap nm3{trivial_magma(), labels({"a", "b", "c"}), {set_of({0, 1}), set_of({1, 2}), set_of({2})}};
  const Report r3 = validate_rep(nm3);
  ASSERT_TRUE(r3.has("(c)(ii)"));
  EXPECT_EQ(format_witness(r3.violations[0].witness), "n=1, x=a, y=b");
  EXPECT_TRUE(validate_rep(nm3, NeighbourhoodWitness::AtX).passed());
}

TEST(ValidateRep, ShapeErrors) {
  NeighborhoodMap nm = fp_to_nmap(chain_fp());
  nm.sets.pop_back();
  EXPECT_THROW(validate_rep(nm), Error);
  EtaGammaRep eg = ternary_to_etagamma(nmap_to_ternary(fp_to_nmap(chain_fp())));
  eg.gamma.pop_back();
  EXPECT_THROW(validate_rep(eg), Error);
}

TEST(FpToNmap, Examples) {
  const NeighborhoodMap chain = fp_to_nmap(chain_fp());
  EXPECT_EQ(chain.at(0, 0), set_of({0, 1}));
  EXPECT_EQ(chain.at(0, 1), set_of({1}));
  const NeighborhoodMap discrete = fp_to_nmap(from_preorder(Preorder::discrete(labels({"a", "b", "c"}))));
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(discrete.at(0, x), Subset::singleton(x));
  EXPECT_EQ(fp_to_nmap(metric_fp()).at(1, 2), set_of({2}));
}

TEST(NmapToTernary, Examples) {
  const TernaryRep discrete = nmap_to_ternary(constant_nmap(capped_nat_mult(3), kAB, true));
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ(discrete.witness(n, x, x), 0U);
  EXPECT_EQ(nmap_to_ternary(fp_to_nmap(chain_fp())).witness(0, 0, 1), 0U);
  const TernaryRep total = nmap_to_ternary(constant_nmap(capped_nat_mult(2), kAB, false));
  for (Subset s : total.rel) EXPECT_EQ(s, kAB.full());
}

TEST(TernaryToEtagamma, Examples) {
  const EtaGammaRep discrete = ternary_to_etagamma(nmap_to_ternary(constant_nmap(capped_nat_mult(2), kAB, true)));
  EXPECT_EQ(discrete.topology.size(), 4U);
  for (Subset u : discrete.topology.opens())
    u.for_each([&](std::size_t x) { EXPECT_EQ(discrete.gamma_at(u, x), 0U); });

  const EtaGammaRep chain = ternary_to_etagamma(nmap_to_ternary(fp_to_nmap(chain_fp())));
  EXPECT_EQ(chain.eta_at(0, 0), set_of({0, 1}));
  EXPECT_EQ(chain.gamma_at(set_of({1}), 1), 0U);
  EXPECT_FALSE(chain.gamma_at(set_of({0}), 0));

  const EtaGammaRep metric = ternary_to_etagamma(nmap_to_ternary(fp_to_nmap(metric_fp())));
  EXPECT_EQ(metric.gamma_at(set_of({0, 1}), 0), 1U);
}

TEST(EtagammaToFp, Examples) {
  const UnitaryMagma m = capped_nat_mult(2);
  const FibrousPreorder discrete =
      etagamma_to_fp(ternary_to_etagamma(nmap_to_ternary(constant_nmap(m, kAB, true))));
  EXPECT_EQ(discrete.triples().size(), 4U);
  for (const RelTriple& t : discrete.triples()) EXPECT_EQ(t.x, t.y);

  const FibrousPreorder chain = etagamma_to_fp(ternary_to_etagamma(nmap_to_ternary(fp_to_nmap(chain_fp()))));
  EXPECT_EQ(chain.triples(), chain_fp().triples());
  EXPECT_EQ(chain.partial_entries(), chain_fp().partial_entries());

  const FibrousPreorder total = etagamma_to_fp(ternary_to_etagamma(nmap_to_ternary(constant_nmap(m, kAB, false))));
  EXPECT_EQ(total.triples().size(), 8U);
  for (const PartialEntry& e : total.partial_entries()) EXPECT_EQ(e.j, 0U);
}

TEST(EtagammaValidation, OpenAndGammaFailures) {
  EtaGammaRep eg = ternary_to_etagamma(nmap_to_ternary(fp_to_nmap(chain_fp())));
  eg.eta[1] = set_of({0});
  EXPECT_TRUE(validate_rep(eg).has("(e)(open)"));
  EtaGammaRep eg2 = ternary_to_etagamma(nmap_to_ternary(fp_to_nmap(chain_fp())));
  eg2.gamma[eg2.topology.position(set_of({1})) * 2 + 1] = std::nullopt;
  const Report r = validate_rep(eg2);
  ASSERT_TRUE(r.has("(e)(gamma)"));
  EXPECT_EQ(format_witness(r.violations[0].witness), "U={b}, x=b");
}

TEST(InducedTopologyOf, Examples) {
  EXPECT_EQ(induced_topology_of(constant_nmap(capped_nat_mult(2), kAB, true)).size(), 4U);
  EXPECT_EQ(induced_topology_of(nmap_to_ternary(fp_to_nmap(chain_fp()))),
            FiniteTopology(kAB, {{}, set_of({1}), kAB.full()}));
  const FiniteTopology t = induced_topology_of(fp_to_nmap(metric_fp()));
  EXPECT_EQ(t.opens(), (std::vector<Subset>{{}, set_of({2}), set_of({0, 1}), set_of({0, 1, 2})}));
}

TEST(Conversions, CycleValidatesAndPreservesTopologyOnRandomFps) {
  for (const FibrousPreorder& fp : support::valid_fp_corpus(400, 201)) {
    const FiniteTopology t = induced_topology(fp);
    const NeighborhoodMap nm = fp_to_nmap(fp);
    ASSERT_TRUE(validate_rep(nm).passed());
    ASSERT_EQ(induced_topology_of(nm), t);
    const TernaryRep tr = nmap_to_ternary(nm);
    ASSERT_TRUE(validate_rep(tr).passed());
    ASSERT_EQ(induced_topology_of(tr), t);
    const EtaGammaRep eg = ternary_to_etagamma(tr);
    ASSERT_TRUE(validate_rep(eg).passed());
    ASSERT_EQ(induced_topology_of(eg), t);
    const FibrousPreorder back = etagamma_to_fp(eg);
    ASSERT_TRUE(check_axioms(back).passed());
    ASSERT_EQ(induced_topology(back), t);
    ASSERT_EQ(fp_to_nmap(back).sets, nm.sets);
  }
}

TEST(ValidateRep, NmapValidityMatchesExistenceOfAValidPartialMap) {
  std::mt19937_64 rng(202);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const support::RankedMagma rm = support::random_ranked_magma(rng);
    const std::size_t nx = 1 + trial % 4;
    const Carrier c = Carrier::numbered(nx);
    std::vector<Subset> sets;
    std::bernoulli_distribution structured(0.5), reflexive(0.95);
    if (structured(rng)) {
      sets = support::nested_random_nbhds(rm, nx, rng);
    } else {
      std::uniform_int_distribution<std::uint64_t> pick(0, oracle::full(static_cast<int>(nx)));
      for (std::size_t k = 0; k < rm.magma.size() * nx; ++k) {
        Subset s = Subset::from_bits(pick(rng));
        if (reflexive(rng)) s = s.with(k % nx);
        sets.push_back(s);
      }
    }
    const NeighborhoodMap nm{rm.magma, c, sets};
    const auto fp = support::with_random_partial(rm.magma, c, sets, rng);
    const bool expect = fp && oracle::axioms(support::raw(*fp)).all();
    ASSERT_EQ(validate_rep(nm).passed(), expect);
    (expect ? valid : invalid)++;
  }
  EXPECT_GT(valid, 300);
  EXPECT_GT(invalid, 300);
}

TEST(Conversions, NonValidInputsAreRefused) {
  NeighborhoodMap nm = fp_to_nmap(chain_fp());
  nm.sets[0] = set_of({1});
  try {
    nmap_to_ternary(nm);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationFailed);
  }
}

}  // namespace
