#include <algorithm>
#include <set>
#include <vector>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace pst;
using pst::testing::of_order;
using pst::testing::share;
using pst::testing::sub;

namespace
{

Perm P(std::size_t n, std::vector<std::vector<std::uint32_t>> c) { return Perm(n, c); }

std::vector<Group> small_groups()
{
  std::vector<Group> out;
  out.push_back(families::symmetric(3));
  out.push_back(families::symmetric(4));
  out.push_back(families::alternating(4));
  out.push_back(families::dihedral(8));
  out.push_back(families::dihedral(10));
  out.push_back(families::dicyclic(2));
  out.push_back(families::dicyclic(3));
  out.push_back(families::cyclic(12));
  out.push_back(families::holomorph_cyclic(5));
  out.push_back(families::holomorph_cyclic(7));
  out.push_back(families::direct_product(families::symmetric(3), families::cyclic(3)));
  out.push_back(families::semidirect_cyclic(7, 3, 2));
  out.push_back(families::alternating(5));
  return out;
}

/// Brute-force residual: the least normal N with U/N in F, from all normals.
SubId brute_residual(Analysis &an, Formation const &F)
{
  auto const &L = an.lattice();
  SubId best = an.whole();
  for (auto n : normal_subgroups(L))
    if (quotient_in(an, an.whole(), n, F) && L.order(n) < L.order(best))
      best = n;
  return best;
}

/// Nilpotent via the quotient group: all Sylow subgroups normal.
bool nilpotent_by_sylows(Analysis &an, SubId U)
{
  for (auto p : prime_divisors(an.order(U)))
    if (sylow_subgroups(an, U, p).size() != 1)
      return false;
  return true;
}

} // namespace

TEST(StructureTest, SylowAndCores)
{
  Analysis an(share(families::symmetric(4)));
  EXPECT_EQ(8u, an.order(sylow(an, 2)));
  EXPECT_EQ(3u, sylow_subgroups(an, an.whole(), 2).size());
  EXPECT_EQ(4u, sylow_subgroups(an, an.whole(), 3).size());
  EXPECT_EQ(an.trivial(), sylow(an, 5));

  auto v4 = sub(an, {P(4, {{0, 1}, {2, 3}}), P(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(v4, o_pi(an, PrimeSet{2}));
  EXPECT_EQ(an.whole(), o_pi(an, PrimeSet::of(24)));
  EXPECT_EQ(an.trivial(), o_pi(an, PrimeSet{3}));
}

TEST(StructureTest, HallSubgroups)
{
  Analysis s3(share(families::symmetric(3)));
  auto h = hall(s3, PrimeSet{3});
  ASSERT_EQ(1u, h.subgroups.size());
  EXPECT_EQ(3u, s3.order(h.subgroups.front()));

  Analysis s4(share(families::symmetric(4)));
  auto all = hall(s4, PrimeSet{2, 3});
  ASSERT_EQ(1u, all.subgroups.size());
  EXPECT_EQ(s4.whole(), all.subgroups.front());

  Analysis hol(share(families::holomorph_cyclic(7)));
  auto h21 = hall(hol, PrimeSet{3, 7});
  EXPECT_EQ(of_order(hol.lattice(), 21), h21.subgroups);
  EXPECT_FALSE(h21.subgroups.empty());
  EXPECT_TRUE(h21.all_conjugate);

  // A5 has no Hall {2,5}-subgroup (order 20)
  Analysis a5(share(families::alternating(5)));
  EXPECT_TRUE(hall(a5, PrimeSet{2, 5}).subgroups.empty());
}

TEST(StructureTest, HallTheoremForSolubleGroups)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    if (!is_soluble(an, an.whole()))
      continue;
    for (auto const &pi : PrimeSet::of(an.group().order()).subsets()) {
      auto h = hall(an, pi);
      EXPECT_FALSE(h.subgroups.empty()) << an.group().name() << pi.to_string();
      EXPECT_TRUE(h.all_conjugate) << an.group().name() << pi.to_string();
    }
  }
}

TEST(StructureTest, ClassPredicates)
{
  Analysis s3(share(families::symmetric(3)));
  auto f = class_predicates(s3);
  EXPECT_TRUE(f.soluble);
  EXPECT_TRUE(f.supersoluble);
  EXPECT_FALSE(f.nilpotent);

  Analysis s4(share(families::symmetric(4)));
  EXPECT_TRUE(is_soluble(s4, s4.whole()));
  EXPECT_FALSE(is_supersoluble(s4, s4.whole()));
  EXPECT_TRUE(is_p_supersoluble(s4, s4.whole(), 3));
  EXPECT_FALSE(is_p_supersoluble(s4, s4.whole(), 2));

  Analysis c12(share(families::abelian({3, 4}, "C3xC4")));
  EXPECT_TRUE(is_quasinilpotent(c12, c12.whole()));
  EXPECT_TRUE(is_nilpotent(c12, c12.whole()));

  Analysis a5(share(families::alternating(5)));
  EXPECT_FALSE(is_soluble(a5, a5.whole()));
  EXPECT_TRUE(is_quasinilpotent(a5, a5.whole()));
  EXPECT_FALSE(is_pi_separable(a5, a5.whole(), PrimeSet{2}));
  EXPECT_FALSE(is_pi_closed(a5, a5.whole(), PrimeSet{5}));

  Analysis a4(share(families::alternating(4)));
  EXPECT_TRUE(is_pi_closed(a4, a4.whole(), PrimeSet{2}));
  EXPECT_FALSE(is_pi_closed(a4, a4.whole(), PrimeSet{3}));
}

TEST(StructureTest, NilpotencyAgreesWithSylowOracle)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    for (SubId u = 0; u < an.lattice().size(); ++u)
      EXPECT_EQ(nilpotent_by_sylows(an, u), is_nilpotent(an, u))
        << an.group().name() << " #" << u;
  }
}

TEST(StructureTest, Residuals)
{
  Analysis s3(share(families::symmetric(3)));
  EXPECT_EQ(3u, s3.order(residual(s3, Formation::nilpotent())));

  Analysis s4(share(families::symmetric(4)));
  auto v4 = sub(s4, {P(4, {{0, 1}, {2, 3}}), P(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(v4, residual(s4, Formation::supersoluble()));
  EXPECT_EQ(12u, s4.order(residual(s4, Formation::abelian())));
  EXPECT_EQ(12u, s4.order(residual(s4, Formation::nilpotent())));
  EXPECT_EQ(s4.trivial(), residual(s4, Formation::soluble()));
  EXPECT_EQ(12u, s4.order(residual(s4, Formation::pi_groups(PrimeSet{2}))));
  EXPECT_EQ(s4.trivial(), residual(s4, Formation::pi_groups(PrimeSet{2, 3})));
}

TEST(StructureTest, ResidualIsLeastNormalWithQuotientInF)
{
  std::vector<Formation> forms{Formation::abelian(), Formation::nilpotent(),
                               Formation::supersoluble(), Formation::soluble(),
                               Formation::pi_groups(PrimeSet{2}),
                               Formation::p_supersoluble(3)};
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    for (auto const &F : forms) {
      auto r = residual(an, F);
      EXPECT_EQ(brute_residual(an, F), r) << an.group().name() << " " << F.name();
      EXPECT_TRUE(quotient_in(an, an.whole(), r, F));
      // every normal N with F-quotient contains the residual
      for (auto n : normal_subgroups(an.lattice()))
        if (quotient_in(an, an.whole(), n, F))
          EXPECT_TRUE(an.lattice().contains(n, r));
      EXPECT_EQ(r == an.trivial(), belongs_to(an, an.whole(), F));
    }
  }
}

TEST(StructureTest, QuotientMembershipAgreesWithQuotientGroup)
{
  Analysis an(share(families::symmetric(4)));
  for (auto n : normal_subgroups(an.lattice())) {
    auto &q = an.quotient(n);
    auto &qa = *q.analysis;
    EXPECT_EQ(is_nilpotent(qa, qa.whole()),
              quotient_in(an, an.whole(), n, Formation::nilpotent()));
    EXPECT_EQ(is_supersoluble(qa, qa.whole()),
              quotient_in(an, an.whole(), n, Formation::supersoluble()));
    EXPECT_EQ(is_abelian(qa, qa.whole()),
              quotient_in(an, an.whole(), n, Formation::abelian()));
  }
}

TEST(StructureTest, FittingSubgroups)
{
  Analysis s4(share(families::symmetric(4)));
  EXPECT_EQ(4u, s4.order(fitting(s4)));
  EXPECT_EQ(o_pi(s4, PrimeSet{2}), fitting(s4));

  Analysis c12(share(families::cyclic(12)));
  EXPECT_EQ(c12.whole(), fitting(c12));

  Analysis a5(share(families::alternating(5)));
  EXPECT_EQ(a5.trivial(), fitting(a5));
  EXPECT_EQ(a5.whole(), f_star(a5));

  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    EXPECT_TRUE(an.lattice().contains(f_star(an), fitting(an)));
    if (is_soluble(an, an.whole()))
      EXPECT_EQ(fitting(an), f_star(an)) << an.group().name();
  }
}

TEST(StructureTest, CarterSubgroups)
{
  Analysis s3(share(families::symmetric(3)));
  EXPECT_EQ(of_order(s3.lattice(), 2), carter_subgroups(s3));

  Analysis s4(share(families::symmetric(4)));
  EXPECT_EQ(of_order(s4.lattice(), 8), carter_subgroups(s4));

  Analysis c12(share(families::cyclic(12)));
  EXPECT_EQ(std::vector<SubId>{c12.whole()}, carter_subgroups(c12));

  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    if (!is_soluble(an, an.whole()))
      continue;
    auto c = carter_subgroups(an);
    ASSERT_FALSE(c.empty());
    auto cls = an.lattice().class_of(c.front());
    for (auto x : c)
      EXPECT_EQ(cls, an.lattice().class_of(x));
    EXPECT_EQ(c, f_projectors(an, Formation::nilpotent())) << an.group().name();
  }
}

TEST(StructureTest, GaschutzSubgroups)
{
  Analysis s3(share(families::symmetric(3)));
  auto g3 = gaschutz_subgroups(s3);
  EXPECT_NE(g3.end(), std::find(g3.begin(), g3.end(), s3.whole()));

  Analysis s4(share(families::symmetric(4)));
  auto gs = gaschutz_subgroups(s4);
  for (auto x : of_order(s4.lattice(), 6))
    EXPECT_NE(gs.end(), std::find(gs.begin(), gs.end(), x));
  for (auto x : gs) {
    EXPECT_FALSE(s4.lattice().contains(residual(s4, Formation::nilpotent()), x));
    for (auto d : of_order(s4.lattice(), 8))
      EXPECT_FALSE(s4.lattice().contains(d, x));
  }
}

TEST(StructureTest, Projectors)
{
  Analysis s4(share(families::symmetric(4)));
  EXPECT_EQ(of_order(s4.lattice(), 6), f_projectors(s4, Formation::supersoluble()));

  Analysis s3(share(families::symmetric(3)));
  EXPECT_EQ(std::vector<SubId>{s3.whole()},
            f_projectors(s3, Formation::supersoluble()));

  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    if (!is_soluble(an, an.whole()))
      continue;
    for (auto const &F : {Formation::nilpotent(), Formation::supersoluble()}) {
      auto pr = f_projectors(an, F);
      ASSERT_FALSE(pr.empty()) << an.group().name();
      for (auto x : pr)
        EXPECT_EQ(an.lattice().class_of(pr.front()), an.lattice().class_of(x));
    }
  }
}

TEST(StructureTest, PiLength)
{
  Analysis s4(share(families::symmetric(4)));
  auto s = pi_series(s4, s4.whole(), PrimeSet{2});
  EXPECT_EQ(2u, s.length);
  // 1 = P0 = M0 < V4 = P1 < A4 = M1 < S4 = P2 = M2
  EXPECT_EQ(s4.trivial(), s.m_terms[0]);
  EXPECT_EQ(4u, s4.order(s.p_terms[1]));
  EXPECT_EQ(12u, s4.order(s.m_terms[1]));
  EXPECT_EQ(s4.whole(), s.m_terms[2]);

  Analysis c8(share(families::cyclic(8)));
  EXPECT_EQ(1u, pi_length(c8, c8.whole(), PrimeSet{2}));
  EXPECT_EQ(0u, pi_length(c8, c8.whole(), PrimeSet{3}));

  Analysis a5(share(families::alternating(5)));
  EXPECT_THROW(pi_series(a5, a5.whole(), PrimeSet{2}), std::domain_error);
}

TEST(StructureTest, PiLengthUnderQuotientsAndFrattini)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    if (!is_soluble(an, an.whole()))
      continue;
    auto const &L = an.lattice();
    for (auto const &pi : PrimeSet::of(an.group().order()).subsets()) {
      auto l = pi_length(an, an.whole(), pi);
      for (auto n : normal_subgroups(L)) {
        auto &q = an.quotient(n);
        auto lq = pi_length(*q.analysis, q.analysis->whole(), pi);
        EXPECT_LE(lq, l);
        if (n == frattini(L, L.whole()))
          EXPECT_EQ(lq, l) << an.group().name();
      }
    }
  }
}

TEST(StructureTest, PowerAutomorphisms)
{
  auto s3 = families::symmetric(3);
  auto c3 = subgroup_closure(s3, std::vector<Elem>{pst::testing::elem(s3, P(3, {{0, 1, 2}}))});
  EXPECT_TRUE(induces_power_automorphism(s3, pst::testing::elem(s3, P(3, {{0, 1}})), c3));

  auto hol = families::holomorph_cyclic(7);
  Analysis an(share(hol));
  auto c7 = of_order(an.lattice(), 7).front();
  for (Elem x = 0; x < an.group().order(); ++x)
    EXPECT_TRUE(induces_power_automorphism(an.group(), x, an.lattice()[c7]));

  auto s4 = families::symmetric(4);
  auto v4 = subgroup_closure(s4, std::vector<Elem>{
                                   pst::testing::elem(s4, P(4, {{0, 1}, {2, 3}})),
                                   pst::testing::elem(s4, P(4, {{0, 2}, {1, 3}}))});
  EXPECT_FALSE(induces_power_automorphism(s4, pst::testing::elem(s4, P(4, {{0, 1}})), v4));

  auto t = subgroup_closure(s4, std::vector<Elem>{pst::testing::elem(s4, P(4, {{0, 1}}))});
  EXPECT_THROW(induces_power_automorphism(s4, pst::testing::elem(s4, P(4, {{1, 2}})), t),
               usage_error);
}

TEST(StructureTest, Complements)
{
  Analysis s4(share(families::symmetric(4)));
  auto a4 = residual(s4, Formation::abelian());
  EXPECT_EQ(6u, complements(s4.lattice(), a4, s4.whole()).size());
  Analysis c4(share(families::cyclic(4)));
  EXPECT_TRUE(complements(c4.lattice(), of_order(c4.lattice(), 2).front(), c4.whole()).empty());
}

TEST(StructureTest, StructuralPst)
{
  Analysis s3(share(families::symmetric(3)));
  auto d = is_soluble_pst_structural(s3);
  EXPECT_TRUE(d.holds);
  EXPECT_EQ(3u, s3.order(d.residual));
  ASSERT_TRUE(d.complement);
  EXPECT_EQ(2u, s3.order(*d.complement));

  Analysis s4(share(families::symmetric(4)));
  EXPECT_FALSE(is_soluble_pst_structural(s4).holds);

  Analysis hol(share(families::holomorph_cyclic(7)));
  auto h = is_soluble_pst_structural(hol);
  EXPECT_TRUE(h.holds);
  EXPECT_EQ(7u, hol.order(h.residual));
}

TEST(StructureTest, Subnormality)
{
  Analysis s4(share(families::symmetric(4)));
  auto c2 = sub(s4, {P(4, {{0, 1}, {2, 3}})});
  auto t = sub(s4, {P(4, {{0, 1}})});
  EXPECT_TRUE(is_subnormal(s4.lattice(), c2, s4.whole()));
  EXPECT_FALSE(is_subnormal(s4.lattice(), t, s4.whole()));
}
