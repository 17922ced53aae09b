#include <vector>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace pst;
using K = pst::PermutabilityKind;
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
  out.push_back(families::dicyclic(2));
  out.push_back(families::dihedral(12));
  out.push_back(families::holomorph_cyclic(5));
  out.push_back(families::holomorph_cyclic(7));
  out.push_back(families::direct_product(families::symmetric(3), families::cyclic(3)));
  out.push_back(families::semidirect_cyclic(7, 3, 2));
  return out;
}

/// Independent check of the defining conditions for a given B, using
/// only set products on the group (no lattice caches).
bool naive_holds(Analysis &an, SubId H, SubId B, K kind)
{
  auto const &L = an.lattice();
  auto const &G = an.group();
  auto const &h = L[H];
  auto norm = normalizer(G, h);
  auto coverage = [&](Subgroup const &X) {
    return product_set(X, L[B]).count() == G.order();
  };
  bool normal_cover = kind == K::quasipermutable || kind == K::s_quasipermutable ||
                      kind == K::propermutable || kind == K::s_propermutable;
  if (!(normal_cover ? coverage(norm) : coverage(h)))
    return false;
  auto pr = [&](SubId a) { return permutes(h, L[a]); };
  auto sylow_like = [&](SubId a) {
    auto n = an.order(a);
    return n > 1 && is_prime_power(n) && L.order(B) % n == 0 &&
           (L.order(B) / n) % prime_divisors(n).front() != 0;
  };
  if ((kind == K::quasipermutable || kind == K::s_quasipermutable) && !pr(B))
    return false;
  for (auto a : L.subgroups_of(B)) {
    bool coprime = std::gcd(an.order(H), an.order(a)) == 1;
    bool needed = false;
    switch (kind) {
    case K::quasipermutable:
      needed = coprime;
      break;
    case K::s_quasipermutable:
      needed = coprime && sylow_like(a);
      break;
    case K::propermutable:
    case K::semi_normal:
      needed = true;
      break;
    case K::s_propermutable:
    case K::ss_quasinormal:
      needed = sylow_like(a);
      break;
    default:
      break;
    }
    if (needed && !pr(a))
      return false;
  }
  return true;
}

} // namespace

TEST(PermutabilityTest, KindNamesRoundTrip)
{
  for (auto k : all_permutability_kinds)
    EXPECT_EQ(k, parse_permutability_kind(to_string(k)));
  EXPECT_FALSE(parse_permutability_kind("normalish"));
}

TEST(PermutabilityTest, PointStabilizerInS4)
{
  Analysis an(share(families::symmetric(4)));
  auto s3 = sub(an, {P(4, {{0, 1}}), P(4, {{0, 1, 2}})});
  ASSERT_EQ(6u, an.order(s3));
  EXPECT_TRUE(is(an, s3, K::quasipermutable));
  EXPECT_TRUE(is(an, s3, K::s_propermutable));
  EXPECT_FALSE(is(an, s3, K::propermutable));
  EXPECT_FALSE(is(an, s3, K::permutable));
}

TEST(PermutabilityTest, ThreeCycleInS4)
{
  Analysis an(share(families::symmetric(4)));
  auto c3 = sub(an, {P(4, {{0, 1, 2}})});
  EXPECT_TRUE(is(an, c3, K::s_quasipermutable));
  EXPECT_FALSE(is(an, c3, K::quasipermutable));
}

TEST(PermutabilityTest, WholeAndNormalSubgroupsHoldForEveryKind)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    for (auto k : all_permutability_kinds) {
      EXPECT_TRUE(is(an, an.whole(), k)) << to_string(k);
      EXPECT_TRUE(holds_with_witness(an, an.whole(), an.whole(), an.trivial(), k) ||
                  k == K::permutable || k == K::s_permutable);
      for (auto n : normal_subgroups(an.lattice())) {
        EXPECT_TRUE(is(an, n, k));
        EXPECT_TRUE(holds_with_witness(an, n, an.whole(), an.whole(), k));
      }
    }
  }
}

TEST(PermutabilityTest, HolomorphSeparatesSPropermutableFromSsQuasinormal)
{
  Analysis an(share(families::holomorph_cyclic(7)));
  std::size_t found = 0;
  for (SubId h = 0; h < an.lattice().size(); ++h)
    if (is(an, h, K::s_propermutable) && !is(an, h, K::ss_quasinormal))
      ++found;
  EXPECT_GT(found, 0u);
}

TEST(PermutabilityTest, ImplicationsHoldPointwise)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    for (SubId h = 0; h < an.lattice().size(); ++h)
      for (auto k : all_permutability_kinds) {
        if (!is(an, h, k))
          continue;
        for (auto implied : implied_kinds(k))
          EXPECT_TRUE(is(an, h, implied))
            << an.group().name() << " #" << h << " " << to_string(k) << " => "
            << to_string(implied);
      }
  }
}

TEST(PermutabilityTest, QuasipermutableWitnessAlsoServesSVariant)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    for (SubId h = 0; h < an.lattice().size(); ++h) {
      auto v = permutability_status(an, h, K::quasipermutable);
      if (v.holds)
        EXPECT_TRUE(holds_with_witness(an, h, an.whole(), *v.witness_B,
                                       K::s_quasipermutable));
    }
  }
}

TEST(PermutabilityTest, WitnessesRecheckAndAgreeWithNaiveOracle)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    auto const &L = an.lattice();
    for (SubId h = 0; h < L.size(); ++h)
      for (auto k : all_permutability_kinds) {
        auto v = permutability_status(an, h, k);
        if (k == K::permutable || k == K::s_permutable)
          continue;
        bool naive = false;
        for (SubId b = 0; b < L.size() && !naive; ++b)
          naive = naive_holds(an, h, b, k);
        EXPECT_EQ(naive, v.holds) << an.group().name() << " #" << h << " "
                                  << to_string(k);
        if (v.holds) {
          ASSERT_TRUE(v.witness_B);
          EXPECT_TRUE(holds_with_witness(an, h, an.whole(), *v.witness_B, k));
          EXPECT_TRUE(naive_holds(an, h, *v.witness_B, k));
        } else {
          EXPECT_FALSE(v.refutation.empty());
        }
      }
  }
}

TEST(PermutabilityTest, PermutableAgreesWithAllSubgroupsOracle)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    auto const &L = an.lattice();
    for (SubId h = 0; h < L.size(); ++h) {
      bool all = true, sylows = true;
      for (SubId a = 0; a < L.size(); ++a) {
        bool ok = permutes(L[h], L[a]);
        all = all && ok;
        auto n = L.order(a);
        if (n > 1 && is_prime_power(n) &&
            p_part(an.group().order(), prime_divisors(n).front()) == n)
          sylows = sylows && ok;
      }
      EXPECT_EQ(all, is(an, h, K::permutable));
      EXPECT_EQ(sylows, is(an, h, K::s_permutable));
    }
  }
}

TEST(PermutabilityTest, ConjugationInvariance)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    auto const &L = an.lattice();
    for (auto const &cls : L.conjugacy_classes())
      for (auto k : all_permutability_kinds) {
        bool first = is(an, cls.front(), k);
        for (auto h : cls)
          EXPECT_EQ(first, is(an, h, k)) << an.group().name() << " " << to_string(k);
      }
  }
}

TEST(PermutabilityTest, SolubleHallQuasipermutableIsPropermutable)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    if (!is_soluble(an, an.whole()))
      continue;
    for (SubId h = 0; h < an.lattice().size(); ++h)
      if (is_hall(an.lattice(), h, an.whole()) && is(an, h, K::quasipermutable))
        EXPECT_TRUE(is(an, h, K::propermutable)) << an.group().name();
  }
}

TEST(PermutabilityTest, RejectsSubgroupOutsideAmbient)
{
  Analysis an(share(families::symmetric(4)));
  auto t = sub(an, {P(4, {{0, 1}})});
  auto c3 = sub(an, {P(4, {{1, 2, 3}})});
  EXPECT_THROW(permutability_status(an, t, c3, K::quasipermutable), usage_error);
}

TEST(PermutabilityTest, TransitivityClasses)
{
  Analysis s3(share(families::symmetric(3)));
  EXPECT_TRUE(transitivity_class(s3, Relation::s_permutable).holds);

  Analysis s4(share(families::symmetric(4)));
  auto t = transitivity_class(s4, Relation::normal);
  ASSERT_FALSE(t.holds);
  auto [k, h, u] = *t.counterexample;
  EXPECT_EQ(2u, s4.order(k));
  EXPECT_EQ(4u, s4.order(h));
  EXPECT_TRUE(s4.lattice().is_normal(h));
  EXPECT_EQ(s4.whole(), u);

  Analysis ab(share(families::abelian({2, 6}, "C2xC6")));
  for (auto r : {Relation::normal, Relation::permutable, Relation::s_permutable,
                 Relation::s_quasipermutable})
    EXPECT_TRUE(transitivity_class(ab, r).holds) << to_string(r);
}

TEST(PermutabilityTest, StructuralPstMatchesDefinition)
{
  for (auto &g : small_groups()) {
    Analysis an(share(std::move(g)));
    if (!is_soluble(an, an.whole()))
      continue;
    EXPECT_EQ(is_soluble_pst_structural(an).holds,
              transitivity_class(an, Relation::s_permutable).holds)
      << an.group().name();
  }
}
