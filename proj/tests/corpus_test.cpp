#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "pst/corpus.hpp"
#include "test_support.hpp"

using namespace pst;

namespace
{

std::vector<std::string> names(std::vector<Group> const &gs)
{
  std::vector<std::string> out;
  for (auto const &g : gs)
    out.push_back(g.name());
  return out;
}

bool has(std::vector<Group> const &gs, std::string const &name)
{
  auto n = names(gs);
  return std::find(n.begin(), n.end(), name) != n.end();
}

/// Independent isomorphism oracle: brute force over all bijections fixing 0.
bool isomorphic_by_permutation(Group const &A, Group const &B)
{
  if (A.order() != B.order())
    return false;
  std::vector<Elem> map(A.order());
  for (Elem i = 0; i < A.order(); ++i)
    map[i] = i;
  do {
    bool ok = true;
    for (Elem a = 0; a < A.order() && ok; ++a)
      for (Elem b = 0; b < A.order() && ok; ++b)
        ok = map[A.mul(a, b)] == B.mul(map[a], map[b]);
    if (ok)
      return true;
  } while (std::next_permutation(map.begin() + 1, map.end()));
  return false;
}

} // namespace

TEST(CorpusTest, OrderSixInventory)
{
  CorpusSpec spec;
  spec.max_order = 6;
  auto gs = builtin_corpus(spec);
  EXPECT_EQ((std::vector<std::string>{"C1", "C2", "C3", "C2xC2", "C4", "C5", "C6", "S3"}),
            names(gs));
}

TEST(CorpusTest, NamedGroupsPresent)
{
  CorpusSpec hol;
  hol.max_order = 42;
  hol.families = {"holomorph_cyclic"};
  auto h = builtin_corpus(hol);
  ASSERT_TRUE(has(h, "Hol(C7)"));
  EXPECT_EQ(42u, std::find_if(h.begin(), h.end(), [](Group const &g) {
                   return g.name() == "Hol(C7)";
                 })->order());

  CorpusSpec s24;
  s24.max_order = 24;
  EXPECT_TRUE(has(builtin_corpus(s24), "S4"));

  auto all = builtin_corpus();
  EXPECT_GE(all.size(), 50u);
  for (auto n : {"S3", "S4", "A4", "D8", "Q8", "Hol(C7)"})
    EXPECT_TRUE(has(all, n)) << n;
}

TEST(CorpusTest, RespectsBoundsAndExclusions)
{
  CorpusSpec spec;
  spec.max_order = 40;
  spec.exclusions = {32, 36};
  for (auto const &g : builtin_corpus(spec)) {
    EXPECT_LE(g.order(), 40u);
    EXPECT_NE(32u, g.order());
    EXPECT_NE(36u, g.order());
  }
  spec.families = {"nonsense"};
  EXPECT_THROW(builtin_corpus(spec), usage_error);
  spec.families = {"cyclic"};
  spec.max_order = 0;
  EXPECT_THROW(builtin_corpus(spec), usage_error);
}

TEST(CorpusTest, SortedAndDeterministic)
{
  auto a = builtin_corpus();
  auto b = builtin_corpus();
  EXPECT_EQ(names(a), names(b));
  for (std::size_t i = 1; i < a.size(); ++i) {
    EXPECT_LE(a[i - 1].order(), a[i].order());
    if (a[i - 1].order() == a[i].order())
      EXPECT_LT(a[i - 1].name(), a[i].name());
  }
}

TEST(CorpusTest, IsomorphismCheckAgreesWithBruteForce)
{
  std::vector<Group> gs;
  gs.push_back(families::dihedral(3));
  gs.push_back(families::symmetric(3));
  gs.push_back(families::cyclic(6));
  gs.push_back(families::abelian({2, 3}, "C2xC3"));
  gs.push_back(families::dihedral(4));
  gs.push_back(families::dicyclic(2));
  gs.push_back(families::abelian({2, 4}, "C2xC4"));
  gs.push_back(families::cyclic(8));
  for (auto const &a : gs)
    for (auto const &b : gs)
      if (a.order() == b.order())
        EXPECT_EQ(isomorphic_by_permutation(a, b), isomorphic(a, b))
          << a.name() << " vs " << b.name();
}

TEST(CorpusTest, NoIsomorphicPairs)
{
  auto gs = builtin_corpus();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size() && gs[j].order() == gs[i].order(); ++j)
      EXPECT_FALSE(isomorphic(gs[i], gs[j])) << gs[i].name() << " ~ " << gs[j].name();
}

TEST(CorpusTest, OrderCountsMatchKnownEnumerationWhereFamiliesAreComplete)
{
  // every group of these orders is cyclic, abelian, dihedral, dicyclic,
  // symmetric/alternating or a direct/semidirect product of cyclic groups
  std::map<std::size_t, std::size_t> expected{{4, 2}, {6, 2}, {8, 5}, {9, 2},
                                              {10, 2}, {12, 5}, {14, 2}, {20, 5},
                                              {21, 2}};
  std::map<std::size_t, std::size_t> found;
  CorpusSpec spec;
  spec.max_order = 21;
  for (auto const &g : builtin_corpus(spec))
    ++found[g.order()];
  for (auto [n, count] : expected)
    EXPECT_EQ(count, found[n]) << "order " << n;
}

TEST(CorpusTest, FingerprintSeparatesD8FromQ8)
{
  auto d8 = families::dihedral(4);
  auto q8 = families::dicyclic(2);
  EXPECT_NE(fingerprint(d8), fingerprint(q8));
  EXPECT_EQ(fingerprint(families::dihedral(3)), fingerprint(families::symmetric(3)));
}
