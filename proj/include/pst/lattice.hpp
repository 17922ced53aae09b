#ifndef PST_LATTICE_HPP
#define PST_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace pst
{

/// Index of a subgroup inside a Lattice.
using SubId = std::uint32_t;

inline constexpr std::size_t default_lattice_cap = 200;

/**
 * Every subgroup of a group, deduplicated and sorted by (order, members).
 *
 * Index 0 is the trivial subgroup and the last index is the whole group.
 * Inclusion lists, maximal subgroups, normalizers and conjugacy classes
 * are computed once at construction; a finished lattice is immutable.
 */
class Lattice
{
public:
  explicit Lattice(std::shared_ptr<Group const> group,
                   std::size_t cap = default_lattice_cap)
    : group_(std::move(group))
  {
    auto const &G = *group_;
    if (G.order() > cap)
      throw size_limit_error("lattice of " + G.name() + " (order " +
                                 std::to_string(G.order()) + ") exceeds cap " +
                                 std::to_string(cap),
                             G.order());
    enumerate();
    build_inclusion();
    build_conjugacy();
  }

  Group const &group() const { return *group_; }
  std::shared_ptr<Group const> const &group_ptr() const { return group_; }

  std::size_t size() const { return subs_.size(); }
  Subgroup const &operator[](SubId i) const { return subs_[i]; }
  std::size_t order(SubId i) const { return subs_[i].order(); }
  SubId trivial() const { return 0; }
  SubId whole() const { return static_cast<SubId>(subs_.size() - 1); }

  std::optional<SubId> find(ElementSet const &members) const
  {
    auto it = index_.find(members);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  SubId index_of(ElementSet const &members) const
  {
    auto id = find(members);
    if (!id)
      throw usage_error("set is not a subgroup of " + group_->name());
    return *id;
  }

  SubId index_of(Subgroup const &H) const
  {
    if (&H.parent() != group_.get())
      throw usage_error("subgroup is not in this lattice's group");
    return index_of(H.members());
  }

  /// small <= big
  bool contains(SubId big, SubId small) const
  { return subs_[small].members().subset_of(subs_[big].members()); }

  /// All subgroups of H, ascending (H included, trivial first).
  std::span<SubId const> subgroups_of(SubId H) const { return below_[H]; }

  /// All subgroups containing H, ascending (H included).
  std::span<SubId const> overgroups_of(SubId H) const { return above_[H]; }

  /// Maximal subgroups of H, ascending.
  std::span<SubId const> maximal_subgroups_of(SubId H) const
  { return maximal_[H]; }

  std::span<Elem const> generators(SubId H) const { return gens_[H]; }

  SubId normalizer(SubId H) const { return normalizer_[H]; }
  bool is_normal(SubId H) const { return normalizer_[H] == whole(); }

  /// H normal in U (requires H <= U for the usual meaning).
  bool is_normal_in(SubId H, SubId U) const
  { return contains(normalizer_[H], U); }

  std::vector<std::vector<SubId>> const &conjugacy_classes() const
  { return classes_; }
  std::size_t class_of(SubId H) const { return class_of_[H]; }

  /// H^g
  SubId conjugate(SubId H, Elem g) const
  {
    auto const &G = *group_;
    ElementSet out(G.order());
    subs_[H].members().for_each([&](Elem h) { out.set(G.conj(h, g)); });
    return index_.at(out);
  }

  SubId meet(SubId a, SubId b) const
  { return index_.at(subs_[a].members() & subs_[b].members()); }

  SubId join(SubId a, SubId b) const
  {
    if (contains(a, b))
      return a;
    if (contains(b, a))
      return b;
    std::vector<Elem> gens(gens_[a].begin(), gens_[a].end());
    gens.insert(gens.end(), gens_[b].begin(), gens_[b].end());
    return index_.at(closure_set(*group_, gens));
  }

  SubId join_set(ElementSet const &seed) const
  {
    auto elems = seed.elements();
    return index_.at(closure_set(*group_, elems));
  }

  /// |A B| as a set.
  std::size_t product_size(SubId a, SubId b) const
  {
    return subs_[a].order() * subs_[b].order() /
           subs_[a].members().intersection_count(subs_[b].members());
  }

private:
  void add(ElementSet members, std::vector<Elem> gens,
           std::vector<SubId> &queue)
  {
    if (index_.count(members))
      return;
    auto id = static_cast<SubId>(subs_.size());
    index_.emplace(members, id);
    subs_.emplace_back(*group_, std::move(members));
    gens_.push_back(std::move(gens));
    queue.push_back(id);
  }

  void enumerate()
  {
    auto const &G = *group_;
    std::vector<SubId> queue;
    std::vector<Elem> cyclic_gens;

    add(Subgroup::trivial(G).members(), {}, queue);
    for (Elem g = 1; g < G.order(); ++g) {
      Elem gens[] = {g};
      auto before = subs_.size();
      add(closure_set(G, gens), {g}, queue);
      if (subs_.size() != before)
        cyclic_gens.push_back(g);
    }

    // joins with cyclic subgroups until no new subgroup appears
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto S = queue[qi];
      for (auto g : cyclic_gens) {
        if (subs_[S].contains(g))
          continue;
        std::vector<Elem> gens = gens_[S];
        gens.push_back(g);
        auto members = closure_set(G, gens);
        add(std::move(members), std::move(gens), queue);
      }
    }

    std::vector<SubId> perm(subs_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](SubId a, SubId b) { return subs_[a] < subs_[b]; });
    std::vector<Subgroup> subs;
    std::vector<std::vector<Elem>> gens;
    for (auto p : perm) {
      subs.push_back(std::move(subs_[p]));
      gens.push_back(std::move(gens_[p]));
    }
    subs_ = std::move(subs);
    gens_ = std::move(gens);
    index_.clear();
    for (SubId i = 0; i < subs_.size(); ++i)
      index_.emplace(subs_[i].members(), i);
  }

  void build_inclusion()
  {
    auto n = subs_.size();
    below_.assign(n, {});
    above_.assign(n, {});
    maximal_.assign(n, {});
    for (SubId i = 0; i < n; ++i)
      for (SubId j = 0; j <= i; ++j)
        if (subs_[i].order() % subs_[j].order() == 0 &&
            subs_[j].members().subset_of(subs_[i].members())) {
          below_[i].push_back(j);
          above_[j].push_back(i);
        }
    for (SubId w = 0; w < n; ++w) {
      auto const &sub = below_[w];
      // larger candidates come first, so a non-maximal X is caught by an
      // already-accepted maximal subgroup containing it
      for (auto it = sub.rbegin(); it != sub.rend(); ++it) {
        if (*it == w)
          continue;
        bool covered = false;
        for (auto m : maximal_[w])
          if (contains(m, *it)) {
            covered = true;
            break;
          }
        if (!covered)
          maximal_[w].push_back(*it);
      }
      std::sort(maximal_[w].begin(), maximal_[w].end());
    }
  }

  void build_conjugacy()
  {
    auto const &G = *group_;
    auto n = subs_.size();
    constexpr SubId unset = ~SubId{0};
    normalizer_.assign(n, unset);
    class_of_.assign(n, unset);
    for (SubId h = 0; h < n; ++h) {
      if (class_of_[h] != unset)
        continue;
      auto cls = classes_.size();
      classes_.emplace_back();
      ElementSet norm(G.order());
      std::vector<std::pair<SubId, Elem>> reps;
      for (Elem g = 0; g < G.order(); ++g) {
        auto c = conjugate(h, g);
        if (c == h)
          norm.set(g);
        if (class_of_[c] == unset) {
          class_of_[c] = cls;
          classes_.back().push_back(c);
          reps.emplace_back(c, g);
        }
      }
      normalizer_[h] = index_.at(norm);
      for (auto [c, g] : reps)
        normalizer_[c] = conjugate(normalizer_[h], g);
      std::sort(classes_.back().begin(), classes_.back().end());
    }
  }

  std::shared_ptr<Group const> group_;
  std::vector<Subgroup> subs_;
  std::vector<std::vector<Elem>> gens_;
  std::unordered_map<ElementSet, SubId, ElementSetHash> index_;
  std::vector<std::vector<SubId>> below_, above_, maximal_;
  std::vector<SubId> normalizer_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<SubId>> classes_;
};

/// Maximal subgroups M of `within` with H <= M.
inline std::vector<SubId> maximal_subgroups(Lattice const &L, SubId H,
                                            SubId within)
{
  if (!L.contains(within, H))
    throw usage_error("maximal_subgroups: H is not contained in the ambient");
  std::vector<SubId> out;
  for (auto m : L.maximal_subgroups_of(within))
    if (L.contains(m, H))
      out.push_back(m);
  return out;
}

/// Intersection of the maximal subgroups of H; H itself when H is trivial.
inline SubId frattini(Lattice const &L, SubId H)
{
  auto maxes = L.maximal_subgroups_of(H);
  if (maxes.empty())
    return H;
  auto meet = L[maxes.front()].members();
  for (auto m : maxes)
    meet &= L[m].members();
  return L.index_of(meet);
}

/**
 * Calls fn on sets of maximal subgroups of P whose intersection is the
 * Frattini subgroup: the full set first, then every irredundant such set
 * (no member can be dropped).  Only maximal subgroups accepted by `allow`
 * take part.  fn returns false to stop; the function returns false iff it
 * was stopped.
 */
inline bool
for_each_m_phi_system(Lattice const &L, SubId P,
                      std::function<bool(std::span<SubId const>)> const &fn,
                      std::function<bool(SubId)> const &allow = {})
{
  auto phi = L[frattini(L, P)].members();
  std::vector<SubId> maxes;
  for (auto m : L.maximal_subgroups_of(P))
    if (!allow || allow(m))
      maxes.push_back(m);
  auto all = L.maximal_subgroups_of(P);
  if (all.empty())
    return true;

  bool full_ok = maxes.size() == all.size();
  if (full_ok && !fn(all))
    return false;

  auto is_irredundant = [&](std::vector<SubId> const &sel) {
    for (std::size_t skip = 0; skip < sel.size(); ++skip) {
      ElementSet meet = L[P].members();
      for (std::size_t i = 0; i < sel.size(); ++i)
        if (i != skip)
          meet &= L[sel[i]].members();
      if (meet == phi)
        return false;
    }
    return true;
  };

  std::vector<SubId> current;
  bool keep_going = true;
  std::function<void(std::size_t, ElementSet const &)> dfs =
    [&](std::size_t start, ElementSet const &meet) {
      for (std::size_t i = start; i < maxes.size() && keep_going; ++i) {
        auto next = meet & L[maxes[i]].members();
        if (next == meet)
          continue; // would be redundant
        current.push_back(maxes[i]);
        if (next == phi) {
          bool is_full = full_ok && current.size() == all.size();
          if (!is_full && is_irredundant(current) && !fn(current))
            keep_going = false;
        } else {
          dfs(i + 1, next);
        }
        current.pop_back();
      }
    };
  dfs(0, L[P].members());
  return keep_going;
}

inline std::vector<std::vector<SubId>> m_phi_systems(Lattice const &L, SubId P)
{
  std::vector<std::vector<SubId>> out;
  for_each_m_phi_system(L, P, [&](std::span<SubId const> s) {
    out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

/// Normal subgroups of U, ascending.
inline std::vector<SubId> normal_subgroups(Lattice const &L, SubId U)
{
  std::vector<SubId> out;
  for (auto x : L.subgroups_of(U))
    if (L.is_normal_in(x, U))
      out.push_back(x);
  return out;
}

inline std::vector<SubId> normal_subgroups(Lattice const &L)
{ return normal_subgroups(L, L.whole()); }

inline std::vector<SubId> minimal_normal_subgroups(Lattice const &L, SubId U)
{
  auto normals = normal_subgroups(L, U);
  std::vector<SubId> out;
  for (auto x : normals) {
    if (x == L.trivial())
      continue;
    bool minimal = true;
    for (auto y : normals)
      if (y != L.trivial() && y != x && L.contains(x, y)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(x);
  }
  return out;
}

inline std::vector<SubId> minimal_normal_subgroups(Lattice const &L)
{ return minimal_normal_subgroups(L, L.whole()); }

/// Smallest normal subgroup of U containing H.
inline SubId normal_closure(Lattice const &L, SubId H, SubId U)
{
  for (auto x : L.overgroups_of(H))
    if (L.contains(U, x) && L.is_normal_in(x, U))
      return x;
  throw usage_error("normal_closure: H is not contained in U");
}

/// upper/lower as an abstract group is abelian
inline bool factor_is_abelian(Lattice const &L, SubId upper, SubId lower)
{
  auto const &G = L.group();
  auto gens = L.generators(upper);
  for (auto a : gens)
    for (auto b : gens)
      if (!L[lower].contains(G.commutator(a, b)))
        return false;
  return true;
}

inline bool factor_is_cyclic(Lattice const &L, SubId upper, SubId lower)
{
  auto const &G = L.group();
  auto target = L.order(upper) / L.order(lower);
  if (target == 1)
    return true;
  bool found = false;
  L[upper].members().for_each([&](Elem x) {
    if (found)
      return;
    Elem y = x;
    std::size_t k = 1;
    while (!L[lower].contains(y)) {
      y = G.mul(y, x);
      ++k;
    }
    if (k == target)
      found = true;
  });
  return found;
}

/// [upper, U] <= lower
inline bool factor_is_central(Lattice const &L, SubId upper, SubId lower,
                              SubId U)
{
  auto const &G = L.group();
  for (auto a : L.generators(upper))
    for (auto u : L.generators(U))
      if (!L[lower].contains(G.commutator(a, u)))
        return false;
  return true;
}

/// Elements of U acting trivially on upper/lower.
inline ElementSet factor_centralizer(Lattice const &L, SubId upper,
                                     SubId lower, SubId U)
{
  auto const &G = L.group();
  auto gens = L.generators(upper);
  ElementSet out(G.order());
  L[U].members().for_each([&](Elem u) {
    for (auto a : gens)
      if (!L[lower].contains(G.commutator(a, u)))
        return;
    out.set(u);
  });
  return out;
}

/// U induces only inner automorphisms on upper/lower: U = upper C_U(upper/lower).
inline bool factor_is_inner(Lattice const &L, SubId upper, SubId lower,
                            SubId U)
{
  auto cent = factor_centralizer(L, upper, lower, U);
  auto c = cent.count();
  auto meet = cent.intersection_count(L[upper].members());
  return L.order(upper) * c / meet == L.order(U);
}

struct ChiefFactor
{
  SubId lower = 0;
  SubId upper = 0;
  std::size_t order = 1;
  bool abelian = true;
  bool cyclic = true;
};

/// A chief series of `ambient` (a chain of its normal subgroups).
struct ChiefSeries
{
  SubId ambient = 0;
  std::vector<SubId> chain;
  std::vector<ChiefFactor> factors;
};

/**
 * Chief series of U through the given normal subgroups of U.  Each step
 * takes the least (order, members) normal subgroup of U strictly above the
 * current term and inside the next requested term.
 */
inline ChiefSeries chief_series(Lattice const &L, SubId U,
                                std::vector<SubId> through = {})
{
  for (auto t : through)
    if (!L.contains(U, t) || !L.is_normal_in(t, U))
      throw usage_error("chief_series: through-point is not normal");
  std::sort(through.begin(), through.end(),
            [&](SubId a, SubId b) { return L.order(a) < L.order(b); });
  for (std::size_t i = 1; i < through.size(); ++i)
    if (!L.contains(through[i], through[i - 1]))
      throw usage_error("chief_series: through-points do not form a chain");
  through.push_back(U);

  auto normals = normal_subgroups(L, U);
  ChiefSeries cs;
  cs.ambient = U;
  SubId current = L.trivial();
  cs.chain.push_back(current);
  for (auto target : through) {
    while (current != target) {
      SubId next = target;
      for (auto x : normals)
        if (x != current && L.contains(x, current) && L.contains(target, x)) {
          next = x;
          break;
        }
      ChiefFactor f;
      f.lower = current;
      f.upper = next;
      f.order = L.order(next) / L.order(current);
      f.abelian = factor_is_abelian(L, next, current);
      f.cyclic = f.abelian && factor_is_cyclic(L, next, current);
      cs.factors.push_back(f);
      cs.chain.push_back(next);
      current = next;
    }
  }
  return cs;
}

inline ChiefSeries chief_series(Lattice const &L)
{ return chief_series(L, L.whole()); }

/// Chief factors of U lying between lower and U (lower normal in U).
inline std::vector<ChiefFactor> chief_factors_above(Lattice const &L, SubId U,
                                                    SubId lower)
{
  auto cs = chief_series(L, U, {lower});
  std::vector<ChiefFactor> out;
  for (auto const &f : cs.factors)
    if (L.contains(f.lower, lower))
      out.push_back(f);
  return out;
}

} // namespace pst

#endif // PST_LATTICE_HPP
