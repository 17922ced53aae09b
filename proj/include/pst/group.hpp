#ifndef PST_GROUP_HPP
#define PST_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "perm.hpp"
#include "primes.hpp"

namespace pst
{

inline constexpr std::size_t default_closure_cap = 2000;

/**
 * Finite group stored as a full multiplication table.
 *
 * Element 0 is the identity.  Groups built from permutation generators keep
 * the permutation of every element so subgroups can be named by generators.
 */
class Group
{
public:
  /**
   * Closure of the generators under composition.  Elements are numbered in
   * breadth-first order over the generators as given, so the numbering is a
   * pure function of the generator list.
   */
  static Group from_generators(std::vector<Perm> const &gens, std::string name,
                               std::size_t degree = 0,
                               std::size_t cap = default_closure_cap)
  {
    if (!gens.empty())
      degree = gens.front().degree();
    for (auto const &g : gens)
      if (g.degree() != degree)
        throw validation_error("generators of " + name +
                               " do not share one degree");

    Group G;
    G.name_ = std::move(name);
    G.degree_ = degree;
    G.generators_ = gens;

    std::unordered_map<Perm, Elem, PermHash> index;
    std::vector<Elem> parent{0}, via{0};
    std::vector<Elem> right; // right[i * k + g] = index of element_i * gen_g
    auto const k = gens.size();

    G.perms_.emplace_back(degree);
    index.emplace(G.perms_.front(), 0);

    for (std::size_t i = 0; i < G.perms_.size(); ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        Perm p = G.perms_[i] * gens[g];
        auto it = index.find(p);
        Elem e;
        if (it == index.end()) {
          e = static_cast<Elem>(G.perms_.size());
          if (G.perms_.size() + 1 > cap)
            throw size_limit_error("closure of " + G.name_ + " exceeds cap " +
                                       std::to_string(cap),
                                   G.perms_.size() + 1);
          index.emplace(p, e);
          G.perms_.push_back(std::move(p));
          parent.push_back(static_cast<Elem>(i));
          via.push_back(static_cast<Elem>(g));
        } else {
          e = it->second;
        }
        right.push_back(e);
      }
    }

    auto const n = G.perms_.size();
    G.n_ = n;
    G.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      G.table_[i * n] = static_cast<Elem>(i);
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        G.table_[i * n + j] = right[G.table_[i * n + parent[j]] * k + via[j]];

    G.perm_index_ = std::move(index);
    G.finish();
    return G;
  }

  /// Build from a row-major table; validates identity, Latin property and associativity.
  static Group from_table(std::string name, std::vector<Elem> table,
                          std::size_t order)
  {
    if (order == 0 || table.size() != order * order)
      throw validation_error("table size does not match order");
    Group G;
    G.name_ = std::move(name);
    G.n_ = order;
    G.table_ = std::move(table);

    for (std::size_t i = 0; i < order; ++i) {
      if (G.table_[i] != i || G.table_[i * order] != i)
        throw validation_error("element 0 is not the identity");
      std::vector<bool> row(order, false), col(order, false);
      for (std::size_t j = 0; j < order; ++j) {
        auto r = G.table_[i * order + j], c = G.table_[j * order + i];
        if (r >= order || c >= order || row[r] || col[c])
          throw validation_error("table is not a Latin square");
        row[r] = col[c] = true;
      }
    }
    // full check for small tables, a fixed stride sample above that
    std::size_t step = order <= 64 ? 1 : order / 31 + 1;
    for (std::size_t a = 0; a < order; a += step)
      for (std::size_t b = 0; b < order; b += step)
        for (std::size_t c = 0; c < order; c += step)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
            throw validation_error("table is not associative");
    G.finish();
    return G;
  }

  std::size_t order() const { return n_; }
  std::string const &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Elem mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  std::size_t element_order(Elem a) const { return element_orders_[a]; }

  /// x^g = g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inverse_[g], x), g); }

  /// [a, b] = a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const
  { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }

  PrimeSet primes() const { return PrimeSet::of(n_); }

  bool has_permutations() const { return !perms_.empty(); }
  std::size_t degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return generators_; }
  Perm const &permutation(Elem a) const { return perms_.at(a); }

  std::optional<Elem> find(Perm const &p) const
  {
    auto it = perm_index_.find(p);
    if (it == perm_index_.end())
      return std::nullopt;
    return it->second;
  }

  /// Right-regular permutation representation of the given elements.
  std::vector<Perm> regular_permutations(std::span<Elem const> elems) const
  {
    std::vector<Perm> out;
    for (auto g : elems) {
      std::vector<std::uint32_t> img(n_);
      for (std::size_t x = 0; x < n_; ++x)
        img[x] = mul(x, g);
      out.emplace_back(std::move(img));
    }
    return out;
  }

  std::span<Elem const> table() const { return table_; }

private:
  void finish()
  {
    inverse_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = static_cast<Elem>(b);
          break;
        }
    element_orders_.assign(n_, 1);
    for (std::size_t a = 0; a < n_; ++a) {
      std::size_t k = 1;
      Elem x = static_cast<Elem>(a);
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      element_orders_[a] = k;
    }
  }

  std::string name_;
  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_orders_;
  std::vector<Perm> generators_;
  std::vector<Perm> perms_;
  std::unordered_map<Perm, Elem, PermHash> perm_index_;
};

/**
 * Subgroup of a parent group as a membership bitset.  The parent must
 * outlive the subgroup.
 */
class Subgroup
{
public:
  Subgroup() = default;

  Subgroup(Group const &parent, ElementSet members)
    : parent_(&parent), members_(std::move(members)), order_(members_.count())
  {
    if (members_.universe() != parent.order())
      throw usage_error("member set universe does not match parent order");
    if (!members_.test(0))
      throw usage_error("subgroup does not contain the identity");
    if (parent.order() % order_ != 0)
      throw usage_error("subgroup order " + std::to_string(order_) +
                        " does not divide " + std::to_string(parent.order()));
  }

  static Subgroup trivial(Group const &G)
  {
    ElementSet s(G.order());
    s.set(0);
    return Subgroup(G, std::move(s));
  }

  static Subgroup whole(Group const &G)
  {
    ElementSet s(G.order());
    for (std::size_t i = 0; i < G.order(); ++i)
      s.set(static_cast<Elem>(i));
    return Subgroup(G, std::move(s));
  }

  Group const &parent() const { return *parent_; }
  ElementSet const &members() const { return members_; }
  std::size_t order() const { return order_; }
  std::size_t index() const { return parent_->order() / order_; }
  bool contains(Elem x) const { return members_.test(x); }
  bool is_trivial() const { return order_ == 1; }
  std::vector<Elem> elements() const { return members_.elements(); }

  bool is_subgroup_of(Subgroup const &other) const
  { return parent_ == other.parent_ && members_.subset_of(other.members_); }

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  { return a.parent_ == b.parent_ && a.members_ == b.members_; }

  friend bool operator<(Subgroup const &a, Subgroup const &b)
  {
    if (a.order_ != b.order_)
      return a.order_ < b.order_;
    return a.members_ < b.members_;
  }

private:
  Group const *parent_ = nullptr;
  ElementSet members_;
  std::size_t order_ = 0;
};

inline void require_same_parent(Subgroup const &a, Subgroup const &b)
{
  if (&a.parent() != &b.parent())
    throw usage_error("subgroups belong to different groups");
}

/// Subgroup generated by the given generators (breadth-first closure).
inline ElementSet closure_set(Group const &G, std::span<Elem const> gens)
{
  ElementSet seen(G.order());
  std::vector<Elem> queue{0};
  seen.set(0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      auto y = G.mul(queue[i], g);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

inline Subgroup subgroup_closure(Group const &G, std::span<Elem const> seed)
{
  for (auto x : seed)
    if (x >= G.order())
      throw usage_error("seed element out of range");
  return Subgroup(G, closure_set(G, seed));
}

inline Subgroup subgroup_closure(Group const &G, ElementSet const &seed)
{
  auto elems = seed.elements();
  return subgroup_closure(G, elems);
}

/// Greedy generating set: scan members by index, keep those outside the span so far.
inline std::vector<Elem> generating_set(Subgroup const &H)
{
  auto const &G = H.parent();
  std::vector<Elem> gens;
  ElementSet span(G.order());
  span.set(0);
  H.members().for_each([&](Elem x) {
    if (span.test(x))
      return;
    gens.push_back(x);
    span = closure_set(G, gens);
  });
  return gens;
}

/// The set HK = {hk}.  Cross-checks |HK| |H n K| = |H| |K|.
inline ElementSet product_set(Subgroup const &H, Subgroup const &K)
{
  require_same_parent(H, K);
  auto const &G = H.parent();
  ElementSet out(G.order());
  auto ks = K.elements();
  H.members().for_each([&](Elem h) {
    for (auto k : ks)
      out.set(G.mul(h, k));
  });
  auto meet = H.members().intersection_count(K.members());
  if (out.count() * meet != H.order() * K.order())
    throw std::logic_error("product formula violated");
  return out;
}

/// |HK| without materialising the set.
inline std::size_t product_size(Subgroup const &H, Subgroup const &K)
{
  require_same_parent(H, K);
  return H.order() * K.order() / H.members().intersection_count(K.members());
}

/// HK = KH, decided as KH being contained in HK (both have the same size).
inline bool permutes(Subgroup const &H, Subgroup const &K)
{
  require_same_parent(H, K);
  if (H.members().subset_of(K.members()) || K.members().subset_of(H.members()))
    return true;
  auto const &G = H.parent();
  if (G.order() % product_size(H, K) != 0)
    return false;
  auto hk = product_set(H, K);
  auto hs = H.elements();
  bool ok = true;
  K.members().for_each([&](Elem k) {
    if (!ok)
      return;
    for (auto h : hs)
      if (!hk.test(G.mul(k, h))) {
        ok = false;
        return;
      }
  });
  return ok;
}

/// Second route: HK = KH iff the set HK is closed under multiplication.
inline bool permutes_by_closure(Subgroup const &H, Subgroup const &K)
{
  auto hk = product_set(H, K);
  auto const &G = H.parent();
  auto elems = hk.elements();
  for (auto a : elems)
    for (auto b : elems)
      if (!hk.test(G.mul(a, b)))
        return false;
  return true;
}

/// H^g = g^-1 H g
inline Subgroup conjugate(Subgroup const &H, Elem g)
{
  auto const &G = H.parent();
  ElementSet out(G.order());
  H.members().for_each([&](Elem h) { out.set(G.conj(h, g)); });
  return Subgroup(G, std::move(out));
}

inline Subgroup normalizer(Group const &G, Subgroup const &H)
{
  if (&H.parent() != &G)
    throw usage_error("subgroup is not in this group");
  auto hs = H.elements();
  ElementSet out(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto h : hs)
      if (!H.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok)
      out.set(g);
  }
  return Subgroup(G, std::move(out));
}

inline Subgroup centralizer(Group const &G, ElementSet const &X)
{
  auto xs = X.elements();
  ElementSet out(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto x : xs)
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok)
      out.set(g);
  }
  return Subgroup(G, std::move(out));
}

inline Subgroup center(Group const &G)
{ return centralizer(G, Subgroup::whole(G).members()); }

inline bool is_normal(Group const &G, Subgroup const &H)
{ return normalizer(G, H).order() == G.order(); }

inline bool is_abelian(Group const &G)
{ return center(G).order() == G.order(); }

/// Quotient G/N with the element-to-coset projection.
struct Quotient
{
  std::shared_ptr<Group const> group;
  std::vector<Elem> projection; // element of G -> coset index

  /// Image HN/N of a subgroup of G.
  Subgroup image(Subgroup const &H) const
  {
    ElementSet out(group->order());
    H.members().for_each([&](Elem h) { out.set(projection[h]); });
    return Subgroup(*group, std::move(out));
  }

  /// Full preimage (as a member set of G) of a subgroup of the quotient.
  ElementSet preimage(Subgroup const &Q, Group const &G) const
  {
    ElementSet out(G.order());
    for (Elem g = 0; g < G.order(); ++g)
      if (Q.contains(projection[g]))
        out.set(g);
    return out;
  }
};

/**
 * Cosets are numbered by their least element index, so the identity coset
 * is 0 and the numbering is deterministic.
 */
inline Quotient quotient_group(Group const &G, Subgroup const &N)
{
  if (&N.parent() != &G)
    throw usage_error("subgroup is not in this group");
  if (!is_normal(G, N))
    throw usage_error("quotient by a non-normal subgroup");
  auto const n = G.order();
  auto const m = n / N.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> proj(n, unset), reps;
  auto ns = N.elements();
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] != unset)
      continue;
    auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto y : ns)
      proj[G.mul(x, y)] = c;
  }
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = proj[G.mul(reps[i], reps[j])];
  auto name = G.name() + "/N" + std::to_string(N.order());
  Quotient q;
  q.group = std::make_shared<Group const>(
    Group::from_table(std::move(name), std::move(table), m));
  q.projection = std::move(proj);
  return q;
}

} // namespace pst

#endif // PST_GROUP_HPP
