#ifndef PST_CORPUS_HPP
#define PST_CORPUS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "group.hpp"
#include "primes.hpp"

namespace pst
{

inline std::vector<std::string> const all_family_names{
  "cyclic",   "abelian",          "dihedral",        "dicyclic",
  "symmetric", "alternating",     "holomorph_cyclic", "direct_products",
  "semidirect_products"};

struct CorpusSpec
{
  std::size_t max_order = 60;
  std::vector<std::string> families = all_family_names;
  std::vector<std::size_t> exclusions;
  std::vector<std::string> external_files;
};

/// Isomorphism invariants compared before the full table check.
struct Fingerprint
{
  std::size_t order = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::vector<std::size_t> order_histogram;
  std::vector<std::size_t> class_sizes;

  friend bool operator==(Fingerprint const &, Fingerprint const &) = default;
  friend auto operator<=>(Fingerprint const &, Fingerprint const &) = default;
};

inline Fingerprint fingerprint(Group const &G)
{
  auto n = G.order();
  Fingerprint f;
  f.order = n;
  f.order_histogram.assign(n + 1, 0);
  for (Elem a = 0; a < n; ++a)
    ++f.order_histogram[G.element_order(a)];

  for (Elem a = 0; a < n; ++a) {
    bool central = true;
    for (Elem b = 0; b < n && central; ++b)
      central = G.mul(a, b) == G.mul(b, a);
    f.center += central;
  }

  std::vector<Elem> commutators;
  ElementSet seen(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto c = G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b));
      if (!seen.test(c)) {
        seen.set(c);
        commutators.push_back(c);
      }
    }
  f.derived = closure_set(G, commutators).count();

  std::vector<bool> done(n, false);
  for (Elem a = 0; a < n; ++a) {
    if (done[a])
      continue;
    std::size_t size = 0;
    for (Elem g = 0; g < n; ++g) {
      auto c = G.conj(a, g);
      if (!done[c]) {
        done[c] = true;
        ++size;
      }
    }
    f.class_sizes.push_back(size);
  }
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

namespace detail
{

/// Generators chosen greedily from elements of largest order first.
inline std::vector<Elem> small_generating_set(Group const &G)
{
  std::vector<Elem> by_order(G.order());
  for (Elem a = 0; a < G.order(); ++a)
    by_order[a] = a;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return G.element_order(a) > G.element_order(b);
  });
  std::vector<Elem> gens;
  ElementSet span(G.order());
  span.set(0);
  for (auto x : by_order) {
    if (span.test(x))
      continue;
    gens.push_back(x);
    span = closure_set(G, gens);
  }
  return gens;
}

/// Extend gens -> images to a map on A along the Cayley graph; true iff it is an isomorphism.
inline bool extends_to_isomorphism(Group const &A, Group const &B,
                                   std::vector<Elem> const &gens,
                                   std::vector<Elem> const &images)
{
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> map(A.order(), unset);
  std::vector<bool> hit(B.order(), false);
  map[0] = 0;
  hit[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto x = queue[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto y = A.mul(x, gens[g]);
      auto img = B.mul(map[x], images[g]);
      if (map[y] == unset) {
        if (hit[img])
          return false;
        map[y] = img;
        hit[img] = true;
        queue.push_back(y);
      } else if (map[y] != img) {
        return false;
      }
    }
  }
  return queue.size() == A.order();
}

} // namespace detail

/// Exhaustive search over generator images of matching element order.
inline bool isomorphic(Group const &A, Group const &B)
{
  if (A.order() != B.order())
    return false;
  auto gens = detail::small_generating_set(A);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem b = 0; b < B.order(); ++b)
      if (B.element_order(b) == A.element_order(gens[i]))
        candidates[i].push_back(b);

  std::vector<Elem> images(gens.size());
  auto search = [&](auto &&self, std::size_t depth) -> bool {
    if (depth == gens.size())
      return detail::extends_to_isomorphism(A, B, gens, images);
    for (auto b : candidates[depth]) {
      images[depth] = b;
      if (self(self, depth + 1))
        return true;
    }
    return false;
  };
  return search(search, 0);
}

namespace detail
{

/// Invariant factor lists d1 | d2 | ... with at least two factors.
inline void invariant_factor_lists(std::size_t max_order, std::vector<std::size_t> &prefix,
                                   std::size_t product,
                                   std::vector<std::vector<std::size_t>> &out)
{
  if (prefix.size() >= 2)
    out.push_back(prefix);
  std::size_t step = prefix.empty() ? 1 : prefix.back();
  for (std::size_t d = std::max<std::size_t>(step, 2); product * d <= max_order; d += step) {
    prefix.push_back(d);
    invariant_factor_lists(max_order, prefix, product * d, out);
    prefix.pop_back();
  }
}

inline bool wants(CorpusSpec const &spec, std::string const &family)
{
  return std::find(spec.families.begin(), spec.families.end(), family) !=
         spec.families.end();
}

inline bool is_abelian_group(Group const &G)
{
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = a + 1; b < G.order(); ++b)
      if (G.mul(a, b) != G.mul(b, a))
        return false;
  return true;
}

} // namespace detail

/**
 * Groups that pass the order bound, in construction priority.  Earlier
 * families win when duplicates are removed, so S3 keeps its name over D6.
 */
inline std::vector<Group> candidate_groups(CorpusSpec const &spec)
{
  for (auto const &f : spec.families)
    if (std::find(all_family_names.begin(), all_family_names.end(), f) ==
        all_family_names.end())
      throw usage_error("unknown family: " + f);
  auto const max = spec.max_order;
  std::vector<Group> out;
  using detail::wants;

  if (wants(spec, "cyclic"))
    for (std::size_t n = 1; n <= max; ++n)
      out.push_back(families::cyclic(n));
  if (wants(spec, "abelian")) {
    std::vector<std::vector<std::size_t>> lists;
    std::vector<std::size_t> prefix;
    detail::invariant_factor_lists(max, prefix, 1, lists);
    for (auto const &l : lists) {
      std::string name;
      for (auto d : l)
        name += (name.empty() ? "C" : "xC") + std::to_string(d);
      out.push_back(families::abelian(l, name));
    }
  }
  if (wants(spec, "symmetric"))
    for (std::size_t n = 3, f = 6; f <= max; ++n, f *= n)
      out.push_back(families::symmetric(n));
  if (wants(spec, "alternating"))
    for (std::size_t n = 4, f = 12; f <= max; ++n, f *= n)
      out.push_back(families::alternating(n));
  if (wants(spec, "holomorph_cyclic"))
    for (std::size_t p = 3; p * (p - 1) <= max; p += 2)
      if (is_prime(p))
        out.push_back(families::holomorph_cyclic(p));
  if (wants(spec, "dicyclic"))
    for (std::size_t n = 2; 4 * n <= max; ++n)
      out.push_back(families::dicyclic(n));
  if (wants(spec, "dihedral"))
    for (std::size_t n = 3; 2 * n <= max; ++n)
      out.push_back(families::dihedral(n));
  std::vector<Group> semidirect;
  if (wants(spec, "semidirect_products"))
    for (std::size_t n = 3; n * 2 <= max; ++n)
      for (std::size_t m = 2; n * m <= max; ++m)
        for (std::size_t k = 2; k < n; ++k) {
          if (std::gcd(k, n) != 1)
            continue;
          auto ord = families::multiplicative_order(k, n);
          if (ord != 0 && m % ord == 0)
            semidirect.push_back(families::semidirect_cyclic(n, m, k));
        }
  if (wants(spec, "direct_products")) {
    // factors: every other candidate; at least one factor nonabelian
    std::vector<Group const *> factors;
    for (auto const *list : {&out, &semidirect})
      for (auto const &g : *list)
        if (g.order() > 1 && 2 * g.order() <= max)
          factors.push_back(&g);
    std::vector<Group> products;
    for (std::size_t a = 0; a < factors.size(); ++a)
      for (std::size_t b = a; b < factors.size(); ++b) {
        auto const &A = *factors[a];
        auto const &B = *factors[b];
        if (A.order() * B.order() > max)
          continue;
        bool na = !detail::is_abelian_group(A), nb = !detail::is_abelian_group(B);
        if (!na && !nb)
          continue;
        // nonabelian factor first in the name
        if (na)
          products.push_back(families::direct_product(A, B));
        else
          products.push_back(families::direct_product(B, A));
      }
    for (auto &p : products)
      out.push_back(std::move(p));
  }
  // direct product names are preferred over semidirect ones
  for (auto &g : semidirect)
    out.push_back(std::move(g));
  return out;
}

/// Keep the first of each isomorphism class (fingerprint, then table isomorphism).
inline std::vector<Group> deduplicate(std::vector<Group> groups)
{
  std::map<Fingerprint, std::vector<std::size_t>> seen;
  std::vector<Group> kept;
  for (auto &g : groups) {
    auto f = fingerprint(g);
    auto &bucket = seen[f];
    bool duplicate = false;
    for (auto idx : bucket)
      if (isomorphic(kept[idx], g)) {
        duplicate = true;
        break;
      }
    if (duplicate)
      continue;
    bucket.push_back(kept.size());
    kept.push_back(std::move(g));
  }
  return kept;
}

inline void sort_by_order_and_name(std::vector<Group> &groups)
{
  std::stable_sort(groups.begin(), groups.end(), [](Group const &a, Group const &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.name() < b.name();
  });
}

inline std::vector<Group> parse_group_file(std::string const &path);

/**
 * The built-in corpus plus any external files, deduplicated and sorted by
 * (order, name).  External groups obey the same order bound and exclusions.
 */
inline std::vector<Group> builtin_corpus(CorpusSpec const &spec = {})
{
  if (spec.max_order == 0)
    throw usage_error("max_order must be positive");
  auto all = candidate_groups(spec);
  for (auto const &path : spec.external_files)
    for (auto &g : parse_group_file(path))
      if (g.order() <= spec.max_order)
        all.push_back(std::move(g));
  std::erase_if(all, [&](Group const &g) {
    return std::find(spec.exclusions.begin(), spec.exclusions.end(), g.order()) !=
           spec.exclusions.end();
  });
  auto kept = deduplicate(std::move(all));
  sort_by_order_and_name(kept);
  return kept;
}

} // namespace pst

#include "group_file.hpp"

#endif // PST_CORPUS_HPP
