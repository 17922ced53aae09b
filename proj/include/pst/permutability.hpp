#ifndef PST_PERMUTABILITY_HPP
#define PST_PERMUTABILITY_HPP

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "analysis.hpp"
#include "structure.hpp"

namespace pst
{

enum class PermutabilityKind
{
  permutable,
  s_permutable,
  quasipermutable,
  s_quasipermutable,
  propermutable,
  s_propermutable,
  semi_normal,
  ss_quasinormal
};

inline constexpr std::array<PermutabilityKind, 8> all_permutability_kinds{
  PermutabilityKind::permutable,      PermutabilityKind::s_permutable,
  PermutabilityKind::quasipermutable, PermutabilityKind::s_quasipermutable,
  PermutabilityKind::propermutable,   PermutabilityKind::s_propermutable,
  PermutabilityKind::semi_normal,     PermutabilityKind::ss_quasinormal};

inline std::string_view to_string(PermutabilityKind k)
{
  switch (k) {
  case PermutabilityKind::permutable:
    return "permutable";
  case PermutabilityKind::s_permutable:
    return "s_permutable";
  case PermutabilityKind::quasipermutable:
    return "quasipermutable";
  case PermutabilityKind::s_quasipermutable:
    return "s_quasipermutable";
  case PermutabilityKind::propermutable:
    return "propermutable";
  case PermutabilityKind::s_propermutable:
    return "s_propermutable";
  case PermutabilityKind::semi_normal:
    return "semi_normal";
  case PermutabilityKind::ss_quasinormal:
    return "ss_quasinormal";
  }
  return "?";
}

inline std::optional<PermutabilityKind> parse_permutability_kind(std::string_view s)
{
  for (auto k : all_permutability_kinds)
    if (to_string(k) == s)
      return k;
  return std::nullopt;
}

/// Kinds whose holding is implied by `k` holding (k itself excluded).
inline std::vector<PermutabilityKind> implied_kinds(PermutabilityKind k)
{
  using K = PermutabilityKind;
  switch (k) {
  case K::permutable:
    return {K::s_permutable,      K::quasipermutable, K::s_quasipermutable,
            K::propermutable,     K::s_propermutable, K::semi_normal,
            K::ss_quasinormal};
  case K::semi_normal:
    return {K::propermutable, K::s_propermutable, K::ss_quasinormal};
  case K::propermutable:
  case K::ss_quasinormal:
    return {K::s_propermutable};
  case K::quasipermutable:
    return {K::s_quasipermutable};
  default:
    return {};
  }
}

struct PermutabilityVerdict
{
  bool holds = false;
  std::optional<SubId> witness_B;
  std::string refutation;
};

namespace detail
{

inline bool needs_normalizer_cover(PermutabilityKind k)
{
  using K = PermutabilityKind;
  return k == K::quasipermutable || k == K::s_quasipermutable ||
         k == K::propermutable || k == K::s_propermutable;
}

/// Coverage: N_U(H) B = U, or H B = U for the semi-normal family.
inline bool covers(Analysis &an, SubId H, SubId U, SubId B,
                   PermutabilityKind kind)
{
  auto const &L = an.lattice();
  if (needs_normalizer_cover(kind)) {
    auto const &norm = L[L.normalizer(H)].members();
    auto n = norm.intersection_count(L[U].members());
    auto nb = norm.intersection_count(L[B].members());
    return n * an.order(B) / nb == an.order(U);
  }
  return L.product_size(H, B) == an.order(U);
}

/// Describes the first subgroup of B that H fails to permute with, if any.
inline std::optional<std::string> first_failure(Analysis &an, SubId H, SubId B,
                                                PermutabilityKind kind)
{
  using K = PermutabilityKind;
  auto const &L = an.lattice();
  auto h = an.order(H);
  auto fail = [&](SubId A, char const *what) {
    return std::string(what) + " of order " + std::to_string(an.order(A)) +
           " (subgroup #" + std::to_string(A) + ")";
  };
  switch (kind) {
  case K::quasipermutable:
    if (!an.permutes(H, B))
      return fail(B, "does not permute with B");
    for (auto a : L.subgroups_of(B))
      if (std::gcd(h, an.order(a)) == 1 && !an.permutes(H, a))
        return fail(a, "does not permute with coprime subgroup");
    return std::nullopt;
  case K::s_quasipermutable:
    if (!an.permutes(H, B))
      return fail(B, "does not permute with B");
    for (auto q : prime_divisors(an.order(B))) {
      if (h % q == 0)
        continue;
      for (auto a : sylow_subgroups(an, B, q))
        if (!an.permutes(H, a))
          return fail(a, "does not permute with coprime Sylow subgroup");
    }
    return std::nullopt;
  case K::propermutable:
  case K::semi_normal:
    for (auto a : L.subgroups_of(B))
      if (!an.permutes(H, a))
        return fail(a, "does not permute with subgroup");
    return std::nullopt;
  case K::s_propermutable:
  case K::ss_quasinormal:
    for (auto q : prime_divisors(an.order(B)))
      for (auto a : sylow_subgroups(an, B, q))
        if (!an.permutes(H, a))
          return fail(a, "does not permute with Sylow subgroup");
    return std::nullopt;
  default:
    return std::nullopt;
  }
}

} // namespace detail

/**
 * Re-checks a single candidate B for H <= U.  For permutable and
 * s_permutable the witness must be U itself (those kinds quantify over
 * all subgroups / Sylow subgroups of U).
 */
inline bool holds_with_witness(Analysis &an, SubId H, SubId U, SubId B,
                               PermutabilityKind kind)
{
  using K = PermutabilityKind;
  auto const &L = an.lattice();
  if (!L.contains(U, H) || !L.contains(U, B))
    throw usage_error("holds_with_witness: subgroups are not inside U");
  if (kind == K::permutable)
    return B == U && !detail::first_failure(an, H, U, K::propermutable);
  if (kind == K::s_permutable)
    return B == U && !detail::first_failure(an, H, U, K::s_propermutable);
  return detail::covers(an, H, U, B, kind) &&
         !detail::first_failure(an, H, B, kind);
}

/**
 * Existential search for a witness B over the subgroups of U, largest
 * first.  Results are memoised per (H, U, kind) in the Analysis.
 */
inline PermutabilityVerdict permutability_status(Analysis &an, SubId H,
                                                 SubId U,
                                                 PermutabilityKind kind)
{
  using K = PermutabilityKind;
  auto const &L = an.lattice();
  if (!L.contains(U, H))
    throw usage_error("permutability_status: H is not a subgroup of U");

  auto key = cache_key(H, U, static_cast<std::uint64_t>(kind));
  if (auto it = an.permutability_cache.find(key);
      it != an.permutability_cache.end())
    return {it->second.holds, it->second.witness, it->second.refutation};

  PermutabilityVerdict v;
  if (kind == K::permutable || kind == K::s_permutable) {
    auto failure = detail::first_failure(
      an, H, U, kind == K::permutable ? K::propermutable : K::s_propermutable);
    v.holds = !failure;
    if (v.holds)
      v.witness_B = U;
    else
      v.refutation = *failure;
  } else {
    auto subs = L.subgroups_of(U);
    std::optional<std::string> best_failure;
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      auto b = *it;
      if (!detail::covers(an, H, U, b, kind))
        continue;
      auto failure = detail::first_failure(an, H, b, kind);
      if (!failure) {
        v.holds = true;
        v.witness_B = b;
        break;
      }
      if (!best_failure)
        best_failure = "B #" + std::to_string(b) + ": H " + *failure;
    }
    if (!v.holds)
      v.refutation = best_failure.value_or("no subgroup B satisfies coverage");
  }
  an.permutability_cache.emplace(
    key, CachedPermutability{v.holds, v.witness_B, v.refutation});
  return v;
}

inline PermutabilityVerdict permutability_status(Analysis &an, SubId H,
                                                 PermutabilityKind kind)
{ return permutability_status(an, H, an.whole(), kind); }

inline bool is(Analysis &an, SubId H, PermutabilityKind kind)
{ return permutability_status(an, H, kind).holds; }

inline bool is(Analysis &an, SubId H, SubId U, PermutabilityKind kind)
{ return permutability_status(an, H, U, kind).holds; }

// ---------------------------------------------------------------------------
// Transitivity classes (T, PT, PST, SQT)
// ---------------------------------------------------------------------------

enum class Relation
{
  normal,
  permutable,
  s_permutable,
  s_quasipermutable
};

inline std::string_view to_string(Relation r)
{
  switch (r) {
  case Relation::normal:
    return "T";
  case Relation::permutable:
    return "PT";
  case Relation::s_permutable:
    return "PST";
  case Relation::s_quasipermutable:
    return "SQT";
  }
  return "?";
}

/// K stands in relation r to H, with H as the ambient group.
inline bool related(Analysis &an, SubId K, SubId H, Relation r)
{
  switch (r) {
  case Relation::normal:
    return an.lattice().is_normal_in(K, H);
  case Relation::permutable:
    return is(an, K, H, PermutabilityKind::permutable);
  case Relation::s_permutable:
    return is(an, K, H, PermutabilityKind::s_permutable);
  case Relation::s_quasipermutable:
    return is(an, K, H, PermutabilityKind::s_quasipermutable);
  }
  return false;
}

struct TransitivityResult
{
  bool holds = true;
  /// (K, H, U) with K related in H, H related in U, K not related in U.
  std::optional<std::array<SubId, 3>> counterexample;
};

inline TransitivityResult transitivity_class(Analysis &an, SubId U, Relation r)
{
  auto const &L = an.lattice();
  TransitivityResult out;
  for (auto h : L.subgroups_of(U)) {
    if (h == U || !related(an, h, U, r))
      continue;
    for (auto k : L.subgroups_of(h)) {
      if (k == h || related(an, k, U, r))
        continue;
      if (related(an, k, h, r)) {
        out.holds = false;
        out.counterexample = std::array<SubId, 3>{k, h, U};
        return out;
      }
    }
  }
  return out;
}

inline TransitivityResult transitivity_class(Analysis &an, Relation r)
{ return transitivity_class(an, an.whole(), r); }

} // namespace pst

#endif // PST_PERMUTABILITY_HPP
