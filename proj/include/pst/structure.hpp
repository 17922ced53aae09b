#ifndef PST_STRUCTURE_HPP
#define PST_STRUCTURE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "primes.hpp"

namespace pst
{

// ---------------------------------------------------------------------------
// Sylow and Hall subgroups
// ---------------------------------------------------------------------------

/// All Sylow p-subgroups of U (ascending); {trivial} when p does not divide |U|.
inline std::vector<SubId> const &sylow_subgroups(Analysis &an, SubId U,
                                                 unsigned p)
{
  auto key = cache_key(U, 0, p);
  auto it = an.sylow_cache.find(key);
  if (it != an.sylow_cache.end())
    return it->second;
  auto target = p_part(an.order(U), p);
  std::vector<SubId> out;
  for (auto x : an.lattice().subgroups_of(U))
    if (an.order(x) == target)
      out.push_back(x);
  return an.sylow_cache.emplace(key, std::move(out)).first->second;
}

/// One Sylow p-subgroup of U: the least in (order, members) order.
inline SubId sylow(Analysis &an, SubId U, unsigned p)
{ return sylow_subgroups(an, U, p).front(); }

inline SubId sylow(Analysis &an, unsigned p) { return sylow(an, an.whole(), p); }

inline bool is_hall(Lattice const &L, SubId H, SubId U)
{
  auto h = L.order(H);
  return std::gcd(h, L.order(U) / h) == 1;
}

struct HallSubgroups
{
  std::vector<SubId> subgroups;
  bool all_conjugate = true;
};

/// Hall pi-subgroups of U, with whether they form one U-conjugacy class.
inline HallSubgroups hall(Analysis &an, SubId U, PrimeSet const &pi)
{
  auto const &L = an.lattice();
  auto target = pi.part_of(an.order(U));
  HallSubgroups out;
  for (auto x : L.subgroups_of(U))
    if (an.order(x) == target)
      out.subgroups.push_back(x);
  if (out.subgroups.size() > 1) {
    auto first = out.subgroups.front();
    std::vector<bool> reached(L.size(), false);
    L[U].members().for_each(
      [&](Elem u) { reached[L.conjugate(first, u)] = true; });
    for (auto x : out.subgroups)
      if (!reached[x])
        out.all_conjugate = false;
  }
  return out;
}

inline HallSubgroups hall(Analysis &an, PrimeSet const &pi)
{ return hall(an, an.whole(), pi); }

/// Largest normal pi-subgroup of U.
inline SubId o_pi(Analysis &an, SubId U, PrimeSet const &pi)
{
  auto const &L = an.lattice();
  auto best = L.trivial();
  for (auto x : normal_subgroups(L, U))
    if (pi.is_pi_number(an.order(x)))
      best = L.join(best, x);
  if (!pi.is_pi_number(an.order(best)))
    throw std::logic_error("join of normal pi-subgroups is not a pi-group");
  return best;
}

inline SubId o_pi(Analysis &an, PrimeSet const &pi)
{ return o_pi(an, an.whole(), pi); }

/// Largest normal subgroup Y of U containing X with |Y:X| a pi-number.
inline SubId relative_o_pi(Analysis &an, SubId U, SubId X, PrimeSet const &pi)
{
  auto const &L = an.lattice();
  SubId best = X;
  for (auto y : normal_subgroups(L, U))
    if (L.contains(y, X) && pi.is_pi_number(an.order(y) / an.order(X)) &&
        an.order(y) > an.order(best))
      best = y;
  return best;
}

// ---------------------------------------------------------------------------
// Class predicates
// ---------------------------------------------------------------------------

inline bool is_abelian(Analysis &an, SubId U)
{ return factor_is_abelian(an.lattice(), U, an.trivial()); }

/// Nilpotent iff for every p the p-elements of U number exactly |U|_p.
inline bool is_nilpotent(Analysis &an, SubId U)
{
  auto key = cache_key(U, 0, 1);
  auto it = an.predicate_cache.find(key);
  if (it != an.predicate_cache.end())
    return it->second;
  auto const &G = an.group();
  auto n = an.order(U);
  bool ok = true;
  for (auto p : prime_divisors(n)) {
    std::size_t count = 0;
    an.lattice()[U].members().for_each([&](Elem x) {
      if (p_part(G.element_order(x), p) == G.element_order(x))
        ++count;
    });
    if (count != p_part(n, p)) {
      ok = false;
      break;
    }
  }
  an.predicate_cache.emplace(key, ok);
  return ok;
}

inline bool is_soluble(Analysis &an, SubId U)
{
  for (auto const &f : an.chief_series_of(U).factors)
    if (!f.abelian)
      return false;
  return true;
}

inline bool is_supersoluble(Analysis &an, SubId U)
{
  for (auto const &f : an.chief_series_of(U).factors)
    if (!is_prime(f.order))
      return false;
  return true;
}

/// Every chief factor of order divisible by p has order exactly p.
inline bool is_p_supersoluble(Analysis &an, SubId U, unsigned p)
{
  for (auto const &f : an.chief_series_of(U).factors)
    if (f.order % p == 0 && f.order != p)
      return false;
  return true;
}

inline bool is_pi_separable(Analysis &an, SubId U, PrimeSet const &pi)
{
  for (auto const &f : an.chief_series_of(U).factors)
    if (!pi.is_pi_number(f.order) && !pi.is_pi_prime_number(f.order))
      return false;
  return true;
}

/// Chief factors are pi'-groups or abelian p-groups with p in pi.
inline bool is_pi_soluble(Analysis &an, SubId U, PrimeSet const &pi)
{
  for (auto const &f : an.chief_series_of(U).factors) {
    if (pi.is_pi_prime_number(f.order))
      continue;
    if (!pi.is_pi_number(f.order) || !f.abelian)
      return false;
  }
  return true;
}

inline bool is_pi_closed(Analysis &an, SubId U, PrimeSet const &pi)
{
  for (auto h : hall(an, U, pi).subgroups)
    if (an.lattice().is_normal_in(h, U))
      return true;
  return false;
}

/// Every element of U induces an inner automorphism on every chief factor of U.
inline bool is_quasinilpotent(Analysis &an, SubId U)
{
  auto key = cache_key(U, 0, 2);
  auto it = an.predicate_cache.find(key);
  if (it != an.predicate_cache.end())
    return it->second;
  bool ok = true;
  for (auto const &f : an.chief_series_of(U).factors)
    if (!factor_is_inner(an.lattice(), f.upper, f.lower, U)) {
      ok = false;
      break;
    }
  an.predicate_cache.emplace(key, ok);
  return ok;
}

struct ClassFlags
{
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
  bool supersoluble = false;
  bool quasinilpotent = false;
};

inline ClassFlags class_predicates(Analysis &an, SubId U)
{
  ClassFlags f;
  f.abelian = is_abelian(an, U);
  f.nilpotent = is_nilpotent(an, U);
  f.soluble = is_soluble(an, U);
  f.supersoluble = is_supersoluble(an, U);
  f.quasinilpotent = is_quasinilpotent(an, U);
  return f;
}

inline ClassFlags class_predicates(Analysis &an)
{ return class_predicates(an, an.whole()); }

// ---------------------------------------------------------------------------
// Formations and residuals
// ---------------------------------------------------------------------------

/// The concrete formations the library can decide.
class Formation
{
public:
  enum class Kind
  {
    abelian,
    nilpotent,
    supersoluble,
    soluble,
    pi_groups,
    p_supersoluble
  };

  static Formation abelian() { return Formation(Kind::abelian); }
  static Formation nilpotent() { return Formation(Kind::nilpotent); }
  static Formation supersoluble() { return Formation(Kind::supersoluble); }
  static Formation soluble() { return Formation(Kind::soluble); }
  static Formation pi_groups(PrimeSet pi)
  {
    Formation f(Kind::pi_groups);
    f.primes_ = std::move(pi);
    return f;
  }
  static Formation p_supersoluble(unsigned p)
  {
    Formation f(Kind::p_supersoluble);
    f.primes_ = PrimeSet{p};
    return f;
  }

  Kind kind() const { return kind_; }
  PrimeSet const &primes() const { return primes_; }

  std::string name() const
  {
    switch (kind_) {
    case Kind::abelian:
      return "abelian";
    case Kind::nilpotent:
      return "nilpotent";
    case Kind::supersoluble:
      return "supersoluble";
    case Kind::soluble:
      return "soluble";
    case Kind::pi_groups:
      return "pi_groups" + primes_.to_string();
    case Kind::p_supersoluble:
      return "p_supersoluble" + primes_.to_string();
    }
    return "?";
  }

private:
  explicit Formation(Kind k) : kind_(k) {}

  Kind kind_;
  PrimeSet primes_;
};

/**
 * U/N belongs to F, decided from the chief factors of U above N (by
 * Jordan-Hoelder these do not depend on the chosen series).
 */
inline bool quotient_in(Analysis &an, SubId U, SubId N, Formation const &F)
{
  auto const &L = an.lattice();
  if (!L.contains(U, N) || !L.is_normal_in(N, U))
    throw usage_error("quotient_in: N is not normal in U");
  if (F.kind() == Formation::Kind::abelian)
    return factor_is_abelian(L, U, N);
  if (F.kind() == Formation::Kind::pi_groups)
    return F.primes().is_pi_number(an.order(U) / an.order(N));
  auto factors = N == an.trivial() ? an.chief_series_of(U).factors
                                   : chief_factors_above(L, U, N);
  for (auto const &f : factors) {
    switch (F.kind()) {
    case Formation::Kind::nilpotent:
      if (!factor_is_central(L, f.upper, f.lower, U))
        return false;
      break;
    case Formation::Kind::supersoluble:
      if (!is_prime(f.order))
        return false;
      break;
    case Formation::Kind::soluble:
      if (!f.abelian)
        return false;
      break;
    case Formation::Kind::p_supersoluble: {
      auto p = F.primes().primes().front();
      if (f.order % p == 0 && f.order != p)
        return false;
      break;
    }
    default:
      break;
    }
  }
  return true;
}

inline bool belongs_to(Analysis &an, SubId U, Formation const &F)
{
  if (F.kind() == Formation::Kind::nilpotent)
    return is_nilpotent(an, U);
  return quotient_in(an, U, an.trivial(), F);
}

/// U^F: intersection of the normal subgroups N of U with U/N in F.
inline SubId residual(Analysis &an, SubId U, Formation const &F)
{
  auto key = std::make_pair(U, F.name());
  auto it = an.residual_cache.find(key);
  if (it != an.residual_cache.end())
    return it->second;
  auto const &L = an.lattice();
  ElementSet meet = L[U].members();
  for (auto n : normal_subgroups(L, U))
    if (quotient_in(an, U, n, F))
      meet &= L[n].members();
  auto r = L.index_of(meet);
  // formations are closed under subdirect products, so U/r must lie in F
  if (!quotient_in(an, U, r, F))
    throw std::logic_error("residual quotient is not in " + F.name());
  an.residual_cache.emplace(key, r);
  return r;
}

inline SubId residual(Analysis &an, Formation const &F)
{ return residual(an, an.whole(), F); }

inline SubId derived_subgroup(Analysis &an, SubId U)
{
  auto const &L = an.lattice();
  auto const &G = an.group();
  ElementSet comms(G.order());
  auto elems = L[U].elements();
  for (auto a : elems)
    for (auto b : elems)
      comms.set(G.commutator(a, b));
  return L.join_set(comms);
}

/// Largest normal nilpotent subgroup of U.
inline SubId fitting(Analysis &an, SubId U)
{
  auto const &L = an.lattice();
  auto f = L.trivial();
  for (auto n : normal_subgroups(L, U))
    if (is_nilpotent(an, n))
      f = L.join(f, n);
  if (!is_nilpotent(an, f))
    throw std::logic_error("Fitting subgroup is not nilpotent");
  return f;
}

inline SubId fitting(Analysis &an) { return fitting(an, an.whole()); }

/// Product of the normal quasinilpotent subgroups of U.
inline SubId f_star(Analysis &an, SubId U)
{
  auto const &L = an.lattice();
  auto f = L.trivial();
  for (auto n : normal_subgroups(L, U))
    if (is_quasinilpotent(an, n))
      f = L.join(f, n);
  if (!is_quasinilpotent(an, f))
    throw std::logic_error("generalized Fitting subgroup is not quasinilpotent");
  return f;
}

inline SubId f_star(Analysis &an) { return f_star(an, an.whole()); }

// ---------------------------------------------------------------------------
// Carter, Gaschuetz and F-projector subgroups
// ---------------------------------------------------------------------------

/// Self-normalizing nilpotent subgroups of U.
inline std::vector<SubId> carter_subgroups(Analysis &an, SubId U)
{
  auto const &L = an.lattice();
  std::vector<SubId> out;
  for (auto x : L.subgroups_of(U)) {
    auto nu = L[L.normalizer(x)].members().intersection_count(L[U].members());
    if (nu == an.order(x) && is_nilpotent(an, x))
      out.push_back(x);
  }
  return out;
}

inline std::vector<SubId> carter_subgroups(Analysis &an)
{ return carter_subgroups(an, an.whole()); }

/// Supersoluble S such that no pair S <= K <= H <= U has |H:K| prime.
inline std::vector<SubId> gaschutz_subgroups(Analysis &an, SubId U)
{
  auto const &L = an.lattice();
  std::vector<SubId> out;
  for (auto s : L.subgroups_of(U)) {
    if (!is_supersoluble(an, s))
      continue;
    bool ok = true;
    for (auto k : L.overgroups_of(s)) {
      if (!L.contains(U, k))
        continue;
      for (auto h : L.overgroups_of(k))
        if (L.contains(U, h) && is_prime(an.order(h) / an.order(k))) {
          ok = false;
          break;
        }
      if (!ok)
        break;
    }
    if (ok)
      out.push_back(s);
  }
  return out;
}

inline std::vector<SubId> gaschutz_subgroups(Analysis &an)
{ return gaschutz_subgroups(an, an.whole()); }

/// H in F with E = E^F H for every E between H and U.
inline std::vector<SubId> f_projectors(Analysis &an, SubId U,
                                       Formation const &F)
{
  auto const &L = an.lattice();
  std::vector<SubId> out;
  for (auto h : L.subgroups_of(U)) {
    if (!belongs_to(an, h, F))
      continue;
    bool ok = true;
    for (auto e : L.overgroups_of(h)) {
      if (!L.contains(U, e))
        continue;
      if (L.product_size(residual(an, e, F), h) != an.order(e)) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.push_back(h);
  }
  return out;
}

inline std::vector<SubId> f_projectors(Analysis &an, Formation const &F)
{ return f_projectors(an, an.whole(), F); }

// ---------------------------------------------------------------------------
// pi-series
// ---------------------------------------------------------------------------

/**
 * 1 = P_0 <= M_0 < P_1 < M_1 < ... <= M_t = U with M_i/P_i the pi'-core of
 * U/P_i and P_{i+1}/M_i the pi-core of U/M_i.  `length` is t.
 */
struct PiSeries
{
  std::vector<SubId> p_terms;
  std::vector<SubId> m_terms;
  std::size_t length = 0;
};

inline PiSeries pi_series(Analysis &an, SubId U, PrimeSet const &pi)
{
  if (!is_pi_separable(an, U, pi))
    throw std::domain_error("pi_series: group is not pi-separable");
  auto pi_prime = pi.complement_in(PrimeSet::of(an.order(U)));
  PiSeries s;
  SubId p = an.trivial();
  s.p_terms.push_back(p);
  SubId m = relative_o_pi(an, U, p, pi_prime);
  s.m_terms.push_back(m);
  while (m != U) {
    p = relative_o_pi(an, U, m, pi);
    if (p == m)
      throw std::logic_error("pi_series made no progress");
    m = relative_o_pi(an, U, p, pi_prime);
    s.p_terms.push_back(p);
    s.m_terms.push_back(m);
    ++s.length;
  }
  return s;
}

inline std::size_t pi_length(Analysis &an, SubId U, PrimeSet const &pi)
{ return pi_series(an, U, pi).length; }

// ---------------------------------------------------------------------------
// Power automorphisms, complements and the structural PST test
// ---------------------------------------------------------------------------

/// d^x lies in <d> for every d in D.  x must normalize D.
inline bool induces_power_automorphism(Group const &G, Elem x,
                                       Subgroup const &D)
{
  bool normalizes = true;
  D.members().for_each([&](Elem d) {
    if (!D.contains(G.conj(d, x)))
      normalizes = false;
  });
  if (!normalizes)
    throw usage_error("element does not normalize the subgroup");
  bool ok = true;
  D.members().for_each([&](Elem d) {
    if (!ok)
      return;
    auto image = G.conj(d, x);
    Elem y = d;
    while (y != image && y != 0)
      y = G.mul(y, d);
    if (y != image)
      ok = false;
  });
  return ok;
}

/// K <= U with HK = U and H n K = 1.
inline std::vector<SubId> complements(Lattice const &L, SubId H, SubId U)
{
  std::vector<SubId> out;
  auto target = L.order(U) / L.order(H);
  for (auto k : L.subgroups_of(U))
    if (L.order(k) == target &&
        L[k].members().intersection_count(L[H].members()) == 1)
      out.push_back(k);
  return out;
}

struct PstDecomposition
{
  bool holds = false;
  SubId residual = 0;
  std::optional<SubId> complement;
};

/**
 * Soluble U with U = D x| M, D = U^N an abelian Hall subgroup and every
 * element of M acting on D as a power automorphism.
 */
inline PstDecomposition is_soluble_pst_structural(Analysis &an, SubId U)
{
  auto const &L = an.lattice();
  PstDecomposition out;
  out.residual = residual(an, U, Formation::nilpotent());
  if (!is_soluble(an, U))
    return out;
  auto d = out.residual;
  if (!is_abelian(an, d) || !is_hall(L, d, U))
    return out;
  auto comps = complements(L, d, U);
  if (comps.empty())
    return out;
  out.complement = comps.front();
  bool ok = true;
  L[comps.front()].members().for_each([&](Elem x) {
    if (ok && !induces_power_automorphism(an.group(), x, L[d]))
      ok = false;
  });
  out.holds = ok;
  return out;
}

inline PstDecomposition is_soluble_pst_structural(Analysis &an)
{ return is_soluble_pst_structural(an, an.whole()); }

/// H is subnormal in U (iterated normal closures reach H).
inline bool is_subnormal(Lattice const &L, SubId H, SubId U)
{
  SubId current = U;
  while (current != H) {
    auto next = normal_closure(L, H, current);
    if (next == current)
      return false;
    current = next;
  }
  return true;
}

} // namespace pst

#endif // PST_STRUCTURE_HPP
