#ifndef PST_FAMILIES_HPP
#define PST_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "group.hpp"

namespace pst::families
{

inline Perm cycle_on(std::size_t degree, std::size_t start, std::size_t length)
{
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < length; ++i)
    c.push_back(static_cast<std::uint32_t>(start + i));
  if (length < 2)
    return Perm(degree);
  return Perm(degree, {c});
}

inline Group cyclic(std::size_t n)
{
  if (n == 1)
    return Group::from_generators({}, "C1", 1);
  return Group::from_generators({cycle_on(n, 0, n)}, "C" + std::to_string(n));
}

/// Direct product of cyclic groups of the given orders, on disjoint points.
inline Group abelian(std::vector<std::size_t> const &orders, std::string name)
{
  std::size_t degree = 0;
  for (auto m : orders)
    degree += m;
  std::vector<Perm> gens;
  std::size_t at = 0;
  for (auto m : orders) {
    if (m > 1)
      gens.push_back(cycle_on(degree, at, m));
    at += m;
  }
  return Group::from_generators(gens, std::move(name), std::max<std::size_t>(degree, 1));
}

/// Dihedral group of order 2n (n >= 3) acting on an n-gon.
inline Group dihedral(std::size_t n)
{
  std::vector<std::uint32_t> refl(n);
  for (std::size_t i = 0; i < n; ++i)
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  return Group::from_generators({cycle_on(n, 0, n), Perm(refl)},
                                "D" + std::to_string(2 * n));
}

inline Group symmetric(std::size_t n)
{
  if (n < 2)
    return Group::from_generators({}, "S" + std::to_string(n), 1);
  if (n == 2)
    return Group::from_generators({cycle_on(2, 0, 2)}, "S2");
  return Group::from_generators({cycle_on(n, 0, 2), cycle_on(n, 0, n)},
                                "S" + std::to_string(n));
}

/// Generated by the 3-cycles (0 1 k).
inline Group alternating(std::size_t n)
{
  if (n < 3)
    return Group::from_generators({}, "A" + std::to_string(n), 1);
  std::vector<Perm> gens;
  for (std::uint32_t k = 2; k < n; ++k)
    gens.push_back(Perm(n, {{0, 1, k}}));
  return Group::from_generators(gens, "A" + std::to_string(n));
}

inline std::size_t multiplicative_order(std::size_t k, std::size_t n)
{
  std::size_t x = k % n, ord = 1;
  while (x != 1 % n) {
    x = x * k % n;
    ++ord;
    if (ord > n)
      return 0;
  }
  return ord;
}

/// C_p x| Aut(C_p) as affine maps x -> a x + b on Z/p.
inline Group holomorph_cyclic(std::size_t p)
{
  std::size_t r = 2;
  while (multiplicative_order(r, p) != p - 1)
    ++r;
  std::vector<std::uint32_t> mult(p);
  for (std::size_t i = 0; i < p; ++i)
    mult[i] = static_cast<std::uint32_t>(i * r % p);
  return Group::from_generators({cycle_on(p, 0, p), Perm(mult)},
                                "Hol(C" + std::to_string(p) + ")");
}

/**
 * Right-regular representation of an abstract group given by a
 * multiplication rule on 0..n-1 (0 the identity).
 */
inline Group from_rule(std::size_t n,
                       std::function<std::size_t(std::size_t, std::size_t)> const &mul,
                       std::vector<std::size_t> const &gens, std::string name)
{
  std::vector<Perm> perms;
  for (auto g : gens) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = static_cast<std::uint32_t>(mul(x, g));
    perms.emplace_back(std::move(img));
  }
  return Group::from_generators(perms, std::move(name), n);
}

/// Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, a^x = a^-1>.
inline Group dicyclic(std::size_t n)
{
  auto m = 2 * n;
  // element a^i x^j encoded as i + m j
  auto mul = [m, n](std::size_t u, std::size_t v) -> std::size_t {
    std::size_t i = u % m, j = u / m, k = v % m, l = v / m;
    if (j == 0)
      return (i + k) % m + m * l;
    std::size_t e = (i + m - k) % m;
    if (l == 1)
      return (e + n) % m;
    return e + m;
  };
  std::string name = n == 2 ? "Q8" : "Dic" + std::to_string(4 * n);
  return from_rule(4 * n, mul, {1, m}, name);
}

inline Group direct_product(Group const &A, Group const &B, std::string name = {})
{
  if (!A.has_permutations() || !B.has_permutations())
    throw usage_error("direct_product needs permutation groups");
  auto da = A.degree(), db = B.degree();
  std::vector<Perm> gens;
  for (auto const &g : A.generators())
    gens.push_back(g.extended(da + db));
  for (auto const &g : B.generators())
    gens.push_back(g.extended(da + db, da));
  if (name.empty())
    name = A.name() + "x" + B.name();
  return Group::from_generators(gens, std::move(name), da + db);
}

/**
 * C_n x| C_m where the generator of C_m acts by x -> x^k.  Requires
 * gcd(k, n) = 1 and k^m = 1 mod n; the extra m-cycle keeps the action
 * kernel so the order is always n m.
 */
inline Group semidirect_cyclic(std::size_t n, std::size_t m, std::size_t k)
{
  if (n < 2 || m < 2 || std::gcd(k, n) != 1)
    throw usage_error("semidirect_cyclic: invalid parameters");
  auto ord = multiplicative_order(k, n);
  if (ord == 0 || m % ord != 0)
    throw usage_error("semidirect_cyclic: k^m is not 1 mod n");
  auto degree = n + m;
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<std::uint32_t>(i * k % n);
  for (std::size_t i = 0; i < m; ++i)
    img[n + i] = static_cast<std::uint32_t>(n + (i + 1) % m);
  return Group::from_generators({cycle_on(degree, 0, n), Perm(img)},
                                "C" + std::to_string(n) + ":C" +
                                  std::to_string(m) + "[" +
                                  std::to_string(k) + "]");
}

} // namespace pst::families

#endif // PST_FAMILIES_HPP
