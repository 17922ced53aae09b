#ifndef PST_PRIMES_HPP
#define PST_PRIMES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pst
{

inline bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Distinct prime divisors of n in increasing order.
inline std::vector<unsigned> prime_divisors(std::size_t n)
{
  std::vector<unsigned> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(static_cast<unsigned>(n));
  return out;
}

/// Largest divisor of n that is a power of p.
inline std::size_t p_part(std::size_t n, unsigned p)
{
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

inline bool is_prime_power(std::size_t n)
{ return n > 1 && prime_divisors(n).size() == 1; }

/**
 * A finite set of primes (the "pi" of pi-subgroups, pi-cores, ...).
 *
 * Complements are always taken relative to an explicit universe, normally
 * the prime divisors of a group order.
 */
class PrimeSet
{
public:
  PrimeSet() = default;

  PrimeSet(std::initializer_list<unsigned> primes)
    : PrimeSet(std::vector<unsigned>(primes))
  {}

  explicit PrimeSet(std::vector<unsigned> primes) : primes_(std::move(primes))
  {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (auto p : primes_)
      if (!is_prime(p))
        throw validation_error(std::to_string(p) + " is not prime");
  }

  static PrimeSet of(std::size_t n) { return PrimeSet(prime_divisors(n)); }

  bool contains(unsigned p) const
  { return std::binary_search(primes_.begin(), primes_.end(), p); }

  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  std::vector<unsigned> const &primes() const { return primes_; }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  /// True iff every prime divisor of n lies in the set (1 qualifies).
  bool is_pi_number(std::size_t n) const
  {
    for (auto p : prime_divisors(n))
      if (!contains(p))
        return false;
    return true;
  }

  /// No prime divisor of n lies in the set.
  bool is_pi_prime_number(std::size_t n) const
  {
    for (auto p : prime_divisors(n))
      if (contains(p))
        return false;
    return true;
  }

  /// The pi-part of n.
  std::size_t part_of(std::size_t n) const
  {
    std::size_t out = 1;
    for (auto p : primes_)
      out *= p_part(n, p);
    return out;
  }

  PrimeSet complement_in(PrimeSet const &universe) const
  {
    std::vector<unsigned> out;
    for (auto p : universe.primes_)
      if (!contains(p))
        out.push_back(p);
    return PrimeSet(std::move(out));
  }

  PrimeSet intersection(PrimeSet const &other) const
  {
    std::vector<unsigned> out;
    std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(),
                          other.primes_.end(), std::back_inserter(out));
    return PrimeSet(std::move(out));
  }

  PrimeSet united(PrimeSet const &other) const
  {
    std::vector<unsigned> out;
    std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(),
                   other.primes_.end(), std::back_inserter(out));
    return PrimeSet(std::move(out));
  }

  bool subset_of(PrimeSet const &other) const
  {
    return std::includes(other.primes_.begin(), other.primes_.end(),
                         primes_.begin(), primes_.end());
  }

  /// All subsets of this set, in binary-counter order (empty set first).
  std::vector<PrimeSet> subsets() const
  {
    std::vector<PrimeSet> out;
    std::size_t n = primes_.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<unsigned> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i))
          s.push_back(primes_[i]);
      out.emplace_back(std::move(s));
    }
    return out;
  }

  std::string to_string() const
  {
    std::string out = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i)
        out += ",";
      out += std::to_string(primes_[i]);
    }
    return out + "}";
  }

  friend bool operator==(PrimeSet const &, PrimeSet const &) = default;

private:
  std::vector<unsigned> primes_;
};

} // namespace pst

#endif // PST_PRIMES_HPP
