#ifndef PST_PERM_HPP
#define PST_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pst
{

/**
 * Permutation of {0, ..., degree-1} stored as an image array.
 *
 * Products act on the right: (a * b)(x) = b(a(x)), i.e. apply a first.
 */
class Perm
{
public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(std::size_t degree) : images_(degree)
  {
    for (std::size_t i = 0; i < degree; ++i)
      images_[i] = static_cast<std::uint32_t>(i);
  }

  explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images))
  {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x])
        throw validation_error("permutation images are not a bijection");
      seen[x] = true;
    }
  }

  /// Build from disjoint cycles, e.g. Perm(5, {{0, 1}, {2, 3, 4}}).
  Perm(std::size_t degree,
       std::vector<std::vector<std::uint32_t>> const &cycles)
    : Perm(degree)
  {
    std::vector<bool> used(degree, false);
    for (auto const &cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto x = cycle[i];
        if (x >= degree)
          throw validation_error("cycle point " + std::to_string(x) +
                                 " outside degree " + std::to_string(degree));
        if (used[x])
          throw validation_error("cycles are not disjoint at point " +
                                 std::to_string(x));
        used[x] = true;
        images_[x] = cycle[(i + 1) % cycle.size()];
      }
    }
  }

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::vector<std::uint32_t> const &images() const { return images_; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  friend Perm operator*(Perm const &a, Perm const &b)
  {
    if (a.degree() != b.degree())
      throw usage_error("degree mismatch in permutation product");
    std::vector<std::uint32_t> out(a.degree());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = b.images_[a.images_[i]];
    Perm p;
    p.images_ = std::move(out);
    return p;
  }

  Perm inverse() const
  {
    Perm p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      p.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return p;
  }

  /// Same point set on a larger domain; extra points are fixed.
  Perm extended(std::size_t degree, std::size_t shift = 0) const
  {
    Perm p(degree);
    for (std::size_t i = 0; i < images_.size(); ++i)
      p.images_[i + shift] = static_cast<std::uint32_t>(images_[i] + shift);
    return p;
  }

  friend bool operator==(Perm const &a, Perm const &b)
  { return a.images_ == b.images_; }

  /// Disjoint-cycle notation without fixed points; identity prints as "()".
  std::string to_cycle_string() const
  {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start)
        continue;
      out += '(';
      std::size_t x = start;
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first)
          out += ' ';
        out += std::to_string(x);
        first = false;
        x = images_[x];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

private:
  std::vector<std::uint32_t> images_;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace pst

#endif // PST_PERM_HPP
