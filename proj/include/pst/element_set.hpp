#ifndef PST_ELEMENT_SET_HPP
#define PST_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pst
{

/// Element index inside a group; 0 is always the identity.
using Elem = std::uint32_t;

/**
 * Fixed-universe bitset over the element indices of one group.
 *
 * Ordering (operator<) is lexicographic on the sorted member lists, so the
 * set holding the lowest differing index compares smaller.  All tie-breaks
 * in the library ("smallest bitset") use this order.
 */
class ElementSet
{
public:
  ElementSet() = default;

  explicit ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63u) / 64u, 0u)
  {}

  std::size_t universe() const { return universe_; }

  void set(Elem x) { words_[x >> 6] |= bit(x); }
  void reset(Elem x) { words_[x >> 6] &= ~bit(x); }
  bool test(Elem x) const { return (words_[x >> 6] & bit(x)) != 0u; }

  std::size_t count() const
  {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const
  {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  bool subset_of(ElementSet const &other) const
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  std::size_t intersection_count(ElementSet const &other) const
  {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  ElementSet &operator&=(ElementSet const &other)
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= other.words_[i];
    return *this;
  }

  ElementSet &operator|=(ElementSet const &other)
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= other.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet lhs, ElementSet const &rhs)
  { return lhs &= rhs; }

  friend ElementSet operator|(ElementSet lhs, ElementSet const &rhs)
  { return lhs |= rhs; }

  friend bool operator==(ElementSet const &a, ElementSet const &b)
  { return a.universe_ == b.universe_ && a.words_ == b.words_; }

  friend bool operator<(ElementSet const &a, ElementSet const &b)
  {
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      auto diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        auto lowest = diff & (~diff + 1u);
        return (a.words_[i] & lowest) != 0u;
      }
    }
    return a.words_.size() < b.words_.size();
  }

  template <typename Fn>
  void for_each(Fn &&fn) const
  {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        auto tz = static_cast<unsigned>(std::countr_zero(w));
        fn(static_cast<Elem>(i * 64u + tz));
        w &= w - 1u;
      }
    }
  }

  std::vector<Elem> elements() const
  {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const
  {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

  std::vector<std::uint64_t> const &words() const { return words_; }

private:
  static std::uint64_t bit(Elem x) { return std::uint64_t{1} << (x & 63u); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const { return s.hash(); }
};

} // namespace pst

#endif // PST_ELEMENT_SET_HPP
