#ifndef PST_ANALYSIS_HPP
#define PST_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lattice.hpp"

namespace pst
{

struct QuotientAnalysis;

/// Cached outcome of one permutability query (see permutability.hpp).
struct CachedPermutability
{
  bool holds = false;
  std::optional<SubId> witness;
  std::string refutation;
};

/**
 * Per-group working state: the immutable lattice plus memo tables for the
 * structural and permutability queries.  Not thread-safe; each worker owns
 * its own Analysis while sharing the underlying Group.
 */
class Analysis
{
public:
  explicit Analysis(std::shared_ptr<Group const> group,
                    std::size_t lattice_cap = default_lattice_cap)
    : Analysis(std::make_shared<Lattice const>(std::move(group), lattice_cap))
  {}

  explicit Analysis(std::shared_ptr<Lattice const> lattice)
    : lattice_(std::move(lattice)),
      permutes_(lattice_->size() * lattice_->size(), -1),
      chief_(lattice_->size())
  {}

  Analysis(Analysis const &) = delete;
  Analysis &operator=(Analysis const &) = delete;
  ~Analysis();

  Lattice const &lattice() const { return *lattice_; }
  Group const &group() const { return lattice_->group(); }
  std::shared_ptr<Group const> const &group_ptr() const
  { return lattice_->group_ptr(); }
  SubId whole() const { return lattice_->whole(); }
  SubId trivial() const { return lattice_->trivial(); }
  std::size_t order(SubId H) const { return lattice_->order(H); }

  /// HK = KH, memoised over the lattice.
  bool permutes(SubId h, SubId k)
  {
    auto n = lattice_->size();
    auto &slot = permutes_[h * n + k];
    if (slot < 0) {
      auto const &L = *lattice_;
      bool r;
      if (L.contains(h, k) || L.contains(k, h) || L.is_normal(h) ||
          L.is_normal(k))
        r = true;
      else if (group().order() % L.product_size(h, k) != 0)
        r = false;
      else
        r = pst::permutes(L[h], L[k]);
      slot = r ? 1 : 0;
      permutes_[k * n + h] = slot;
    }
    return slot != 0;
  }

  ChiefSeries const &chief_series_of(SubId U)
  {
    if (!chief_[U])
      chief_[U] = chief_series(*lattice_, U);
    return *chief_[U];
  }

  /// G/N with its own Analysis; N must be normal.
  QuotientAnalysis &quotient(SubId N);

  /// Harness self-test hook: when set, selected predicates are corrupted.
  bool mutation = false;

  std::unordered_map<std::uint64_t, std::vector<SubId>> sylow_cache;
  std::map<std::pair<SubId, std::string>, SubId> residual_cache;
  std::unordered_map<std::uint64_t, bool> predicate_cache;
  std::unordered_map<std::uint64_t, CachedPermutability> permutability_cache;
  std::unordered_map<std::uint64_t, bool> relation_cache;

private:
  std::shared_ptr<Lattice const> lattice_;
  std::vector<std::int8_t> permutes_;
  std::vector<std::optional<ChiefSeries>> chief_;
  std::unordered_map<SubId, std::unique_ptr<QuotientAnalysis>> quotients_;
};

struct QuotientAnalysis
{
  Quotient quotient;
  std::unique_ptr<Analysis> analysis;

  /// Lattice index of HN/N.
  SubId image(Lattice const &parent, SubId H) const
  {
    auto img = quotient.image(parent[H]);
    return analysis->lattice().index_of(img.members());
  }
};

inline Analysis::~Analysis() = default;

inline QuotientAnalysis &Analysis::quotient(SubId N)
{
  auto it = quotients_.find(N);
  if (it != quotients_.end())
    return *it->second;
  auto qa = std::make_unique<QuotientAnalysis>();
  qa->quotient = quotient_group(group(), (*lattice_)[N]);
  qa->analysis = std::make_unique<Analysis>(qa->quotient.group,
                                            std::max(group().order(),
                                                     std::size_t{1}));
  auto &ref = *qa;
  quotients_.emplace(N, std::move(qa));
  return ref;
}

/// Packs up to four small integers into a cache key.
inline std::uint64_t cache_key(std::uint64_t a, std::uint64_t b = 0,
                               std::uint64_t c = 0, std::uint64_t d = 0)
{
  return (a << 40) ^ (b << 20) ^ (c << 8) ^ d;
}

} // namespace pst

#endif // PST_ANALYSIS_HPP
