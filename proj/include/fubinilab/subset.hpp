#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace fubinilab {

using PointId = std::uint32_t;

/// Finite subset of a carrier, stored sorted and without duplicates.
using Subset = std::vector<PointId>;

inline bool is_subset(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool contains(const Subset& s, PointId x) { return std::binary_search(s.begin(), s.end(), x); }

inline Subset normalized(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Subset set_intersection(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Image of a subset under a point function.
inline Subset image(const std::vector<PointId>& map, const Subset& s) {
  Subset out;
  out.reserve(s.size());
  for (PointId x : s) out.push_back(map[x]);
  return normalized(std::move(out));
}

/// Drops empty sets, duplicates and every set contained in another one.
/// The result is sorted, so two families generating the same down-set compare equal.
std::vector<Subset> maximal_antichain(std::vector<Subset> sets);

/// True when `a` lies inside at least one member of `gens`.
inline bool covered(const Subset& a, const std::vector<Subset>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Subset& g) { return is_subset(a, g); });
}

/// Maximal nonempty subsets of `universe` accepted by a down-closed predicate.
///
/// `accept` must be monotone decreasing (if it accepts S it accepts every
/// nonempty subset of S). Returns the antichain of maximal accepted sets.
std::vector<Subset> maximal_sets(const Subset& universe, const std::function<bool(const Subset&)>& accept);

/// Closes a family of generators under down-closure and the supplied binary
/// and unary set operations, returning the maximal antichain of the least
/// fixpoint. With `unions` set, generators are also closed under union.
std::vector<Subset> close_family(std::vector<Subset> seeds,
                                 const std::function<Subset(const Subset&, const Subset&)>& combine,
                                 const std::vector<std::function<Subset(const Subset&)>>& unary, bool unions);

}  // namespace fubinilab
