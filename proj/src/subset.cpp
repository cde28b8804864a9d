#include "fubinilab/subset.hpp"

#include <set>

namespace fubinilab {

std::vector<Subset> maximal_antichain(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Subset> kept;
  for (auto& s : sets) {
    if (s.empty()) continue;
    if (covered(s, kept)) continue;
    kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

void extend(const Subset& universe, std::size_t from, Subset& current,
            const std::function<bool(const Subset&)>& accept, std::vector<Subset>& found) {
  bool extended = false;
  for (std::size_t i = from; i < universe.size(); ++i) {
    Subset next = current;
    next.insert(std::upper_bound(next.begin(), next.end(), universe[i]), universe[i]);
    if (!accept(next)) continue;
    extended = true;
    extend(universe, i + 1, next, accept, found);
  }
  if (extended || current.empty()) return;
  // current cannot grow with later elements; it is maximal if no earlier element fits either
  for (PointId c : universe) {
    if (contains(current, c)) continue;
    Subset next = current;
    next.insert(std::upper_bound(next.begin(), next.end(), c), c);
    if (accept(next)) return;
  }
  found.push_back(current);
}

}  // namespace

std::vector<Subset> maximal_sets(const Subset& universe, const std::function<bool(const Subset&)>& accept) {
  Subset singles;
  for (PointId c : universe) {
    if (accept(Subset{c})) singles.push_back(c);
  }
  if (singles.empty()) return {};
  if (accept(singles)) return {singles};
  std::vector<Subset> found;
  Subset current;
  extend(singles, 0, current, accept, found);
  return maximal_antichain(std::move(found));
}

std::vector<Subset> close_family(std::vector<Subset> seeds,
                                 const std::function<Subset(const Subset&, const Subset&)>& combine,
                                 const std::vector<std::function<Subset(const Subset&)>>& unary, bool unions) {
  auto gens = maximal_antichain(std::move(seeds));
  for (;;) {
    if (unions && gens.size() > 1) {
      Subset all;
      for (const auto& g : gens) all = set_union(all, g);
      gens = {all};
    }
    std::vector<Subset> next = gens;
    for (const auto& a : gens) {
      for (const auto& f : unary) next.push_back(f(a));
      for (const auto& b : gens) next.push_back(combine(a, b));
    }
    next = maximal_antichain(std::move(next));
    if (unions && next.size() > 1) {
      Subset all;
      for (const auto& g : next) all = set_union(all, g);
      next = {all};
    }
    if (next == gens) return gens;
    gens = std::move(next);
  }
}

}  // namespace fubinilab
