#include "fubinilab/convspace.hpp"

#include <string>

namespace fubinilab {

ConvSpace::ConvSpace() : gens_(std::make_shared<const std::vector<std::vector<Subset>>>()) {}

ConvSpace ConvSpace::from_generators(std::vector<std::vector<Subset>> gens, bool unions) {
  const auto n = static_cast<PointId>(gens.size());
  for (PointId x = 0; x < n; ++x) {
    auto& fam = gens[x];
    for (auto& g : fam) {
      g = normalized(std::move(g));
      if (!g.empty() && g.back() >= n) fail(ErrorKind::InvalidArgument, "generator point out of range");
    }
    fam.push_back(Subset{x});
    fam = maximal_antichain(std::move(fam));
    if (unions && fam.size() > 1) {
      Subset all;
      for (const auto& g : fam) all = set_union(all, g);
      fam = {std::move(all)};
    }
  }
  return ConvSpace(std::make_shared<const std::vector<std::vector<Subset>>>(std::move(gens)));
}

bool ConvSpace::is_limit() const {
  return std::all_of(gens_->begin(), gens_->end(), [](const auto& fam) { return fam.size() == 1; });
}

ConvSpace discrete(std::size_t n) { return ConvSpace::from_generators(std::vector<std::vector<Subset>>(n)); }

ConvSpace indiscrete(std::size_t n) {
  Subset all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<PointId>(i);
  return ConvSpace::from_generators(std::vector<std::vector<Subset>>(n, {all}));
}

bool is_continuous(const ConvSpace& dom, const ConvSpace& cod, const std::vector<PointId>& map) {
  if (map.size() != dom.size()) return false;
  for (PointId x = 0; x < dom.size(); ++x) {
    if (map[x] >= cod.size()) return false;
    for (const auto& g : dom.generators(x)) {
      if (!cod.converges(image(map, g), map[x])) return false;
    }
  }
  return true;
}

ContMap::ContMap(ConvSpace dom, ConvSpace cod, std::vector<PointId> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (!is_continuous(dom_, cod_, map_)) fail(ErrorKind::NotContinuous, "point function is not continuous");
}

ContMap ContMap::identity(const ConvSpace& x) {
  std::vector<PointId> t(x.size());
  for (PointId i = 0; i < x.size(); ++i) t[i] = i;
  return ContMap(x, x, std::move(t));
}

ContMap compose(const ContMap& g, const ContMap& f) {
  if (!(f.cod() == g.dom())) fail(ErrorKind::InvalidArgument, "compose: codomain/domain mismatch");
  std::vector<PointId> t(f.dom().size());
  for (PointId x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return ContMap(f.dom(), g.cod(), std::move(t));
}

Product product(const ConvSpace& x, const ConvSpace& y) {
  const auto ny = static_cast<PointId>(y.size());
  std::vector<std::vector<Subset>> gens(x.size() * y.size());
  for (PointId a = 0; a < x.size(); ++a) {
    for (PointId b = 0; b < ny; ++b) {
      auto& fam = gens[a * ny + b];
      for (const auto& ga : x.generators(a)) {
        for (const auto& gb : y.generators(b)) {
          Subset s;
          s.reserve(ga.size() * gb.size());
          for (PointId u : ga)
            for (PointId v : gb) s.push_back(u * ny + v);
          fam.push_back(std::move(s));
        }
      }
    }
  }
  return Product{ConvSpace::from_generators(std::move(gens)), x, y};
}

ContMap Product::proj1() const {
  std::vector<PointId> t(space.size());
  for (PointId p = 0; p < t.size(); ++p) t[p] = first(p);
  return ContMap(space, left, std::move(t));
}

ContMap Product::proj2() const {
  std::vector<PointId> t(space.size());
  for (PointId p = 0; p < t.size(); ++p) t[p] = second(p);
  return ContMap(space, right, std::move(t));
}

ContMap Product::pairing(const ContMap& f, const ContMap& g) const {
  if (!(f.dom() == g.dom()) || !(f.cod() == left) || !(g.cod() == right))
    fail(ErrorKind::InvalidArgument, "pairing: cone does not match product");
  std::vector<PointId> t(f.dom().size());
  for (PointId z = 0; z < t.size(); ++z) t[z] = pair(f(z), g(z));
  return ContMap(f.dom(), space, std::move(t));
}

ContMap product_map(const Product& from, const Product& to, const ContMap& f, const ContMap& g) {
  std::vector<PointId> t(from.space.size());
  for (PointId p = 0; p < t.size(); ++p) t[p] = to.pair(f(from.first(p)), g(from.second(p)));
  return ContMap(from.space, to.space, std::move(t));
}

ContMap swap_map(const Product& xy, const Product& yx) {
  std::vector<PointId> t(xy.space.size());
  for (PointId p = 0; p < t.size(); ++p) t[p] = yx.pair(xy.second(p), xy.first(p));
  return ContMap(xy.space, yx.space, std::move(t));
}

std::vector<std::vector<PointId>> continuous_maps(const ConvSpace& dom, const ConvSpace& cod, std::size_t limit) {
  const std::size_t n = dom.size();
  // constraints[i]: (point, generator) pairs fully assigned once point i is fixed
  std::vector<std::vector<std::pair<PointId, const Subset*>>> constraints(n);
  for (PointId x = 0; x < n; ++x) {
    for (const auto& g : dom.generators(x)) {
      PointId last = std::max<PointId>(x, g.back());
      constraints[last].emplace_back(x, &g);
    }
  }
  std::vector<std::vector<PointId>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (cod.empty()) return out;
  std::vector<PointId> t(n, 0);
  std::size_t i = 0;
  for (;;) {
    bool ok = true;
    for (const auto& [x, g] : constraints[i]) {
      if (!cod.converges(image(t, *g), t[x])) {
        ok = false;
        break;
      }
    }
    if (ok && i + 1 == n) {
      out.push_back(t);
      if (out.size() > limit)
        fail(ErrorKind::BoundExceeded, "more than " + std::to_string(limit) + " continuous maps");
    }
    if (ok && i + 1 < n) {
      ++i;
      t[i] = 0;
      continue;
    }
    // advance
    for (;;) {
      if (++t[i] < cod.size()) break;
      if (i == 0) return out;
      --i;
    }
  }
}

PointId FunctionSpace::index_of(const std::vector<PointId>& map) const {
  auto it = index_.find(map);
  if (it == index_.end()) fail(ErrorKind::InvalidArgument, "map is not a point of this function space");
  return it->second;
}

ContMap FunctionSpace::eval(const Product& dom_times_fs) const {
  std::vector<PointId> t(dom_times_fs.space.size());
  for (PointId p = 0; p < t.size(); ++p) t[p] = maps[dom_times_fs.second(p)][dom_times_fs.first(p)];
  return ContMap(dom_times_fs.space, cod, std::move(t));
}

FunctionSpace function_space(const ConvSpace& x, const ConvSpace& y, std::size_t bound) {
  FunctionSpace fs;
  fs.dom = x;
  fs.cod = y;
  fs.maps = continuous_maps(x, y, bound);
  for (PointId i = 0; i < fs.maps.size(); ++i) fs.index_.emplace(fs.maps[i], i);
  Subset all(fs.maps.size());
  for (PointId i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<Subset>> gens(fs.maps.size());
  for (PointId f = 0; f < fs.maps.size(); ++f) {
    auto accept = [&](const Subset& a) {
      for (PointId p = 0; p < x.size(); ++p) {
        for (const auto& b : x.generators(p)) {
          Subset applied;
          for (PointId m : a)
            for (PointId q : b) applied.push_back(fs.maps[m][q]);
          if (!y.converges(normalized(std::move(applied)), fs.maps[f][p])) return false;
        }
      }
      return true;
    };
    gens[f] = maximal_sets(all, accept);
  }
  fs.space = ConvSpace::from_generators(std::move(gens));
  return fs;
}

ContMap curry(const ContMap& f, const Product& xy, const FunctionSpace& yz) {
  if (!(f.dom() == xy.space) || !(yz.dom == xy.right) || !(yz.cod == f.cod()))
    fail(ErrorKind::InvalidArgument, "curry: shapes do not match");
  std::vector<PointId> t(xy.left.size());
  for (PointId a = 0; a < t.size(); ++a) {
    std::vector<PointId> row(xy.right.size());
    for (PointId b = 0; b < row.size(); ++b) row[b] = f(xy.pair(a, b));
    t[a] = yz.index_of(row);
  }
  return ContMap(xy.left, yz.space, std::move(t));
}

ContMap uncurry(const ContMap& g, const Product& xy, const FunctionSpace& yz) {
  if (!(g.dom() == xy.left) || !(g.cod() == yz.space) || !(yz.dom == xy.right))
    fail(ErrorKind::InvalidArgument, "uncurry: shapes do not match");
  std::vector<PointId> t(xy.space.size());
  for (PointId p = 0; p < t.size(); ++p) t[p] = yz.maps[g(xy.first(p))][xy.second(p)];
  return ContMap(xy.space, yz.cod, std::move(t));
}

Embedding embed_initial(const Subset& s, const ConvSpace& x) {
  std::vector<PointId> local(x.size(), static_cast<PointId>(-1));
  for (PointId i = 0; i < s.size(); ++i) {
    if (s[i] >= x.size()) fail(ErrorKind::InvalidArgument, "embed_initial: point out of range");
    local[s[i]] = i;
  }
  std::vector<std::vector<Subset>> gens(s.size());
  for (PointId i = 0; i < s.size(); ++i) {
    for (const auto& g : x.generators(s[i])) {
      Subset r;
      for (PointId q : g)
        if (local[q] != static_cast<PointId>(-1)) r.push_back(local[q]);
      gens[i].push_back(normalized(std::move(r)));
    }
  }
  auto space = ConvSpace::from_generators(std::move(gens));
  return Embedding{space, s, ContMap(space, x, s)};
}

std::optional<ContMap> lift_through(const Embedding& e, const ContMap& g) {
  std::vector<PointId> t(g.dom().size());
  for (PointId z = 0; z < t.size(); ++z) {
    auto it = std::lower_bound(e.points.begin(), e.points.end(), g(z));
    if (it == e.points.end() || *it != g(z)) return std::nullopt;
    t[z] = static_cast<PointId>(it - e.points.begin());
  }
  if (!is_continuous(g.dom(), e.space, t)) return std::nullopt;
  return ContMap(g.dom(), e.space, std::move(t));
}

Pullback pullback(const ContMap& f, const ContMap& g) {
  if (!(f.cod() == g.cod())) fail(ErrorKind::InvalidArgument, "pullback: codomains differ");
  const ConvSpace& a = f.dom();
  const ConvSpace& b = g.dom();
  std::vector<std::pair<PointId, PointId>> pairs;
  for (PointId u = 0; u < a.size(); ++u)
    for (PointId v = 0; v < b.size(); ++v)
      if (f(u) == g(v)) pairs.emplace_back(u, v);
  std::vector<std::vector<Subset>> gens(pairs.size());
  for (PointId p = 0; p < pairs.size(); ++p) {
    for (const auto& ga : a.generators(pairs[p].first)) {
      for (const auto& gb : b.generators(pairs[p].second)) {
        Subset s;
        for (PointId q = 0; q < pairs.size(); ++q)
          if (contains(ga, pairs[q].first) && contains(gb, pairs[q].second)) s.push_back(q);
        gens[p].push_back(std::move(s));
      }
    }
  }
  auto space = ConvSpace::from_generators(std::move(gens));
  std::vector<PointId> t1(pairs.size()), t2(pairs.size());
  for (PointId p = 0; p < pairs.size(); ++p) {
    t1[p] = pairs[p].first;
    t2[p] = pairs[p].second;
  }
  return Pullback{space, pairs, ContMap(space, a, std::move(t1)), ContMap(space, b, std::move(t2))};
}

std::optional<ContMap> is_isomorphism(const ContMap& f) {
  if (f.dom().size() != f.cod().size()) return std::nullopt;
  std::vector<PointId> inv(f.cod().size(), static_cast<PointId>(-1));
  for (PointId x = 0; x < f.dom().size(); ++x) {
    if (inv[f(x)] != static_cast<PointId>(-1)) return std::nullopt;
    inv[f(x)] = x;
  }
  if (!is_continuous(f.cod(), f.dom(), inv)) return std::nullopt;
  return ContMap(f.cod(), f.dom(), std::move(inv));
}

std::vector<std::uint64_t> admissible_families(std::size_t n, PointId x, Axioms axioms) {
  if (n > 4) fail(ErrorKind::BoundExceeded, "admissible_families supports carriers up to 4 points");
  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;  // nonempty subset masks 1..subsets
  auto member = [](std::uint64_t fam, std::uint64_t mask) { return (fam >> (mask - 1)) & 1U; };
  const std::uint64_t point = std::uint64_t{1} << x;
  std::vector<std::uint64_t> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!member(fam, point)) continue;
    bool ok = true;
    for (std::uint64_t s = 1; s <= subsets && ok; ++s) {
      if (!member(fam, s)) continue;
      for (std::uint64_t t = (s - 1) & s; t; t = (t - 1) & s) {
        if (!member(fam, t)) {
          ok = false;
          break;
        }
      }
      if (axioms == Axioms::limit) {
        for (std::uint64_t t = 1; t <= subsets && ok; ++t)
          if (member(fam, t) && !member(fam, s | t)) ok = false;
      }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

std::vector<ConvSpace> enumerate_spaces(std::size_t n, Axioms axioms, std::size_t bound) {
  if (n > bound) fail(ErrorKind::BoundExceeded, "enumerate_spaces: " + std::to_string(n) + " above bound " + std::to_string(bound));
  std::vector<ConvSpace> out;
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<std::vector<std::uint64_t>> per_point(m);
    for (PointId x = 0; x < m; ++x) per_point[x] = admissible_families(m, x, axioms);
    std::vector<std::size_t> choice(m, 0);
    for (;;) {
      std::vector<std::vector<Subset>> gens(m);
      for (PointId x = 0; x < m; ++x) {
        const std::uint64_t fam = per_point[x][choice[x]];
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
          if (!((fam >> (s - 1)) & 1U)) continue;
          Subset sub;
          for (PointId q = 0; q < m; ++q)
            if ((s >> q) & 1U) sub.push_back(q);
          gens[x].push_back(std::move(sub));
        }
      }
      out.push_back(ConvSpace::from_generators(std::move(gens)));
      // odometer, last point fastest
      bool done = true;
      for (std::size_t k = m; k-- > 0;) {
        if (++choice[k] < per_point[k].size()) {
          done = false;
          break;
        }
        choice[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

}  // namespace fubinilab
