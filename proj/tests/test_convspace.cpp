#include "doctest.h"

#include <set>

#include "fubinilab/convspace.hpp"

using namespace fubinilab;

namespace {

std::vector<std::vector<PointId>> all_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<PointId>> out;
  std::vector<PointId> t(n, 0);
  if (n > 0 && m == 0) return out;
  for (;;) {
    out.push_back(t);
    std::size_t k = n;
    bool done = true;
    while (k-- > 0) {
      if (++t[k] < m) {
        done = false;
        break;
      }
      t[k] = 0;
    }
    if (done) return out;
  }
}

std::vector<ConvSpace> spaces_of_size(std::size_t n, Axioms ax) {
  std::vector<ConvSpace> out;
  for (auto& s : enumerate_spaces(n, ax)) {
    if (s.size() == n) out.push_back(s);
  }
  return out;
}

// Independent count: families of nonempty subsets of an n-set, as sets of sets.
std::size_t brute_count_structures(int n, bool limit) {
  std::vector<std::set<int>> subsets;
  for (int m = 1; m < (1 << n); ++m) {
    std::set<int> s;
    for (int q = 0; q < n; ++q)
      if (m >> q & 1) s.insert(q);
    subsets.push_back(s);
  }
  std::size_t per_point_product = 1;
  for (int x = 0; x < n; ++x) {
    std::size_t count = 0;
    for (long fam = 0; fam < (1L << subsets.size()); ++fam) {
      std::set<std::set<int>> family;
      for (std::size_t i = 0; i < subsets.size(); ++i)
        if (fam >> i & 1) family.insert(subsets[i]);
      if (!family.count({x})) continue;
      bool ok = true;
      for (const auto& a : family) {
        for (const auto& b : subsets) {
          bool sub = std::includes(a.begin(), a.end(), b.begin(), b.end());
          if (sub && !family.count(b)) ok = false;
        }
        if (limit) {
          for (const auto& b : family) {
            std::set<int> u = a;
            u.insert(b.begin(), b.end());
            if (!family.count(u)) ok = false;
          }
        }
      }
      if (ok) ++count;
    }
    per_point_product *= count;
  }
  return per_point_product;
}

}  // namespace

TEST_CASE("discrete spaces") {
  CHECK(discrete(0).size() == 0);
  auto one = discrete(1);
  CHECK(one.generators(0) == std::vector<Subset>{{0}});
  auto two = discrete(2);
  CHECK(two.generators(0) == std::vector<Subset>{{0}});
  CHECK(two.generators(1) == std::vector<Subset>{{1}});
  CHECK_FALSE(two.converges({0, 1}, 0));
  CHECK(indiscrete(2).converges({0, 1}, 1));
}

TEST_CASE("enumerate_spaces counts match the brute-force oracle") {
  CHECK(spaces_of_size(1, Axioms::limit).size() == 1);
  CHECK(spaces_of_size(2, Axioms::limit).size() == 4);
  CHECK(spaces_of_size(2, Axioms::down_only).size() == 9);
  CHECK(brute_count_structures(2, true) == 4);
  CHECK(brute_count_structures(2, false) == 9);
  CHECK(spaces_of_size(3, Axioms::limit).size() == brute_count_structures(3, true));
  CHECK(spaces_of_size(3, Axioms::down_only).size() == brute_count_structures(3, false));
  CHECK_THROWS_AS(enumerate_spaces(4, Axioms::limit), LabError);
  for (auto ax : {Axioms::limit, Axioms::down_only}) {
    auto a = enumerate_spaces(3, ax);
    auto b = enumerate_spaces(3, ax);
    CHECK(a == b);
    for (const auto& s : a) CHECK(s.satisfies(ax));
  }
}

TEST_CASE("product structure and universal property") {
  auto d = product(discrete(2), discrete(2));
  CHECK(d.space == discrete(4));

  auto i = product(indiscrete(2), indiscrete(2));
  for (PointId p = 0; p < 4; ++p) CHECK(i.space.converges({0, 1, 2, 3}, p));

  for (auto ax : {Axioms::limit, Axioms::down_only}) {
    auto universe = enumerate_spaces(2, ax);
    for (const auto& x : universe) {
      auto x1 = product(x, discrete(1));
      auto back = is_isomorphism(x1.proj1());
      CHECK(back.has_value());
      for (const auto& y : universe) {
        auto xy = product(x, y);
        CHECK_NOTHROW(xy.proj1());
        CHECK_NOTHROW(xy.proj2());
        for (const auto& z : universe) {
          // a point function into X × Y is continuous iff both components are
          for (const auto& t : all_functions(z.size(), xy.space.size())) {
            std::vector<PointId> t1(t.size()), t2(t.size());
            for (std::size_t k = 0; k < t.size(); ++k) {
              t1[k] = xy.first(t[k]);
              t2[k] = xy.second(t[k]);
            }
            bool whole = is_continuous(z, xy.space, t);
            bool parts = is_continuous(z, x, t1) && is_continuous(z, y, t2);
            CHECK(whole == parts);
            if (parts) {
              auto paired = xy.pairing(ContMap(z, x, t1), ContMap(z, y, t2));
              CHECK(paired.table() == t);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("function spaces") {
  auto y = indiscrete(2);
  auto fs1 = function_space(discrete(1), y);
  CHECK(fs1.space.size() == 2);
  CHECK(fs1.space == y);

  auto fs = function_space(discrete(2), discrete(2));
  CHECK(fs.space == discrete(4));

  auto empty = function_space(discrete(0), discrete(2));
  CHECK(empty.space == discrete(1));

  for (auto ax : {Axioms::limit, Axioms::down_only}) {
    for (const auto& x : enumerate_spaces(2, ax)) {
      for (const auto& z : enumerate_spaces(2, ax)) {
        auto f = function_space(x, z);
        CHECK(f.space.satisfies(ax));
        auto xf = product(x, f.space);
        CHECK_NOTHROW(f.eval(xf));
      }
    }
  }
}

TEST_CASE("currying is a natural bijection with the eval triangle") {
  for (auto ax : {Axioms::limit, Axioms::down_only}) {
    auto universe = enumerate_spaces(2, ax);
    for (const auto& x : universe) {
      for (const auto& y : universe) {
        auto xy = product(x, y);
        for (const auto& z : universe) {
          auto yz = function_space(y, z);
          auto lhs = continuous_maps(xy.space, z, 1 << 20);
          auto rhs = continuous_maps(x, yz.space, 1 << 20);
          CHECK(lhs.size() == rhs.size());
          auto y_yz = product(y, yz.space);
          auto ev = yz.eval(y_yz);
          for (const auto& t : lhs) {
            ContMap f(xy.space, z, t);
            auto g = curry(f, xy, yz);
            CHECK(uncurry(g, xy, yz) == f);
            // eval ∘ (id × curry f) ∘ swap = f
            for (PointId a = 0; a < x.size(); ++a)
              for (PointId b = 0; b < y.size(); ++b)
                CHECK(ev(y_yz.pair(b, g(a))) == f(xy.pair(a, b)));
          }
          for (const auto& t : rhs) {
            ContMap g(x, yz.space, t);
            CHECK(curry(uncurry(g, xy, yz), xy, yz) == g);
          }
        }
      }
    }
  }
}

TEST_CASE("curry of the second projection is the constant family") {
  auto x = discrete(2);
  auto y = indiscrete(2);
  auto xy = product(x, y);
  auto yy = function_space(y, y);
  auto g = curry(xy.proj2(), xy, yy);
  auto id = yy.index_of({0, 1});
  CHECK(g(0) == id);
  CHECK(g(1) == id);
}

TEST_CASE("currying is natural in Z and X") {
  auto universe = enumerate_spaces(2, Axioms::down_only);
  for (const auto& x : universe) {
    for (const auto& y : universe) {
      auto xy = product(x, y);
      for (const auto& z : universe) {
        for (const auto& z2 : universe) {
          auto yz = function_space(y, z);
          auto yz2 = function_space(y, z2);
          for (const auto& h : continuous_maps(z, z2, 1 << 20)) {
            ContMap hm(z, z2, h);
            // [Y, h] as a point function on maps
            std::vector<PointId> post(yz.maps.size());
            for (PointId k = 0; k < post.size(); ++k) {
              std::vector<PointId> m(y.size());
              for (PointId b = 0; b < y.size(); ++b) m[b] = h[yz.maps[k][b]];
              post[k] = yz2.index_of(m);
            }
            CHECK(is_continuous(yz.space, yz2.space, post));
            for (const auto& t : continuous_maps(xy.space, z, 1 << 20)) {
              ContMap f(xy.space, z, t);
              auto lhs = curry(compose(hm, f), xy, yz2);
              auto g = curry(f, xy, yz);
              for (PointId a = 0; a < x.size(); ++a) CHECK(lhs(a) == post[g(a)]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("embeddings are initial") {
  auto x = indiscrete(2);
  auto full = embed_initial({0, 1}, x);
  CHECK(full.space == x);
  auto one = embed_initial({1}, x);
  CHECK(one.space == discrete(1));

  auto universe = enumerate_spaces(2, Axioms::down_only);
  for (const auto& big : enumerate_spaces(3, Axioms::down_only)) {
    if (big.size() != 3) continue;
    for (PointId mask = 0; mask < 8; ++mask) {
      Subset s;
      for (PointId q = 0; q < 3; ++q)
        if (mask >> q & 1) s.push_back(q);
      auto e = embed_initial(s, big);
      for (const auto& z : universe) {
        for (const auto& t : all_functions(z.size(), s.size())) {
          std::vector<PointId> ambient(t.size());
          for (std::size_t k = 0; k < t.size(); ++k) ambient[k] = s[t[k]];
          CHECK(is_continuous(z, e.space, t) == is_continuous(z, big, ambient));
        }
      }
      // embedding of an embedding is an embedding
      if (s.size() >= 1) {
        auto inner = embed_initial({0}, e.space);
        auto direct = embed_initial({s[0]}, big);
        CHECK(inner.space == direct.space);
      }
    }
  }
}

TEST_CASE("pullbacks") {
  auto a = indiscrete(2);
  auto id = ContMap::identity(a);
  auto pb = pullback(id, id);
  CHECK(is_isomorphism(pb.proj1).has_value());

  auto one = discrete(1);
  auto c = discrete(2);
  auto empty = pullback(ContMap(one, c, {0}), ContMap(one, c, {1}));
  CHECK(empty.space.size() == 0);

  // discrete maps: set pullback, discrete
  auto d3 = discrete(3);
  ContMap f(d3, c, {0, 1, 1});
  ContMap g(c, c, {1, 1});
  auto set_pb = pullback(f, g);
  CHECK(set_pb.pairs.size() == 4);
  CHECK(set_pb.space == discrete(4));

  // universal property against every cone from the ≤2-point universe
  auto universe = enumerate_spaces(2, Axioms::limit);
  for (const auto& x : universe) {
    for (const auto& y : universe) {
      for (const auto& z : universe) {
        for (const auto& ft : continuous_maps(x, z, 1 << 20)) {
          for (const auto& gt : continuous_maps(y, z, 1 << 20)) {
            ContMap fm(x, z, ft), gm(y, z, gt);
            auto p = pullback(fm, gm);
            for (const auto& w : universe) {
              for (const auto& u : continuous_maps(w, x, 1 << 20)) {
                for (const auto& v : continuous_maps(w, y, 1 << 20)) {
                  bool commutes = true;
                  for (PointId k = 0; k < w.size(); ++k) commutes = commutes && ft[u[k]] == gt[v[k]];
                  if (!commutes) continue;
                  std::vector<PointId> induced(w.size());
                  for (PointId k = 0; k < w.size(); ++k) {
                    auto it = std::find(p.pairs.begin(), p.pairs.end(), std::make_pair(u[k], v[k]));
                    induced[k] = static_cast<PointId>(it - p.pairs.begin());
                  }
                  CHECK(is_continuous(w, p.space, induced));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("is_isomorphism") {
  auto x = indiscrete(2);
  CHECK(is_isomorphism(ContMap::identity(x)).has_value());
  // the bijection discrete(2) -> indiscrete(2) is continuous with discontinuous inverse
  CHECK_FALSE(is_isomorphism(ContMap(discrete(2), indiscrete(2), {0, 1})).has_value());
  CHECK_THROWS_AS(ContMap(indiscrete(2), discrete(2), {0, 1}), LabError);
  CHECK_FALSE(is_isomorphism(ContMap(discrete(2), discrete(1), {0, 0})).has_value());
}

TEST_CASE("composition preserves continuity") {
  auto universe = enumerate_spaces(2, Axioms::down_only);
  for (const auto& x : universe)
    for (const auto& y : universe)
      for (const auto& z : universe)
        for (const auto& f : continuous_maps(x, y, 1 << 20))
          for (const auto& g : continuous_maps(y, z, 1 << 20))
            CHECK_NOTHROW(compose(ContMap(y, z, g), ContMap(x, y, f)));
}
