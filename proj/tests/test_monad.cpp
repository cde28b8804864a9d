#include "doctest.h"

#include <numeric>

#include "fubinilab/fubini.hpp"

using namespace fubinilab;

namespace {

const Field& f2() {
  static const Field f = Field::make(2);
  return f;
}

// Components by linking every converging set to its limit.
std::vector<std::size_t> oracle_components(const ConvSpace& x) {
  std::vector<std::size_t> parent(x.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  for (PointId p = 0; p < x.size(); ++p)
    for (const auto& g : x.generators(p))
      for (PointId q : g) parent[find(q)] = find(p);
  std::vector<std::size_t> label(x.size()), root_label(x.size(), x.size());
  std::size_t next = 0;
  for (PointId p = 0; p < x.size(); ++p) {
    auto r = find(p);
    if (root_label[r] == x.size()) root_label[r] = next++;
    label[p] = root_label[r];
  }
  return label;
}

std::size_t count_of(const std::vector<std::size_t>& label) {
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

std::vector<int> digits(PointId u, std::size_t n, int p) {
  std::vector<int> out(n);
  for (auto& d : out) {
    d = static_cast<int>(u % static_cast<PointId>(p));
    u /= static_cast<PointId>(p);
  }
  return out;
}

std::vector<int> as_ints(const Vector& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

const std::vector<ConvSpace>& small_spaces() {
  static const auto s = enumerate_spaces(2, Axioms::down_only);
  return s;
}

}  // namespace

TEST_CASE("distributions on a point and on the empty space") {
  DistributionMonad d(f2());
  auto c1 = Components::of(discrete(1));
  CHECK(d.points(c1) == 2);
  CHECK(as_ints(d.unit(c1, 0)) == std::vector<int>{1});
  auto c0 = Components::of(discrete(0));
  CHECK(d.points(c0) == 1);
  auto carrier = distribution_carrier(discrete(1), f2(), Axioms::limit);
  CHECK(carrier.distributions.space.dim() == 1);
  CHECK(carrier.distributions.space == scalar_object(f2(), Axioms::limit));
}

TEST_CASE("components match the linking oracle") {
  for (const auto& x : enumerate_spaces(3, Axioms::down_only)) {
    auto label = oracle_components(x);
    auto c = Components::of(x);
    REQUIRE(c.rank() == count_of(label));
    for (PointId p = 0; p < x.size(); ++p) {
      CHECK(c[p] == label[p]);
      CHECK(c[c.representative(c[p])] == c[p]);
    }
  }
}

TEST_CASE("Dirac distributions are the component indicators") {
  DistributionMonad d(f2());
  for (const auto& x : enumerate_spaces(3, Axioms::down_only)) {
    auto label = oracle_components(x);
    auto c = Components::of(x);
    for (PointId p = 0; p < x.size(); ++p) {
      std::vector<int> e(count_of(label), 0);
      e[label[p]] = 1;
      CHECK(as_ints(d.unit(c, p)) == e);
    }
  }
  // points in different components give distinct Dirac measures
  auto c = Components::of(discrete(2));
  CHECK(d.encode(d.unit(c, 0)) != d.encode(d.unit(c, 1)));
}

TEST_CASE("the carrier from the vector-space layer agrees with the component description") {
  DistributionMonad d(f2());
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    auto universe = enumerate_spaces(2, axioms);
    auto inst = distribution_monad(universe, d, axioms);
    CHECK(inst.objects_checked == universe.size());
    CHECK(inst.maps_checked > 0);
    CHECK(inst.laws.ok());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      CHECK(inst.carriers[i].distributions.space.dim() == count_of(oracle_components(universe[i])));
      CHECK(inst.carriers[i].distributions.space.is_discrete());
    }
  }
}

TEST_CASE("pushforward matches summing over preimage components") {
  DistributionMonad d(f2());
  const auto& spaces = small_spaces();
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      auto cx = Components::of(x), cy = Components::of(y);
      auto lx = oracle_components(x), ly = oracle_components(y);
      for (const auto& f : continuous_maps(x, y, 1 << 12))
        for (PointId u = 0; u < d.points(cx); ++u) {
          Vector mu = d.decode(cx, u);
          std::vector<int> expect(cy.rank(), 0);
          for (std::size_t c = 0; c < cx.rank(); ++c) {
            // f sends the whole component into one component; any point of it names the target
            PointId p = 0;
            while (lx[p] != c) ++p;
            auto& slot = expect[ly[f[p]]];
            slot = (slot + mu(static_cast<Eigen::Index>(c))) % 2;
          }
          CHECK(as_ints(d.map_dense(cx, cy, f, mu)) == expect);
          CHECK(d.map_by_precomposition(cx, cy, f, mu) == d.map_dense(cx, cy, f, mu));
        }
    }
}

TEST_CASE("multiplication is the barycentre of the measure") {
  const Field f3 = Field::make(3);
  DistributionMonad d(f3);
  auto z = Components::discrete(2);
  const auto n = d.points(z);
  for (PointId u = 0; u < n; ++u)
    for (PointId v = 0; v < n; ++v)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          SparseMeasure phi;
          if (a) phi.emplace_back(u, a);
          if (b && v != u) phi.emplace_back(v, b);
          std::vector<int> expect(2, 0);
          for (const auto& [w, coeff] : phi) {
            auto dg = digits(w, 2, 3);
            for (int c = 0; c < 2; ++c) expect[c] = (expect[c] + coeff * dg[c]) % 3;
          }
          CHECK(as_ints(d.mult(z, phi)) == expect);
        }
}

TEST_CASE("monad laws for D and for a transported copy") {
  DistributionMonad d(f2());
  TransportedMonad t(d);
  for (const MonadOps* m : {static_cast<const MonadOps*>(&d), static_cast<const MonadOps*>(&t)}) {
    for (const auto& x : small_spaces()) CHECK(check_monad_laws(*m, Components::of(x)).ok());
    CHECK(check_monad_laws(*m, Components::discrete(3)).ok());
    for (const auto& x : small_spaces())
      for (const auto& y : small_spaces())
        for (const auto& f : continuous_maps(x, y, 1 << 12))
          CHECK(check_naturality(*m, Components::of(x), Components::of(y), f).ok());
  }
  CHECK(check_monad_laws(d, Components::discrete(4)).ok());
  // the transported unit is not the Dirac measure, so the copy is genuinely different
  auto z = Components::discrete(2);
  CHECK(t.unit(z, 0) != d.unit(z, 0));
  CHECK(t.theta_inverse(2, t.theta(2, d.unit(z, 0))) == d.unit(z, 0));
}

TEST_CASE("strengths send Dirac measures to Dirac measures") {
  DistributionMonad d(f2());
  for (const auto& x : small_spaces())
    for (const auto& y : small_spaces()) {
      auto xy = product(x, y);
      auto cx = Components::of(x), cy = Components::of(y), cxy = Components::of(xy.space);
      auto s1 = tprime_checked(d, x, y, xy);
      auto s2 = tdoubleprime_checked(d, x, y, xy);
      CHECK_NOTHROW(s1.as_map());
      CHECK_NOTHROW(s2.as_map());
      for (PointId a = 0; a < x.size(); ++a)
        for (PointId b = 0; b < y.size(); ++b) {
          const PointId dirac = d.encode(d.unit(cxy, xy.pair(a, b)));
          CHECK(s1.table[s1.domain.pair(d.encode(d.unit(cx, a)), b)] == dirac);
          CHECK(s2.table[s2.domain.pair(a, d.encode(d.unit(cy, b)))] == dirac);
        }
    }
}

TEST_CASE("the Fubini composites give the product measure") {
  DistributionMonad d(f2());
  for (const auto& x : small_spaces())
    for (const auto& y : small_spaces()) {
      auto fp = fubini_pair(d, x, y);
      auto lx = oracle_components(x), ly = oracle_components(y), lxy = oracle_components(fp.xy.space);
      for (PointId u = 0; u < fp.nx; ++u)
        for (PointId v = 0; v < fp.ny; ++v) {
          auto mu = digits(u, fp.cx.rank(), 2), nu = digits(v, fp.cy.rank(), 2);
          std::vector<int> expect(fp.cxy.rank(), 0);
          for (PointId a = 0; a < x.size(); ++a)
            for (PointId b = 0; b < y.size(); ++b) expect[lxy[fp.xy.pair(a, b)]] = mu[lx[a]] * nu[ly[b]];
          CHECK(digits(fp.otimes[fp.index(u, v)], fp.cxy.rank(), 2) == expect);
        }
      CHECK(fp.otimes == fp.otimes_tilde);
      CHECK(check_iterated_integrals(d, fp).ok());
      auto verdict = check_commutative(d, x, y, Axioms::down_only);
      CHECK(verdict.equal);
      CHECK(verdict.hypotheses());
      CHECK(verdict.implication_holds());
      CHECK_FALSE(verdict.witness.has_value());
    }
}

TEST_CASE("commutativity survives transport along theta") {
  DistributionMonad d(f2());
  TransportedMonad t(d);
  for (const auto& x : small_spaces())
    for (const auto& y : small_spaces()) {
      auto p = fubini_pair(d, x, y), q = fubini_pair(t, x, y);
      CHECK(q.otimes == q.otimes_tilde);
      for (PointId u = 0; u < p.nx; ++u)
        for (PointId v = 0; v < p.ny; ++v) {
          auto tu = d.encode(t.theta(p.cx.rank(), d.decode(p.cx, u)));
          auto tv = d.encode(t.theta(p.cy.rank(), d.decode(p.cy, v)));
          auto lhs = d.encode(t.theta(p.cxy.rank(), d.decode(p.cxy, p.otimes[p.index(u, v)])));
          CHECK(q.otimes[q.index(tu, tv)] == lhs);
        }
    }
}

TEST_CASE("the enrichment is recovered from the monoidal structure") {
  DistributionMonad d(f2());
  TransportedMonad t(d);
  for (const auto& x : small_spaces())
    for (const auto& y : small_spaces()) {
      CHECK_NOTHROW(check_enrichment(d, x, y));
      CHECK_NOTHROW(check_enrichment(t, x, y));
    }
}

TEST_CASE("continuous functions are constant on components") {
  for (const auto& x : enumerate_spaces(3, Axioms::down_only)) {
    auto label = oracle_components(x);
    auto fs = continuous_functions(Components::of(x), f2());
    CHECK(fs.size() == std::size_t{1} << count_of(label));
    for (const auto& g : fs)
      for (PointId p = 0; p < x.size(); ++p)
        for (const auto& gen : x.generators(p))
          for (PointId q : gen) CHECK(g[q] == g[p]);
  }
}

TEST_CASE("double dualization: scalars and zero are reflexive") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    auto r = is_reflexive(scalar_object(f2(), axioms));
    CHECK(r.reflexive);
    CHECK(r.inverse.has_value());
    CHECK(is_reflexive(zero_space(f2(), axioms)).reflexive);
    DualTower tower(scalar_object(f2(), axioms), 2);
    CHECK(tower.space(2) == scalar_object(f2(), axioms));
  }
}

TEST_CASE("double dualization laws and naturality") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    auto universe = enumerate_convvects(f2(), 4, axioms);
    auto inst = double_dualization_monad(universe);
    CHECK(inst.laws);
    CHECK(inst.unit_natural);
    CHECK(inst.maps_checked > universe.size());
  }
}

TEST_CASE("reflexivity is exactly discreteness on small spaces") {
  for (const auto& e : enumerate_convvects(f2(), 4, Axioms::down_only)) {
    DualTower tower(e, 2);
    auto v = is_reflexive(tower);
    CHECK(v.reflexive == e.is_discrete());
    if (v.failure == "not injective") {
      REQUIRE(v.witness.size() == 1);
      CHECK(v.witness[0] != 0);
      CHECK(tower.unit(0)(v.witness[0]) == 0);
      // every continuous functional vanishes on the witness
      for (PointId h = 0; h < tower.space(1).size(); ++h) CHECK(tower.at(1).eval(h, v.witness[0]) == 0);
    }
  }
}

TEST_CASE("distributions are the double dual of the free object") {
  for (auto axioms : {Axioms::limit, Axioms::down_only})
    for (const auto& x : enumerate_spaces(2, axioms)) {
      auto carrier = distribution_carrier(x, f2(), axioms);
      auto fx = free(x, f2(), axioms);
      DualTower tower(fx.space, 2);
      auto to_hom = cotensor_to_hom(carrier.functions, fx, tower.at(1));
      auto back = dual_map(carrier.distributions, tower.at(2), to_hom);
      CHECK(is_isomorphism(back).has_value());
    }
}
