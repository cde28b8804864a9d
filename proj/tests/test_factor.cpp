#include "doctest.h"

#include "fubinilab/completion.hpp"
#include "fubinilab/factorization.hpp"
#include "fubinilab/fubini.hpp"

using namespace fubinilab;

namespace {

const Field& f2() {
  static const Field f = Field::make(2);
  return f;
}

const std::vector<ConvVect>& universe(Axioms axioms) {
  static const auto limit = enumerate_convvects(f2(), 4, Axioms::limit);
  static const auto down = enumerate_convvects(f2(), 4, Axioms::down_only);
  return axioms == Axioms::limit ? limit : down;
}

const std::vector<LinMap>& sigma(Axioms axioms) {
  static const auto limit = sigma_inverted(universe(Axioms::limit));
  static const auto down = sigma_inverted(universe(Axioms::down_only));
  return axioms == Axioms::limit ? limit : down;
}

std::vector<LinMap> maps_in(const std::vector<ConvVect>& u) {
  std::vector<LinMap> out;
  for (const auto& a : u)
    for (const auto& b : u)
      for (auto& f : linear_maps(a, b)) out.push_back(std::move(f));
  return out;
}

// Point-level injectivity and surjectivity from tables.
bool injective_table(const LinMap& f) {
  auto t = f.table();
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) == t.end();
}

bool surjective_table(const LinMap& f) {
  auto t = f.table();
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t.size() == f.cod().size();
}

// Initial embedding, by comparing convergence to zero on every subset of the domain.
bool initial_by_subsets(const LinMap& f) {
  const std::size_t n = f.dom().size();
  const auto t = f.table();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset a, img;
    for (PointId u = 0; u < n; ++u)
      if (mask >> u & 1) {
        a.push_back(u);
        img.push_back(t[u]);
      }
    if (f.dom().converges_to_zero(a) != f.cod().converges_to_zero(normalized(img))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("V-monos and V-epis are the injective and surjective maps") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    const auto& u = universe(axioms);
    for (const auto& f : maps_in(u)) {
      CHECK(is_v_mono(f, u) == injective_table(f));
      CHECK(is_v_epi(f, u) == surjective_table(f));
      CHECK(is_injective(f) == injective_table(f));
      CHECK(is_surjective(f) == surjective_table(f));
      CHECK(is_strong_mono(f) == (injective_table(f) && initial_by_subsets(f)));
    }
  }
  auto r = scalar_object(f2());
  CHECK(is_v_mono(LinMap::identity(r), universe(Axioms::limit)));
  CHECK(is_v_epi(LinMap::identity(r), universe(Axioms::limit)));
  CHECK_FALSE(is_v_mono(LinMap::zero(r, r), universe(Axioms::limit)));
  CHECK_FALSE(is_v_epi(LinMap::zero(r, r), universe(Axioms::limit)));
}

TEST_CASE("a subspace with the initial structure is a strong V-mono") {
  for (const auto& e : universe(Axioms::down_only)) {
    if (e.dim() != 2) continue;
    for (int v = 1; v < 4; ++v) {
      Matrix b(2, 1);
      b << (v & 1), (v >> 1 & 1);
      auto s = initial_subspace(e, b);
      CHECK(s.space.dim() == 1);
      CHECK(is_v_mono(s.inclusion, universe(Axioms::down_only)));
      CHECK(is_strong_mono(s.inclusion));
      CHECK(initial_by_subsets(s.inclusion));
    }
  }
}

TEST_CASE("the factorization recovers the map from an epi and a strong mono") {
  for (auto axioms : {Axioms::limit, Axioms::down_only})
    for (const auto& f : maps_in(universe(axioms))) {
      auto fac = epi_strongmono_factorize(f);
      CHECK(compose(fac.mono, fac.epi).matrix() == f.matrix());
      CHECK(surjective_table(fac.epi));
      CHECK(injective_table(fac.mono));
      CHECK(initial_by_subsets(fac.mono));
      if (is_isomorphism(f)) CHECK(is_isomorphism(fac.mono).has_value());
    }
  auto r = scalar_object(f2());
  auto fac = epi_strongmono_factorize(LinMap::zero(r, r));
  CHECK(fac.epi.cod().dim() == 0);
}

TEST_CASE("isomorphisms are orthogonal to everything") {
  const auto& u = universe(Axioms::limit);
  auto maps = maps_in(u);
  for (const auto& e : maps) {
    if (!is_isomorphism(e)) continue;
    for (std::size_t i = 0; i < maps.size(); i += 7) CHECK(is_orthogonal(e, maps[i]).pullback);
  }
}

TEST_CASE("a non-orthogonal pair comes with a witness") {
  auto r = scalar_object(f2());
  auto z = zero_space(f2());
  auto cert = is_orthogonal(LinMap::zero(z, r), LinMap::zero(r, z));
  CHECK_FALSE(cert.pullback);
  CHECK(cert.failure == "not injective");
  REQUIRE(cert.witness.size() == 2);
  CHECK(cert.comparison[cert.witness[0]] == cert.comparison[cert.witness[1]]);
  CHECK_FALSE(is_orthogonal_ordinary(LinMap::zero(z, r), LinMap::zero(r, z)));
}

TEST_CASE("epis are orthogonal to strong monos and enriched agrees with ordinary") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    auto maps = maps_in(universe(axioms));
    std::vector<LinMap> epis, monos;
    for (const auto& f : maps) {
      if (is_surjective(f)) epis.push_back(f);
      if (is_strong_mono(f)) monos.push_back(f);
    }
    const std::size_t stride = axioms == Axioms::limit ? 1 : 5;
    for (std::size_t i = 0; i < epis.size(); i += stride)
      for (std::size_t j = 0; j < monos.size(); j += stride) {
        auto cert = is_orthogonal(epis[i], monos[j]);
        CHECK(cert.pullback);
        CHECK(is_orthogonal_ordinary(epis[i], monos[j]));
      }
    // against maps that are not strong monos, the enriched and ordinary verdicts still agree
    for (std::size_t i = 0; i < epis.size(); i += 3 * stride)
      for (std::size_t j = 0; j < maps.size(); j += 11)
        CHECK(is_orthogonal(epis[i], maps[j]).pullback == is_orthogonal_ordinary(epis[i], maps[j]));
  }
}

TEST_CASE("sigma contains identities and the evaluation maps of free objects") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    for (const auto& e : universe(axioms)) CHECK(inverted_by_double_dual(LinMap::identity(e)));
    for (const auto& h : sigma(axioms)) CHECK(inverted_by_double_dual(h));
    for (const auto& x : enumerate_spaces(2, axioms)) {
      auto cot = cotensor(x, scalar_object(f2(), axioms));
      auto fx = free(x, f2(), axioms);
      DualTower t(fx.space, 2);
      if (is_reflexive(cot.space).reflexive) CHECK(inverted_by_double_dual(t.unit(0)));
    }
  }
  // maps whose double duals have different sizes are not inverted
  auto r = scalar_object(f2());
  CHECK_FALSE(inverted_by_double_dual(LinMap::zero(zero_space(f2()), r)));
}

TEST_CASE("complete objects") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    const auto& s = sigma(axioms);
    CHECK(is_complete(scalar_object(f2(), axioms), s));
    CHECK(is_complete(zero_space(f2(), axioms), s));
    for (const auto& e : universe(axioms)) {
      CHECK(is_complete(e, {}));
      DualTower t(e, 2);
      CHECK(is_complete(t.space(2), s));
      CHECK(is_complete(e, s) == e.is_discrete());
    }
  }
}

TEST_CASE("completion") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    const auto& s = sigma(axioms);
    for (const auto& e : universe(axioms)) {
      auto k = completion(e, s);
      CHECK(is_complete(k.space, s));
      CHECK(inverted_by_double_dual(k.unit));
      if (is_complete(e, s)) {
        CHECK(k.rounds == 0);
        CHECK(k.unit == LinMap::identity(e));
      } else {
        // the first round is the epi part of the evaluation map
        DualTower t(e, 2);
        CHECK(k.rounds == 1);
        CHECK(k.unit == epi_strongmono_factorize(t.unit(0)).epi);
        CHECK_THROWS_AS(completion(e, s, 0), LabError);
      }
    }
    CHECK(completion(zero_space(f2(), axioms), s).space.dim() == 0);
    for (const auto& x : enumerate_spaces(2, axioms)) {
      auto fx = free(x, f2(), axioms);
      auto k = completion(fx.space, s);
      auto i = completion_comparison(k);
      if (is_reflexive(cotensor(x, scalar_object(f2(), axioms)).space).reflexive) CHECK(is_isomorphism(i).has_value());
    }
  }
}

TEST_CASE("the comparison from completion to double dual is a monad morphism") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    auto report = completion_monad_morphism(universe(axioms), sigma(axioms));
    CHECK(report.ok());
    CHECK(report.maps_checked > 0);
    for (const auto& i : report.components) CHECK(injective_table(i));
  }
}

TEST_CASE("the completion reflector inverts the same maps as double dualization") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    const auto& u = universe(axioms);
    std::vector<Completion> ks;
    for (const auto& e : u) ks.push_back(completion(e, sigma(axioms)));
    std::size_t inverted = 0;
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b)
        for (const auto& f : linear_maps(u[a], u[b])) {
          const bool by_k = is_isomorphism(completion_map(ks[a], ks[b], f)).has_value();
          CHECK(by_k == inverted_by_double_dual(f));
          inverted += by_k;
        }
    CHECK(inverted == sigma(axioms).size());
  }
}

TEST_CASE("the evaluation map of the dual of a free object has a retraction") {
  for (auto axioms : {Axioms::limit, Axioms::down_only})
    for (const auto& x : enumerate_spaces(2, axioms)) CHECK(reflexivity_retraction_check(x, f2(), axioms));
  auto fx = free(discrete(1), f2(), Axioms::limit);
  CHECK(DualTower(fx.space, 1).space(1).size() == 2);
  CHECK(DualTower(free(discrete(0), f2(), Axioms::limit).space, 1).space(1).dim() == 0);
}

TEST_CASE("tensoring complete objects and completing") {
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    const auto& s = sigma(axioms);
    auto kr = completion(scalar_object(f2(), axioms), s);
    std::vector<ConvVect> complete;
    for (const auto& e : universe(axioms))
      if (is_complete(e, s)) complete.push_back(e);
    REQUIRE(complete.size() >= 3);
    for (const auto& c : complete) {
      auto rc = day_reflection_tensor(kr.space, c, s);
      CHECK(is_complete(rc.completed.space, s));
      CHECK(is_isomorphism(day_left_unitor(rc, kr)).has_value());
      CHECK(day_reflection_tensor(zero_space(f2(), axioms), c, s).completed.space.dim() == 0);
      for (const auto& d : complete) {
        auto cd = day_reflection_tensor(c, d, s), dc = day_reflection_tensor(d, c, s);
        CHECK(is_isomorphism(day_symmetry(cd, dc)).has_value());
        for (const auto& e : complete) {
          if (c.dim() * d.dim() * e.dim() > 4) continue;
          auto c12_3 = day_reflection_tensor(cd.completed.space, e, s);
          auto c23 = day_reflection_tensor(d, e, s);
          auto c1_23 = day_reflection_tensor(c, c23.completed.space, s);
          CHECK(is_isomorphism(day_associator(cd, c12_3, c23, c1_23)).has_value());
        }
      }
    }
  }
}

TEST_CASE("each link from reflexive cotensors to Fubini holds separately") {
  DistributionMonad d(f2());
  for (auto axioms : {Axioms::limit, Axioms::down_only}) {
    const auto& s = sigma(axioms);
    auto spaces = enumerate_spaces(2, axioms);
    for (const auto& x : spaces) {
      const bool reflexive = is_reflexive(cotensor(x, scalar_object(f2(), axioms)).space).reflexive;
      auto fx = free(x, f2(), axioms);
      const bool inverted = inverted_by_double_dual(DualTower(fx.space, 2).unit(0));
      const bool iso = is_isomorphism(completion_comparison(completion(fx.space, s))).has_value();
      CHECK((!reflexive || inverted));
      CHECK((!inverted || iso));
    }
    for (const auto& x : spaces)
      for (const auto& y : spaces) CHECK(check_commutative(d, x, y, axioms).implication_holds());
  }
}
