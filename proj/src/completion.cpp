#include "fubinilab/completion.hpp"

#include <string>

#include "fubinilab/factorization.hpp"

namespace fubinilab {

namespace {

PointId basis_point(std::size_t i, const Field& f) {
  PointId p = 1;
  for (std::size_t k = 0; k < i; ++k) p *= static_cast<PointId>(f.characteristic());
  return p;
}

bool same(const LinMap& a, const LinMap& b) { return a.matrix() == b.matrix(); }

}  // namespace

bool inverted_by_double_dual(const LinMap& f, const Bounds& bounds) {
  DualTower a(f.dom(), 2, bounds), b(f.cod(), 2, bounds);
  return is_isomorphism(double_dual_of(a, 0, b, 0, f)).has_value();
}

std::vector<LinMap> sigma_inverted(const std::vector<ConvVect>& universe, const Bounds& bounds) {
  std::vector<DualTower> towers;
  for (const auto& e : universe) towers.emplace_back(e, 2, bounds);
  std::vector<LinMap> out;
  for (const auto& a : towers)
    for (const auto& b : towers)
      for (const auto& f : linear_maps(a.space(0), b.space(0), bounds.enumeration))
        if (is_isomorphism(double_dual_of(a, 0, b, 0, f))) out.push_back(f);
  return out;
}

bool is_complete(const ConvVect& e, const std::vector<LinMap>& sigma, const Bounds& bounds) {
  for (const auto& h : sigma) {
    auto from = internal_hom(h.cod(), e, bounds);
    auto to = internal_hom(h.dom(), e, bounds);
    if (!is_isomorphism(precompose(from, to, h))) return false;
  }
  return true;
}

Completion completion(const ConvVect& e, const std::vector<LinMap>& sigma, std::size_t budget, const Bounds& bounds) {
  Completion c{e, LinMap::identity(e), 0, {e}};
  for (;;) {
    if (is_complete(c.space, sigma, bounds)) return c;
    if (c.rounds == budget) {
      std::string dims;
      for (const auto& s : c.chain) dims += (dims.empty() ? "" : " -> ") + std::to_string(s.dim());
      fail(ErrorKind::IterationBudgetExhausted,
           "completion: no complete object after " + std::to_string(budget) + " rounds; dimensions " + dims);
    }
    DualTower t(c.space, 2, bounds);
    auto fac = epi_strongmono_factorize(t.unit(0));
    c.unit = compose(fac.epi, c.unit);
    c.space = fac.epi.cod();
    c.chain.push_back(c.space);
    ++c.rounds;
  }
}

LinMap linear_from_samples(const ConvVect& dom, const ConvVect& cod, const Matrix& samples, const Matrix& images) {
  const Field& f = dom.field();
  if (rank(samples, f) != dom.dim())
    fail(ErrorKind::MismatchedConstructions, "linear_from_samples: samples do not span the domain");
  const Matrix st = samples.transpose();
  Matrix m(static_cast<Eigen::Index>(cod.dim()), static_cast<Eigen::Index>(dom.dim()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = solve(st, images.row(r).transpose(), f);
    if (!row) fail(ErrorKind::MismatchedConstructions, "linear_from_samples: no linear map fits the samples");
    m.row(r) = row->transpose();
  }
  return LinMap(dom, cod, std::move(m));
}

LinMap completion_map(const Completion& a, const Completion& b, const LinMap& f) {
  if (!(f.dom() == a.chain.front()) || !(f.cod() == b.chain.front()))
    fail(ErrorKind::DimensionMismatch, "completion_map: map does not match the completions");
  const Field& fld = f.dom().field();
  return linear_from_samples(a.space, b.space, a.unit.matrix(), mat_mul(b.unit.matrix(), f.matrix(), fld));
}

LinMap completion_comparison(const Completion& k, const Bounds& bounds) {
  DualTower te(k.chain.front(), 2, bounds), tk(k.space, 2, bounds);
  const LinMap eval = te.unit(0);
  const LinMap through = linear_from_samples(k.space, te.space(2), k.unit.matrix(), eval.matrix());
  auto back = is_isomorphism(double_dual_of(te, 0, tk, 0, k.unit));
  if (!back) fail(ErrorKind::MismatchedConstructions, "completion_comparison: the completion unit is not inverted");
  const LinMap via_dual = compose(*back, tk.unit(0));
  if (!same(through, via_dual)) fail(ErrorKind::MismatchedConstructions, "completion_comparison: the two routes differ");
  return through;
}

CompletionMorphismReport completion_monad_morphism(const std::vector<ConvVect>& universe, const std::vector<LinMap>& sigma,
                                                   const Bounds& bounds) {
  CompletionMorphismReport r;
  std::vector<DualTower> towers;
  for (const auto& e : universe) {
    auto k = completion(e, sigma, 8, bounds);
    auto i = completion_comparison(k, bounds);
    DualTower te(e, 6, bounds), tk(k.space, 2, bounds);
    r.strong_monos = r.strong_monos && is_strong_mono(i);
    r.unit_triangle = r.unit_triangle && same(compose(i, k.unit), te.unit(0));

    auto kk = completion(k.space, sigma, 8, bounds);
    auto mult = is_isomorphism(kk.unit);
    if (!mult) {
      r.multiplicative = false;
    } else {
      const LinMap ik = completion_comparison(kk, bounds);
      const LinMap hi = double_dual_of(tk, 0, te, 2, i);
      const LinMap rhs = compose(te.mult(0), compose(hi, ik));
      r.multiplicative = r.multiplicative && same(compose(i, *mult), rhs);
    }
    r.completions.push_back(std::move(k));
    r.components.push_back(std::move(i));
    towers.push_back(std::move(te));
  }
  for (std::size_t a = 0; a < universe.size(); ++a)
    for (std::size_t b = 0; b < universe.size(); ++b)
      for (const auto& f : linear_maps(universe[a], universe[b], bounds.enumeration)) {
        const LinMap kf = completion_map(r.completions[a], r.completions[b], f);
        const LinMap hf = double_dual_of(towers[a], 0, towers[b], 0, f);
        r.natural = r.natural && same(compose(r.components[b], kf), compose(hf, r.components[a]));
        ++r.maps_checked;
      }
  return r;
}

bool reflexivity_retraction_check(const ConvSpace& x, const Field& f, Axioms axioms, const Bounds& bounds) {
  auto fx = free(x, f, axioms, bounds.carrier);
  DualTower t(fx.space, 4, bounds);
  const LinMap retraction = dual_of(t, 0, t, 2, t.unit(0));
  return compose(retraction, t.unit(1)) == LinMap::identity(t.space(1));
}

DayTensor day_reflection_tensor(const ConvVect& c1, const ConvVect& c2, const std::vector<LinMap>& sigma,
                                const Bounds& bounds) {
  auto t = tensor(c1, c2, bounds.carrier);
  auto k = completion(t.space, sigma, 8, bounds);
  return DayTensor{std::move(t), std::move(k)};
}

LinMap day_left_unitor(const DayTensor& rc, const Completion& kr) {
  if (!(rc.raw.left == kr.space)) fail(ErrorKind::DimensionMismatch, "day_left_unitor: left factor is not the completed unit");
  const ConvVect& c = rc.raw.right;
  const Field& f = c.field();
  const PointId one = kr.unit(1);
  Matrix m(static_cast<Eigen::Index>(rc.completed.space.dim()), static_cast<Eigen::Index>(c.dim()));
  for (std::size_t j = 0; j < c.dim(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = rc.completed.space.coords(rc.completed.unit(rc.raw.pure(one, basis_point(j, f))));
  return LinMap(c, rc.completed.space, std::move(m));
}

LinMap day_symmetry(const DayTensor& c12, const DayTensor& c21) {
  return completion_map(c12.completed, c21.completed, tensor_symmetry(c12.raw, c21.raw));
}

LinMap day_associator(const DayTensor& c12, const DayTensor& c12_3, const DayTensor& c23, const DayTensor& c1_23) {
  const Field& f = c12.raw.left.field();
  const std::size_t d1 = c12.raw.left.dim(), d2 = c12.raw.right.dim(), d3 = c23.raw.right.dim();
  const ConvVect& dom = c12_3.completed.space;
  const ConvVect& cod = c1_23.completed.space;
  const auto k = static_cast<Eigen::Index>(d1 * d2 * d3);
  Matrix samples(static_cast<Eigen::Index>(dom.dim()), k), images(static_cast<Eigen::Index>(cod.dim()), k);
  Eigen::Index col = 0;
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d2; ++b)
      for (std::size_t c = 0; c < d3; ++c, ++col) {
        const PointId ea = basis_point(a, f), eb = basis_point(b, f), ec = basis_point(c, f);
        const PointId ab = c12.completed.unit(c12.raw.pure(ea, eb));
        const PointId bc = c23.completed.unit(c23.raw.pure(eb, ec));
        samples.col(col) = dom.coords(c12_3.completed.unit(c12_3.raw.pure(ab, ec)));
        images.col(col) = cod.coords(c1_23.completed.unit(c1_23.raw.pure(ea, bc)));
      }
  return linear_from_samples(dom, cod, samples, images);
}

}  // namespace fubinilab
