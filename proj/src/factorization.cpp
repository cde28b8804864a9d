#include "fubinilab/factorization.hpp"

#include <map>

#include "fubinilab/dualization.hpp"

namespace fubinilab {

bool is_injective(const LinMap& f) { return rank(f.matrix(), f.dom().field()) == f.dom().dim(); }

bool is_surjective(const LinMap& f) { return rank(f.matrix(), f.dom().field()) == f.cod().dim(); }

bool is_strong_mono(const LinMap& f) {
  if (!is_injective(f)) return false;
  const auto table = f.table();
  for (const auto& g : f.cod().zero_generators()) {
    Subset pre;
    for (PointId u = 0; u < table.size(); ++u)
      if (contains(g, table[u])) pre.push_back(u);
    if (!pre.empty() && !f.dom().converges_to_zero(pre)) return false;
  }
  return true;
}

bool is_v_mono(const LinMap& m, const std::vector<ConvVect>& universe, const Bounds& bounds) {
  for (const auto& a : universe) {
    auto from = internal_hom(a, m.dom(), bounds);
    auto to = internal_hom(a, m.cod(), bounds);
    if (!is_injective(postcompose(from, to, m))) return false;
  }
  return true;
}

bool is_v_epi(const LinMap& e, const std::vector<ConvVect>& universe, const Bounds& bounds) {
  for (const auto& a : universe) {
    auto from = internal_hom(e.cod(), a, bounds);
    auto to = internal_hom(e.dom(), a, bounds);
    if (!is_injective(precompose(from, to, e))) return false;
  }
  return true;
}

Subspace initial_subspace(const ConvVect& e, const Matrix& basis) {
  const Field& f = e.field();
  const Matrix b = canonical_basis(basis, f);
  const auto r = static_cast<std::size_t>(b.cols());
  std::vector<Subset> gens;
  for (const auto& g : e.zero_generators()) {
    Subset local;
    for (PointId u : g)
      if (auto c = solve(b, e.coords(u), f)) local.push_back(encode(*c, f));
    gens.push_back(normalized(std::move(local)));
  }
  ConvVect space(f, r, std::move(gens), e.axioms());
  LinMap inclusion(space, e, b);
  return Subspace{std::move(space), std::move(inclusion)};
}

Factorization epi_strongmono_factorize(const LinMap& f) {
  const Field& fld = f.dom().field();
  auto image = initial_subspace(f.cod(), f.matrix());
  const Matrix& b = image.inclusion.matrix();
  Matrix epi(b.cols(), f.matrix().cols());
  for (Eigen::Index i = 0; i < epi.cols(); ++i) epi.col(i) = *solve(b, f.matrix().col(i), fld);
  return Factorization{LinMap(f.dom(), image.space, std::move(epi)), std::move(image.inclusion)};
}

OrthogonalityCertificate is_orthogonal(const LinMap& e, const LinMap& m, const Bounds& bounds) {
  auto bc = internal_hom(e.cod(), m.dom(), bounds);
  auto ac = internal_hom(e.dom(), m.dom(), bounds);
  auto bd = internal_hom(e.cod(), m.cod(), bounds);
  auto ad = internal_hom(e.dom(), m.cod(), bounds);
  auto left = precompose(bc, ac, e);
  auto right = precompose(bd, ad, e);
  auto top = postcompose(bc, bd, m);
  auto bottom = postcompose(ac, ad, m);
  auto corner = pullback(bottom.underlying(bounds.enumeration), right.underlying(bounds.enumeration));

  std::map<std::pair<PointId, PointId>, PointId> at;
  for (PointId q = 0; q < corner.pairs.size(); ++q) at[corner.pairs[q]] = q;
  const std::size_t n = bc.space.size();
  std::vector<PointId> comparison(n);
  for (PointId h = 0; h < n; ++h) comparison[h] = at.at({left(h), top(h)});

  OrthogonalityCertificate cert{bc, ac, bd, ad, left, top, right, bottom, corner, comparison, false, {}, {}};
  std::vector<PointId> pre(corner.pairs.size(), static_cast<PointId>(-1));
  for (PointId h = 0; h < n; ++h) {
    if (pre[comparison[h]] != static_cast<PointId>(-1)) {
      cert.failure = "not injective";
      cert.witness = {pre[comparison[h]], h};
      return cert;
    }
    pre[comparison[h]] = h;
  }
  for (PointId q = 0; q < pre.size(); ++q)
    if (pre[q] == static_cast<PointId>(-1)) {
      cert.failure = "not surjective";
      cert.witness = {q};
      return cert;
    }
  const ConvSpace source = bc.space.underlying(bounds.enumeration);
  for (PointId q = 0; q < pre.size(); ++q)
    for (const auto& g : corner.space.generators(q)) {
      Subset back;
      for (PointId p : g) back.push_back(pre[p]);
      if (!source.converges(normalized(std::move(back)), pre[q])) {
        cert.failure = "inverse not continuous";
        cert.witness = {q};
        cert.witness.insert(cert.witness.end(), g.begin(), g.end());
        return cert;
      }
    }
  cert.pullback = true;
  return cert;
}

bool is_orthogonal_ordinary(const LinMap& e, const LinMap& m) {
  const auto us = linear_maps(e.dom(), m.dom());
  const auto vs = linear_maps(e.cod(), m.cod());
  const auto ds = linear_maps(e.cod(), m.dom());
  for (const auto& u : us)
    for (const auto& v : vs) {
      if (!(compose(m, u).matrix() == compose(v, e).matrix())) continue;
      std::size_t diagonals = 0;
      for (const auto& d : ds)
        if (compose(d, e).matrix() == u.matrix() && compose(m, d).matrix() == v.matrix()) ++diagonals;
      if (diagonals != 1) return false;
    }
  return true;
}

}  // namespace fubinilab
