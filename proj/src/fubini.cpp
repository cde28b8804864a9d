#include "fubinilab/fubini.hpp"

namespace fubinilab {

ContMap Strength::as_map() const { return ContMap(domain.space, discrete(target_points), table); }

Strength tprime(const MonadOps& t, const ConvSpace& x, const ConvSpace& y, const Product& xy) {
  const Components cx = Components::of(x), cxy = Components::of(xy.space);
  const std::size_t nx = t.points(cx);
  Strength s{product(discrete(nx), y), {}, t.points(cxy)};
  s.table.resize(s.domain.space.size());
  std::vector<PointId> section(x.size());
  for (PointId b = 0; b < y.size(); ++b) {
    for (PointId a = 0; a < x.size(); ++a) section[a] = xy.pair(a, b);
    for (PointId u = 0; u < nx; ++u) s.table[s.domain.pair(u, b)] = t.encode(t.map_dense(cx, cxy, section, t.decode(cx, u)));
  }
  return s;
}

Strength tdoubleprime(const MonadOps& t, const ConvSpace& x, const ConvSpace& y, const Product& xy) {
  const Components cy = Components::of(y), cxy = Components::of(xy.space);
  const std::size_t ny = t.points(cy);
  Strength s{product(x, discrete(ny)), {}, t.points(cxy)};
  s.table.resize(s.domain.space.size());
  std::vector<PointId> section(y.size());
  for (PointId a = 0; a < x.size(); ++a) {
    for (PointId b = 0; b < y.size(); ++b) section[b] = xy.pair(a, b);
    for (PointId v = 0; v < ny; ++v) s.table[s.domain.pair(a, v)] = t.encode(t.map_dense(cy, cxy, section, t.decode(cy, v)));
  }
  return s;
}

std::vector<PointId> tprime_formula(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, const Product& xy) {
  const Components cx = Components::of(x), cxy = Components::of(xy.space);
  const std::size_t nx = d.points(cx);
  const auto ny = static_cast<PointId>(y.size());
  std::vector<PointId> table(nx * y.size());
  std::vector<int> partial(x.size());
  for (PointId u = 0; u < nx; ++u) {
    const Vector mu = d.decode(cx, u);
    for (PointId b = 0; b < ny; ++b) {
      Vector out(static_cast<Eigen::Index>(cxy.rank()));
      for (std::size_t c = 0; c < cxy.rank(); ++c) {
        for (PointId a = 0; a < x.size(); ++a) partial[a] = cxy[xy.pair(a, b)] == c ? 1 : 0;
        out(static_cast<Eigen::Index>(c)) = d.apply(cx, mu, partial);
      }
      table[u * ny + b] = d.encode(out);
    }
  }
  return table;
}

std::vector<PointId> tdoubleprime_formula(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y,
                                          const Product& xy) {
  const Components cy = Components::of(y), cxy = Components::of(xy.space);
  const auto ny = static_cast<PointId>(d.points(cy));
  std::vector<PointId> table(x.size() * ny);
  std::vector<int> partial(y.size());
  for (PointId a = 0; a < x.size(); ++a) {
    for (PointId v = 0; v < ny; ++v) {
      const Vector nu = d.decode(cy, v);
      Vector out(static_cast<Eigen::Index>(cxy.rank()));
      for (std::size_t c = 0; c < cxy.rank(); ++c) {
        for (PointId b = 0; b < y.size(); ++b) partial[b] = cxy[xy.pair(a, b)] == c ? 1 : 0;
        out(static_cast<Eigen::Index>(c)) = d.apply(cy, nu, partial);
      }
      table[a * ny + v] = d.encode(out);
    }
  }
  return table;
}

Strength tprime_checked(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, const Product& xy) {
  Strength s = tprime(d, x, y, xy);
  if (s.table != tprime_formula(d, x, y, xy)) fail(ErrorKind::MismatchedConstructions, "t' routes disagree");
  s.as_map();
  return s;
}

Strength tdoubleprime_checked(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, const Product& xy) {
  Strength s = tdoubleprime(d, x, y, xy);
  if (s.table != tdoubleprime_formula(d, x, y, xy)) fail(ErrorKind::MismatchedConstructions, "t'' routes disagree");
  s.as_map();
  return s;
}

FubiniPair fubini_pair(const MonadOps& t, const ConvSpace& x, const ConvSpace& y) {
  FubiniPair fp{product(x, y), Components::of(x), Components::of(y), {}, 0, 0, {}, {}};
  fp.cxy = Components::of(fp.xy.space);
  fp.nx = t.points(fp.cx);
  fp.ny = t.points(fp.cy);
  const Components lxy = t.level(fp.cxy);
  const Strength tp = tprime(t, x, y, fp.xy);
  const Strength tpp = tdoubleprime(t, x, y, fp.xy);
  const Components ca = Components::of(tp.domain.space), cb = Components::of(tpp.domain.space);
  fp.otimes.resize(fp.nx * fp.ny);
  fp.otimes_tilde.resize(fp.nx * fp.ny);
  std::vector<PointId> section_y(y.size()), section_x(x.size());
  for (PointId mu = 0; mu < fp.nx; ++mu) {
    const SparseMeasure m = sparse(t.decode(fp.cx, mu));
    for (PointId b = 0; b < y.size(); ++b) section_y[b] = tp.domain.pair(mu, b);
    for (PointId nu = 0; nu < fp.ny; ++nu) {
      const SparseMeasure n = sparse(t.decode(fp.cy, nu));
      // mult . T(t'_{X,Y}) . t''_{TX,Y}
      const SparseMeasure inner = t.map(fp.cy, ca, section_y, n);
      fp.otimes[fp.index(mu, nu)] = t.encode(t.mult(fp.cxy, t.map(ca, lxy, tp.table, inner)));
      // mult . T(t''_{X,Y}) . t'_{X,TY}
      for (PointId a = 0; a < x.size(); ++a) section_x[a] = tpp.domain.pair(a, nu);
      const SparseMeasure inner_t = t.map(fp.cx, cb, section_x, m);
      fp.otimes_tilde[fp.index(mu, nu)] = t.encode(t.mult(fp.cxy, t.map(cb, lxy, tpp.table, inner_t)));
    }
  }
  return fp;
}

std::vector<std::vector<int>> continuous_functions(const Components& z, const Field& f, std::size_t cap) {
  auto n = point_count(z.rank(), f, cap);
  if (!n) fail(ErrorKind::BoundExceeded, "too many continuous functions to enumerate");
  std::vector<std::vector<int>> out;
  out.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) {
    const Vector vals = decode(static_cast<PointId>(i), z.rank(), f);
    std::vector<int> g(z.points());
    for (PointId x = 0; x < z.points(); ++x) g[x] = vals(static_cast<Eigen::Index>(z[x]));
    out.push_back(std::move(g));
  }
  return out;
}

IteratedReport check_iterated_integrals(const DistributionMonad& d, const FubiniPair& fp) {
  IteratedReport r;
  const auto fns = continuous_functions(fp.cxy, d.field());
  const std::size_t nxp = fp.cx.points(), nyp = fp.cy.points();
  std::vector<int> section_x(nxp), section_y(nyp), outer_y(nyp), outer_x(nxp);
  for (PointId mu = 0; mu < fp.nx; ++mu) {
    const Vector m = d.decode(fp.cx, mu);
    for (PointId nu = 0; nu < fp.ny; ++nu) {
      const Vector n = d.decode(fp.cy, nu);
      const Vector prod = d.decode(fp.cxy, fp.otimes[fp.index(mu, nu)]);
      const Vector prod_t = d.decode(fp.cxy, fp.otimes_tilde[fp.index(mu, nu)]);
      for (const auto& f : fns) {
        // nu(y -> mu(x -> f(x, y)))
        for (PointId b = 0; b < nyp; ++b) {
          for (PointId a = 0; a < nxp; ++a) section_x[a] = f[fp.xy.pair(a, b)];
          outer_y[b] = d.apply(fp.cx, m, section_x);
        }
        // mu(x -> nu(y -> f(x, y)))
        for (PointId a = 0; a < nxp; ++a) {
          for (PointId b = 0; b < nyp; ++b) section_y[b] = f[fp.xy.pair(a, b)];
          outer_x[a] = d.apply(fp.cy, n, section_y);
        }
        if (d.apply(fp.cxy, prod, f) != d.apply(fp.cy, n, outer_y)) ++r.otimes_mismatches;
        if (d.apply(fp.cxy, prod_t, f) != d.apply(fp.cx, m, outer_x)) ++r.otimes_tilde_mismatches;
        ++r.triples;
      }
    }
  }
  return r;
}

FubiniVerdict verdict_from_pair(const DistributionMonad& d, const FubiniPair& fp) {
  FubiniVerdict v;
  v.equal = fp.otimes == fp.otimes_tilde;
  if (v.equal) return v;
  for (PointId mu = 0; mu < fp.nx; ++mu) {
    for (PointId nu = 0; nu < fp.ny; ++nu) {
      const PointId i = fp.index(mu, nu);
      if (fp.otimes[i] == fp.otimes_tilde[i]) continue;
      const Vector a = d.decode(fp.cxy, fp.otimes[i]), b = d.decode(fp.cxy, fp.otimes_tilde[i]);
      std::size_t c = 0;
      while (a(static_cast<Eigen::Index>(c)) == b(static_cast<Eigen::Index>(c))) ++c;
      FubiniWitness w{d.decode(fp.cx, mu), d.decode(fp.cy, nu), std::vector<int>(fp.cxy.points()), 0, 0};
      for (PointId p = 0; p < fp.cxy.points(); ++p) w.f[p] = fp.cxy[p] == c ? 1 : 0;
      w.otimes_value = d.apply(fp.cxy, a, w.f);
      w.otimes_tilde_value = d.apply(fp.cxy, b, w.f);
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

FubiniVerdict check_commutative(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, Axioms axioms,
                                const Bounds& bounds) {
  const FubiniPair fp = fubini_pair(d, x, y);
  FubiniVerdict v = verdict_from_pair(d, fp);
  const ConvVect r = scalar_object(d.field(), axioms);
  v.reflexive_x = is_reflexive(cotensor(x, r, bounds).space, bounds).reflexive;
  v.reflexive_y = is_reflexive(cotensor(y, r, bounds).space, bounds).reflexive;
  v.reflexive_xy = is_reflexive(cotensor(fp.xy.space, r, bounds).space, bounds).reflexive;
  return v;
}

std::vector<PointId> derived_enrichment(const MonadOps& t, const ConvSpace& x, const ConvSpace& y) {
  const FunctionSpace fs = function_space(x, y);
  const FubiniPair fp = fubini_pair(t, x, fs.space);
  const ContMap ev = fs.eval(fp.xy);
  const Components cfs = Components::of(fs.space), cy = Components::of(y);
  std::vector<PointId> table(fs.maps.size() * fp.nx);
  for (PointId f = 0; f < fs.maps.size(); ++f) {
    const PointId dirac = t.encode(t.unit(cfs, f));
    for (PointId mu = 0; mu < fp.nx; ++mu) {
      const Vector joint = t.decode(fp.cxy, fp.otimes[fp.index(mu, dirac)]);
      table[f * fp.nx + mu] = t.encode(t.map_dense(fp.cxy, cy, ev.table(), joint));
    }
  }
  return table;
}

std::vector<PointId> direct_enrichment(const MonadOps& t, const ConvSpace& x, const ConvSpace& y) {
  const FunctionSpace fs = function_space(x, y);
  const Components cx = Components::of(x), cy = Components::of(y);
  const std::size_t nx = t.points(cx);
  std::vector<PointId> table(fs.maps.size() * nx);
  for (PointId f = 0; f < fs.maps.size(); ++f)
    for (PointId mu = 0; mu < nx; ++mu) table[f * nx + mu] = t.encode(t.map_dense(cx, cy, fs.maps[f], t.decode(cx, mu)));
  return table;
}

void check_enrichment(const MonadOps& t, const ConvSpace& x, const ConvSpace& y) {
  if (derived_enrichment(t, x, y) != direct_enrichment(t, x, y))
    fail(ErrorKind::EnrichmentMismatch, "enrichment recovered from the monoidal structure differs from the direct one");
}

}  // namespace fubinilab
