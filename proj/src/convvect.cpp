#include "fubinilab/convvect.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace fubinilab {

namespace {

std::size_t checked_points(std::size_t dim, const Field& f, std::size_t bound, const char* what) {
  auto n = point_count(dim, f, bound);
  if (!n) fail(ErrorKind::BoundExceeded, std::string(what) + ": carrier exceeds " + std::to_string(bound) + " points");
  return *n;
}

Subset sumset(const ConvVect& e, const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size() * b.size());
  for (PointId u : a)
    for (PointId v : b) out.push_back(e.add(u, v));
  return normalized(std::move(out));
}

Subset scaled(const ConvVect& e, int c, const Subset& a) {
  Subset out;
  out.reserve(a.size());
  for (PointId u : a) out.push_back(e.smul(c, u));
  return normalized(std::move(out));
}

// Points of a subset as coordinate columns.
Matrix columns_of(const ConvVect& e, const Subset& s) {
  Matrix m(static_cast<Eigen::Index>(e.dim()), static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = e.coords(s[i]);
  return m;
}

// Rows spanning the functionals that vanish on the span of the columns.
Matrix annihilator(const Matrix& span, std::size_t dim, const Field& f) {
  if (span.cols() == 0) return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  return kernel(span.transpose(), f).transpose();
}

Vector coefficients(const Matrix& basis, const Vector& v, const Field& f, const char* what) {
  auto c = solve(basis, v, f);
  if (!c) fail(ErrorKind::InvalidArgument, std::string(what) + ": element outside the basis span");
  return *c;
}

// Every point of the span of the columns of `basis`, as coefficient-free ambient vectors.
std::vector<Vector> span_points(const Matrix& basis, const Field& f, std::size_t cap, const char* what) {
  const auto k = static_cast<std::size_t>(basis.cols());
  const std::size_t n = checked_points(k, f, cap, what);
  std::vector<Vector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(mat_vec(basis, decode(static_cast<PointId>(i), k, f), f));
  return out;
}

// Canonical basis of a subspace cut out from span(candidates) by `keep`. When
// every candidate basis vector is kept the subspace is the whole span, since
// kept vectors are closed under linear combination.
Matrix kept_subspace(const Matrix& candidates, const Field& f, std::size_t cap, const char* what,
                     const std::function<bool(const Vector&)>& keep) {
  bool all = true;
  for (Eigen::Index c = 0; c < candidates.cols() && all; ++c) all = keep(candidates.col(c));
  if (all) return canonical_basis(candidates, f);
  std::vector<Vector> kept;
  for (auto& v : span_points(candidates, f, cap, what))
    if (keep(v)) kept.push_back(std::move(v));
  Matrix m(candidates.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = kept[i];
  return canonical_basis(m, f);
}

}  // namespace

// ConvVect

ConvVect::ConvVect(Field field, std::size_t dim, std::vector<Subset> zero_gens, Axioms axioms)
    : field_(std::move(field)), dim_(dim), axioms_(axioms) {
  auto limit = point_count(dim_, field_, std::numeric_limits<PointId>::max());
  if (!limit) fail(ErrorKind::BoundExceeded, "ConvVect: dimension too large to index");
  for (auto& g : zero_gens) {
    g = normalized(std::move(g));
    if (!g.empty() && g.back() >= *limit) fail(ErrorKind::InvalidArgument, "ConvVect: generator point out of range");
  }
  zero_gens.push_back(Subset{0});
  zero_gens_ = maximal_antichain(std::move(zero_gens));
  if (axioms_ == Axioms::limit && zero_gens_.size() != 1)
    fail(ErrorKind::InvalidArgument, "ConvVect: zero family not closed under unions");
  for (const auto& a : zero_gens_) {
    for (const auto& b : zero_gens_)
      if (!covered(sumset(*this, a, b), zero_gens_))
        fail(ErrorKind::InvalidArgument, "ConvVect: addition is not continuous");
    for (int c = 2; c < field_.characteristic(); ++c)
      if (!covered(scaled(*this, c, a), zero_gens_))
        fail(ErrorKind::InvalidArgument, "ConvVect: scalar multiplication is not continuous");
  }
}

ConvVect ConvVect::closure(Field field, std::size_t dim, std::vector<Subset> seeds, Axioms axioms) {
  ConvVect shell(field, dim, {}, axioms);
  for (auto& s : seeds) s = normalized(std::move(s));
  seeds.push_back(Subset{0});
  std::vector<std::function<Subset(const Subset&)>> unary;
  for (int c = 2; c < field.characteristic(); ++c)
    unary.push_back([&shell, c](const Subset& a) { return scaled(shell, c, a); });
  auto gens = close_family(
      std::move(seeds), [&shell](const Subset& a, const Subset& b) { return sumset(shell, a, b); }, unary,
      axioms == Axioms::limit);
  return ConvVect(std::move(field), dim, std::move(gens), axioms);
}

std::size_t ConvVect::size() const { return checked_points(dim_, field_, kMaxMaterializedPoints, "ConvVect"); }

PointId ConvVect::add(PointId u, PointId v) const {
  const auto p = static_cast<PointId>(field_.characteristic());
  if (p == 2) return u ^ v;
  PointId out = 0, scale = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += scale * ((u % p + v % p) % p);
    u /= p;
    v /= p;
    scale *= p;
  }
  return out;
}

PointId ConvVect::neg(PointId u) const { return smul(field_.neg(1 % field_.characteristic()), u); }

PointId ConvVect::smul(int c, PointId u) const {
  const auto p = static_cast<PointId>(field_.characteristic());
  c = field_.reduce(c);
  if (c == 0) return 0;
  if (c == 1) return u;
  PointId out = 0, scale = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += scale * static_cast<PointId>(field_.mul(c, static_cast<int>(u % p)));
    u /= p;
    scale *= p;
  }
  return out;
}

Subset ConvVect::translate(const Subset& a, PointId v) const {
  Subset out;
  out.reserve(a.size());
  for (PointId u : a) out.push_back(add(u, v));
  return normalized(std::move(out));
}

bool ConvVect::converges(const Subset& a, PointId v) const { return converges_to_zero(translate(a, neg(v))); }

Subset ConvVect::support() const {
  Subset s;
  for (const auto& g : zero_gens_) s = set_union(s, g);
  return s;
}

bool ConvVect::is_discrete() const { return zero_gens_.size() == 1 && zero_gens_[0] == Subset{0}; }

ConvSpace ConvVect::underlying(std::size_t bound) const {
  const std::size_t n = checked_points(dim_, field_, bound, "underlying space");
  std::vector<std::vector<Subset>> gens(n);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& g : zero_gens_) gens[v].push_back(translate(g, static_cast<PointId>(v)));
  return ConvSpace::from_generators(std::move(gens), false);
}

// LinMap

bool is_continuous_linear(const ConvVect& dom, const ConvVect& cod, const Matrix& m) {
  if (m.rows() != static_cast<Eigen::Index>(cod.dim()) || m.cols() != static_cast<Eigen::Index>(dom.dim())) return false;
  for (const auto& g : dom.zero_generators()) {
    Subset img;
    img.reserve(g.size());
    for (PointId u : g) img.push_back(cod.point(m * dom.coords(u)));
    if (!cod.converges_to_zero(normalized(std::move(img)))) return false;
  }
  return true;
}

LinMap::LinMap(ConvVect dom, ConvVect cod, Matrix m) : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (!(dom_.field() == cod_.field())) fail(ErrorKind::DimensionMismatch, "LinMap: fields differ");
  if (m.rows() != static_cast<Eigen::Index>(cod_.dim()) || m.cols() != static_cast<Eigen::Index>(dom_.dim()))
    fail(ErrorKind::DimensionMismatch, "LinMap: matrix shape does not match the spaces");
  m_ = mod_p(m, dom_.field());
  if (!is_continuous_linear(dom_, cod_, m_)) fail(ErrorKind::NotContinuous, "LinMap: zero family not preserved");
}

LinMap LinMap::from_points(const ConvVect& dom, const ConvVect& cod, const std::vector<PointId>& table) {
  const std::size_t n = dom.size();
  if (table.size() != n) fail(ErrorKind::DimensionMismatch, "LinMap: table size differs from the domain");
  for (PointId u = 0; u < n; ++u) {
    for (PointId v = 0; v < n; ++v)
      if (table[dom.add(u, v)] != cod.add(table[u], table[v])) fail(ErrorKind::NotLinearizable, "LinMap: not additive");
    for (int c = 0; c < dom.field().characteristic(); ++c)
      if (table[dom.smul(c, u)] != cod.smul(c, table[u])) fail(ErrorKind::NotLinearizable, "LinMap: not homogeneous");
  }
  Matrix m(static_cast<Eigen::Index>(cod.dim()), static_cast<Eigen::Index>(dom.dim()));
  PointId basis = 1;
  for (std::size_t i = 0; i < dom.dim(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = cod.coords(table[basis]);
    basis *= static_cast<PointId>(dom.field().characteristic());
  }
  return LinMap(dom, cod, m);
}

LinMap LinMap::identity(const ConvVect& e) {
  const auto d = static_cast<Eigen::Index>(e.dim());
  return LinMap(e, e, Matrix::Identity(d, d));
}

LinMap LinMap::zero(const ConvVect& dom, const ConvVect& cod) {
  return LinMap(dom, cod, Matrix::Zero(static_cast<Eigen::Index>(cod.dim()), static_cast<Eigen::Index>(dom.dim())));
}

PointId LinMap::operator()(PointId u) const { return cod_.point(m_ * dom_.coords(u)); }

Subset LinMap::image(const Subset& a) const {
  Subset out;
  out.reserve(a.size());
  for (PointId u : a) out.push_back((*this)(u));
  return normalized(std::move(out));
}

std::vector<PointId> LinMap::table() const {
  const std::size_t n = dom_.size();
  std::vector<PointId> t(n);
  for (std::size_t u = 0; u < n; ++u) t[u] = (*this)(static_cast<PointId>(u));
  return t;
}

ContMap LinMap::underlying(std::size_t bound) const {
  return ContMap(dom_.underlying(bound), cod_.underlying(bound), table());
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!(f.cod() == g.dom())) fail(ErrorKind::DimensionMismatch, "compose: codomain and domain differ");
  return LinMap(f.dom(), g.cod(), mat_mul(g.matrix(), f.matrix(), f.dom().field()));
}

std::optional<LinMap> is_isomorphism(const LinMap& f) {
  auto inv = inverse(f.matrix(), f.dom().field());
  if (!inv || !is_continuous_linear(f.cod(), f.dom(), *inv)) return std::nullopt;
  return LinMap(f.cod(), f.dom(), *inv);
}

ConvVect scalar_object(const Field& f, Axioms axioms) { return ConvVect(f, 1, {}, axioms); }
ConvVect zero_space(const Field& f, Axioms axioms) { return ConvVect(f, 0, {}, axioms); }

std::vector<ConvVect> enumerate_convvects(const Field& f, std::size_t max_points, Axioms axioms) {
  std::vector<ConvVect> out;
  for (std::size_t d = 0;; ++d) {
    auto n = point_count(d, f, max_points);
    if (!n) break;
    if (*n > 4) fail(ErrorKind::BoundExceeded, "enumerate_convvects: carriers above 4 points");
    ConvVect shell(f, d, {}, axioms);
    for (std::uint64_t bits : admissible_families(*n, 0, axioms)) {
      std::vector<Subset> members;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << *n); ++mask) {
        if (!(bits >> (mask - 1) & 1)) continue;
        Subset s;
        for (PointId i = 0; i < *n; ++i)
          if (mask >> i & 1) s.push_back(i);
        members.push_back(std::move(s));
      }
      auto gens = maximal_antichain(members);
      bool closed = true;
      for (const auto& a : gens) {
        for (const auto& b : gens) closed = closed && covered(sumset(shell, a, b), gens);
        for (int c = 2; c < f.characteristic(); ++c) closed = closed && covered(scaled(shell, c, a), gens);
      }
      if (closed) out.emplace_back(f, d, std::move(gens), axioms);
    }
  }
  return out;
}

// Free object

FreeObject free(const ConvSpace& x, const Field& f, Axioms axioms, std::size_t bound) {
  const std::size_t n = x.size();
  checked_points(n, f, bound, "free");
  ConvVect shell(f, n, {}, axioms);
  std::vector<PointId> insertion(n);
  PointId e = 1;
  for (std::size_t i = 0; i < n; ++i) {
    insertion[i] = e;
    e *= static_cast<PointId>(f.characteristic());
  }
  std::vector<Subset> seeds;
  for (PointId i = 0; i < n; ++i) {
    for (const auto& g : x.generators(i)) {
      Subset s;
      for (PointId b : g) s.push_back(shell.sub(insertion[b], insertion[i]));
      seeds.push_back(std::move(s));
    }
  }
  return FreeObject{ConvVect::closure(f, n, std::move(seeds), axioms), x, std::move(insertion)};
}

LinMap free_transpose(const FreeObject& fx, const ConvVect& e, const std::vector<PointId>& images) {
  ContMap checked(fx.base, e.underlying(), images);
  Matrix m(static_cast<Eigen::Index>(e.dim()), static_cast<Eigen::Index>(fx.base.size()));
  for (std::size_t i = 0; i < fx.base.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = e.coords(checked(static_cast<PointId>(i)));
  if (!is_continuous_linear(fx.space, e, m)) fail(ErrorKind::NotLinearizable, "free_transpose: extension is not continuous");
  return LinMap(fx.space, e, m);
}

ContMap restriction(const FreeObject& fx, const LinMap& g) {
  std::vector<PointId> table(fx.base.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g(fx.insertion[i]);
  return ContMap(fx.base, g.cod().underlying(), std::move(table));
}

LinMap free_map(const FreeObject& fx, const FreeObject& fy, const ContMap& f) {
  std::vector<PointId> images(fx.base.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = fy.insertion[f(static_cast<PointId>(i))];
  return free_transpose(fx, fy.space, images);
}

LinMap counit(const FreeObject& fge, const ConvVect& e) {
  std::vector<PointId> id(fge.base.size());
  std::iota(id.begin(), id.end(), PointId{0});
  return free_transpose(fge, e, id);
}

// Tensor product

namespace {

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace

PointId TensorProduct::pure(PointId u1, PointId u2) const {
  return space.point(kron(left.coords(u1), right.coords(u2)));
}

TensorProduct tensor(const ConvVect& e1, const ConvVect& e2, std::size_t bound) {
  if (!(e1.field() == e2.field()) || e1.axioms() != e2.axioms())
    fail(ErrorKind::DimensionMismatch, "tensor: factors over different fields or axioms");
  const std::size_t d = e1.dim() * e2.dim();
  checked_points(d, e1.field(), bound, "tensor");
  TensorProduct t{ConvVect(e1.field(), d, {}, e1.axioms()), e1, e2};
  std::vector<Subset> seeds;
  const std::size_t n1 = e1.size(), n2 = e2.size();
  for (PointId u1 = 0; u1 < n1; ++u1) {
    for (PointId u2 = 0; u2 < n2; ++u2) {
      const PointId base = t.pure(u1, u2);
      for (const auto& g1 : e1.zero_generators()) {
        for (const auto& g2 : e2.zero_generators()) {
          Subset s;
          for (PointId a : g1)
            for (PointId b : g2) s.push_back(t.space.sub(t.pure(e1.add(u1, a), e2.add(u2, b)), base));
          seeds.push_back(normalized(std::move(s)));
        }
      }
    }
  }
  t.space = ConvVect::closure(e1.field(), d, std::move(seeds), e1.axioms());
  return t;
}

bool is_continuous_bilinear(const ConvVect& e1, const ConvVect& e2, const ConvVect& e3,
                            const std::vector<PointId>& table) {
  const std::size_t n1 = e1.size(), n2 = e2.size();
  if (table.size() != n1 * n2) return false;
  auto at = [&](PointId u1, PointId u2) { return table[u1 * n2 + u2]; };
  const int p = e1.field().characteristic();
  for (PointId u1 = 0; u1 < n1; ++u1) {
    for (PointId u2 = 0; u2 < n2; ++u2) {
      for (PointId v1 = 0; v1 < n1; ++v1)
        if (at(e1.add(u1, v1), u2) != e3.add(at(u1, u2), at(v1, u2))) return false;
      for (PointId v2 = 0; v2 < n2; ++v2)
        if (at(u1, e2.add(u2, v2)) != e3.add(at(u1, u2), at(u1, v2))) return false;
      for (int c = 0; c < p; ++c) {
        if (at(e1.smul(c, u1), u2) != e3.smul(c, at(u1, u2))) return false;
        if (at(u1, e2.smul(c, u2)) != e3.smul(c, at(u1, u2))) return false;
      }
      for (const auto& g1 : e1.zero_generators()) {
        for (const auto& g2 : e2.zero_generators()) {
          Subset img;
          for (PointId a : g1)
            for (PointId b : g2) img.push_back(at(e1.add(u1, a), e2.add(u2, b)));
          if (!e3.converges(normalized(std::move(img)), at(u1, u2))) return false;
        }
      }
    }
  }
  return true;
}

LinMap bilinear_transpose(const TensorProduct& t, const ConvVect& e3, const std::vector<PointId>& table) {
  const std::size_t d1 = t.left.dim(), d2 = t.right.dim(), n2 = t.right.size();
  const auto p = static_cast<PointId>(t.left.field().characteristic());
  Matrix m(static_cast<Eigen::Index>(e3.dim()), static_cast<Eigen::Index>(d1 * d2));
  PointId ei = 1;
  for (std::size_t i = 0; i < d1; ++i, ei *= p) {
    PointId ej = 1;
    for (std::size_t j = 0; j < d2; ++j, ej *= p)
      m.col(static_cast<Eigen::Index>(i * d2 + j)) = e3.coords(table[ei * n2 + ej]);
  }
  return LinMap(t.space, e3, m);
}

LinMap tensor_symmetry(const TensorProduct& t12, const TensorProduct& t21) {
  const std::size_t d1 = t12.left.dim(), d2 = t12.right.dim();
  const auto d = static_cast<Eigen::Index>(d1 * d2);
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) m(static_cast<Eigen::Index>(j * d1 + i), static_cast<Eigen::Index>(i * d2 + j)) = 1;
  return LinMap(t12.space, t21.space, m);
}

LinMap tensor_map(const TensorProduct& from, const TensorProduct& to, const LinMap& f, const LinMap& g) {
  const Matrix& a = f.matrix();
  const Matrix& b = g.matrix();
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) m.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return LinMap(from.space, to.space, m);
}

MonoidalIso strong_monoidal_iso(const FreeObject& fx, const FreeObject& fy, const TensorProduct& t,
                                const FreeObject& fxy, const Product& xy) {
  // e_x (x) e_y has index x * |Y| + y in the tensor, e_(x,y) has index pair(x, y) in F(X x Y).
  const std::size_t nx = fx.base.size(), ny = fy.base.size();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(nx * ny), static_cast<Eigen::Index>(nx * ny));
  for (PointId x = 0; x < nx; ++x)
    for (PointId y = 0; y < ny; ++y) m(static_cast<Eigen::Index>(xy.pair(x, y)), static_cast<Eigen::Index>(x * ny + y)) = 1;
  LinMap forward(t.space, fxy.space, m);
  LinMap backward(fxy.space, t.space, m.transpose());
  return MonoidalIso{std::move(forward), std::move(backward)};
}

// Continuous convergence at zero on a space of maps

namespace {

// Generators of the zero family of a space of maps. Candidates are the
// points t of span(cand) (coordinates of the result); `probe` evaluates the
// map with coordinates t at a fixed list of probe points. A set A converges
// to zero when, for every group, the values of A on the group converge to
// zero in `values`.
std::vector<Subset> continuous_zero_family(const Matrix& cand, const Field& f, std::size_t cap,
                                           const char* what, const ConvVect& values,
                                           const std::function<std::vector<PointId>(const Vector&)>& probe,
                                           const std::vector<std::vector<std::size_t>>& groups) {
  std::unordered_map<PointId, std::vector<PointId>> images;
  Subset candidates;
  for (const auto& t : span_points(cand, f, cap, what)) {
    const PointId h = encode(t, f);
    candidates.push_back(h);
    images.emplace(h, probe(t));
  }
  std::sort(candidates.begin(), candidates.end());
  auto accept = [&](const Subset& a) {
    for (const auto& group : groups) {
      Subset vals;
      vals.reserve(a.size() * group.size());
      for (PointId h : a) {
        const auto& img = images.at(h);
        for (std::size_t i : group) vals.push_back(img[i]);
      }
      if (!values.converges_to_zero(normalized(std::move(vals)))) return false;
    }
    return true;
  };
  return maximal_sets(candidates, accept);
}

Matrix support_basis(const ConvVect& e) { return canonical_basis(columns_of(e, e.support()), e.field()); }

}  // namespace

// Internal hom

Matrix InternalHom::element(PointId h) const {
  const Vector v = mat_vec(basis, decode(h, space.dim(), space.field()), space.field());
  return unflatten(v, static_cast<Eigen::Index>(cod.dim()), static_cast<Eigen::Index>(dom.dim()));
}

std::optional<PointId> InternalHom::index_of(const Matrix& m) const {
  if (m.rows() != static_cast<Eigen::Index>(cod.dim()) || m.cols() != static_cast<Eigen::Index>(dom.dim())) return std::nullopt;
  auto c = solve(basis, flatten(mod_p(m, space.field())), space.field());
  if (!c) return std::nullopt;
  return encode(*c, space.field());
}

PointId InternalHom::eval(PointId h, PointId u) const { return cod.point(element(h) * dom.coords(u)); }

InternalHom internal_hom(const ConvVect& e1, const ConvVect& e2, const Bounds& bounds) {
  if (!(e1.field() == e2.field()) || e1.axioms() != e2.axioms())
    fail(ErrorKind::DimensionMismatch, "internal_hom: spaces over different fields or axioms");
  const Field& f = e1.field();
  const auto d1 = static_cast<Eigen::Index>(e1.dim()), d2 = static_cast<Eigen::Index>(e2.dim());
  const Eigen::Index n = d1 * d2;
  const Matrix s1 = support_basis(e1);
  const Matrix p2 = annihilator(support_basis(e2), e2.dim(), f);
  const Eigen::Index k = p2.rows();

  // A continuous linear map sends the support of E1 into the support of E2.
  Matrix c = Matrix::Zero(k * s1.cols(), n);
  for (Eigen::Index j = 0; j < s1.cols(); ++j)
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index r = 0; r < d2; ++r)
        for (Eigen::Index col = 0; col < d1; ++col) c(j * k + i, r + col * d2) = p2(i, r) * s1(col, j);
  const Matrix candidates = kernel(mod_p(c, f), f);
  const Matrix basis = kept_subspace(candidates, f, bounds.enumeration, "internal_hom", [&](const Vector& v) {
    return is_continuous_linear(e1, e2, unflatten(v, d2, d1));
  });
  const auto m = static_cast<std::size_t>(basis.cols());
  checked_points(m, f, std::numeric_limits<PointId>::max(), "internal_hom");

  // Maps that can occur in a set converging to zero take every basis vector into the support of E2.
  Matrix dz = Matrix::Zero(k * d1, n);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index ii = 0; ii < k; ++ii)
      for (Eigen::Index r = 0; r < d2; ++r) dz(i * k + ii, r + i * d2) = p2(ii, r);
  const Matrix zero_cand = kernel(mat_mul(dz, basis, f), f);

  std::vector<PointId> probes;
  std::vector<std::vector<std::size_t>> groups;
  PointId ei = 1;
  for (Eigen::Index i = 0; i < d1; ++i, ei *= static_cast<PointId>(f.characteristic())) {
    groups.push_back({probes.size()});
    probes.push_back(ei);
  }
  for (const auto& g : e1.zero_generators()) {
    std::vector<std::size_t> group;
    for (PointId u : g) {
      group.push_back(probes.size());
      probes.push_back(u);
    }
    groups.push_back(std::move(group));
  }
  std::vector<Vector> probe_coords;
  for (PointId u : probes) probe_coords.push_back(e1.coords(u));
  auto probe = [&](const Vector& t) {
    const Matrix a = unflatten(mat_vec(basis, t, f), d2, d1);
    std::vector<PointId> out;
    out.reserve(probes.size());
    for (const auto& u : probe_coords) out.push_back(e2.point(a * u));
    return out;
  };
  auto gens = continuous_zero_family(zero_cand, f, bounds.enumeration, "internal_hom", e2, probe, groups);
  return InternalHom{ConvVect(f, m, std::move(gens), e1.axioms()), e1, e2, basis};
}

InternalHom dual(const ConvVect& e, const Bounds& bounds) {
  return internal_hom(e, scalar_object(e.field(), e.axioms()), bounds);
}

namespace {

Matrix coefficient_matrix(const InternalHom& to, const std::vector<Matrix>& elements) {
  const Field& f = to.space.field();
  Matrix m(static_cast<Eigen::Index>(to.space.dim()), static_cast<Eigen::Index>(elements.size()));
  for (std::size_t k = 0; k < elements.size(); ++k)
    m.col(static_cast<Eigen::Index>(k)) = coefficients(to.basis, flatten(mod_p(elements[k], f)), f, "hom transport");
  return m;
}

Matrix basis_element(const InternalHom& h, Eigen::Index k) {
  return unflatten(h.basis.col(k), static_cast<Eigen::Index>(h.cod.dim()), static_cast<Eigen::Index>(h.dom.dim()));
}

}  // namespace

LinMap precompose(const InternalHom& from, const InternalHom& to, const LinMap& h) {
  if (!(from.dom == h.cod()) || !(to.dom == h.dom()) || !(from.cod == to.cod))
    fail(ErrorKind::DimensionMismatch, "precompose: spaces do not match");
  std::vector<Matrix> images;
  for (Eigen::Index k = 0; k < from.basis.cols(); ++k) images.push_back(basis_element(from, k) * h.matrix());
  return LinMap(from.space, to.space, coefficient_matrix(to, images));
}

LinMap postcompose(const InternalHom& from, const InternalHom& to, const LinMap& h) {
  if (!(from.cod == h.dom()) || !(to.cod == h.cod()) || !(from.dom == to.dom))
    fail(ErrorKind::DimensionMismatch, "postcompose: spaces do not match");
  std::vector<Matrix> images;
  for (Eigen::Index k = 0; k < from.basis.cols(); ++k) images.push_back(h.matrix() * basis_element(from, k));
  return LinMap(from.space, to.space, coefficient_matrix(to, images));
}

LinMap dual_map(const InternalHom& d1, const InternalHom& d2, const LinMap& f) { return precompose(d2, d1, f); }

// Cotensor

std::vector<PointId> Cotensor::function(PointId h) const {
  const Field& f = space.field();
  const Vector v = mat_vec(basis, decode(h, space.dim(), f), f);
  const auto d = static_cast<Eigen::Index>(values.dim());
  std::vector<PointId> out(base.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = values.point(v.segment(static_cast<Eigen::Index>(x) * d, d));
  return out;
}

std::optional<PointId> Cotensor::index_of(const std::vector<PointId>& function) const {
  if (function.size() != base.size()) return std::nullopt;
  const auto d = static_cast<Eigen::Index>(values.dim());
  Vector v(static_cast<Eigen::Index>(function.size()) * d);
  for (std::size_t x = 0; x < function.size(); ++x) v.segment(static_cast<Eigen::Index>(x) * d, d) = values.coords(function[x]);
  auto c = solve(basis, v, space.field());
  if (!c) return std::nullopt;
  return encode(*c, space.field());
}

Cotensor cotensor(const ConvSpace& x, const ConvVect& e, const Bounds& bounds) {
  const Field& f = e.field();
  const auto nx = static_cast<Eigen::Index>(x.size()), d = static_cast<Eigen::Index>(e.dim());
  const Eigen::Index n = nx * d;
  const Matrix p = annihilator(support_basis(e), e.dim(), f);
  const Eigen::Index k = p.rows();

  // A continuous function moves by support vectors along every converging set.
  std::vector<Vector> rows;
  for (PointId i = 0; i < x.size(); ++i) {
    for (const auto& g : x.generators(i)) {
      for (PointId b : g) {
        if (b == i) continue;
        for (Eigen::Index ii = 0; ii < k; ++ii) {
          Vector row = Vector::Zero(n);
          row.segment(b * d, d) += p.row(ii).transpose();
          row.segment(i * d, d) -= p.row(ii).transpose();
          rows.push_back(mod_p(row, f));
        }
      }
    }
  }
  Matrix c(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r) c.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  auto values_at = [&](const Vector& v) {
    std::vector<PointId> out(x.size());
    for (Eigen::Index i = 0; i < nx; ++i) out[static_cast<std::size_t>(i)] = e.point(v.segment(i * d, d));
    return out;
  };
  const Matrix basis = kept_subspace(kernel(c, f), f, bounds.enumeration, "cotensor", [&](const Vector& v) {
    const auto fn = values_at(v);
    for (PointId i = 0; i < x.size(); ++i)
      for (const auto& g : x.generators(i))
        if (!e.converges(image(fn, g), fn[i])) return false;
    return true;
  });
  const auto m = static_cast<std::size_t>(basis.cols());
  checked_points(m, f, std::numeric_limits<PointId>::max(), "cotensor");

  // Functions occurring in a set converging to zero take values in the support.
  Matrix dz = Matrix::Zero(nx * k, n);
  for (Eigen::Index i = 0; i < nx; ++i) dz.block(i * k, i * d, k, d) = p;
  const Matrix zero_cand = kernel(mat_mul(dz, basis, f), f);

  std::vector<std::vector<std::size_t>> groups;
  for (PointId i = 0; i < x.size(); ++i)
    for (const auto& g : x.generators(i)) groups.emplace_back(g.begin(), g.end());
  auto probe = [&](const Vector& t) { return values_at(mat_vec(basis, t, f)); };
  auto gens = continuous_zero_family(zero_cand, f, bounds.enumeration, "cotensor", e, probe, groups);
  return Cotensor{ConvVect(f, m, std::move(gens), e.axioms()), x, e, basis};
}

LinMap cotensor_to_hom(const Cotensor& c, const FreeObject& fx, const InternalHom& h) {
  if (!(h.dom == fx.space) || !(h.cod == c.values) || !(fx.base == c.base))
    fail(ErrorKind::DimensionMismatch, "cotensor_to_hom: spaces do not match");
  // The stacked values of a function are the column-major flattening of the matrix e_x -> f(x).
  std::vector<Matrix> images;
  for (Eigen::Index k = 0; k < c.basis.cols(); ++k)
    images.push_back(unflatten(c.basis.col(k), static_cast<Eigen::Index>(c.values.dim()), static_cast<Eigen::Index>(c.base.size())));
  LinMap out(c.space, h.space, coefficient_matrix(h, images));
  if (!is_isomorphism(out)) fail(ErrorKind::MismatchedConstructions, "cotensor and hom out of the free object differ");
  return out;
}

std::vector<std::size_t> components(const ConvSpace& x) {
  std::vector<std::size_t> parent(x.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (PointId i = 0; i < x.size(); ++i)
    for (const auto& g : x.generators(i))
      for (PointId b : g) {
        auto ra = find(i), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
  std::vector<std::size_t> out(x.size());
  std::size_t next = 0;
  std::vector<std::size_t> seen(x.size(), SIZE_MAX);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto r = find(i);
    if (seen[r] == SIZE_MAX) seen[r] = next++;
    out[i] = seen[r];
  }
  return out;
}

}  // namespace fubinilab
