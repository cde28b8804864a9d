#include "fubinilab/adjunction.hpp"

#include <map>

#include "fubinilab/error.hpp"

namespace fubinilab {

using Obj = FiniteCategory::Obj;
using Mor = FiniteCategory::Mor;

FiniteCategory::FiniteCategory(std::vector<Obj> dom, std::vector<Obj> cod, std::vector<Mor> ids, std::vector<Mor> comp)
    : dom_(std::move(dom)), cod_(std::move(cod)), ids_(std::move(ids)), comp_(std::move(comp)) {
  hom_.assign(objects() * objects(), {});
  for (Mor f = 0; f < morphisms(); ++f) hom_[dom_[f] * objects() + cod_[f]].push_back(f);
}

FiniteCategory FiniteCategory::preorder(std::size_t n, const std::function<bool(Obj, Obj)>& leq) {
  std::vector<Mor> index(n * n, none);
  std::vector<Obj> dom, cod;
  for (Obj a = 0; a < n; ++a) {
    if (!leq(a, a)) fail(ErrorKind::InvalidArgument, "preorder: relation is not reflexive");
    for (Obj b = 0; b < n; ++b)
      if (leq(a, b)) {
        index[a * n + b] = dom.size();
        dom.push_back(a);
        cod.push_back(b);
      }
  }
  const std::size_t m = dom.size();
  std::vector<Mor> comp(m * m, none);
  for (Mor f = 0; f < m; ++f)
    for (Mor g = 0; g < m; ++g) {
      if (cod[f] != dom[g]) continue;
      const Mor h = index[dom[f] * n + cod[g]];
      if (h == none) fail(ErrorKind::InvalidArgument, "preorder: relation is not transitive");
      comp[g * m + f] = h;
    }
  std::vector<Mor> ids(n);
  for (Obj a = 0; a < n; ++a) ids[a] = index[a * n + a];
  return FiniteCategory(std::move(dom), std::move(cod), std::move(ids), std::move(comp));
}

FiniteCategory FiniteCategory::finite_sets(std::size_t max_size) {
  const std::size_t n = max_size + 1;
  std::vector<Obj> dom, cod;
  std::vector<std::vector<std::size_t>> tables;
  std::map<std::pair<std::pair<Obj, Obj>, std::vector<std::size_t>>, Mor> index;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      if (a > 0 && b == 0) continue;
      std::size_t count = 1;
      for (std::size_t i = 0; i < a; ++i) count *= b;
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<std::size_t> t(a);
        std::size_t c = code;
        for (auto& v : t) {
          v = c % b;
          c /= b;
        }
        index[{{a, b}, t}] = dom.size();
        dom.push_back(a);
        cod.push_back(b);
        tables.push_back(std::move(t));
      }
    }
  const std::size_t m = dom.size();
  std::vector<Mor> comp(m * m, none);
  for (Mor f = 0; f < m; ++f)
    for (Mor g = 0; g < m; ++g) {
      if (cod[f] != dom[g]) continue;
      std::vector<std::size_t> t(tables[f].size());
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = tables[g][tables[f][i]];
      comp[g * m + f] = index.at({{dom[f], cod[g]}, t});
    }
  std::vector<Mor> ids(n);
  for (Obj a = 0; a < n; ++a) {
    std::vector<std::size_t> t(a);
    for (std::size_t i = 0; i < a; ++i) t[i] = i;
    ids[a] = index.at({{a, a}, t});
  }
  return FiniteCategory(std::move(dom), std::move(cod), std::move(ids), std::move(comp));
}

FiniteCategory FiniteCategory::terminal() {
  return preorder(1, [](Obj, Obj) { return true; });
}

Mor FiniteCategory::compose(Mor g, Mor f) const {
  const Mor h = comp_[g * morphisms() + f];
  if (h == none) fail(ErrorKind::DimensionMismatch, "compose: morphisms are not composable");
  return h;
}

bool FiniteCategory::is_iso(Mor f) const {
  for (Mor g : hom(cod(f), dom(f)))
    if (compose(g, f) == id(dom(f)) && compose(f, g) == id(cod(f))) return true;
  return false;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor f{&c, &c, std::vector<Obj>(c.objects()), std::vector<Mor>(c.morphisms())};
  for (Obj a = 0; a < c.objects(); ++a) f.obj[a] = a;
  for (Mor m = 0; m < c.morphisms(); ++m) f.mor[m] = m;
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (f.tgt != g.src) fail(ErrorKind::DimensionMismatch, "compose: functors are not composable");
  Functor h{f.src, g.tgt, std::vector<Obj>(f.obj.size()), std::vector<Mor>(f.mor.size())};
  for (Obj a = 0; a < f.obj.size(); ++a) h.obj[a] = g.obj[f.obj[a]];
  for (Mor m = 0; m < f.mor.size(); ++m) h.mor[m] = g.mor[f.mor[m]];
  return h;
}

bool is_functor(const Functor& f) {
  const auto& a = *f.src;
  const auto& b = *f.tgt;
  if (f.obj.size() != a.objects() || f.mor.size() != a.morphisms()) return false;
  for (Mor m = 0; m < a.morphisms(); ++m)
    if (b.dom(f.mor[m]) != f.obj[a.dom(m)] || b.cod(f.mor[m]) != f.obj[a.cod(m)]) return false;
  for (Obj x = 0; x < a.objects(); ++x)
    if (f.mor[a.id(x)] != b.id(f.obj[x])) return false;
  for (Mor m = 0; m < a.morphisms(); ++m)
    for (Obj z = 0; z < a.objects(); ++z)
      for (Mor n : a.hom(a.cod(m), z))
        if (f.mor[a.compose(n, m)] != b.compose(f.mor[n], f.mor[m])) return false;
  return true;
}

bool is_natural(const Functor& f, const Functor& g, const NatTrans& alpha) {
  const auto& a = *f.src;
  const auto& b = *f.tgt;
  if (alpha.size() != a.objects()) return false;
  for (Obj x = 0; x < a.objects(); ++x)
    if (b.dom(alpha[x]) != f.obj[x] || b.cod(alpha[x]) != g.obj[x]) return false;
  for (Mor m = 0; m < a.morphisms(); ++m)
    if (b.compose(g.mor[m], alpha[a.dom(m)]) != b.compose(alpha[a.cod(m)], f.mor[m])) return false;
  return true;
}

NatTrans identity_nat(const Functor& f) {
  NatTrans out(f.obj.size());
  for (Obj a = 0; a < out.size(); ++a) out[a] = f.tgt->id(f.obj[a]);
  return out;
}

NatTrans vertical(const FiniteCategory& c, const NatTrans& beta, const NatTrans& alpha) {
  NatTrans out(alpha.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = c.compose(beta[a], alpha[a]);
  return out;
}

NatTrans whisker_left(const Functor& h, const NatTrans& alpha) {
  NatTrans out(alpha.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = h.mor[alpha[a]];
  return out;
}

NatTrans whisker_right(const NatTrans& alpha, const Functor& k) {
  NatTrans out(k.obj.size());
  for (Obj a = 0; a < out.size(); ++a) out[a] = alpha[k.obj[a]];
  return out;
}

std::optional<NatTrans> inverse(const FiniteCategory& c, const NatTrans& alpha) {
  NatTrans out(alpha.size());
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    const Mor f = alpha[a];
    bool found = false;
    for (Mor g : c.hom(c.cod(f), c.dom(f)))
      if (c.compose(g, f) == c.id(c.dom(f)) && c.compose(f, g) == c.id(c.cod(f))) {
        out[a] = g;
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return out;
}

bool triangle_identities(const Adjunction& adj) {
  const auto& a = *adj.left.src;
  const auto& b = *adj.left.tgt;
  for (Obj x = 0; x < a.objects(); ++x)
    if (b.compose(adj.counit[adj.left.obj[x]], adj.left.mor[adj.unit[x]]) != b.id(adj.left.obj[x])) return false;
  for (Obj y = 0; y < b.objects(); ++y)
    if (a.compose(adj.right.mor[adj.counit[y]], adj.unit[adj.right.obj[y]]) != a.id(adj.right.obj[y])) return false;
  return true;
}

MonadLaws check_monad(const Monad& m) {
  MonadLaws r;
  const auto& c = *m.endo.src;
  const Functor& t = m.endo;
  r.functor = m.endo.src == m.endo.tgt && is_functor(t);
  if (!r.functor) return r;
  r.unit_natural = is_natural(identity_functor(c), t, m.unit);
  r.mult_natural = is_natural(compose(t, t), t, m.mult);
  if (!r.unit_natural || !r.mult_natural) return r;
  r.left_unit = r.right_unit = r.associative = true;
  for (Obj a = 0; a < c.objects(); ++a) {
    const Obj ta = t.obj[a];
    r.left_unit = r.left_unit && c.compose(m.mult[a], t.mor[m.unit[a]]) == c.id(ta);
    r.right_unit = r.right_unit && c.compose(m.mult[a], m.unit[ta]) == c.id(ta);
    r.associative = r.associative && c.compose(m.mult[a], t.mor[m.mult[a]]) == c.compose(m.mult[a], m.mult[ta]);
  }
  return r;
}

bool operator==(const Monad& a, const Monad& b) { return a.endo == b.endo && a.unit == b.unit && a.mult == b.mult; }

bool is_monad_morphism(const Monad& source, const Monad& target, const NatTrans& theta) {
  const auto& c = *source.endo.src;
  if (!is_natural(source.endo, target.endo, theta)) return false;
  for (Obj a = 0; a < c.objects(); ++a) {
    if (c.compose(theta[a], source.unit[a]) != target.unit[a]) return false;
    // (theta o theta)_a = T'(theta_a) . theta_{T a}
    const Mor both = c.compose(target.endo.mor[theta[a]], theta[source.endo.obj[a]]);
    if (c.compose(target.mult[a], both) != c.compose(theta[a], source.mult[a])) return false;
  }
  return true;
}

Monad identity_monad(const FiniteCategory& c) {
  Functor id = identity_functor(c);
  NatTrans ids = identity_nat(id);
  return {id, ids, ids};
}

Monad induced_monad(const Adjunction& adj) {
  Monad m{compose(adj.right, adj.left), adj.unit, {}};
  m.mult = whisker_left(adj.right, whisker_right(adj.counit, adj.left));
  return m;
}

Adjunction compose_adjunctions(const Adjunction& first, const Adjunction& second) {
  if (first.left.tgt != second.left.src) fail(ErrorKind::DimensionMismatch, "compose_adjunctions: categories differ");
  const auto& a = *first.left.src;
  const auto& c = *second.left.tgt;
  Adjunction out{compose(second.left, first.left), compose(first.right, second.right), {}, {}};
  out.unit = vertical(a, whisker_left(first.right, whisker_right(second.unit, first.left)), first.unit);
  out.counit = vertical(c, second.counit, whisker_left(second.left, whisker_right(first.counit, second.right)));
  return out;
}

Monad transport_monad(const Adjunction& adj, const Monad& t) {
  const auto& a = *adj.left.src;
  const Functor& f = adj.left;
  const Functor& g = adj.right;
  Monad out{compose(g, compose(t.endo, f)), {}, {}};
  out.unit = vertical(a, whisker_left(g, whisker_right(t.unit, f)), adj.unit);
  const Functor tf = compose(t.endo, f);
  const NatTrans collapse = whisker_left(compose(g, t.endo), whisker_right(adj.counit, tf));
  out.mult = vertical(a, whisker_left(g, whisker_right(t.mult, f)), collapse);
  return out;
}

NatTrans transport_morphism(const Adjunction& adj, const NatTrans& theta) {
  return whisker_left(adj.right, whisker_right(theta, adj.left));
}

NatTrans left_adjoint_comparison(const Adjunction& a, const Adjunction& b) {
  if (!(a.right == b.right)) fail(ErrorKind::InvalidArgument, "left_adjoint_comparison: right adjoints differ");
  const auto& tgt = *a.left.tgt;
  return vertical(tgt, whisker_right(a.counit, b.left), whisker_left(a.left, b.unit));
}

NatTrans monad_morphism_from_factorization(const Adjunction& outer, const Adjunction& first, const Adjunction& second) {
  if (!(compose(first.right, second.right) == outer.right))
    fail(ErrorKind::InvalidArgument, "monad_morphism_from_factorization: right adjoints do not compose to the outer one");
  const auto& a = *outer.left.src;
  const Adjunction composite = compose_adjunctions(first, second);
  const NatTrans xi = whisker_left(outer.right, left_adjoint_comparison(composite, outer));
  const NatTrans to_composite = transport_morphism(first, second.unit);
  return vertical(a, xi, to_composite);
}

namespace {

void assign_objects(const FiniteCategory& a, const FiniteCategory& b, std::size_t x, Functor& f,
                    std::vector<Functor>& out);

void assign_morphisms(const FiniteCategory& a, const FiniteCategory& b, std::size_t m, Functor& f,
                      std::vector<Functor>& out) {
  if (m == a.morphisms()) {
    if (is_functor(f)) out.push_back(f);
    return;
  }
  if (a.dom(m) == a.cod(m) && a.id(a.dom(m)) == m) {
    f.mor[m] = b.id(f.obj[a.dom(m)]);
    assign_morphisms(a, b, m + 1, f, out);
    return;
  }
  for (Mor n : b.hom(f.obj[a.dom(m)], f.obj[a.cod(m)])) {
    f.mor[m] = n;
    assign_morphisms(a, b, m + 1, f, out);
  }
}

void assign_objects(const FiniteCategory& a, const FiniteCategory& b, std::size_t x, Functor& f,
                    std::vector<Functor>& out) {
  if (x == a.objects()) {
    assign_morphisms(a, b, 0, f, out);
    return;
  }
  for (Obj y = 0; y < b.objects(); ++y) {
    f.obj[x] = y;
    assign_objects(a, b, x + 1, f, out);
  }
}

// Every natural unit 1 -> g f, one component at a time.
void assign_units(const Functor& id, const Functor& gf, std::size_t x, NatTrans& eta, std::vector<NatTrans>& out) {
  const auto& a = *id.src;
  if (x == a.objects()) {
    if (is_natural(id, gf, eta)) out.push_back(eta);
    return;
  }
  for (Mor m : a.hom(x, gf.obj[x])) {
    eta[x] = m;
    assign_units(id, gf, x + 1, eta, out);
  }
}

}  // namespace

std::vector<Functor> all_functors(const FiniteCategory& a, const FiniteCategory& b) {
  std::vector<Functor> out;
  Functor f{&a, &b, std::vector<Obj>(a.objects()), std::vector<Mor>(a.morphisms())};
  assign_objects(a, b, 0, f, out);
  return out;
}

std::vector<Adjunction> all_adjunctions(const FiniteCategory& a, const FiniteCategory& b) {
  std::vector<Adjunction> out;
  const auto lefts = all_functors(a, b);
  const auto rights = all_functors(b, a);
  const Functor id = identity_functor(a);
  for (const auto& f : lefts)
    for (const auto& g : rights) {
      const Functor gf = compose(g, f);
      std::vector<NatTrans> units;
      NatTrans eta(a.objects());
      assign_units(id, gf, 0, eta, units);
      for (const auto& u : units) {
        // u is the unit of an adjunction when h -> g(h) . u_x is a bijection hom(f x, y) -> hom(x, g y)
        bool universal = true;
        for (Obj x = 0; x < a.objects() && universal; ++x)
          for (Obj y = 0; y < b.objects() && universal; ++y) {
            const auto& src = b.hom(f.obj[x], y);
            const auto& dst = a.hom(x, g.obj[y]);
            if (src.size() != dst.size()) {
              universal = false;
              break;
            }
            std::vector<bool> hit(a.morphisms(), false);
            for (Mor h : src) {
              const Mor t = a.compose(g.mor[h], u[x]);
              if (hit[t]) universal = false;
              hit[t] = true;
            }
          }
        if (!universal) continue;
        NatTrans eps(b.objects());
        for (Obj y = 0; y < b.objects(); ++y)
          for (Mor h : b.hom(f.obj[g.obj[y]], y))
            if (a.compose(g.mor[h], u[g.obj[y]]) == a.id(g.obj[y])) eps[y] = h;
        out.push_back({f, g, u, eps});
      }
    }
  return out;
}

}  // namespace fubinilab
