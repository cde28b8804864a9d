#include "fubinilab/suite.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "fubinilab/adjunction.hpp"
#include "fubinilab/completion.hpp"
#include "fubinilab/measure.hpp"
#include "fubinilab/oracle.hpp"

namespace fubinilab {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cartesian", "free",  "monoidal", "laws",   "iterated", "retraction",
                                              "fubini",    "chain", "kock",     "oracle", "factor",   "adjunction"};
  return names;
}

void SuiteConfig::validate() const {
  if (!is_prime(field)) fail(ErrorKind::InvalidConfig, "field characteristic must be prime");
  if (field > 7) fail(ErrorKind::InvalidConfig, "field characteristic above the bound 7");
  if (max_size > 3) fail(ErrorKind::InvalidConfig, "max-size above the bound 3");
  if (carrier == 0 || budget == 0 || jobs == 0 || oracle_samples == 0)
    fail(ErrorKind::InvalidConfig, "carrier, budget, jobs and oracle samples must be positive");
  if (suites.empty()) fail(ErrorKind::InvalidConfig, "no suite selected");
  for (const auto& s : suites)
    if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      fail(ErrorKind::InvalidConfig, "unknown suite '" + s + "'");
}

std::vector<std::string> SuiteConfig::selected() const {
  std::vector<std::string> out;
  for (const auto& name : suite_names())
    if (std::find(suites.begin(), suites.end(), "all") != suites.end() ||
        std::find(suites.begin(), suites.end(), name) != suites.end())
      out.push_back(name);
  return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("FUBINILAB_SEED");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const auto s = std::strtoull(v, &end, 0);
  return *end == '\0' ? s : fallback;
}

bool SuiteReport::ok() const {
  for (const auto& [name, t] : tallies)
    if (t.failed) return false;
  return true;
}

Json SuiteReport::summary() const {
  Json tally = Json::object();
  for (const auto& name : config.selected()) {
    auto it = tallies.find(name);
    const Tally t = it == tallies.end() ? Tally{} : it->second;
    tally[name] = Json{{"passed", t.passed}, {"failed", t.failed}};
  }
  return Json{{"summary",
               {{"config",
                 {{"field", config.field},
                  {"max_size", config.max_size},
                  {"axioms", to_string(config.axioms)},
                  {"carrier", config.carrier},
                  {"budget", config.budget},
                  {"suites", config.selected()},
                  {"seed", config.seed},
                  {"oracle_samples", config.oracle_samples}}},
                {"instances", instances.size()},
                {"tallies", tally},
                {"ok", ok()}}}};
}

std::string SuiteReport::jsonl() const {
  std::ostringstream out;
  for (const auto& r : instances)
    out << Json{{"suite", r.suite}, {"instance", r.instance}, {"ok", r.ok}, {"detail", r.detail}}.dump() << '\n';
  out << summary().dump() << '\n';
  return out.str();
}

namespace {

struct Task {
  std::string suite;
  std::string instance;
  std::function<std::pair<bool, Json>()> run;
};

// Everything the tasks share, built once and then only read.
struct Context {
  SuiteConfig config;
  Field field;
  Bounds bounds;
  std::vector<ConvSpace> spaces;
  std::vector<ConvVect> vects;
  std::vector<LinMap> sigma;
  DistributionMonad d;
  TransportedMonad transported;

  explicit Context(const SuiteConfig& c)
      : config(c), field(Field::make(c.field)), bounds(c.bounds()), d(field), transported(d) {}
};

std::string label(const char* name, std::size_t i) { return std::string(name) + "=" + std::to_string(i); }

bool same_matrix(const LinMap& a, const LinMap& b) { return a.matrix() == b.matrix(); }

// cartesian closedness

std::pair<bool, Json> cartesian(const ConvSpace& x, const ConvSpace& y, const ConvSpace& z, std::size_t cap) {
  auto xy = product(x, y);
  auto yz = function_space(y, z);
  auto lhs = continuous_maps(xy.space, z, cap);
  auto rhs = continuous_maps(x, yz.space, cap);
  bool ok = lhs.size() == rhs.size();
  auto y_yz = product(y, yz.space);
  auto ev = yz.eval(y_yz);
  for (const auto& t : lhs) {
    ContMap f(xy.space, z, t);
    auto g = curry(f, xy, yz);
    ok = ok && uncurry(g, xy, yz) == f;
    for (PointId a = 0; a < x.size(); ++a)
      for (PointId b = 0; b < y.size(); ++b) ok = ok && ev(y_yz.pair(b, g(a))) == f(xy.pair(a, b));
  }
  for (const auto& t : rhs) {
    ContMap g(x, yz.space, t);
    ok = ok && curry(uncurry(g, xy, yz), xy, yz) == g;
  }
  return {ok, Json{{"maps", lhs.size()}, {"curried", rhs.size()}}};
}

// free -| forgetful

std::pair<bool, Json> free_adjunction(const Context& c, const ConvSpace& x, const ConvVect& e) {
  auto fx = free(x, c.field, c.config.axioms, c.bounds.carrier);
  const ConvSpace ge = e.underlying();
  auto lin = linear_maps(fx.space, e, c.bounds.enumeration);
  auto cont = continuous_maps(x, ge, c.bounds.enumeration);
  bool bijection = lin.size() == cont.size();
  for (const auto& g : lin) bijection = bijection && free_transpose(fx, e, restriction(fx, g).table()) == g;
  for (const auto& t : cont) bijection = bijection && restriction(fx, free_transpose(fx, e, t)).table() == t;

  // G(counit) after the unit at G E is the identity
  auto fge = free(ge, c.field, c.config.axioms, c.bounds.carrier);
  auto eps = counit(fge, e);
  bool right_triangle = true;
  for (PointId p = 0; p < ge.size(); ++p) right_triangle = right_triangle && eps(fge.insertion[p]) == p;

  // counit at F X after F(unit) is the identity
  auto fgfx = free(fx.space.underlying(), c.field, c.config.axioms, c.bounds.carrier);
  auto f_eta = free_map(fx, fgfx, fx.insertion_map());
  bool left_triangle = compose(counit(fgfx, fx.space), f_eta) == LinMap::identity(fx.space);

  return {bijection && left_triangle && right_triangle,
          Json{{"linear", lin.size()}, {"continuous", cont.size()}, {"left_triangle", left_triangle}, {"right_triangle", right_triangle}}};
}

// strong monoidal free functor

std::pair<bool, Json> monoidal(const Context& c, const ConvSpace& x, const ConvSpace& y) {
  const Axioms ax = c.config.axioms;
  auto fx = free(x, c.field, ax, c.bounds.carrier), fy = free(y, c.field, ax, c.bounds.carrier);
  auto xy = product(x, y), yx = product(y, x);
  auto fxy = free(xy.space, c.field, ax, c.bounds.carrier), fyx = free(yx.space, c.field, ax, c.bounds.carrier);
  auto txy = tensor(fx.space, fy.space, c.bounds.carrier), tyx = tensor(fy.space, fx.space, c.bounds.carrier);
  auto iso = strong_monoidal_iso(fx, fy, txy, fxy, xy);
  auto iso_yx = strong_monoidal_iso(fy, fx, tyx, fyx, yx);
  const bool inverse = compose(iso.forward, iso.backward) == LinMap::identity(fxy.space) &&
                       compose(iso.backward, iso.forward) == LinMap::identity(txy.space);
  bool generators = true;
  for (PointId a = 0; a < x.size(); ++a)
    for (PointId b = 0; b < y.size(); ++b)
      generators = generators && iso.forward(txy.pure(fx.insertion[a], fy.insertion[b])) == fxy.insertion[xy.pair(a, b)];
  auto f_swap = free_map(fxy, fyx, swap_map(xy, yx));
  const bool symmetry = same_matrix(compose(f_swap, iso.forward), compose(iso_yx.forward, tensor_symmetry(txy, tyx)));
  return {inverse && generators && symmetry, Json{{"inverse", inverse}, {"generators", generators}, {"symmetry", symmetry}}};
}

Json law_json(const MonadLawReport& r) {
  return Json{{"left_unit", r.left_unit},       {"right_unit", r.right_unit},     {"associative", r.associative},
              {"unit_natural", r.unit_natural}, {"mult_natural", r.mult_natural}, {"checked", r.checked}};
}

// per-space links from reflexive cotensor to an invertible comparison
struct ChainLinks {
  bool reflexive = false;
  bool inverted = false;
  bool comparison_iso = false;
  bool triangle = false;
  bool retraction = false;
  std::size_t rounds = 0;
};

ChainLinks chain_links(const Context& c, const ConvSpace& z) {
  ChainLinks l;
  const Axioms ax = c.config.axioms;
  l.reflexive = is_reflexive(cotensor(z, scalar_object(c.field, ax), c.bounds).space, c.bounds).reflexive;
  auto fz = free(z, c.field, ax, c.bounds.carrier);
  DualTower t(fz.space, 4, c.bounds);
  l.inverted = is_isomorphism(double_dual_of(t, 0, t, 2, t.unit(0))).has_value();
  auto k = completion(fz.space, c.sigma, c.config.budget, c.bounds);
  l.rounds = k.rounds;
  auto i = completion_comparison(k, c.bounds);
  l.comparison_iso = is_isomorphism(i).has_value();
  l.triangle = same_matrix(compose(i, k.unit), t.unit(0));
  l.retraction = reflexivity_retraction_check(z, c.field, ax, c.bounds);
  return l;
}

Json links_json(const ChainLinks& l) {
  return Json{{"reflexive", l.reflexive},   {"inverted", l.inverted}, {"comparison_iso", l.comparison_iso},
              {"triangle", l.triangle},     {"retraction", l.retraction}, {"rounds", l.rounds}};
}

// Each implication of the chain, checked on its own.
bool links_hold(const ChainLinks& l) { return (!l.reflexive || l.inverted) && (!l.inverted || l.comparison_iso) && l.triangle && l.retraction; }

// oracle instances

struct RationalSample {
  std::vector<Rational> mu, nu;
  std::vector<std::vector<Rational>> f;
};

RationalSample random_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 3), num(-5, 5), den(1, 6);
  auto q = [&] { return Rational(num(rng), den(rng)); };
  RationalSample s;
  s.mu.resize(static_cast<std::size_t>(size(rng)));
  s.nu.resize(static_cast<std::size_t>(size(rng)));
  for (auto& v : s.mu) v = q();
  for (auto& v : s.nu) v = q();
  s.f.assign(s.mu.size(), std::vector<Rational>(s.nu.size()));
  for (auto& row : s.f)
    for (auto& v : row) v = q();
  return s;
}

std::string rational_text(const Rational& r) {
  std::ostringstream o;
  o << r;
  return o.str();
}

template <class Ring, class S>
std::pair<S, S> measure_integrals(const Ring& ring, const std::vector<S>& mu, const std::vector<S>& nu,
                                  const std::vector<std::vector<S>>& f) {
  FiniteMeasures<Ring> m(ring);
  typename FiniteMeasures<Ring>::template Measure<std::size_t> a, b;
  for (std::size_t x = 0; x < mu.size(); ++x) m.accumulate(a, x, mu[x]);
  for (std::size_t y = 0; y < nu.size(); ++y) m.accumulate(b, y, nu[y]);
  auto value = [&](const std::pair<std::size_t, std::size_t>& p) { return f[p.first][p.second]; };
  return {m.integrate(m.otimes(a, b), value), m.integrate(m.otimes_tilde(a, b), value)};
}

std::pair<bool, Json> oracle_rational(const RationalSample& s) {
  auto sums = oracle_discrete_fubini(s.mu, s.nu, s.f);
  auto [lhs, rhs] = measure_integrals(RationalRing{}, s.mu, s.nu, s.f);
  const bool ok = sums.agree() && lhs == sums.product && rhs == sums.product;
  return {ok, Json{{"size", {s.mu.size(), s.nu.size()}},
                   {"product", rational_text(sums.product)},
                   {"otimes", rational_text(lhs)},
                   {"otimes_tilde", rational_text(rhs)}}};
}

// exhaustive field instances on discrete spaces: the composites of the monad
// against the oracle's field sums, for every mu, nu and f
std::pair<bool, Json> oracle_field(const Context& c, std::size_t m, std::size_t n) {
  const Field& f = c.field;
  auto fp = fubini_pair(c.d, discrete(m), discrete(n));
  const int p = f.characteristic();
  std::size_t fcount = 1;
  for (std::size_t i = 0; i < m * n; ++i) fcount *= static_cast<std::size_t>(p);
  std::size_t triples = 0, mismatches = 0;
  for (PointId u = 0; u < fp.nx; ++u)
    for (PointId v = 0; v < fp.ny; ++v) {
      const Vector mu = c.d.decode(fp.cx, u), nu = c.d.decode(fp.cy, v);
      const Vector both = c.d.decode(fp.cxy, fp.otimes[fp.index(u, v)]);
      const Vector tilde = c.d.decode(fp.cxy, fp.otimes_tilde[fp.index(u, v)]);
      std::vector<int> mv(mu.data(), mu.data() + mu.size()), nv(nu.data(), nu.data() + nu.size());
      for (std::size_t code = 0; code < fcount; ++code) {
        std::vector<std::vector<int>> table(m, std::vector<int>(n));
        std::size_t rest = code;
        for (auto& row : table)
          for (auto& val : row) {
            val = static_cast<int>(rest % static_cast<std::size_t>(p));
            rest /= static_cast<std::size_t>(p);
          }
        auto sums = oracle_discrete_fubini(f, mv, nv, table);
        int a = 0, b = 0;
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            const auto k = static_cast<Eigen::Index>(fp.xy.pair(x, y));
            a = f.add(a, f.mul(both(k), table[x][y]));
            b = f.add(b, f.mul(tilde(k), table[x][y]));
          }
        auto [ma, mb] = measure_integrals(FieldRing{&f}, mv, nv, table);
        ++triples;
        if (!sums.agree() || a != sums.product || b != sums.product || ma != sums.product || mb != sums.product) ++mismatches;
      }
    }
  return {mismatches == 0, Json{{"triples", triples}, {"mismatches", mismatches}}};
}

// the adjunction calculus on small categories
std::pair<bool, Json> adjunction_instance(const FiniteCategory& a, const FiniteCategory& b, const FiniteCategory& cc) {
  auto first = all_adjunctions(a, b);
  auto second = all_adjunctions(b, cc);
  auto outer = all_adjunctions(a, cc);
  std::size_t composites = 0, comparisons = 0, factorizations = 0;
  bool ok = true;
  for (const auto& f : first) {
    ok = ok && triangle_identities(f) && check_monad(induced_monad(f)).ok();
    for (const auto& s : second) {
      auto comp = compose_adjunctions(f, s);
      ok = ok && triangle_identities(comp) && induced_monad(comp) == transport_monad(f, induced_monad(s));
      ++composites;
      for (const auto& o : outer) {
        if (!(comp.right == o.right)) continue;
        auto phi = left_adjoint_comparison(comp, o);
        ok = ok && inverse(*o.left.tgt, phi).has_value();
        ++comparisons;
        ok = ok && is_monad_morphism(induced_monad(f), induced_monad(o), monad_morphism_from_factorization(o, f, s));
        ++factorizations;
      }
    }
  }
  return {ok, Json{{"first", first.size()}, {"second", second.size()}, {"composites", composites},
                   {"comparisons", comparisons}, {"factorizations", factorizations}}};
}

std::vector<Task> build_tasks(const std::shared_ptr<Context>& ctx) {
  const auto& c = *ctx;
  std::vector<Task> tasks;
  const auto& xs = c.spaces;
  const std::size_t cap = std::size_t{1} << 20;
  for (const auto& suite : c.config.selected()) {
    if (suite == "cartesian") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          for (std::size_t k = 0; k < xs.size(); ++k)
            tasks.push_back({suite, label("X", i) + " " + label("Y", j) + " " + label("Z", k),
                             [ctx, i, j, k, cap] { return cartesian(ctx->spaces[i], ctx->spaces[j], ctx->spaces[k], cap); }});
    } else if (suite == "free") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t e = 0; e < c.vects.size(); ++e)
          tasks.push_back({suite, label("X", i) + " " + label("E", e),
                           [ctx, i, e] { return free_adjunction(*ctx, ctx->spaces[i], ctx->vects[e]); }});
    } else if (suite == "monoidal") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          tasks.push_back({suite, label("X", i) + " " + label("Y", j),
                           [ctx, i, j] { return monoidal(*ctx, ctx->spaces[i], ctx->spaces[j]); }});
    } else if (suite == "laws") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        tasks.push_back({suite, "D " + label("X", i), [ctx, i] {
                           const auto& cx = ctx->spaces[i];
                           auto z = Components::of(cx);
                           auto r = check_monad_laws(ctx->d, z);
                           auto t = check_monad_laws(ctx->transported, z);
                           std::size_t maps = 0;
                           for (const auto& y : ctx->spaces)
                             for (const auto& f : continuous_maps(cx, y, ctx->bounds.enumeration)) {
                               auto n = check_naturality(ctx->d, z, Components::of(y), f);
                               r.unit_natural = r.unit_natural && n.unit_natural;
                               r.mult_natural = r.mult_natural && n.mult_natural;
                               ++maps;
                             }
                           auto carrier = distribution_carrier(cx, ctx->field, ctx->config.axioms, ctx->bounds);
                           const bool carrier_ok = carrier.distributions.space.dim() == z.rank();
                           return std::pair<bool, Json>{r.ok() && t.ok() && carrier_ok,
                                                        Json{{"D", law_json(r)}, {"transported", t.ok()}, {"maps", maps},
                                                             {"carrier_matches", carrier_ok}}};
                         }});
      for (std::size_t e = 0; e < c.vects.size(); ++e)
        tasks.push_back({suite, "H " + label("E", e), [ctx, e] {
                           DualTower t(ctx->vects[e], 6, ctx->bounds);
                           auto r = check_double_dual_laws(t);
                           bool natural = true;
                           std::size_t maps = 0;
                           for (const auto& b : ctx->vects) {
                             DualTower tb(b, 2, ctx->bounds);
                             for (const auto& f : linear_maps(ctx->vects[e], b, ctx->bounds.enumeration)) {
                               natural = natural && unit_natural(t, tb, f);
                               ++maps;
                             }
                           }
                           return std::pair<bool, Json>{r.ok() && natural,
                                                        Json{{"left_unit", r.left_unit}, {"right_unit", r.right_unit},
                                                             {"associative", r.associative}, {"unit_natural", natural},
                                                             {"maps", maps}}};
                         }});
    } else if (suite == "iterated") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          tasks.push_back({suite, label("X", i) + " " + label("Y", j), [ctx, i, j] {
                             const auto& x = ctx->spaces[i];
                             const auto& y = ctx->spaces[j];
                             auto xy = product(x, y);
                             tprime_checked(ctx->d, x, y, xy);
                             tdoubleprime_checked(ctx->d, x, y, xy);
                             auto r = check_iterated_integrals(ctx->d, fubini_pair(ctx->d, x, y));
                             return std::pair<bool, Json>{r.ok(), Json{{"triples", r.triples},
                                                                       {"otimes_mismatches", r.otimes_mismatches},
                                                                       {"otimes_tilde_mismatches", r.otimes_tilde_mismatches}}};
                           }});
    } else if (suite == "retraction") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        tasks.push_back({suite, label("X", i), [ctx, i] {
                           const bool ok = reflexivity_retraction_check(ctx->spaces[i], ctx->field, ctx->config.axioms, ctx->bounds);
                           return std::pair<bool, Json>{ok, Json{{"identity", ok}}};
                         }});
    } else if (suite == "fubini") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          tasks.push_back({suite, label("X", i) + " " + label("Y", j), [ctx, i, j] {
                             auto v = check_commutative(ctx->d, ctx->spaces[i], ctx->spaces[j], ctx->config.axioms, ctx->bounds);
                             return std::pair<bool, Json>{v.implication_holds(), to_json(v, ctx->spaces[i], ctx->spaces[j])};
                           }});
    } else if (suite == "chain") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          tasks.push_back({suite, label("X", i) + " " + label("Y", j), [ctx, i, j] {
                             const auto& x = ctx->spaces[i];
                             const auto& y = ctx->spaces[j];
                             auto lx = chain_links(*ctx, x), ly = chain_links(*ctx, y), lxy = chain_links(*ctx, product(x, y).space);
                             auto v = check_commutative(ctx->d, x, y, ctx->config.axioms, ctx->bounds);
                             const bool hypotheses = lx.reflexive && ly.reflexive && lxy.reflexive;
                             const bool ok = links_hold(lx) && links_hold(ly) && links_hold(lxy) && (!hypotheses || v.equal);
                             return std::pair<bool, Json>{ok, Json{{"hypotheses", hypotheses},
                                                                   {"X", links_json(lx)},
                                                                   {"Y", links_json(ly)},
                                                                   {"XY", links_json(lxy)},
                                                                   {"equal", v.equal}}};
                           }});
    } else if (suite == "kock") {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          tasks.push_back({suite, label("X", i) + " " + label("Y", j), [ctx, i, j] {
                             check_enrichment(ctx->d, ctx->spaces[i], ctx->spaces[j]);
                             check_enrichment(ctx->transported, ctx->spaces[i], ctx->spaces[j]);
                             return std::pair<bool, Json>{true, Json{{"distribution", true}, {"transported", true}}};
                           }});
    } else if (suite == "oracle") {
      std::mt19937_64 rng(c.config.seed);
      for (std::size_t s = 0; s < c.config.oracle_samples; ++s) {
        auto sample = random_sample(rng);
        tasks.push_back({suite, "rational#" + std::to_string(s), [sample] { return oracle_rational(sample); }});
      }
      for (std::size_t m = 0; m <= c.config.max_size; ++m)
        for (std::size_t n = 0; n <= c.config.max_size; ++n)
          tasks.push_back({suite, "field discrete(" + std::to_string(m) + ")xdiscrete(" + std::to_string(n) + ")",
                           [ctx, m, n] { return oracle_field(*ctx, m, n); }});
    } else if (suite == "factor") {
      tasks.push_back({suite, "comparison morphism", [ctx] {
                         auto r = completion_monad_morphism(ctx->vects, ctx->sigma, ctx->bounds);
                         return std::pair<bool, Json>{r.ok(), Json{{"strong_monos", r.strong_monos},
                                                                   {"unit_triangle", r.unit_triangle},
                                                                   {"multiplicative", r.multiplicative},
                                                                   {"natural", r.natural},
                                                                   {"maps", r.maps_checked}}};
                       }});
      for (std::size_t e = 0; e < c.vects.size(); ++e)
        tasks.push_back({suite, "factorization " + label("E", e), [ctx, e] {
                           // every map out of E factors as an epi orthogonal to the universe's strong monos
                           std::size_t maps = 0, checks = 0;
                           bool ok = true;
                           std::vector<LinMap> monos;
                           for (const auto& a : ctx->vects)
                             for (const auto& b : ctx->vects)
                               for (auto& m : linear_maps(a, b, ctx->bounds.enumeration))
                                 if (is_strong_mono(m)) monos.push_back(std::move(m));
                           for (const auto& b : ctx->vects)
                             for (const auto& f : linear_maps(ctx->vects[e], b, ctx->bounds.enumeration)) {
                               auto fac = epi_strongmono_factorize(f);
                               ok = ok && same_matrix(compose(fac.mono, fac.epi), f) && is_surjective(fac.epi) &&
                                    is_strong_mono(fac.mono);
                               if (maps % 4 == 0)
                                 for (std::size_t k = 0; k < monos.size(); k += 3) {
                                   ok = ok && is_orthogonal(fac.epi, monos[k], ctx->bounds).pullback;
                                   ++checks;
                                 }
                               ++maps;
                             }
                           return std::pair<bool, Json>{ok, Json{{"maps", maps}, {"orthogonality_checks", checks}}};
                         }});
      tasks.push_back({suite, "sigma transfer", [ctx] {
                         std::vector<Completion> ks;
                         for (const auto& e : ctx->vects) ks.push_back(completion(e, ctx->sigma, ctx->config.budget, ctx->bounds));
                         std::size_t inverted = 0;
                         bool ok = true;
                         for (std::size_t a = 0; a < ctx->vects.size(); ++a)
                           for (std::size_t b = 0; b < ctx->vects.size(); ++b)
                             for (const auto& f : linear_maps(ctx->vects[a], ctx->vects[b], ctx->bounds.enumeration)) {
                               const bool by_k = is_isomorphism(completion_map(ks[a], ks[b], f)).has_value();
                               ok = ok && by_k == inverted_by_double_dual(f, ctx->bounds);
                               inverted += by_k;
                             }
                         ok = ok && inverted == ctx->sigma.size();
                         return std::pair<bool, Json>{ok, Json{{"inverted", inverted}, {"sigma", ctx->sigma.size()}}};
                       }});
    } else if (suite == "adjunction") {
      static const FiniteCategory sets = FiniteCategory::finite_sets(2);
      static const FiniteCategory chain2 = FiniteCategory::preorder(2, [](std::size_t a, std::size_t b) { return a <= b; });
      static const FiniteCategory chain3 = FiniteCategory::preorder(3, [](std::size_t a, std::size_t b) { return a <= b; });
      static const FiniteCategory vee =
          FiniteCategory::preorder(3, [](std::size_t a, std::size_t b) { return a == b || a == 0; });
      const std::vector<std::pair<std::string, const FiniteCategory*>> cats{
          {"sets2", &sets}, {"chain2", &chain2}, {"chain3", &chain3}, {"vee", &vee}};
      for (const auto& a : cats)
        for (const auto& b : cats)
          for (const auto& cc : cats)
            tasks.push_back({suite, a.first + "/" + b.first + "/" + cc.first,
                             [a, b, cc] { return adjunction_instance(*a.second, *b.second, *cc.second); }});
    }
  }
  return tasks;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  SuiteReport report;
  report.config = config;
  if (config.max_size == 0) return report;

  auto ctx = std::make_shared<Context>(config);
  ctx->spaces = enumerate_spaces(config.max_size, config.axioms);
  ctx->vects = enumerate_convvects(ctx->field, 4, config.axioms);
  const auto sel = config.selected();
  if (std::find(sel.begin(), sel.end(), "chain") != sel.end() || std::find(sel.begin(), sel.end(), "factor") != sel.end())
    ctx->sigma = sigma_inverted(ctx->vects, ctx->bounds);

  auto tasks = build_tasks(ctx);
  std::vector<InstanceResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      InstanceResult r{tasks[i].suite, tasks[i].instance, false, nullptr};
      try {
        auto [ok, detail] = tasks[i].run();
        r.ok = ok;
        r.detail = std::move(detail);
      } catch (const LabError& e) {
        r.detail = Json{{"error", e.what()}};
      }
      results[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& name : sel) report.tallies[name];
  for (const auto& r : results) {
    auto& t = report.tallies[r.suite];
    (r.ok ? t.passed : t.failed)++;
  }
  report.instances = std::move(results);
  return report;
}

std::string explain_instance(const ConvSpace& x, const ConvSpace& y, const SuiteConfig& config) {
  config.validate();
  const Field field = Field::make(config.field);
  const Bounds bounds = config.bounds();
  DistributionMonad d(field);
  std::ostringstream out;
  auto r = scalar_object(field, config.axioms);
  auto fp = fubini_pair(d, x, y);
  auto v = verdict_from_pair(d, fp);
  auto line = [&](const char* name, const ConvSpace& z) {
    auto c = cotensor(z, r, bounds);
    auto rv = is_reflexive(c.space, bounds);
    out << name << ": " << z.size() << " points, cotensor dim " << c.space.dim() << ", "
        << (rv.reflexive ? "reflexive" : "not reflexive (" + rv.failure + ")") << '\n';
  };
  if (x.size() * y.size() <= 1 && fp.nx * fp.ny <= 4) {
    out << "X " << x.size() << " x Y " << y.size() << ": " << (v.equal ? "equal" : "unequal") << '\n';
    return out.str();
  }
  line("X", x);
  line("Y", y);
  line("XxY", fp.xy.space);
  out << "distributions: |DX| = " << fp.nx << ", |DY| = " << fp.ny << ", |D(XxY)| = " << d.points(fp.cxy) << '\n';
  out << "otimes       :";
  for (PointId p : fp.otimes) out << ' ' << p;
  out << "\notimes_tilde :";
  for (PointId p : fp.otimes_tilde) out << ' ' << p;
  out << '\n' << (v.equal ? "equal" : "unequal") << '\n';
  if (v.witness) {
    const auto& w = *v.witness;
    out << "witness: mu =";
    for (Eigen::Index i = 0; i < w.mu.size(); ++i) out << ' ' << w.mu(i);
    out << ", nu =";
    for (Eigen::Index i = 0; i < w.nu.size(); ++i) out << ' ' << w.nu(i);
    out << ", f =";
    for (int a : w.f) out << ' ' << a;
    out << ", values " << w.otimes_value << " vs " << w.otimes_tilde_value << '\n';
  }
  return out.str();
}

}  // namespace fubinilab
