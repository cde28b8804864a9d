#pragma once

#include <map>
#include <utility>

#include "fubinilab/scalars.hpp"

namespace fubinilab {

/// Finitely supported measures on discrete sets, with scalars from `Ring`
/// (FieldRing or RationalRing). Keys of any ordered type, including
/// measures themselves, so T T X is available without materializing it.
template <class Ring>
class FiniteMeasures {
 public:
  using Scalar = typename Ring::Scalar;
  template <class K>
  using Measure = std::map<K, Scalar>;

  explicit FiniteMeasures(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const noexcept { return ring_; }

  template <class K>
  Measure<K> dirac(const K& k) const {
    return {{k, ring_.one()}};
  }

  /// Adds c at k, dropping entries that cancel.
  template <class K>
  void accumulate(Measure<K>& m, const K& k, const Scalar& c) const {
    auto [it, fresh] = m.try_emplace(k, ring_.zero());
    it->second = ring_.add(it->second, c);
    if (it->second == ring_.zero()) m.erase(it);
  }

  template <class L, class K, class F>
  Measure<L> push(const Measure<K>& m, F f) const {
    Measure<L> out;
    for (const auto& [k, c] : m) accumulate(out, L(f(k)), c);
    return out;
  }

  template <class K>
  Measure<K> flatten(const Measure<Measure<K>>& phi) const {
    Measure<K> out;
    for (const auto& [inner, c] : phi)
      for (const auto& [k, d] : inner) accumulate(out, k, ring_.mul(c, d));
    return out;
  }

  template <class K, class F>
  Scalar integrate(const Measure<K>& m, F f) const {
    Scalar s = ring_.zero();
    for (const auto& [k, c] : m) s = ring_.add(s, ring_.mul(c, f(k)));
    return s;
  }

  /// t'(mu, y): push mu along x -> (x, y).
  template <class A, class B>
  Measure<std::pair<A, B>> tprime(const Measure<A>& mu, const B& y) const {
    return push<std::pair<A, B>>(mu, [&](const A& x) { return std::pair<A, B>(x, y); });
  }

  /// t''(x, nu): push nu along y -> (x, y).
  template <class A, class B>
  Measure<std::pair<A, B>> tdoubleprime(const A& x, const Measure<B>& nu) const {
    return push<std::pair<A, B>>(nu, [&](const B& y) { return std::pair<A, B>(x, y); });
  }

  /// flatten . T(t') . t''_{TX, Y}
  template <class A, class B>
  Measure<std::pair<A, B>> otimes(const Measure<A>& mu, const Measure<B>& nu) const {
    auto outer = tdoubleprime(mu, nu);
    auto lifted = push<Measure<std::pair<A, B>>>(outer, [&](const auto& p) { return tprime(p.first, p.second); });
    return flatten(lifted);
  }

  /// flatten . T(t'') . t'_{X, TY}
  template <class A, class B>
  Measure<std::pair<A, B>> otimes_tilde(const Measure<A>& mu, const Measure<B>& nu) const {
    auto outer = tprime(mu, nu);
    auto lifted = push<Measure<std::pair<A, B>>>(outer, [&](const auto& p) { return tdoubleprime(p.first, p.second); });
    return flatten(lifted);
  }

 private:
  Ring ring_;
};

}  // namespace fubinilab
