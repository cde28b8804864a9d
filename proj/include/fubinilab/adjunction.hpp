#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace fubinilab {

/// A finite category with every hom-set and composite listed.
class FiniteCategory {
 public:
  using Obj = std::size_t;
  using Mor = std::size_t;
  static constexpr Mor none = std::numeric_limits<Mor>::max();

  /// Thin category of a preorder on 0..n-1.
  static FiniteCategory preorder(std::size_t n, const std::function<bool(Obj, Obj)>& leq);
  /// Finite sets of sizes 0..max_size and all functions between them.
  static FiniteCategory finite_sets(std::size_t max_size);
  /// One object, one morphism.
  static FiniteCategory terminal();

  std::size_t objects() const noexcept { return ids_.size(); }
  std::size_t morphisms() const noexcept { return dom_.size(); }
  Obj dom(Mor f) const { return dom_[f]; }
  Obj cod(Mor f) const { return cod_[f]; }
  Mor id(Obj a) const { return ids_[a]; }
  /// g after f; throws DimensionMismatch unless cod f = dom g.
  Mor compose(Mor g, Mor f) const;
  const std::vector<Mor>& hom(Obj a, Obj b) const { return hom_[a * objects() + b]; }
  bool is_iso(Mor f) const;

 private:
  FiniteCategory(std::vector<Obj> dom, std::vector<Obj> cod, std::vector<Mor> ids, std::vector<Mor> comp);

  std::vector<Obj> dom_, cod_;
  std::vector<Mor> ids_;
  std::vector<Mor> comp_;  // comp_[g * morphisms() + f]
  std::vector<std::vector<Mor>> hom_;
};

struct Functor {
  const FiniteCategory* src = nullptr;
  const FiniteCategory* tgt = nullptr;
  std::vector<FiniteCategory::Obj> obj;
  std::vector<FiniteCategory::Mor> mor;

  bool operator==(const Functor& o) const { return src == o.src && tgt == o.tgt && obj == o.obj && mor == o.mor; }
};

/// Components indexed by objects of the source category.
using NatTrans = std::vector<FiniteCategory::Mor>;

Functor identity_functor(const FiniteCategory& c);
/// g after f.
Functor compose(const Functor& g, const Functor& f);
bool is_functor(const Functor& f);
/// alpha : f -> g.
bool is_natural(const Functor& f, const Functor& g, const NatTrans& alpha);

NatTrans identity_nat(const Functor& f);
/// beta . alpha, componentwise in the common target.
NatTrans vertical(const FiniteCategory& c, const NatTrans& beta, const NatTrans& alpha);
/// h alpha: apply h to every component.
NatTrans whisker_left(const Functor& h, const NatTrans& alpha);
/// alpha k: components of alpha at the objects k(a).
NatTrans whisker_right(const NatTrans& alpha, const Functor& k);
std::optional<NatTrans> inverse(const FiniteCategory& c, const NatTrans& alpha);

/// left : A -> B is left adjoint to right : B -> A.
struct Adjunction {
  Functor left;
  Functor right;
  NatTrans unit;    // on A: 1 -> right . left
  NatTrans counit;  // on B: left . right -> 1
};

bool triangle_identities(const Adjunction& adj);

struct Monad {
  Functor endo;
  NatTrans unit;
  NatTrans mult;
};

struct MonadLaws {
  bool functor = false;
  bool unit_natural = false;
  bool mult_natural = false;
  bool left_unit = false;
  bool right_unit = false;
  bool associative = false;

  bool ok() const { return functor && unit_natural && mult_natural && left_unit && right_unit && associative; }
};

MonadLaws check_monad(const Monad& m);
bool operator==(const Monad& a, const Monad& b);
/// theta . unit = unit' and mult' . (theta o theta) = theta . mult, with theta natural.
bool is_monad_morphism(const Monad& source, const Monad& target, const NatTrans& theta);

Monad identity_monad(const FiniteCategory& c);
/// right . left with unit eta and multiplication right epsilon left.
Monad induced_monad(const Adjunction& adj);
/// The composite of first : A -> B and second : B -> C.
Adjunction compose_adjunctions(const Adjunction& first, const Adjunction& second);
/// The monad g t f on A obtained from a monad t on B along f -| g, with unit
/// (g eta_t f) . eta and multiplication (g mu_t f) . (g t epsilon t f).
Monad transport_monad(const Adjunction& adj, const Monad& t);
/// The same transport applied to a monad morphism: g theta f.
NatTrans transport_morphism(const Adjunction& adj, const NatTrans& theta);

/// For two adjunctions with the same right adjoint, the comparison
/// (epsilon f') . (f eta') : f -> f'. It is invertible with inverse
/// (epsilon' f) . (f' eta).
NatTrans left_adjoint_comparison(const Adjunction& a, const Adjunction& b);

/// From an outer adjunction A -> C and a factorization of its right adjoint
/// through first : A -> B and second : B -> C, the monad morphism
/// xi . (g eta' f) from the monad of `first` to the monad of `outer`.
NatTrans monad_morphism_from_factorization(const Adjunction& outer, const Adjunction& first, const Adjunction& second);

/// Every functor a -> b.
std::vector<Functor> all_functors(const FiniteCategory& a, const FiniteCategory& b);
/// Every adjunction between a and b, one per (left, right, unit) triple.
std::vector<Adjunction> all_adjunctions(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace fubinilab
