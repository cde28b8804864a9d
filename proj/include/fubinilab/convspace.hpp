#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fubinilab/error.hpp"
#include "fubinilab/subset.hpp"

namespace fubinilab {

/// Which axioms a convergence family must satisfy beyond the point-filter
/// axiom and down-closure. `limit` adds closure under finite unions.
enum class Axioms { limit, down_only };

/// Largest carrier any materialized ConvSpace may have.
inline constexpr std::size_t kMaxMaterializedPoints = std::size_t{1} << 16;

/// Finite convergence space.
///
/// On a finite set every filter is principal, so convergence is a relation
/// between nonempty subsets and points. The family converging to each point
/// is down-closed; it is stored as the antichain of its maximal members
/// (its generators). A space satisfies the limit axiom exactly when every
/// point has a single generator.
class ConvSpace {
 public:
  ConvSpace();

  /// Builds a space from per-point generating sets. Each family is closed
  /// downward, completed with the point filter {x} and, when `unions` is
  /// set, closed under union.
  static ConvSpace from_generators(std::vector<std::vector<Subset>> gens, bool unions = false);

  std::size_t size() const noexcept { return gens_->size(); }
  bool empty() const noexcept { return gens_->empty(); }

  const std::vector<Subset>& generators(PointId x) const { return (*gens_)[x]; }

  bool converges(const Subset& a, PointId x) const { return !a.empty() && covered(a, (*gens_)[x]); }

  /// Every point has exactly one maximal converging set.
  bool is_limit() const;

  bool satisfies(Axioms axioms) const { return axioms == Axioms::down_only || is_limit(); }

  bool operator==(const ConvSpace& other) const { return *gens_ == *other.gens_; }

 private:
  explicit ConvSpace(std::shared_ptr<const std::vector<std::vector<Subset>>> gens) : gens_(std::move(gens)) {}

  std::shared_ptr<const std::vector<std::vector<Subset>>> gens_;
};

ConvSpace discrete(std::size_t n);
ConvSpace indiscrete(std::size_t n);

/// Tests the continuity condition: every converging set is sent into a set
/// converging to the image point.
bool is_continuous(const ConvSpace& dom, const ConvSpace& cod, const std::vector<PointId>& map);

/// Continuous map between convergence spaces.
class ContMap {
 public:
  /// Throws NotContinuous when the continuity certificate fails.
  ContMap(ConvSpace dom, ConvSpace cod, std::vector<PointId> map);

  static ContMap identity(const ConvSpace& x);

  const ConvSpace& dom() const noexcept { return dom_; }
  const ConvSpace& cod() const noexcept { return cod_; }
  const std::vector<PointId>& table() const noexcept { return map_; }
  PointId operator()(PointId x) const { return map_[x]; }

  bool operator==(const ContMap& other) const {
    return map_ == other.map_ && dom_ == other.dom_ && cod_ == other.cod_;
  }

 private:
  ConvSpace dom_;
  ConvSpace cod_;
  std::vector<PointId> map_;
};

/// g after f.
ContMap compose(const ContMap& g, const ContMap& f);

/// Binary product. Point (a, b) has index a * |right| + b.
struct Product {
  ConvSpace space;
  ConvSpace left;
  ConvSpace right;

  PointId pair(PointId a, PointId b) const { return a * static_cast<PointId>(right.size()) + b; }
  PointId first(PointId p) const { return p / static_cast<PointId>(right.size()); }
  PointId second(PointId p) const { return p % static_cast<PointId>(right.size()); }
  ContMap proj1() const;
  ContMap proj2() const;
  /// The unique map into the product with the given components.
  ContMap pairing(const ContMap& f, const ContMap& g) const;
};

Product product(const ConvSpace& x, const ConvSpace& y);

/// f × g between two products.
ContMap product_map(const Product& from, const Product& to, const ContMap& f, const ContMap& g);

/// Swaps the factors, X × Y -> Y × X.
ContMap swap_map(const Product& xy, const Product& yx);

/// All continuous point functions, in lexicographic order of their tables.
/// Throws BoundExceeded when more than `limit` maps exist.
std::vector<std::vector<PointId>> continuous_maps(const ConvSpace& dom, const ConvSpace& cod, std::size_t limit);

/// Function space with continuous convergence: A converges to f iff for every
/// x and every B converging to x, A(B) converges to f(x).
struct FunctionSpace {
  ConvSpace space;
  ConvSpace dom;
  ConvSpace cod;
  std::vector<std::vector<PointId>> maps;

  PointId index_of(const std::vector<PointId>& map) const;
  ContMap element(PointId f) const { return ContMap(dom, cod, maps[f]); }
  /// eval : dom × [dom, cod] -> cod, over the supplied product.
  ContMap eval(const Product& dom_times_fs) const;

 private:
  friend FunctionSpace function_space(const ConvSpace&, const ConvSpace&, std::size_t);
  std::map<std::vector<PointId>, PointId> index_;
};

FunctionSpace function_space(const ConvSpace& x, const ConvSpace& y, std::size_t bound = 64);

/// Transposes f : X × Y -> Z into X -> [Y, Z].
ContMap curry(const ContMap& f, const Product& xy, const FunctionSpace& yz);
/// Inverse of curry.
ContMap uncurry(const ContMap& g, const Product& xy, const FunctionSpace& yz);

/// Subspace with the initial structure along the inclusion.
struct Embedding {
  ConvSpace space;
  std::vector<PointId> points;  // points[i] is the ambient point of local point i
  ContMap inclusion;
};

Embedding embed_initial(const Subset& s, const ConvSpace& x);

/// Lifts g : Z -> X through an embedding; nullopt when g leaves the subset.
/// The lift is checked for continuity, so it exists only when g's corestriction is continuous.
std::optional<ContMap> lift_through(const Embedding& e, const ContMap& g);

struct Pullback {
  ConvSpace space;
  std::vector<std::pair<PointId, PointId>> pairs;
  ContMap proj1;
  ContMap proj2;
};

/// Pullback of f : A -> C and g : B -> C, carrying the structure initial from A × B.
Pullback pullback(const ContMap& f, const ContMap& g);

/// Inverse map when f is bijective with continuous inverse.
std::optional<ContMap> is_isomorphism(const ContMap& f);

/// Every convergence structure on carriers of size 0..n satisfying the axioms.
/// Ordered by size, then lexicographically by per-point membership bitsets.
std::vector<ConvSpace> enumerate_spaces(std::size_t n, Axioms axioms, std::size_t bound = 3);

/// Admissible convergence families at point x of an n-point carrier, as
/// membership bitsets over the nonempty subsets (bit m-1 stands for subset mask m).
std::vector<std::uint64_t> admissible_families(std::size_t n, PointId x, Axioms axioms);

}  // namespace fubinilab
