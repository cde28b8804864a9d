#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fubinilab/error.hpp"

namespace fubinilab {

/// The prime field F_p with precomputed operation tables.
///
/// Elements are the integers 0..p-1. The tables are total, so every
/// operation is a lookup; `inv(0)` is rejected.
class Field {
 public:
  static constexpr int kDefaultBound = 7;

  /// Throws NonPrimeCharacteristic for composite `p`, BoundExceeded above `bound`.
  static Field make(int p, int bound = kDefaultBound);

  int characteristic() const noexcept { return p_; }
  int size() const noexcept { return p_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int zero() const noexcept { return 0; }
  int one() const noexcept { return 1 % p_; }

  /// Reduces an arbitrary integer into 0..p-1.
  int reduce(long long v) const noexcept {
    long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

  bool operator==(const Field& other) const noexcept { return p_ == other.p_; }

 private:
  explicit Field(int p);
  std::size_t idx(int a, int b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(b);
  }

  int p_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

bool is_prime(int n) noexcept;

// Exact rationals, always in canonical form (gcd 1, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Ring adaptor over F_p for code templated on the scalar type.
struct FieldRing {
  using Scalar = int;
  const Field* field;

  Scalar zero() const { return 0; }
  Scalar one() const { return field->one(); }
  Scalar add(Scalar a, Scalar b) const { return field->add(a, b); }
  Scalar mul(Scalar a, Scalar b) const { return field->mul(a, b); }
};

/// Ring adaptor over exact rationals.
struct RationalRing {
  using Scalar = Rational;

  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
};

}  // namespace fubinilab
