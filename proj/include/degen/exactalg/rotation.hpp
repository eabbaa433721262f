#pragma once

#include <algorithm>
#include <vector>

#include "degen/exactalg/rational.hpp"

namespace degen::exactalg {

// A value a in [0, 1). Stored with the lower convention: a stands for the
// eigenvalue exp(-2 pi i a). upper() is the same eigenvalue written as
// exp(2 pi i u).
class RotationNumber {
 public:
  RotationNumber() = default;
  explicit RotationNumber(const Rational& a);

  // Reduces an arbitrary rational modulo 1.
  static RotationNumber mod1(const Rational& a) { return RotationNumber(a.frac()); }

  const Rational& value() const { return a_; }
  RotationNumber upper() const { return mod1(-a_); }

  friend bool operator==(const RotationNumber& x, const RotationNumber& y) { return x.a_ == y.a_; }
  friend bool operator!=(const RotationNumber& x, const RotationNumber& y) { return x.a_ != y.a_; }
  friend bool operator<(const RotationNumber& x, const RotationNumber& y) { return x.a_ < y.a_; }

 private:
  Rational a_;
};

using RotationMultiset = std::vector<RotationNumber>;

inline RotationMultiset sorted(RotationMultiset m) {
  std::sort(m.begin(), m.end());
  return m;
}

inline bool same_multiset(RotationMultiset a, RotationMultiset b) {
  return sorted(std::move(a)) == sorted(std::move(b));
}

// Multiset difference a \ b; throws PreconditionError if b is not contained in a.
RotationMultiset multiset_difference(RotationMultiset a, const RotationMultiset& b);

}  // namespace degen::exactalg
