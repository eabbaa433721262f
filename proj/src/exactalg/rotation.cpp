#include "degen/exactalg/rotation.hpp"

#include "degen/error.hpp"

namespace degen::exactalg {

RotationNumber::RotationNumber(const Rational& a) : a_(a) {
  if (a < Rational(0) || a >= Rational(1))
    throw PreconditionError("rotation number out of [0,1): " + a.str());
}

RotationMultiset multiset_difference(RotationMultiset a, const RotationMultiset& b) {
  for (const auto& x : b) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it == a.end())
      throw PreconditionError("multiset difference: " + x.value().str() + " not present");
    a.erase(it);
  }
  return sorted(std::move(a));
}

}  // namespace degen::exactalg
