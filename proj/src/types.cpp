#include "solsta/types.hpp"

#include <cmath>

namespace solsta {

void PhysicalConfig::validate() const {
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw ParseError("physical.omega", "must be finite and >= 0");
  if (!(n_norm > 0.0) || !std::isfinite(n_norm)) throw ParseError("physical.n_norm", "must be finite and > 0");
}

double SolitonState::amplitude(double n_norm) const {
  if (!(a > 0.0)) throw DomainError("amplitude: width must be positive");
  return std::sqrt(n_norm / a);
}

std::string to_string(ReferenceMethod m) {
  return m == ReferenceMethod::exact ? "exact" : "perturbative";
}

ReferenceMethod reference_method_from_string(const std::string& s) {
  if (s == "perturbative") return ReferenceMethod::perturbative;
  if (s == "exact") return ReferenceMethod::exact;
  throw ParseError("method", "expected 'perturbative' or 'exact', got '" + s + "'");
}

}  // namespace solsta
