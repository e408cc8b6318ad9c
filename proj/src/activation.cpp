#include "cauchynet/activation.hpp"

#include <cmath>
#include <string>

#include "cauchynet/errors.hpp"

namespace cauchynet {

namespace {

void require_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NonFinite(std::string(what) + " is not finite");
  }
}

}  // namespace

Complex shifted_reciprocal(Complex z, double epsilon) {
  const Complex shifted = z + epsilon;
  if (shifted == Complex{}) throw PoleEncountered("activation evaluated at its pole");
  const Complex r = cinv(shifted);
  require_finite(r, "activation reciprocal");
  return r;
}

Complex cauchy_activation(std::span<const Complex> z, double epsilon) {
  Complex product{1.0, 0.0};
  for (const Complex& zi : z) product *= shifted_reciprocal(zi, epsilon);
  require_finite(product, "activation");
  return product;
}

Complex cauchy_activation_derivative(Complex z, double epsilon) {
  const Complex r = shifted_reciprocal(z, epsilon);
  const Complex d = -(r * r);
  require_finite(d, "activation derivative");
  return d;
}

Complex cauchy_activation_partial(std::span<const Complex> z, std::size_t j, double epsilon) {
  if (j >= z.size()) throw ValidationError("partial index out of range");
  const Complex value = cauchy_activation(z, epsilon);
  const Complex d = -value * shifted_reciprocal(z[j], epsilon);
  require_finite(d, "activation partial");
  return d;
}

}  // namespace cauchynet
