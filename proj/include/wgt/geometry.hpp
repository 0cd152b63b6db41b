// Conductor geometries and the magnetostatic geometry tensor Y_ij.
//
// Frame convention: for the planar geometries axis 3 is the surface
// normal; for the wire axis 3 is the wire axis.  Y has dimension
// 1/length and scales as Y(lambda*g) = Y(g)/lambda.

#pragma once

#include <array>
#include <stdexcept>
#include <variant>

namespace wgt {

struct HalfSpace {
  double z;  // observation height above the surface [m]
};

struct Layer {
  double z;  // observation height above the upper interface [m]
  double d;  // layer thickness [m]
};

struct Wire {
  double R;  // distance from the wire axis [m]
  double a;  // wire radius [m]
};

using GeometrySpec = std::variant<HalfSpace, Layer, Wire>;

// Throws std::invalid_argument unless the observation point lies strictly
// outside the conductor (z > 0, d > 0, R > a > 0).
void validate(const GeometrySpec& g);

struct MaterialParams {
  double temperature;   // K
  double resistivity;   // Ohm m
};

struct SpinCoupling {
  double moment;  // |<s|mu_n|s>| along the static bias [J/T]
};

struct GeometryTensor {
  std::array<double, 3> diag{};  // Y11, Y22, Y33 [1/m]
  bool trace_only = false;       // wire path: only tr Y is meaningful,
                                 // stored isotropically as trace/3
  double trace() const { return diag[0] + diag[1] + diag[2]; }
};

// Closed-form evaluation.  For the wire only the trace is available:
// the far expansion for R >= 1.6a, the near-contact law for
// R - a <= 0.05a; in between throws wgt::WireIntermediateRegime and the
// caller must take the quadrature path.
GeometryTensor geometry_tensor_analytic(const GeometrySpec& g);

struct WireIntermediateRegime : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace wgt
