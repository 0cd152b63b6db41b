// Brute-force volume quadrature for the geometry tensor
//   X_ij = \int_V (x1 - x')_i (x2 - x')_j / (|x1 - x'|^3 |x2 - x'|^3) d^3x'
//   Y_ij = (delta_ij tr X - X_ij) / 2
// evaluated at coincident points (the tensor itself) or at two laterally
// separated points (the spatial correlation of the field).
//
// Semi-infinite directions are compactified algebraically and the
// resulting bounded integrals are done with tensor-product Gauss-Legendre
// rules, refined dyadically until two successive levels agree within the
// requested relative tolerance.

#pragma once

#include <stdexcept>

#include "wgt/geometry.hpp"

namespace wgt {

struct QuadratureNonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Converged tensor with estimated relative error <= tol.
// tol must lie in (1e-10, 1e-2).
GeometryTensor geometry_tensor_quadrature(const GeometrySpec& g, double tol);

// Trace of the two-point Y tensor above a half-space: both observation
// points at height z, separated laterally by s.  Not normalized; the
// s = 0 value equals the trace of geometry_tensor_quadrature(HalfSpace).
double halfspace_two_point_trace(double z, double s, double tol);

}  // namespace wgt
