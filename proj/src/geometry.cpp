#include "wgt/geometry.hpp"

#include <cmath>
#include <numbers>

namespace wgt {

namespace {
constexpr double pi = std::numbers::pi;
}

void validate(const GeometrySpec& g) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          if (!(s.z > 0.0))
            throw std::invalid_argument("HalfSpace: requires z > 0");
        } else if constexpr (std::is_same_v<T, Layer>) {
          if (!(s.z > 0.0) || !(s.d > 0.0))
            throw std::invalid_argument("Layer: requires z > 0 and d > 0");
        } else {
          if (!(s.a > 0.0) || !(s.R > s.a))
            throw std::invalid_argument("Wire: requires R > a > 0");
        }
      },
      g);
}

GeometryTensor geometry_tensor_analytic(const GeometrySpec& g) {
  validate(g);
  GeometryTensor y;
  if (const auto* hs = std::get_if<HalfSpace>(&g)) {
    double f = pi / (4.0 * hs->z);
    y.diag = {1.5 * f, 1.5 * f, f};
  } else if (const auto* ly = std::get_if<Layer>(&g)) {
    double f = pi * ly->d / (4.0 * ly->z * (ly->z + ly->d));
    y.diag = {1.5 * f, 1.5 * f, f};
  } else {
    const auto& w = std::get<Wire>(g);
    double trace;
    if (w.R >= 1.6 * w.a) {
      double q = (w.a / w.R) * (w.a / w.R);
      trace = pi * pi * w.a * w.a / (2.0 * w.R * w.R * w.R) *
              (1.0 + 2.25 * q + (225.0 / 186.0) * q * q);
    } else if (w.R - w.a <= 0.05 * w.a) {
      trace = pi / (w.R - w.a);
    } else {
      throw WireIntermediateRegime(
          "wire in the intermediate regime (0.05a < R-a, R < 1.6a): "
          "use geometry_tensor_quadrature");
    }
    y.trace_only = true;
    y.diag = {trace / 3.0, trace / 3.0, trace / 3.0};
  }
  return y;
}

}  // namespace wgt
