// Small numerical toolbox: Gauss-Legendre rules, adaptive Simpson,
// deterministic pairwise reduction.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wgt {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1].  Rules are cached per n.
const GaussRule& gauss_legendre(int n);

// Nodes/weights mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

// Adaptive Simpson on [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 40);

// Fixed-order pairwise reduction; bit-stable for a given input order.
double pairwise_sum(std::span<const double> v);

}  // namespace wgt
