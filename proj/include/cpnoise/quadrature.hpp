#pragma once

#include <functional>
#include <vector>

namespace cpnoise {

// Gauss-Legendre rule on [-1, 1]
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre polynomial; cached per n.
const GaussRule& gauss_rule(int n);

// integral of f over [a, b] with a single n-point rule
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n = 12);

// composite rule over panels geometrically spaced in [a, b], 0 < a < b
double gauss_integrate_log(const std::function<double(double)>& f, double a, double b,
                           int panels, int points_per_panel = 12);

// geometric grid with >= 2 points, endpoints included
std::vector<double> log_grid(double lo, double hi, int points_per_decade);

}  // namespace cpnoise
