#ifndef SIZEWAVE_QUADRATURE_HPP
#define SIZEWAVE_QUADRATURE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace sizewave {

// Composite Simpson over a uniform grid of n+1 values spanning length `span`.
// Requires n even; falls back to trapezoid otherwise.
double integrate_uniform(std::span<const double> values, double span);

// Trapezoid over arbitrary nodes.
double integrate_trapezoid(std::span<const double> x, std::span<const double> y);

// Simpson weights for `panels` panels on [a,b]: 2*panels+1 nodes, w[j] such that
// integral = sum w[j] f(x[j]).
struct SimpsonRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
SimpsonRule simpson_rule(double a, double b, std::size_t panels);

} // namespace sizewave

#endif
