#ifndef SIZEWAVE_BOUNDARY_HPP
#define SIZEWAVE_BOUNDARY_HPP

#include <span>
#include <utility>
#include <vector>

#include "sizewave/problem.hpp"

namespace sizewave {

// Solution of h'(t) = V(h(t),t), h(0) = b, stored at integrator nodes with the
// exact node slopes V(h(t_k),t_k). Dense evaluation is cubic Hermite, so h and
// h' are available with C^1 continuity anywhere in [0,T].
class BoundaryTrajectory {
public:
    BoundaryTrajectory(std::vector<double> times, std::vector<double> values,
                       std::vector<double> slopes);

    double value(double t) const;
    double slope(double t) const;
    std::pair<double, double> eval(double t) const; // (h, h')

    double t_begin() const { return times_.front(); }
    double t_end() const { return times_.back(); }
    double max_value() const { return max_value_; }

    std::span<const double> times() const { return times_; }
    std::span<const double> values() const { return values_; }
    std::span<const double> slopes() const { return slopes_; }

private:
    std::size_t segment(double t) const;
    std::vector<double> times_, values_, slopes_;
    double max_value_;
};

// Integrates the free-boundary ODE with classic RK4 under step-doubling error
// control. Throws CapExceededError when h leaves [0, L_cap] and
// StepUnderflowError when the controller stalls.
BoundaryTrajectory solve_boundary(const ProblemSpec& spec, double dt_max, double rtol);

// Defaults: dt_max = T/512, rtol = 1e-8.
BoundaryTrajectory solve_boundary(const ProblemSpec& spec);

} // namespace sizewave

#endif
