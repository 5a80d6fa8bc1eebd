#ifndef SIZEWAVE_CHARACTERISTICS_HPP
#define SIZEWAVE_CHARACTERISTICS_HPP

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "sizewave/boundary.hpp"
#include "sizewave/problem.hpp"

namespace sizewave {

enum class FootKind {
    initial_line,    // reached the requested start time with xi > 0
    inflow_boundary, // hit xi = 0 first; `crossing` holds the event time
};

// One characteristic path xi = X(t) of the straightened transport equation,
// sampled at integrator nodes (ascending t) with slopes for Hermite dense
// output in between.
struct CharCurve {
    double anchor_xi = 0.0;
    double anchor_t = 0.0;
    std::vector<double> t, xi, slope;
    FootKind foot = FootKind::initial_line;
    double crossing = std::numeric_limits<double>::quiet_NaN();

    double eval(double at) const;
    double t_front() const { return t.front(); }
    double t_back() const { return t.back(); }
    std::size_t steps() const { return t.size() - 1; }
};

using VelocityFn = std::function<double(double /*xi*/, double /*t*/)>;

// Core tracer over an arbitrary velocity field (tests drive it with synthetic
// velocities). Integrates dX/dt = W(X,t) from (xi0,t0) toward t_target with
// step-doubling RK4; backward traces stop at xi = 0, locating the crossing by
// bisection to 1e-12 in t. X is clamped into [0,1]; xi = 1 is invariant since
// the transformed velocity vanishes there.
CharCurve trace_velocity(const VelocityFn& velocity, double xi0, double t0, double t_target,
                         double tol = 1e-10);

CharCurve trace(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                double xi0, double t0, double t_target, double tol = 1e-10);

// Event time tau with X(tau; xi0, t0) = 0 for the backward trace. Throws
// NotInflowError when the curve reaches t = 0 with X > 0.
double crossing_time(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                     double xi0, double t0, double tol = 1e-10);

// The characteristic through the origin, inverted: G(xi) is the time at which
// the origin curve reaches xi. Points with t > G(xi) are determined by the
// inflow boundary, points with t <= G(xi) by the initial data.
class DividingCurve {
public:
    DividingCurve(std::vector<double> xi_samples, std::vector<double> g_samples, double max_xi);

    double value(double xi) const;          // G(xi); xi must be <= max_xi
    bool is_inflow(double xi, double t) const;
    double max_xi() const { return max_xi_; }
    std::span<const double> xi_samples() const { return xi_; }
    std::span<const double> g_samples() const { return g_; }

private:
    std::vector<double> xi_, g_, slopes_;
    double max_xi_;
};

DividingCurve dividing_curve(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                             std::span<const double> xi_grid, double tol = 1e-10);

// Composite Simpson of V_x(h(s)X(s),s) + extra(X(s),s) along the curve between
// its foot time and head time; panels = max(16, 4 * integration steps). The
// caller exponentiates the negation.
double exponent_integral(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                         const CharCurve& curve,
                         const std::function<double(double, double)>& extra);

} // namespace sizewave

#endif
