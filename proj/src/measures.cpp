#include "sizewave/measures.hpp"

#include <cmath>

#include "sizewave/quadrature.hpp"

namespace sizewave {

namespace {

bool is_uniform(std::span<const double> x) {
    const double h0 = x[1] - x[0];
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        if (std::abs(x[i + 1] - x[i] - h0) > 1e-12 * (1.0 + std::abs(h0))) return false;
    return true;
}

double weighted_integral(std::span<const double> xi, std::span<const double> u,
                         const std::function<double(double)>& weight) {
    std::vector<double> g(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) g[i] = weight(xi[i]) * u[i];
    if (is_uniform(xi)) return integrate_uniform(g, xi.back() - xi.front());
    return integrate_trapezoid(xi, g);
}

} // namespace

double population_measure(std::span<const double> xi, std::span<const double> u,
                          const ProblemSpec& spec, const BoundaryTrajectory& traj, double t) {
    if (xi.size() != u.size() || xi.size() < 2)
        throw GridError("population_measure: bad slice");
    const double h = traj.value(t);
    return h * weighted_integral(xi, u, [&](double q) { return spec.eta(h * q); });
}

double population_measure(const FieldSlice& slice, const ProblemSpec& spec,
                          const BoundaryTrajectory& traj, double t) {
    return population_measure(slice.xi, slice.u, spec, traj, t);
}

double renewal_value(std::span<const double> xi, std::span<const double> u,
                     const ProblemSpec& spec, const BoundaryTrajectory& traj, double t) {
    if (xi.size() != u.size() || xi.size() < 2)
        throw GridError("renewal_value: bad slice");
    const double v0 = spec.V(0.0, t);
    if (v0 <= 1e-12)
        throw DegenerateInflowError("renewal_value: V(0,t) = " + std::to_string(v0) +
                                    " at t = " + std::to_string(t) +
                                    "; the inflow condition is degenerate");
    const double h = traj.value(t);
    const double birth = h * weighted_integral(xi, u, [&](double q) { return spec.beta(h * q, t); });
    return (spec.C(t) + birth) / v0;
}

double renewal_value(const FieldSlice& slice, const ProblemSpec& spec,
                     const BoundaryTrajectory& traj, double t) {
    return renewal_value(slice.xi, slice.u, spec, traj, t);
}

MeasureSeries population_series(const Field& field, const ProblemSpec& spec,
                                const BoundaryTrajectory& traj) {
    MeasureSeries s;
    s.t.assign(field.t().begin(), field.t().end());
    s.value.resize(field.rows());
    for (std::size_t n = 0; n < field.rows(); ++n)
        s.value[n] = population_measure(field.xi(), field.row(n), spec, traj, field.t()[n]);
    return s;
}

} // namespace sizewave
