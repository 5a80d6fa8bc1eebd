#include "sizewave/transform.hpp"

#include <string>

namespace sizewave {

namespace {

void check_reference(double xi) {
    if (xi < -1e-12 || xi > 1.0 + 1e-12)
        throw DomainError("xi", xi, "reference coordinate " + std::to_string(xi) + " outside [0,1]");
}

} // namespace

double transformed_velocity(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                            double xi, double t) {
    check_reference(xi);
    if (xi >= 1.0) return 0.0;
    const auto [h, hp] = traj.eval(t);
    return (spec.V(h * xi, t) - xi * hp) / h;
}

double reaction_rate(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                     double xi, double t, double population) {
    check_reference(xi);
    if (population < -1e-12)
        throw DomainError("P", population, "population measure must be nonnegative");
    const auto [h, hp] = traj.eval(t);
    return spec.m(h * xi, t, std::max(population, 0.0)) + hp / h;
}

double to_physical(const BoundaryTrajectory& traj, double xi, double t) {
    check_reference(xi);
    return traj.value(t) * xi;
}

double to_reference(const BoundaryTrajectory& traj, double x, double t) {
    const double h = traj.value(t);
    if (x < -1e-12 * (1.0 + h) || x > h * (1.0 + 1e-12))
        throw DomainError("x", x, "physical coordinate " + std::to_string(x) +
                                      " outside [0, h(t)=" + std::to_string(h) + "]");
    return x / h;
}

} // namespace sizewave
