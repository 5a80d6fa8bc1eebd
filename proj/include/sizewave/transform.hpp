#ifndef SIZEWAVE_TRANSFORM_HPP
#define SIZEWAVE_TRANSFORM_HPP

#include "sizewave/boundary.hpp"
#include "sizewave/problem.hpp"

namespace sizewave {

// Straightened-domain velocity W(xi,t) = (V(h(t)xi,t) - xi h'(t)) / h(t).
// W(1,t) is identically zero because h' = V(h,t); it is returned as an exact 0
// rather than computed, which would cancel catastrophically.
double transformed_velocity(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                            double xi, double t);

// Reaction coefficient of the straightened equation:
// m(h(t)xi, t, P) + h'(t)/h(t).
double reaction_rate(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                     double xi, double t, double population);

// x = h(t) * xi and its inverse.
double to_physical(const BoundaryTrajectory& traj, double xi, double t);
double to_reference(const BoundaryTrajectory& traj, double x, double t);

} // namespace sizewave

#endif
