#ifndef SIZEWAVE_MEASURES_HPP
#define SIZEWAVE_MEASURES_HPP

#include <span>
#include <vector>

#include "sizewave/boundary.hpp"
#include "sizewave/field.hpp"
#include "sizewave/problem.hpp"

namespace sizewave {

struct MeasureSeries {
    std::vector<double> t;
    std::vector<double> value;
};

// Weighted population h(t) * integral of eta(h(t)xi) u(xi) over [0,1].
// Composite Simpson on uniform grids, trapezoid otherwise.
double population_measure(std::span<const double> xi, std::span<const double> u,
                          const ProblemSpec& spec, const BoundaryTrajectory& traj, double t);
double population_measure(const FieldSlice& slice, const ProblemSpec& spec,
                          const BoundaryTrajectory& traj, double t);

// Renewal boundary value [C(t) + h(t) * integral of beta(h(t)xi,t) u(xi)] / V(0,t).
// Throws DegenerateInflowError when V(0,t) is not safely positive.
double renewal_value(std::span<const double> xi, std::span<const double> u,
                     const ProblemSpec& spec, const BoundaryTrajectory& traj, double t);
double renewal_value(const FieldSlice& slice, const ProblemSpec& spec,
                     const BoundaryTrajectory& traj, double t);

MeasureSeries population_series(const Field& field, const ProblemSpec& spec,
                                const BoundaryTrajectory& traj);

} // namespace sizewave

#endif
