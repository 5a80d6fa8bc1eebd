#include "sizewave/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sizewave/interp.hpp"

namespace sizewave {

BoundaryTrajectory::BoundaryTrajectory(std::vector<double> times, std::vector<double> values,
                                       std::vector<double> slopes)
    : times_(std::move(times)), values_(std::move(values)), slopes_(std::move(slopes)) {
    if (times_.size() < 2 || times_.size() != values_.size() || times_.size() != slopes_.size())
        throw GridError("BoundaryTrajectory: inconsistent node arrays");
    if (!std::is_sorted(times_.begin(), times_.end()))
        throw GridError("BoundaryTrajectory: node times must be increasing");
    max_value_ = *std::max_element(values_.begin(), values_.end());
}

std::size_t BoundaryTrajectory::segment(double t) const {
    const double slack = 1e-9 * (1.0 + times_.back() - times_.front());
    if (t < times_.front() - slack || t > times_.back() + slack)
        throw DomainError("h", t, "boundary trajectory queried at t=" + std::to_string(t) +
                                      " outside [" + std::to_string(times_.front()) + ", " +
                                      std::to_string(times_.back()) + "]");
    return locate_segment(times_, t);
}

double BoundaryTrajectory::value(double t) const {
    const std::size_t i = segment(t);
    if (t == times_[i]) return values_[i];
    if (t == times_[i + 1]) return values_[i + 1];
    return hermite_value(times_[i], values_[i], slopes_[i],
                         times_[i + 1], values_[i + 1], slopes_[i + 1], t);
}

double BoundaryTrajectory::slope(double t) const {
    const std::size_t i = segment(t);
    if (t == times_[i]) return slopes_[i];
    if (t == times_[i + 1]) return slopes_[i + 1];
    return hermite_slope(times_[i], values_[i], slopes_[i],
                         times_[i + 1], values_[i + 1], slopes_[i + 1], t);
}

std::pair<double, double> BoundaryTrajectory::eval(double t) const {
    const std::size_t i = segment(t);
    if (t == times_[i]) return {values_[i], slopes_[i]};
    if (t == times_[i + 1]) return {values_[i + 1], slopes_[i + 1]};
    return {hermite_value(times_[i], values_[i], slopes_[i],
                          times_[i + 1], values_[i + 1], slopes_[i + 1], t),
            hermite_slope(times_[i], values_[i], slopes_[i],
                          times_[i + 1], values_[i + 1], slopes_[i + 1], t)};
}

namespace {

// Sanity scan: V must have finite, bounded difference quotients on the swept box.
void check_lipschitz_samples(const ProblemSpec& spec) {
    const double b = spec.initial_boundary(), L = spec.size_cap(), T = spec.horizon();
    const double dx = 1e-4 * (1.0 + L);
    for (int i = 0; i <= 24; ++i) {
        for (int j = 0; j <= 24; ++j) {
            const double x = b + (L - b) * i / 24.0;
            const double t = T * j / 24.0;
            const double xp = std::min(x + dx, L);
            if (xp <= x) continue;
            const double q = (spec.V(xp, t) - spec.V(x, t)) / (xp - x);
            if (!std::isfinite(q))
                throw GridError("solve_boundary: V has a non-finite difference quotient at x=" +
                                std::to_string(x) + ", t=" + std::to_string(t));
        }
    }
}

} // namespace

BoundaryTrajectory solve_boundary(const ProblemSpec& spec, double dt_max, double rtol) {
    if (!(dt_max > 0.0) || !(rtol > 0.0))
        throw GridError("solve_boundary: dt_max and rtol must be positive");
    check_lipschitz_samples(spec);

    const double T = spec.horizon();
    const double L = spec.size_cap();
    auto f = [&](double h, double t) { return spec.V(std::clamp(h, 0.0, L), t); };
    auto rk4 = [&](double t, double y, double dt) {
        const double k1 = f(y, t);
        const double k2 = f(y + 0.5 * dt * k1, t + 0.5 * dt);
        const double k3 = f(y + 0.5 * dt * k2, t + 0.5 * dt);
        const double k4 = f(y + dt * k3, t + dt);
        return y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };

    std::vector<double> times, values, slopes;
    double t = 0.0, h = spec.initial_boundary();
    times.push_back(t);
    values.push_back(h);
    slopes.push_back(f(h, t));

    const double dt_min = 1e-14 * std::max(T, 1.0);
    double dt = dt_max;
    while (t < T) {
        dt = std::min(dt, T - t);
        const double coarse = rk4(t, h, dt);
        const double mid = rk4(t, h, 0.5 * dt);
        const double fine = rk4(t + 0.5 * dt, mid, 0.5 * dt);
        const double err = std::abs(fine - coarse) / 15.0;
        const double tol = rtol * (1.0 + std::abs(fine));
        if (err <= tol) {
            const double t_prev = t, h_prev = h;
            t += dt;
            h = fine;
            const double margin = 1e-12 * (1.0 + L);
            if (h > L + margin || h < -margin) {
                // locate the exit time inside this step by bisection on the chord
                double lo = t_prev, hi = t;
                const double s_prev = f(h_prev, t_prev), s_new = f(std::clamp(h, 0.0, L), t);
                for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                    const double mid_t = 0.5 * (lo + hi);
                    const double hm = hermite_value(t_prev, h_prev, s_prev, t, h, s_new, mid_t);
                    if (hm > L || hm < 0.0) hi = mid_t; else lo = mid_t;
                }
                throw CapExceededError(0.5 * (lo + hi),
                                       "solve_boundary: h(t) exits [0, L_cap] near t=" +
                                           std::to_string(0.5 * (lo + hi)));
            }
            times.push_back(t);
            values.push_back(h);
            slopes.push_back(f(h, t));
            const double grow = (err == 0.0) ? 4.0
                                             : std::min(4.0, 0.9 * std::pow(tol / err, 0.2));
            dt = std::min(dt_max, dt * std::max(1.0, grow));
        } else {
            dt *= std::max(0.1, 0.9 * std::pow(tol / err, 0.2));
            if (dt < dt_min)
                throw StepUnderflowError("solve_boundary: step underflow at t=" + std::to_string(t));
        }
    }
    return BoundaryTrajectory(std::move(times), std::move(values), std::move(slopes));
}

BoundaryTrajectory solve_boundary(const ProblemSpec& spec) {
    return solve_boundary(spec, spec.horizon() / 512.0, 1e-8);
}

} // namespace sizewave
