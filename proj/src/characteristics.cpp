#include "sizewave/characteristics.hpp"

#include <algorithm>
#include <cmath>

#include "sizewave/interp.hpp"
#include "sizewave/quadrature.hpp"
#include "sizewave/transform.hpp"

namespace sizewave {

double CharCurve::eval(double at) const {
    if (t.size() == 1) return xi.front();
    const double slack = 1e-9 * (1.0 + t.back() - t.front());
    if (at < t.front() - slack || at > t.back() + slack)
        throw DomainError("curve", at, "characteristic queried outside its sampled span");
    const std::size_t i = locate_segment(t, at);
    if (at == t[i]) return xi[i];
    if (at == t[i + 1]) return xi[i + 1];
    return hermite_value(t[i], xi[i], slope[i], t[i + 1], xi[i + 1], slope[i + 1], at);
}

CharCurve trace_velocity(const VelocityFn& velocity, double xi0, double t0, double t_target,
                         double tol) {
    if (xi0 < -1e-12 || xi0 > 1.0 + 1e-12)
        throw DomainError("xi", xi0, "trace anchor outside [0,1]");
    xi0 = std::clamp(xi0, 0.0, 1.0);

    CharCurve curve;
    curve.anchor_xi = xi0;
    curve.anchor_t = t0;

    const double span = t_target - t0;
    if (span == 0.0) {
        curve.t = {t0};
        curve.xi = {xi0};
        curve.slope = {velocity(xi0, t0)};
        return curve;
    }
    const double dir = span > 0.0 ? 1.0 : -1.0;
    const bool backward = dir < 0.0;

    auto w = [&](double x, double t) { return velocity(std::clamp(x, 0.0, 1.0), t); };
    auto rk4 = [&](double t, double x, double dt) {
        const double k1 = w(x, t);
        const double k2 = w(x + 0.5 * dt * k1, t + 0.5 * dt);
        const double k3 = w(x + 0.5 * dt * k2, t + 0.5 * dt);
        const double k4 = w(x + dt * k3, t + dt);
        return x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };

    std::vector<double> ts{t0}, xs{xi0}, ss{w(xi0, t0)};
    double t = t0, x = xi0;
    const double abs_span = std::abs(span);
    const double dt_cap = abs_span / 4.0; // at least four steps per curve
    const double dt_min = 1e-14 * std::max(abs_span, 1.0);
    double dt = abs_span / 8.0;

    while (dir * (t_target - t) > 0.0) {
        dt = std::min(dt, std::abs(t_target - t));
        const double h = dir * dt;
        const double coarse = rk4(t, x, h);
        const double mid = rk4(t, x, 0.5 * h);
        const double fine = rk4(t + 0.5 * h, mid, 0.5 * h);
        const double err = std::abs(fine - coarse) / 15.0;
        const double step_tol = tol * (1.0 + std::abs(fine));
        if (err <= step_tol) {
            const double t_prev = t, x_prev = x;
            t += h;
            x = std::min(fine, 1.0); // xi = 1 is invariant; kill overshoot
            if (backward && x <= 0.0) {
                // crossing event inside [t, t_prev]; bisect the Hermite segment
                const double s_prev = w(x_prev, t_prev);
                const double s_new = w(std::max(x, 0.0), t);
                double lo = t, hi = t_prev; // X(lo) <= 0 < X(hi)
                if (x == 0.0) {
                    lo = hi = t;
                }
                for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                    const double tm = 0.5 * (lo + hi);
                    const double xm = hermite_value(t, x, s_new, t_prev, x_prev, s_prev, tm);
                    if (xm <= 0.0) lo = tm; else hi = tm;
                }
                const double tau = 0.5 * (lo + hi);
                curve.foot = FootKind::inflow_boundary;
                curve.crossing = tau;
                ts.push_back(tau);
                xs.push_back(0.0);
                ss.push_back(w(0.0, tau));
                break;
            }
            ts.push_back(t);
            xs.push_back(x);
            ss.push_back(w(x, t));
            const double grow = (err == 0.0) ? 4.0
                                             : std::min(4.0, 0.9 * std::pow(step_tol / err, 0.2));
            dt = std::min(dt_cap, dt * std::max(1.0, grow));
        } else {
            dt *= std::max(0.1, 0.9 * std::pow(step_tol / err, 0.2));
            if (dt < dt_min)
                throw StepUnderflowError("trace: step underflow at t=" + std::to_string(t));
        }
    }

    if (backward) {
        std::reverse(ts.begin(), ts.end());
        std::reverse(xs.begin(), xs.end());
        std::reverse(ss.begin(), ss.end());
    }
    curve.t = std::move(ts);
    curve.xi = std::move(xs);
    curve.slope = std::move(ss);
    return curve;
}

CharCurve trace(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                double xi0, double t0, double t_target, double tol) {
    auto w = [&](double x, double t) { return transformed_velocity(spec, traj, x, t); };
    return trace_velocity(w, xi0, t0, t_target, tol);
}

double crossing_time(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                     double xi0, double t0, double tol) {
    if (xi0 == 0.0) return t0;
    const CharCurve curve = trace(spec, traj, xi0, t0, 0.0, tol);
    if (curve.foot != FootKind::inflow_boundary)
        throw NotInflowError("crossing_time: characteristic from (xi=" + std::to_string(xi0) +
                             ", t=" + std::to_string(t0) + ") reaches t=0 with xi=" +
                             std::to_string(curve.xi.front()) + " > 0");
    return curve.crossing;
}

DividingCurve::DividingCurve(std::vector<double> xi_samples, std::vector<double> g_samples,
                             double max_xi)
    : xi_(std::move(xi_samples)), g_(std::move(g_samples)), max_xi_(max_xi) {
    if (xi_.size() != g_.size() || xi_.size() < 2)
        throw GridError("DividingCurve: need at least two samples");
    for (std::size_t i = 0; i + 1 < g_.size(); ++i)
        if (!(g_[i] < g_[i + 1]))
            throw GridError("DividingCurve: samples must be strictly increasing");
    slopes_ = pchip_slopes(xi_, g_);
}

double DividingCurve::value(double xi) const {
    if (xi < -1e-12 || xi > max_xi_ * (1.0 + 1e-12))
        throw DomainError("xi", xi, "G(xi) sampled only on [0, " + std::to_string(max_xi_) + "]");
    const double q = std::clamp(xi, xi_.front(), xi_.back());
    const std::size_t i = locate_segment(xi_, q);
    if (q == xi_[i]) return g_[i];
    if (q == xi_[i + 1]) return g_[i + 1];
    return hermite_value(xi_[i], g_[i], slopes_[i], xi_[i + 1], g_[i + 1], slopes_[i + 1], q);
}

bool DividingCurve::is_inflow(double xi, double t) const {
    if (xi > max_xi_) return false; // not reached within the horizon: initial data rules
    return t > value(xi);
}

DividingCurve dividing_curve(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                             std::span<const double> xi_grid, double tol) {
    auto w = [&](double x, double t) { return transformed_velocity(spec, traj, x, t); };
    if (w(0.0, 0.0) <= 0.0)
        throw DegenerateInflowError("dividing_curve: W(0,0) <= 0, origin characteristic stalls");
    const CharCurve origin = trace_velocity(w, 0.0, 0.0, spec.horizon(), tol);
    const double max_xi = origin.xi.back();

    std::vector<double> xs, gs;
    for (double q : xi_grid) {
        if (q < 0.0 || q > max_xi) continue;
        if (q == 0.0) {
            xs.push_back(0.0);
            gs.push_back(0.0);
            continue;
        }
        // invert the monotone curve: find t with X(t) = q
        auto it = std::lower_bound(origin.xi.begin(), origin.xi.end(), q);
        std::size_t j = static_cast<std::size_t>(it - origin.xi.begin());
        j = std::min(std::max<std::size_t>(j, 1), origin.xi.size() - 1) - 1;
        double lo = origin.t[j], hi = origin.t[j + 1];
        for (int k = 0; k < 200 && hi - lo > 1e-12; ++k) {
            const double tm = 0.5 * (lo + hi);
            if (origin.eval(tm) < q) lo = tm; else hi = tm;
        }
        xs.push_back(q);
        gs.push_back(0.5 * (lo + hi));
    }
    if (xs.empty() || xs.front() != 0.0) {
        xs.insert(xs.begin(), 0.0);
        gs.insert(gs.begin(), 0.0);
    }
    if (xs.size() < 2)
        throw GridError("dividing_curve: xi grid leaves fewer than two samples below max_xi");
    return DividingCurve(std::move(xs), std::move(gs), max_xi);
}

double exponent_integral(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                         const CharCurve& curve,
                         const std::function<double(double, double)>& extra) {
    if (curve.t.size() < 2) return 0.0;
    const std::size_t panels = std::max<std::size_t>(16, 4 * curve.steps());
    const SimpsonRule rule = simpson_rule(curve.t_front(), curve.t_back(), panels);
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double s = rule.nodes[j];
        const double x = curve.eval(s);
        const double phys = traj.value(s) * x;
        acc += rule.weights[j] * (spec.Vx(phys, s) + extra(x, s));
    }
    return acc;
}

} // namespace sizewave
