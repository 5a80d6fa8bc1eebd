#include "sizewave/interp.hpp"

#include <algorithm>
#include <cmath>

namespace sizewave {

std::size_t locate_segment(std::span<const double> x, double q) {
    if (x.size() < 2) throw GridError("locate_segment: need at least two nodes");
    auto it = std::upper_bound(x.begin(), x.end(), q);
    std::ptrdiff_t i = (it - x.begin()) - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(x.size()) - 2);
    return static_cast<std::size_t>(i);
}

std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw GridError("pchip_slopes: bad sample arrays");
    std::vector<double> d(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m[i] = 0.0; // local extremum
        } else {
            const double w1 = 2 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
            const double w2 = (x[i + 1] - x[i]) + 2 * (x[i] - x[i - 1]);
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // Endpoint limiting keeps the end intervals monotone as well.
    auto limit_end = [](double m_end, double d_adj) {
        if (m_end * d_adj <= 0.0) return 0.0;
        if (std::abs(m_end) > 3.0 * std::abs(d_adj)) return 3.0 * d_adj;
        return m_end;
    };
    m[0] = limit_end(m[0], d[0]);
    m[n - 1] = limit_end(m[n - 1], d[n - 2]);
    return m;
}

CubicSeries::CubicSeries(std::vector<double> x, std::vector<double> y, Slopes policy)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n != y_.size() || n < 2) throw GridError("CubicSeries: bad sample arrays");
    if (policy == Slopes::pchip) {
        m_ = pchip_slopes(x_, y_);
    } else {
        m_.resize(n);
        m_[0] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
        m_[n - 1] = (y_[n - 1] - y_[n - 2]) / (x_[n - 1] - x_[n - 2]);
        for (std::size_t i = 1; i + 1 < n; ++i)
            m_[i] = (y_[i + 1] - y_[i - 1]) / (x_[i + 1] - x_[i - 1]);
    }
}

double CubicSeries::operator()(double q) const {
    const std::size_t i = locate_segment(x_, q);
    return hermite_value(x_[i], y_[i], m_[i], x_[i + 1], y_[i + 1], m_[i + 1], q);
}

double CubicSeries::derivative(double q) const {
    const std::size_t i = locate_segment(x_, q);
    return hermite_slope(x_[i], y_[i], m_[i], x_[i + 1], y_[i + 1], m_[i + 1], q);
}

} // namespace sizewave
