#include "sizewave/field.hpp"

#include <algorithm>
#include <cmath>

#include "sizewave/interp.hpp"

namespace sizewave {

namespace {

bool detect_uniform(std::span<const double> x) {
    const double h0 = x[1] - x[0];
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        if (std::abs(x[i + 1] - x[i] - h0) > 1e-12 * (1.0 + std::abs(h0))) return false;
    return true;
}

} // namespace

FieldSlice::FieldSlice(std::vector<double> xi_nodes, std::vector<double> values)
    : xi(std::move(xi_nodes)), u(std::move(values)) {
    if (xi.size() != u.size() || xi.size() < 9)
        throw GridError("FieldSlice: need matching arrays with at least 8 intervals");
    if (!std::is_sorted(xi.begin(), xi.end()) || xi.front() != 0.0 || xi.back() != 1.0)
        throw GridError("FieldSlice: xi nodes must ascend from 0 to 1");
    for (double v : u)
        if (!std::isfinite(v)) throw GridError("FieldSlice: non-finite value");
    uniform = detect_uniform(xi);
}

Field::Field(std::vector<double> xi_nodes, std::vector<double> t_nodes)
    : xi_(std::move(xi_nodes)), t_(std::move(t_nodes)) {
    if (xi_.size() < 2 || t_.size() < 2) throw GridError("Field: degenerate grid");
    if (!std::is_sorted(xi_.begin(), xi_.end()) || !std::is_sorted(t_.begin(), t_.end()))
        throw GridError("Field: grids must be ascending");
    v_.assign(xi_.size() * t_.size(), 0.0);
}

FieldSlice Field::slice(std::size_t n) const {
    auto r = row(n);
    return FieldSlice(xi_, std::vector<double>(r.begin(), r.end()));
}

double Field::value(double xi, double t) const {
    const double sx = 1e-9, st = 1e-9 * (1.0 + t_.back() - t_.front());
    if (xi < xi_.front() - sx || xi > xi_.back() + sx || t < t_.front() - st || t > t_.back() + st)
        throw DomainError("field", xi, "field sampled outside its grid");
    const std::size_t i = locate_segment(xi_, xi);
    const std::size_t n = locate_segment(t_, t);
    const double ax = std::clamp((xi - xi_[i]) / (xi_[i + 1] - xi_[i]), 0.0, 1.0);
    const double at_ = std::clamp((t - t_[n]) / (t_[n + 1] - t_[n]), 0.0, 1.0);
    const double v00 = at(n, i), v01 = at(n, i + 1);
    const double v10 = at(n + 1, i), v11 = at(n + 1, i + 1);
    return (1 - at_) * ((1 - ax) * v00 + ax * v01) + at_ * ((1 - ax) * v10 + ax * v11);
}

bool Field::same_grid(const Field& other) const {
    return xi_ == other.xi_ && t_ == other.t_;
}

std::vector<double> uniform_nodes(double a, double b, std::size_t intervals) {
    if (intervals == 0) throw GridError("uniform_nodes: zero intervals");
    std::vector<double> x(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i)
        x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(intervals);
    x.back() = b;
    return x;
}

} // namespace sizewave
