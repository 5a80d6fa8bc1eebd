#include "sizewave/quadrature.hpp"

#include "sizewave/errors.hpp"

namespace sizewave {

double integrate_uniform(std::span<const double> values, double span) {
    const std::size_t n = values.size();
    if (n < 2) throw GridError("integrate_uniform: need at least two values");
    const std::size_t intervals = n - 1;
    const double h = span / static_cast<double>(intervals);
    if (intervals % 2 == 0) {
        double odd = 0.0, even = 0.0;
        for (std::size_t i = 1; i < intervals; i += 2) odd += values[i];
        for (std::size_t i = 2; i < intervals; i += 2) even += values[i];
        return h / 3.0 * (values[0] + values[intervals] + 4.0 * odd + 2.0 * even);
    }
    double sum = 0.5 * (values[0] + values[intervals]);
    for (std::size_t i = 1; i < intervals; ++i) sum += values[i];
    return h * sum;
}

double integrate_trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw GridError("integrate_trapezoid: bad sample arrays");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        sum += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
    return sum;
}

SimpsonRule simpson_rule(double a, double b, std::size_t panels) {
    if (panels == 0) throw GridError("simpson_rule: zero panels");
    const std::size_t n = 2 * panels;
    const double h = (b - a) / static_cast<double>(n);
    SimpsonRule rule;
    rule.nodes.resize(n + 1);
    rule.weights.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        rule.nodes[j] = a + h * static_cast<double>(j);
        double c = (j == 0 || j == n) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        rule.weights[j] = c * h / 3.0;
    }
    return rule;
}

} // namespace sizewave
