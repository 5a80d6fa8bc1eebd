#ifndef SIZEWAVE_INTERP_HPP
#define SIZEWAVE_INTERP_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sizewave/errors.hpp"

namespace sizewave {

// Cubic Hermite segment on [ta,tb] with values (ya,yb) and slopes (ma,mb).
inline double hermite_value(double ta, double ya, double ma,
                            double tb, double yb, double mb, double t) {
    const double h = tb - ta;
    const double s = (t - ta) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * ya + (s3 - 2 * s2 + s) * h * ma
         + (-2 * s3 + 3 * s2) * yb + (s3 - s2) * h * mb;
}

inline double hermite_slope(double ta, double ya, double ma,
                            double tb, double yb, double mb, double t) {
    const double h = tb - ta;
    const double s = (t - ta) / h;
    const double s2 = s * s;
    return ((6 * s2 - 6 * s) * ya + (3 * s2 - 4 * s + 1) * h * ma
          + (-6 * s2 + 6 * s) * yb + (3 * s2 - 2 * s) * h * mb) / h;
}

// Index of the segment [x[i], x[i+1]] containing q (clamped to the end segments).
std::size_t locate_segment(std::span<const double> x, double q);

// Fritsch-Carlson limited slopes. Shape preserving: the interpolant stays within
// the local data range on every interval, so nonnegative data stay nonnegative.
std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y);

// Piecewise-cubic interpolant of a sampled series. Two slope policies:
// `pchip` (monotone, no overshoot) and `centered` (plain finite differences,
// slightly more accurate on smooth data).
class CubicSeries {
public:
    enum class Slopes { pchip, centered };

    CubicSeries() = default;
    CubicSeries(std::vector<double> x, std::vector<double> y, Slopes policy = Slopes::centered);

    double operator()(double q) const;
    double derivative(double q) const;

    std::span<const double> nodes() const { return x_; }
    std::span<const double> values() const { return y_; }

private:
    std::vector<double> x_, y_, m_;
};

} // namespace sizewave

#endif
