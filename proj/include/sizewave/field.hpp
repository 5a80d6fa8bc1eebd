#ifndef SIZEWAVE_FIELD_HPP
#define SIZEWAVE_FIELD_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sizewave/errors.hpp"

namespace sizewave {

// One time slice of the straightened density: nodes xi_0=0 < ... < xi_N=1 and
// values at one time. At least 8 intervals.
struct FieldSlice {
    std::vector<double> xi;
    std::vector<double> u;
    bool uniform = true;

    FieldSlice() = default;
    FieldSlice(std::vector<double> xi_nodes, std::vector<double> values);
};

// Grid function on the reference rectangle [0,1] x [t_front, t_back], row-major
// by time. The xi grid is uniform; the t grid is ascending but may be pieced
// together from slabs of different lengths.
class Field {
public:
    Field() = default;
    Field(std::vector<double> xi_nodes, std::vector<double> t_nodes);

    std::size_t rows() const { return t_.size(); }
    std::size_t cols() const { return xi_.size(); }

    double& at(std::size_t row, std::size_t col) { return v_[row * cols() + col]; }
    double at(std::size_t row, std::size_t col) const { return v_[row * cols() + col]; }

    std::span<double> row(std::size_t n) { return {v_.data() + n * cols(), cols()}; }
    std::span<const double> row(std::size_t n) const { return {v_.data() + n * cols(), cols()}; }

    FieldSlice slice(std::size_t n) const;

    std::span<const double> xi() const { return xi_; }
    std::span<const double> t() const { return t_; }

    // Bilinear sample, for cross-grid comparisons.
    double value(double xi, double t) const;

    bool same_grid(const Field& other) const;

private:
    std::vector<double> xi_, t_, v_;
};

std::vector<double> uniform_nodes(double a, double b, std::size_t intervals);

} // namespace sizewave

#endif
