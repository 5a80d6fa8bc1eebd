#include "sizewave/fields.hpp"

#include <algorithm>
#include <cmath>

#include "sizewave/interp.hpp"

namespace sizewave {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw GridError(msg);
}

double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

double poly_deriv(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) v = v * x + c[i] * static_cast<double>(i);
    return v;
}

double logistic_eval(double amp, double k, double x0, double x) {
    return amp / (1.0 + std::exp(-k * (x - x0)));
}

double logistic_deriv(double amp, double k, double x0, double x) {
    const double e = std::exp(-k * (x - x0));
    const double d = 1.0 + e;
    return amp * k * e / (d * d);
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::constant: return "constant";
        case Family::linear: return "linear";
        case Family::polynomial: return "polynomial";
        case Family::exponential: return "exponential";
        case Family::logistic: return "logistic";
        case Family::separable_product: return "separable-product";
        case Family::tabulated_grid: return "tabulated-grid";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::constant, Family::linear, Family::polynomial, Family::exponential,
                     Family::logistic, Family::separable_product, Family::tabulated_grid})
        if (name == family_name(f)) return f;
    throw GridError("unknown coefficient family '" + name + "'");
}

// ---------------------------------------------------------------------------
// CoefficientField1D

CoefficientField1D CoefficientField1D::constant(double c) {
    return make(Family::constant, {c});
}

CoefficientField1D CoefficientField1D::linear(double a0, double a1) {
    return make(Family::linear, {a0, a1});
}

CoefficientField1D CoefficientField1D::polynomial(std::vector<double> coeffs) {
    return make(Family::polynomial, std::move(coeffs));
}

CoefficientField1D CoefficientField1D::exponential(double amplitude, double rate) {
    return make(Family::exponential, {amplitude, rate});
}

CoefficientField1D CoefficientField1D::logistic(double amplitude, double steepness, double midpoint) {
    return make(Family::logistic, {amplitude, steepness, midpoint});
}

CoefficientField1D CoefficientField1D::tabulated(std::vector<double> nodes, std::vector<double> values) {
    require(nodes.size() >= 2 && nodes.size() == values.size(),
            "tabulated field needs matching node/value arrays with >= 2 entries");
    require(std::is_sorted(nodes.begin(), nodes.end()), "tabulated nodes must be increasing");
    CoefficientField1D f;
    f.family_ = Family::tabulated_grid;
    f.slopes_ = pchip_slopes(nodes, values);
    f.nodes_ = std::move(nodes);
    f.values_ = std::move(values);
    return f;
}

CoefficientField1D CoefficientField1D::make(Family fam, std::vector<double> params) {
    CoefficientField1D f;
    f.family_ = fam;
    f.params_ = std::move(params);
    switch (fam) {
        case Family::constant: require(f.params_.size() == 1, "constant family takes 1 param"); break;
        case Family::linear: require(f.params_.size() == 2, "1D linear family takes 2 params"); break;
        case Family::polynomial: require(!f.params_.empty(), "polynomial family needs coefficients"); break;
        case Family::exponential: require(f.params_.size() == 2, "1D exponential family takes 2 params"); break;
        case Family::logistic: require(f.params_.size() == 3, "logistic family takes 3 params"); break;
        case Family::separable_product: throw GridError("separable-product is a 2D-only family");
        case Family::tabulated_grid:
            throw GridError("use CoefficientField1D::tabulated for tabulated data");
    }
    return f;
}

double CoefficientField1D::analytic_value(double x) const {
    switch (family_) {
        case Family::constant: return params_[0];
        case Family::linear: return params_[0] + params_[1] * x;
        case Family::polynomial: return poly_eval(params_, x);
        case Family::exponential: return params_[0] * std::exp(params_[1] * x);
        case Family::logistic: return logistic_eval(params_[0], params_[1], params_[2], x);
        case Family::tabulated_grid: {
            const double q = std::clamp(x, nodes_.front(), nodes_.back());
            const std::size_t i = locate_segment(nodes_, q);
            return hermite_value(nodes_[i], values_[i], slopes_[i],
                                 nodes_[i + 1], values_[i + 1], slopes_[i + 1], q);
        }
        default: break;
    }
    throw GridError("unreachable 1D family");
}

double CoefficientField1D::analytic_deriv(double x) const {
    switch (family_) {
        case Family::constant: return 0.0;
        case Family::linear: return params_[1];
        case Family::polynomial: return poly_deriv(params_, x);
        case Family::exponential: return params_[0] * params_[1] * std::exp(params_[1] * x);
        case Family::logistic: return logistic_deriv(params_[0], params_[1], params_[2], x);
        case Family::tabulated_grid: {
            const double q = std::clamp(x, nodes_.front(), nodes_.back());
            const std::size_t i = locate_segment(nodes_, q);
            return hermite_slope(nodes_[i], values_[i], slopes_[i],
                                 nodes_[i + 1], values_[i + 1], slopes_[i + 1], q);
        }
        default: break;
    }
    throw GridError("unreachable 1D family");
}

double CoefficientField1D::value(double x) const { return analytic_value(x); }

double CoefficientField1D::derivative(double x) const {
    if (analytic_derivative_) return analytic_deriv(x);
    const double h = 1e-6 * (1.0 + std::abs(x));
    return (analytic_value(x + h) - analytic_value(x - h)) / (2.0 * h);
}

bool CoefficientField1D::covers(double lo, double hi) const {
    if (family_ != Family::tabulated_grid) return true;
    const double slack = 1e-12 * (1.0 + std::abs(hi));
    return nodes_.front() <= lo + slack && nodes_.back() >= hi - slack;
}

double CoefficientField1D::max_abs_on(double lo, double hi, std::size_t samples) const {
    double worst = 0.0;
    for (std::size_t i = 0; i <= samples; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples);
        worst = std::max(worst, std::abs(value(x)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// CoefficientField2D

CoefficientField2D CoefficientField2D::constant(double c) { return make(Family::constant, {c}); }

CoefficientField2D CoefficientField2D::linear(double a0, double ax, double at) {
    return make(Family::linear, {a0, ax, at});
}

CoefficientField2D CoefficientField2D::polynomial(std::vector<double> coeffs) {
    return make(Family::polynomial, std::move(coeffs));
}

CoefficientField2D CoefficientField2D::exponential(double amplitude, double rate_x, double rate_t) {
    return make(Family::exponential, {amplitude, rate_x, rate_t});
}

CoefficientField2D CoefficientField2D::logistic(double amplitude, double steepness, double midpoint) {
    return make(Family::logistic, {amplitude, steepness, midpoint});
}

CoefficientField2D CoefficientField2D::separable(CoefficientField1D x_part, CoefficientField1D t_part) {
    CoefficientField2D f;
    f.family_ = Family::separable_product;
    f.parts_.push_back(std::move(x_part));
    f.parts_.push_back(std::move(t_part));
    return f;
}

CoefficientField2D CoefficientField2D::tabulated(std::vector<double> x_nodes,
                                                 std::vector<double> t_nodes,
                                                 std::vector<double> values_xt) {
    const std::size_t nx = x_nodes.size(), nt = t_nodes.size();
    require(nx >= 2 && nt >= 2 && values_xt.size() == nx * nt,
            "2D tabulated field needs nx*nt values with nx,nt >= 2");
    require(std::is_sorted(x_nodes.begin(), x_nodes.end()) &&
            std::is_sorted(t_nodes.begin(), t_nodes.end()),
            "tabulated nodes must be increasing");
    CoefficientField2D f;
    f.family_ = Family::tabulated_grid;
    // pchip slopes in x, one column per time node
    f.slopes_.resize(nx * nt);
    std::vector<double> col(nx), sl;
    for (std::size_t j = 0; j < nt; ++j) {
        for (std::size_t i = 0; i < nx; ++i) col[i] = values_xt[i * nt + j];
        sl = pchip_slopes(x_nodes, col);
        for (std::size_t i = 0; i < nx; ++i) f.slopes_[i * nt + j] = sl[i];
    }
    f.x_nodes_ = std::move(x_nodes);
    f.t_nodes_ = std::move(t_nodes);
    f.values_ = std::move(values_xt);
    return f;
}

CoefficientField2D CoefficientField2D::make(Family fam, std::vector<double> params) {
    CoefficientField2D f;
    f.family_ = fam;
    f.params_ = std::move(params);
    switch (fam) {
        case Family::constant: require(f.params_.size() == 1, "constant family takes 1 param"); break;
        case Family::linear: require(f.params_.size() == 3, "2D linear family takes 3 params"); break;
        case Family::polynomial: require(!f.params_.empty(), "polynomial family needs coefficients"); break;
        case Family::exponential: require(f.params_.size() == 3, "2D exponential family takes 3 params"); break;
        case Family::logistic: require(f.params_.size() == 3, "logistic family takes 3 params"); break;
        case Family::separable_product:
            throw GridError("use CoefficientField2D::separable for separable products");
        case Family::tabulated_grid:
            throw GridError("use CoefficientField2D::tabulated for tabulated data");
    }
    return f;
}

const CoefficientField1D& CoefficientField2D::x_part() const {
    require(family_ == Family::separable_product, "x_part: not a separable field");
    return parts_[0];
}

const CoefficientField1D& CoefficientField2D::t_part() const {
    require(family_ == Family::separable_product, "t_part: not a separable field");
    return parts_[1];
}

double CoefficientField2D::tabulated_eval(double x, double t, bool want_derivative) const {
    const double qx = std::clamp(x, x_nodes_.front(), x_nodes_.back());
    const double qt = std::clamp(t, t_nodes_.front(), t_nodes_.back());
    const std::size_t i = locate_segment(x_nodes_, qx);
    const std::size_t j = locate_segment(t_nodes_, qt);
    const std::size_t nt = t_nodes_.size();
    const double theta = (qt - t_nodes_[j]) / (t_nodes_[j + 1] - t_nodes_[j]);
    auto column = [&](std::size_t jj) {
        if (want_derivative)
            return hermite_slope(x_nodes_[i], values_[i * nt + jj], slopes_[i * nt + jj],
                                 x_nodes_[i + 1], values_[(i + 1) * nt + jj], slopes_[(i + 1) * nt + jj], qx);
        return hermite_value(x_nodes_[i], values_[i * nt + jj], slopes_[i * nt + jj],
                             x_nodes_[i + 1], values_[(i + 1) * nt + jj], slopes_[(i + 1) * nt + jj], qx);
    };
    return (1.0 - theta) * column(j) + theta * column(j + 1);
}

double CoefficientField2D::analytic_value(double x, double t) const {
    switch (family_) {
        case Family::constant: return params_[0];
        case Family::linear: return params_[0] + params_[1] * x + params_[2] * t;
        case Family::polynomial: return poly_eval(params_, x);
        case Family::exponential: return params_[0] * std::exp(params_[1] * x + params_[2] * t);
        case Family::logistic: return logistic_eval(params_[0], params_[1], params_[2], x);
        case Family::separable_product: return parts_[0].value(x) * parts_[1].value(t);
        case Family::tabulated_grid: return tabulated_eval(x, t, false);
    }
    throw GridError("unreachable 2D family");
}

double CoefficientField2D::analytic_deriv_x(double x, double t) const {
    switch (family_) {
        case Family::constant: return 0.0;
        case Family::linear: return params_[1];
        case Family::polynomial: return poly_deriv(params_, x);
        case Family::exponential: return params_[1] * analytic_value(x, t);
        case Family::logistic: return logistic_deriv(params_[0], params_[1], params_[2], x);
        case Family::separable_product: return parts_[0].derivative(x) * parts_[1].value(t);
        case Family::tabulated_grid: return tabulated_eval(x, t, true);
    }
    throw GridError("unreachable 2D family");
}

double CoefficientField2D::value(double x, double t) const { return analytic_value(x, t); }

double CoefficientField2D::derivative_x(double x, double t) const {
    if (analytic_derivative_) return analytic_deriv_x(x, t);
    const double h = 1e-6 * (1.0 + std::abs(x));
    return (analytic_value(x + h, t) - analytic_value(x - h, t)) / (2.0 * h);
}

bool CoefficientField2D::covers(double x_lo, double x_hi, double t_lo, double t_hi) const {
    if (family_ == Family::separable_product)
        return parts_[0].covers(x_lo, x_hi) && parts_[1].covers(t_lo, t_hi);
    if (family_ != Family::tabulated_grid) return true;
    const double sx = 1e-12 * (1.0 + std::abs(x_hi));
    const double st = 1e-12 * (1.0 + std::abs(t_hi));
    return x_nodes_.front() <= x_lo + sx && x_nodes_.back() >= x_hi - sx &&
           t_nodes_.front() <= t_lo + st && t_nodes_.back() >= t_hi - st;
}

// ---------------------------------------------------------------------------
// MortalityField

namespace {

double coupling_phi(MortalityField::Coupling c, double p) {
    switch (c) {
        case MortalityField::Coupling::none: return 0.0;
        case MortalityField::Coupling::linear: return p;
        case MortalityField::Coupling::saturating: return p / (1.0 + p);
        case MortalityField::Coupling::inverse: return 1.0 / (1.0 + p);
    }
    return 0.0;
}

double coupling_phi_prime(MortalityField::Coupling c, double p) {
    const double d = 1.0 + p;
    switch (c) {
        case MortalityField::Coupling::none: return 0.0;
        case MortalityField::Coupling::linear: return 1.0;
        case MortalityField::Coupling::saturating: return 1.0 / (d * d);
        case MortalityField::Coupling::inverse: return -1.0 / (d * d);
    }
    return 0.0;
}

} // namespace

double MortalityField::value(double x, double t, double population) const {
    double v = base_.value(x, t);
    if (coupling_ != Coupling::none)
        v += coeff_.value(x, t) * coupling_phi(coupling_, population);
    return v;
}

double MortalityField::dP(double x, double t, double population) const {
    if (!analytic_mP_) {
        const double h = 1e-6 * (1.0 + std::abs(population));
        return (value(x, t, population + h) - value(x, t, population - h)) / (2.0 * h);
    }
    if (coupling_ == Coupling::none) return 0.0;
    return coeff_.value(x, t) * coupling_phi_prime(coupling_, population);
}

const char* MortalityField::coupling_name(Coupling c) {
    switch (c) {
        case Coupling::none: return "none";
        case Coupling::linear: return "linear";
        case Coupling::saturating: return "saturating";
        case Coupling::inverse: return "inverse";
    }
    return "?";
}

MortalityField::Coupling MortalityField::coupling_from_name(const std::string& name) {
    for (Coupling c : {Coupling::none, Coupling::linear, Coupling::saturating, Coupling::inverse})
        if (name == coupling_name(c)) return c;
    throw GridError("unknown mortality coupling '" + name + "'");
}

} // namespace sizewave
