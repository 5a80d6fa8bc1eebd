#ifndef SIZEWAVE_FIELDS_HPP
#define SIZEWAVE_FIELDS_HPP

#include <string>
#include <vector>

#include "sizewave/errors.hpp"

namespace sizewave {

// Closed-world catalog of coefficient shapes. Keeping the families enumerable
// makes configs serializable and the admissibility checks samplable.
enum class Family {
    constant,
    linear,
    polynomial,
    exponential,
    logistic,
    separable_product, // 2D only: f(x) * g(t)
    tabulated_grid,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Scalar coefficient of one variable (size x, size y, or time t depending on
// which model slot it fills). All analytic families carry exact derivatives;
// tabulated data use a shape-preserving piecewise cubic whose derivative is the
// interpolant's own. A central-difference fallback (step 1e-6*(1+|x|)) can be
// forced with use_analytic_derivative(false).
class CoefficientField1D {
public:
    CoefficientField1D() : CoefficientField1D(constant(0.0)) {}

    static CoefficientField1D constant(double c);
    static CoefficientField1D linear(double a0, double a1);
    static CoefficientField1D polynomial(std::vector<double> coeffs_ascending);
    static CoefficientField1D exponential(double amplitude, double rate);
    static CoefficientField1D logistic(double amplitude, double steepness, double midpoint);
    static CoefficientField1D tabulated(std::vector<double> nodes, std::vector<double> values);
    static CoefficientField1D make(Family f, std::vector<double> params);

    double value(double x) const;
    double derivative(double x) const;

    Family family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    bool analytic_derivative() const { return analytic_derivative_; }
    void use_analytic_derivative(bool on) { analytic_derivative_ = on; }

    // Tabulated fields are only defined on their node span.
    bool covers(double lo, double hi) const;
    double max_abs_on(double lo, double hi, std::size_t samples = 512) const;

private:
    double analytic_value(double x) const;
    double analytic_deriv(double x) const;

    Family family_;
    std::vector<double> params_;          // family-specific, see factories
    std::vector<double> nodes_, values_, slopes_; // tabulated only
    bool analytic_derivative_ = true;
};

// Scalar coefficient of (x,t). Families mirror the 1D catalog; `polynomial`
// and `logistic` act in x only, `separable_product` composes two 1D fields.
class CoefficientField2D {
public:
    CoefficientField2D() : CoefficientField2D(constant(0.0)) {}

    static CoefficientField2D constant(double c);
    static CoefficientField2D linear(double a0, double ax, double at);
    static CoefficientField2D polynomial(std::vector<double> coeffs_ascending_in_x);
    static CoefficientField2D exponential(double amplitude, double rate_x, double rate_t);
    static CoefficientField2D logistic(double amplitude, double steepness, double midpoint);
    static CoefficientField2D separable(CoefficientField1D x_part, CoefficientField1D t_part);
    static CoefficientField2D tabulated(std::vector<double> x_nodes, std::vector<double> t_nodes,
                                        std::vector<double> values_xt); // values[i*nt+j] = f(x_i,t_j)
    static CoefficientField2D make(Family f, std::vector<double> params);

    double value(double x, double t) const;
    double derivative_x(double x, double t) const;

    Family family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    bool analytic_derivative() const { return analytic_derivative_; }
    void use_analytic_derivative(bool on) { analytic_derivative_ = on; }
    const CoefficientField1D& x_part() const;
    const CoefficientField1D& t_part() const;

    bool covers(double x_lo, double x_hi, double t_lo, double t_hi) const;

private:
    double analytic_value(double x, double t) const;
    double analytic_deriv_x(double x, double t) const;
    double tabulated_eval(double x, double t, bool want_derivative) const;

    Family family_;
    std::vector<double> params_;
    std::vector<double> x_nodes_, t_nodes_, values_, slopes_; // tabulated only
    std::vector<CoefficientField1D> parts_;                   // separable only
    bool analytic_derivative_ = true;
};

// Mortality m(x,t,P) = base(x,t) + coeff(x,t) * phi(P) where phi is one of the
// coupling shapes below. m_P comes from the shape analytically, or from central
// differences with step 1e-6*(1+|P|) when analytic_mP is off.
class MortalityField {
public:
    enum class Coupling { none, linear, saturating, inverse };

    MortalityField() = default;
    MortalityField(CoefficientField2D base, double coupling_constant)
        : base_(std::move(base)), M_(coupling_constant) {}
    MortalityField(CoefficientField2D base, Coupling shape, CoefficientField2D coeff,
                   double coupling_constant)
        : base_(std::move(base)), coupling_(shape), coeff_(std::move(coeff)), M_(coupling_constant) {}

    double value(double x, double t, double population) const;
    double dP(double x, double t, double population) const;

    double coupling_constant() const { return M_; }
    Coupling coupling() const { return coupling_; }
    const CoefficientField2D& base() const { return base_; }
    const CoefficientField2D& coupling_coeff() const { return coeff_; }
    bool analytic_mP() const { return analytic_mP_; }
    void use_analytic_mP(bool on) { analytic_mP_ = on; }

    static const char* coupling_name(Coupling c);
    static Coupling coupling_from_name(const std::string& name);

private:
    CoefficientField2D base_;
    Coupling coupling_ = Coupling::none;
    CoefficientField2D coeff_;
    double M_ = 0.0;
    bool analytic_mP_ = true;
};

} // namespace sizewave

#endif
