#ifndef SIZEWAVE_PROBLEM_HPP
#define SIZEWAVE_PROBLEM_HPP

#include <cmath>
#include <string>
#include <vector>

#include "sizewave/fields.hpp"

namespace sizewave {

// One problem instance: every model coefficient plus the domain constants.
// All evaluation of coefficients goes through the named accessors, which
// enforce the declared domains ([0,L_cap] in size, [0,T] in time, [0,b] for
// the initial density) and name the offending field on violation.
class ProblemSpec {
public:
    ProblemSpec(CoefficientField2D growth, MortalityField mortality,
                CoefficientField2D reproduction, CoefficientField1D measure_weight,
                CoefficientField1D inflow, CoefficientField1D initial_density,
                double b, double T, double L_cap);

    double V(double x, double t) const { check_x(x, "V"); check_t(t, "V"); return growth_.value(x, t); }
    double Vx(double x, double t) const { check_x(x, "V"); check_t(t, "V"); return growth_.derivative_x(x, t); }
    double m(double x, double t, double P) const { check_x(x, "m"); check_t(t, "m"); return mortality_.value(x, t, P); }
    double mP(double x, double t, double P) const { check_x(x, "m"); check_t(t, "m"); return mortality_.dP(x, t, P); }
    double beta(double x, double t) const { check_x(x, "beta"); check_t(t, "beta"); return reproduction_.value(x, t); }
    double eta(double y) const { check_x(y, "eta"); return measure_weight_.value(y); }
    double C(double t) const { check_t(t, "C"); return inflow_.value(t); }
    double u0(double x) const;

    double coupling_constant() const { return mortality_.coupling_constant(); }
    double initial_boundary() const { return b_; }
    double horizon() const { return T_; }
    double size_cap() const { return L_cap_; }

    const CoefficientField2D& growth_field() const { return growth_; }
    const MortalityField& mortality_field() const { return mortality_; }
    MortalityField& mortality_field() { return mortality_; }
    const CoefficientField2D& reproduction_field() const { return reproduction_; }
    const CoefficientField1D& measure_weight_field() const { return measure_weight_; }
    const CoefficientField1D& inflow_field() const { return inflow_; }
    const CoefficientField1D& initial_density_field() const { return initial_density_; }

private:
    void check_x(double x, const char* field) const;
    void check_t(double t, const char* field) const;

    CoefficientField2D growth_;       // V(x,t)
    MortalityField mortality_;        // m(x,t,P) and the constant M
    CoefficientField2D reproduction_; // beta(x,t)
    CoefficientField1D measure_weight_; // eta(y)
    CoefficientField1D inflow_;       // C(t)
    CoefficientField1D initial_density_; // u0 on [0,b]
    double b_, T_, L_cap_;
};

enum class ConditionStatus { pass, warn, fail };

const char* condition_status_name(ConditionStatus s);

struct ConditionReport {
    std::string name;
    ConditionStatus status = ConditionStatus::pass;
    double margin = 0.0; // signed worst-case slack; >= 0 means satisfied
    double at_x = std::numeric_limits<double>::quiet_NaN();
    double at_t = std::numeric_limits<double>::quiet_NaN();
    double at_p = std::numeric_limits<double>::quiet_NaN();
    std::string detail;
};

struct ValidationReport {
    std::vector<ConditionReport> conditions;
    bool overall = false;
    double p_bound = 0.0; // population box used for the mortality checks

    const ConditionReport* find(const std::string& name) const;
};

// Samples the model's standing admissibility assumptions on dense tensor grids
// (`samples` points per axis) and reports the worst margin of each. Needs a
// provisional free-boundary solve, so growth must at least be integrable.
ValidationReport validate_conditions(const ProblemSpec& spec, std::size_t samples = 256);

// Suggests a coupling constant: samples -m_P over the admissible population box
// and adds a 10% safety factor.
double estimate_coupling_constant(const ProblemSpec& spec, std::size_t samples = 64);

} // namespace sizewave

#endif
