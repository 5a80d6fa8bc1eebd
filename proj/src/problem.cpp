#include "sizewave/problem.hpp"

#include <limits>

namespace sizewave {

ProblemSpec::ProblemSpec(CoefficientField2D growth, MortalityField mortality,
                         CoefficientField2D reproduction, CoefficientField1D measure_weight,
                         CoefficientField1D inflow, CoefficientField1D initial_density,
                         double b, double T, double L_cap)
    : growth_(std::move(growth)), mortality_(std::move(mortality)),
      reproduction_(std::move(reproduction)), measure_weight_(std::move(measure_weight)),
      inflow_(std::move(inflow)), initial_density_(std::move(initial_density)),
      b_(b), T_(T), L_cap_(L_cap) {
    if (!(b_ > 0.0) || !(b_ < L_cap_))
        throw GridError("ProblemSpec: need 0 < b < L_cap");
    if (!(T_ > 0.0)) throw GridError("ProblemSpec: need T > 0");
    if (mortality_.coupling_constant() < 0.0)
        throw GridError("ProblemSpec: coupling constant M must be >= 0");
    // Tabulated coefficients must cover the domains they will be asked on.
    if (!growth_.covers(0.0, L_cap_, 0.0, T_)) throw GridError("V: tabulation does not cover [0,L_cap]x[0,T]");
    if (!mortality_.base().covers(0.0, L_cap_, 0.0, T_)) throw GridError("m: tabulation does not cover [0,L_cap]x[0,T]");
    if (!mortality_.coupling_coeff().covers(0.0, L_cap_, 0.0, T_)) throw GridError("m coupling: tabulation does not cover [0,L_cap]x[0,T]");
    if (!reproduction_.covers(0.0, L_cap_, 0.0, T_)) throw GridError("beta: tabulation does not cover [0,L_cap]x[0,T]");
    if (!measure_weight_.covers(0.0, L_cap_)) throw GridError("eta: tabulation does not cover [0,L_cap]");
    if (!inflow_.covers(0.0, T_)) throw GridError("C: tabulation does not cover [0,T]");
    if (!initial_density_.covers(0.0, b_)) throw GridError("u0: tabulation does not cover [0,b]");
}

void ProblemSpec::check_x(double x, const char* field) const {
    const double slack = 1e-9 * (1.0 + L_cap_);
    if (x < -slack || x > L_cap_ + slack)
        throw DomainError(field, x, std::string(field) + ": size argument " + std::to_string(x) +
                                        " outside [0, L_cap=" + std::to_string(L_cap_) + "]");
}

void ProblemSpec::check_t(double t, const char* field) const {
    const double slack = 1e-9 * (1.0 + T_);
    if (t < -slack || t > T_ + slack)
        throw DomainError(field, t, std::string(field) + ": time argument " + std::to_string(t) +
                                        " outside [0, T=" + std::to_string(T_) + "]");
}

double ProblemSpec::u0(double x) const {
    const double slack = 1e-9 * (1.0 + b_);
    if (x < -slack || x > b_ + slack)
        throw DomainError("u0", x, "u0: size argument " + std::to_string(x) +
                                       " outside [0, b=" + std::to_string(b_) + "]");
    return initial_density_.value(x);
}

const char* condition_status_name(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::pass: return "pass";
        case ConditionStatus::warn: return "warn";
        case ConditionStatus::fail: return "fail";
    }
    return "?";
}

const ConditionReport* ValidationReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace sizewave
