#ifndef SIZEWAVE_ERRORS_HPP
#define SIZEWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace sizewave {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation outside a coefficient's declared domain. Carries the field name.
struct DomainError : Error {
    DomainError(const std::string& field, double point, const std::string& what_arg)
        : Error(what_arg), field_name(field), where(point) {}
    std::string field_name;
    double where;
};

// Free boundary left [0, L_cap] before reaching the horizon.
struct CapExceededError : Error {
    CapExceededError(double t_exit, const std::string& msg) : Error(msg), exit_time(t_exit) {}
    double exit_time;
};

// Step-size controller drove the step below the representable floor.
struct StepUnderflowError : Error {
    using Error::Error;
};

// V(0,t) vanished (or went negative): the renewal boundary condition is meaningless.
struct DegenerateInflowError : Error {
    using Error::Error;
};

// crossing_time asked of a curve whose foot is on the initial line.
struct NotInflowError : Error {
    using Error::Error;
};

// Monotone iteration hit k_max with the gap still above tolerance.
struct NonConvergenceError : Error {
    NonConvergenceError(std::vector<double> gaps, const std::string& msg)
        : Error(msg), gap_history(std::move(gaps)) {}
    std::vector<double> gap_history;
};

struct GridError : Error {
    using Error::Error;
};

struct CflError : Error {
    using Error::Error;
};

// Config parsing/schema failure. `path` is the JSON pointer-ish location.
struct ConfigError : Error {
    ConfigError(const std::string& json_path, const std::string& msg)
        : Error(msg), path(json_path) {}
    std::string path;
};

} // namespace sizewave

#endif
