#ifndef SIZEWAVE_SOLVER_HPP
#define SIZEWAVE_SOLVER_HPP

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "sizewave/boundary.hpp"
#include "sizewave/field.hpp"
#include "sizewave/measures.hpp"
#include "sizewave/problem.hpp"

namespace sizewave {

// Constants of the closed-form upper seed delta * e^{sigma (t-t_a)} * e^{-gamma xi},
// chosen as the smallest values (with a 1.05 safety factor) satisfying
//   gamma >= 2 * max beta(h x, s) h(s) / V(0,s)
//   delta >= max( sup|u_init| e^gamma, 2 max C(s)/V(0,s) )
//   sigma >= max|V_x| + gamma max W + 2 delta M sup(eta) max h
// over the slab. T0 = min(slab length, ln2/sigma); the seed pair is certified
// as coupled upper/lower solutions only on [t_a, t_a + T0].
struct SeedParams {
    double delta = 0.0;
    double gamma = 0.0;
    double sigma = 0.0;
    double T0 = 0.0;
    bool certified = true; // slab length <= ln2/sigma

    // sampled maxima behind the choices, kept for reporting
    double max_beta_ratio = 0.0;  // beta h / V(0,.)
    double max_inflow_ratio = 0.0;// C / V(0,.)
    double max_vx = 0.0;
    double max_w = 0.0;
    double eta_sup = 0.0;
    double max_h = 0.0;
    double init_sup = 0.0;
};

SeedParams seed_bounds(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                       double t_a, double t_b,
                       double init_sup = std::numeric_limits<double>::quiet_NaN(),
                       std::size_t samples = 128);

// Paired lower/upper iterates on one slab grid, together with the boundary
// series and population series computed from them (these feed the next
// iteration as the lagged data).
struct IterationState {
    int k = 0;
    Field lower, upper;
    std::vector<double> initial_slice;   // density at the slab start, on the xi grid
    std::vector<double> lower_boundary;  // renewal series of `lower` on the t grid
    std::vector<double> upper_boundary;
    std::vector<double> lower_measure;   // population series of `lower`
    std::vector<double> upper_measure;
    double gap = 0.0;                    // sup |upper - lower| over grid nodes
};

struct SlabReport {
    double t_a = 0.0, t_b = 0.0;
    SeedParams seed;
    int iterations = 0;
    double final_gap = 0.0;
    std::vector<double> gap_history;     // gap at k = 0,1,...
    double worst_sandwich = 0.0;         // most negative monotonicity slack seen
    double wall_seconds = 0.0;
};

struct SolveReport {
    std::vector<SlabReport> slabs;
    int total_iterations = 0;
    double final_gap = 0.0;              // max over slabs
    double wall_seconds = 0.0;
    double mass_residual_linf = std::numeric_limits<double>::quiet_NaN();
    double mass_residual_l1 = std::numeric_limits<double>::quiet_NaN();
};

struct SolverOptions {
    double tol = 1e-8;
    int k_max = 64;
    std::size_t n_xi = 256;              // xi intervals per slab
    std::size_t n_t = 256;               // t intervals per slab
    double trace_tol = 1e-10;
    std::size_t threads = 0;             // 0 = hardware concurrency
    double boundary_dt_max = 0.0;        // 0 = T/512
    double boundary_rtol = 1e-8;
    // Seed overrides for uniqueness experiments: still-valid seeds stay valid.
    double seed_delta_scale = 1.0;
    double seed_sigma_scale = 1.0;
    bool compute_residual_summary = true;
    std::function<void(const IterationState&)> on_iteration;
};

// Seed state (k = 0): lower = 0, upper = the seed, series included.
IterationState make_seed_state(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                               double t_a, double t_b, std::vector<double> initial_slice,
                               const SeedParams& seed, std::size_t n_xi, std::size_t n_t);

// One coupled step of the monotone scheme: the new lower iterate decays with
// the mortality read at the previous *upper* population (plus the M terms) and
// is fed the previous lower boundary series; the upper iterate symmetrically.
// Rebuilds characteristic geometry each call; solve_slab caches it instead.
IterationState iterate(const IterationState& state, const ProblemSpec& spec,
                       const BoundaryTrajectory& traj, std::size_t threads = 0,
                       double trace_tol = 1e-10);

// Monotone iteration on one slab [t_a, t_b]. The slab is taken as given; the
// report's seed.certified flag records whether it fits under ln2/sigma.
std::pair<Field, SlabReport> solve_slab(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                                        double t_a, double t_b, const FieldSlice& u_init,
                                        const SolverOptions& options);

// Chains slabs of length min(remaining, ln2/sigma) across [0,T], restarting
// each from the previous terminal slice with freshly derived seeds.
std::pair<Field, SolveReport> solve_global(const ProblemSpec& spec, const BoundaryTrajectory& traj,
                                           const SolverOptions& options);
std::pair<Field, SolveReport> solve_global(const ProblemSpec& spec, const SolverOptions& options);

} // namespace sizewave

#endif
