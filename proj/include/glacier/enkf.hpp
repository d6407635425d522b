#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace glacier::enkf {

// Ensemble of state vectors; columns of `members` are the N members.
struct Ensemble {
    Eigen::MatrixXd members;  // d x N
    double t = 0.0;

    int dim() const { return static_cast<int>(members.rows()); }
    int size() const { return static_cast<int>(members.cols()); }
    Eigen::VectorXd mean() const { return members.rowwise().mean(); }
};

struct ObservationSet {
    Eigen::VectorXd y;    // m
    Eigen::MatrixXd R;    // m x m, symmetric PSD
    Eigen::MatrixXd Hop;  // m x d linear observation operator
    double t = 0.0;
};

struct FilterConfig {
    int ensemble_size = 10;
    std::uint64_t seed = 42;
    double inflation = 1.0;            // multiplicative covariance inflation, >= 1
    Eigen::MatrixXd model_noise_cov;   // d x d PSD; empty or zero => no model noise
};

struct AnalysisResult {
    Ensemble ensemble;            // post-analysis
    Eigen::VectorXd mean;         // analysis ensemble mean
    Eigen::MatrixXd forecast_cov; // sample covariance of the forecast ensemble
    Eigen::MatrixXd analysis_cov; // sample covariance of the analysis ensemble
    Eigen::MatrixXd gain;         // d x m
};

// Advances one state in place from t0 to t1.
using Propagator = std::function<void(Eigen::Ref<Eigen::VectorXd>, double t0, double t1)>;

// N draws ~ Normal(mean, diag(spread^2)) from per-member substreams of cfg.seed.
Ensemble init_ensemble(const Eigen::VectorXd& mean, const Eigen::VectorXd& spread,
                       const FilterConfig& cfg);

// Advances every member to t1. When `noise_cycle` is set and the config
// carries a nonzero model noise covariance, one additive Normal(0, Q) draw is
// applied per member, keyed by (cycle, member).
void forecast(Ensemble& ens, const Propagator& propagate, double t1, const FilterConfig& cfg,
              std::optional<int> noise_cycle = std::nullopt);

// Unbiased sample covariance about the ensemble mean; exactly symmetric.
Eigen::MatrixXd sample_covariance(const Ensemble& ens);

// K = C H' (H C H' + R)^-1 via a linear solve. A zero C short-circuits to a
// zero gain; a numerically singular innovation covariance throws
// SingularInnovation.
Eigen::MatrixXd kalman_gain(const Eigen::MatrixXd& C, const Eigen::MatrixXd& Hop,
                            const Eigen::MatrixXd& R);

// Perturbed-observation analysis update. Per member i the observation is
// perturbed with v(i) ~ Normal(0, R) keyed by (cycle, i), then
//   x_a(i) = x_f(i) + K (y + v(i) - H x_f(i))
// with K built from the inflated forecast sample covariance.
AnalysisResult analysis(const Ensemble& ens, const ObservationSet& obs, const FilterConfig& cfg,
                        int cycle = 0);

// Output grid for an assimilation run: strictly increasing times starting at
// the window start; obs_at[k] >= 0 marks an analysis at times[k] and indexes
// into the schedule that produced the plan.
struct StepPlan {
    std::vector<double> times;
    std::vector<int> obs_at;
};

// Grid of fixed dt steps from t0 to t1 that lands exactly on every
// observation time (and on t1) via shortened final steps per segment.
// Observation times must be strictly increasing and within [t0, t1].
StepPlan make_step_plan(double t0, double t1, double dt, const std::vector<double>& obs_times);

struct CycleRow {
    double t = 0.0;
    Eigen::VectorXd forecast_mean;  // pre-analysis ensemble mean
    Eigen::VectorXd analysis_mean;  // equals forecast_mean when no analysis happened
    Eigen::VectorXd cov_diag;       // current (post-analysis if any) covariance diagonal
    int obs_index = -1;
};

using ObsSource = std::function<ObservationSet(int obs_index, double t)>;

// Runs the filter over the plan: propagate all members tick by tick, perform
// an analysis wherever the plan marks one, and record mean and covariance at
// every output time (one row per plan time, the first row at the start state).
std::vector<CycleRow> assimilation_cycle(Ensemble ens, const Propagator& propagate,
                                         const StepPlan& plan, const ObsSource& obs_source,
                                         const FilterConfig& cfg);

}  // namespace glacier::enkf
