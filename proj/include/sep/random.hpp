#ifndef SEP_RANDOM_HPP
#define SEP_RANDOM_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sep/cycles.hpp"
#include "sep/graph.hpp"
#include "sep/numeric.hpp"
#include "sep/triangulation.hpp"

namespace sep {

struct ExperimentConfig {
    long long beta_num = 1; // beta = beta_num / beta_den, p(n) = n^{-beta}
    long long beta_den = 2;
    std::vector<int> n_values;
    int trials = 1;
    int k = 1; // highest gamma index per sample
    std::uint64_t base_seed = 0;
    int threads = 1;
    FaceLimits limits;

    double beta() const { return static_cast<double>(beta_num) / static_cast<double>(beta_den); }
};

// key=value lines (beta, n, trials, k, seed, threads; n comma-separated) or a
// JSON object with the same keys.
ExperimentConfig parse_experiment_config(std::istream& in);

double er_probability(int n, double beta); // n^{-beta}

// Deterministic per-trial seed; aggregation order is (n, trial) regardless of
// scheduling.
std::uint64_t trial_seed(std::uint64_t base, int n, int trial);

// Each of the C(n,2) pairs independently with probability p, driven by
// mt19937_64 on 53-bit doubles; identical (n, p, seed) gives the identical
// graph on every platform.
Graph sample_er(int n, double p, std::uint64_t seed);

BigRat expected_edges(int n, const BigRat& p);
// C(n,l) (l-1)!/2 p^l, exact.
BigRat expected_cycles(int n, const BigRat& p, int ell);
// Same expectation for p = n^{-beta}; exact rational arithmetic whenever
// beta*ell is an integer, otherwise evaluated in double precision.
double expected_cycles_er(int n, double beta, int ell);

struct SampleRecord {
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    long long edges = 0;
    bool connected = false;
    std::vector<long long> cycle_counts; // X_3 .. X_{2k}
    std::vector<BigInt> nonfaces;        // n_0 .. n_{k-1} (dimension-indexed)
    std::vector<BigInt> faces;           // f_0 .. f_{k-1}
    std::vector<BigInt> gamma;           // gamma_0 .. gamma_k
    long long millis = 0;
};

// Refuses configurations whose expected short-cycle work exceeds the caps
// (names the offending n and ell), then samples every (n, trial) cell.
std::vector<SampleRecord> run_experiment(const ExperimentConfig& cfg);

// Columns: n,trial,seed,edges,connected,x3..x{2k},nf0..nf{k-1},f0..f{k-1},
// g0..g{k},millis. Big integers as decimal strings. The millis column is
// wall-clock and the only non-reproducible one; with_timing=false zeroes it.
void write_csv(const std::vector<SampleRecord>& records, int k, std::ostream& out, bool with_timing = true);

struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    std::vector<double> residuals; // one per distinct n, in ascending n order
};

// Least-squares slope of log(mean gamma_ell) against log n. Requires at
// least three distinct n with positive mean.
ExponentFit estimate_exponent(const std::vector<SampleRecord>& records, int ell);

} // namespace sep

#endif
