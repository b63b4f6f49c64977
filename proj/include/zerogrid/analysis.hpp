#pragma once

#include "zerogrid/counting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zg {

struct FitPoint {
    long long n;
    std::uint64_t count;
};

/// Least-squares fit of ln(count) against ln(n). Zero counts are excluded
/// (recorded, not an error); at least two distinct n with positive counts
/// must remain. Slopes are invariant under count -> c*count for c > 0.
struct ExponentFit {
    std::vector<FitPoint> points;  // the points actually used
    std::size_t excluded_zero_counts = 0;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;

    std::string to_json() const;
};

ExponentFit fit_exponent(const std::vector<FitPoint>& points);

/// Families understood by the fit/suite layer.
enum class SuiteFamily {
    Main,           // (x-y)^2 + x - z on [1,n]^3
    DegenerateSum,  // x + y + z on [1,n]^2 x [-n,-1]
    ValtrSym,       // (x-y)^2 + s - t on [1,n]^4
    Graph,          // (x-y)^2 + x along the (k, k+l) edge set
    MVar,           // (x1+...+x_{m-1})^2 + x1 - xm on [-n,2n]^m
};

const char* suite_family_str(SuiteFamily f);
SuiteFamily suite_family_from_str(std::string_view name);  // Error{InvalidArgument}

Polynomial family_polynomial(SuiteFamily f, int m = 3);
GridSpec family_grid(SuiteFamily f, long long n, int m = 3);

/// One count at the family's preferred exact method (difference-structure
/// where available, solved-variable otherwise).
CountReport count_family(SuiteFamily f, long long n, int m = 3, int workers = 1,
                         std::uint64_t budget = kDefaultBudget);

/// |Z((x-y)^2+s-t) ∩ ([1,M]^2 x [1,M^2]^2)| via the solved counter.
CountReport count_valtr_asymmetric(long long M, int workers = 1,
                                   std::uint64_t budget = kDefaultBudget);

/// Powers of two in [min_n, max_n].
std::vector<long long> pow2_schedule(long long min_n, long long max_n);

ExponentFit fit_family(SuiteFamily f, long long min_n, long long max_n, int m = 3,
                       int workers = 1, std::uint64_t budget = kDefaultBudget);

struct SuiteConfig {
    long long max_n = 8192;
    std::vector<SuiteFamily> families{SuiteFamily::Main, SuiteFamily::DegenerateSum,
                                      SuiteFamily::ValtrSym, SuiteFamily::Graph};
    int workers = 1;
    int mvar_m = 3;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;   // echoed into the bundle; the pipeline is deterministic
    bool timings = false;
};

/// End-to-end verification bundle: per family, generate and verify the
/// construction, count over a geometric n-schedule, check the subset and
/// Schwartz-Zippel inequalities, run the derivative test and decompositions
/// where the family polynomial supports them, and fit the scaling exponent.
/// Component failures are collected, not thrown. pass requires every check
/// to pass; fits are descriptive and carry no thresholds here.
struct VerificationBundle {
    bool pass = true;
    std::string json;      // the full bundle document
    std::string plot_csv;  // family,n,count,fitted
};

VerificationBundle run_suite(const SuiteConfig& config);

}  // namespace zg
