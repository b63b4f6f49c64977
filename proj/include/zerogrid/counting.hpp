#pragma once

#include "zerogrid/constructions.hpp"
#include "zerogrid/grid.hpp"
#include "zerogrid/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zg {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

enum class CountMethod { BruteForce, SolvedVariable, DifferenceStructure };

const char* count_method_str(CountMethod m);

/// Exact |Z(F) ∩ grid| result. For a fixed polynomial and grid the count is
/// identical across methods and across any worker partitioning. Timing is
/// carried separately from the payload so that serialized reports stay
/// byte-reproducible unless timings are explicitly requested.
struct CountReport {
    Polynomial polynomial;
    GridSpec grid;
    std::uint64_t count = 0;
    CountMethod method = CountMethod::BruteForce;
    std::int64_t millis = 0;
    std::string family;  // empty for ad-hoc polynomial/grid counts
    long long n = 0;     // side parameter when family-based

    std::string to_json(bool include_timing = false) const;
    std::string csv_row(bool include_timing = false) const;
};

inline constexpr const char* kCountCsvHeader = "family,n,count,method,millis";

/// Full enumeration of the grid; the reference oracle for every other
/// counter. Error{Budget} when the grid has more cells than the budget.
CountReport count_bruteforce(const Polynomial& F, const GridSpec& grid,
                             int workers = 1, std::uint64_t budget = kDefaultBudget);

/// Enumerates all axes but solve_var, computes the forced value exactly and
/// tests membership. Requires F of degree exactly 1 in solve_var with a
/// constant nonzero coefficient.
CountReport count_solved(const Polynomial& F, const GridSpec& grid,
                         std::string_view solve_var, int workers = 1,
                         std::uint64_t budget = kDefaultBudget);

enum class DifferenceFamily { MainF, ValtrSymmetric };

/// O(n) counters for the two built-in families whose polynomials depend on
/// x - y:
///   MainF:          |Z((x-y)^2+x-z) ∩ [1,n]^3|
///   ValtrSymmetric: |Z((x-y)^2+s-t) ∩ [1,n]^4|
CountReport count_difference_structure(DifferenceFamily family, long long n,
                                       int workers = 1);

/// Distinct values of a bivariate f along an edge set (or all of A x A).
/// value_min/value_max are the exact extreme values taken (after clearing f's
/// denominators, which rescales all values by one positive constant).
struct ImageReport {
    Polynomial polynomial;
    std::string graph;  // "main" | "complete" | "custom"
    long long n = 0;
    std::uint64_t edge_count = 0;
    std::uint64_t distinct_values = 0;
    Integer value_min = 0;
    Integer value_max = 0;
    std::int64_t millis = 0;

    std::string to_json(bool include_timing = false) const;
};

/// edges == nullptr means the complete product A x A. Every edge endpoint
/// must lie in A. Counting is exact; values never pass through floating
/// point.
ImageReport image_along_edges(const Polynomial& f, const Axis& A,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>* edges,
                              std::uint64_t budget = kDefaultBudget);

/// Convenience: image along a GraphG construction's edge set over [1,n].
ImageReport image_along_construction(const Polynomial& f, const Construction& graph,
                                     std::uint64_t budget = kDefaultBudget);

/// count <= d * n^{m-1} with n the largest axis size and m the arity.
bool sz_bound_check(const CountReport& report, int degree);

}  // namespace zg
