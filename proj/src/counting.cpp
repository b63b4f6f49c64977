#include "zerogrid/counting.hpp"

#include "zerogrid/compiled_poly.hpp"
#include "zerogrid/degeneracy.hpp"
#include "zerogrid/error.hpp"
#include "zerogrid/parser.hpp"

#include <json.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <thread>
#include <unordered_set>

namespace zg {

const char* count_method_str(CountMethod m) {
    switch (m) {
        case CountMethod::BruteForce: return "brute_force";
        case CountMethod::SolvedVariable: return "solved";
        case CountMethod::DifferenceStructure: return "difference";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int clamp_workers(int workers) {
    if (workers < 1) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
    return std::min(workers, 256);
}

void check_budget(const Integer& evaluations, std::uint64_t budget) {
    if (evaluations > Integer(budget))
        fail(ErrorCode::Budget, "enumeration would need " + evaluations.str() +
                                    " evaluations, over the budget of " + std::to_string(budget));
}

/// Deterministic fan-out: slice [0, size) into `workers` contiguous chunks,
/// run, and reduce partial counts in worker order.
std::uint64_t parallel_sum(std::uint64_t size, int workers,
                           const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& chunk) {
    if (size == 0) return 0;
    const int k = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), size));
    if (k <= 1) return chunk(0, size);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(k), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(k));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(k));
    for (int w = 0; w < k; ++w) {
        const std::uint64_t begin = size * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(k);
        const std::uint64_t end = size * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(k);
        threads.emplace_back([&, w, begin, end] {
            try {
                partial[static_cast<std::size_t>(w)] = chunk(begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

/// Zeros of cp over the sub-grid where axis 0 runs over [outer_begin,
/// outer_end) and the remaining axes are full. The last axis is swept with a
/// per-prefix univariate collapse; 64-bit overflow escalates the affected
/// prefix row to arbitrary precision.
std::uint64_t count_zeros_slice(const CompiledPoly& cp, const GridSpec& grid,
                                std::uint64_t outer_begin, std::uint64_t outer_end) {
    const std::size_t arity = grid.arity();
    std::uint64_t zeros = 0;

    if (arity == 1) {
        const Axis& only = grid.axes[0];
        for (std::uint64_t i = outer_begin; i < outer_end; ++i) {
            const std::int64_t v = only.at(i);
            if (cp.is_zero_at(&v)) ++zeros;
        }
        return zeros;
    }

    const Axis& last = grid.axes[arity - 1];
    const std::uint64_t last_size = last.size();
    std::vector<std::uint64_t> idx(arity - 1, 0);
    idx[0] = outer_begin;
    std::vector<std::int64_t> prefix(arity - 1);
    for (std::size_t i = 0; i < arity - 1; ++i) {
        if (grid.axes[i].size() == 0) return 0;
        prefix[i] = grid.axes[i].at(idx[i]);
    }
    if (last_size == 0 || outer_begin >= outer_end) return 0;

    std::vector<std::int64_t> coeffs;
    std::vector<Integer> coeffs_big;
    for (;;) {
        bool fast = cp.collapse_last64(prefix.data(), coeffs);
        bool row_big = false;
        if (!fast) {
            cp.collapse_last_big(prefix.data(), coeffs_big);
            row_big = true;
        }
        for (std::uint64_t j = 0; j < last_size; ++j) {
            const std::int64_t v = last.at(j);
            if (!row_big) {
                std::int64_t acc = 0;
                bool ok = true;
                for (std::size_t d = coeffs.size(); d-- > 0;) {
                    if (__builtin_mul_overflow(acc, v, &acc) ||
                        __builtin_add_overflow(acc, coeffs[d], &acc)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    if (acc == 0) ++zeros;
                    continue;
                }
                // escalate the rest of this row
                cp.collapse_last_big(prefix.data(), coeffs_big);
                row_big = true;
            }
            Integer acc = 0;
            for (std::size_t d = coeffs_big.size(); d-- > 0;) {
                acc *= v;
                acc += coeffs_big[d];
            }
            if (acc == 0) ++zeros;
        }

        // odometer step over the prefix axes, axis 0 bounded by the slice
        std::size_t pos = arity - 2;
        for (;;) {
            ++idx[pos];
            const std::uint64_t limit = pos == 0 ? outer_end : grid.axes[pos].size();
            if (idx[pos] < limit) {
                prefix[pos] = grid.axes[pos].at(idx[pos]);
                break;
            }
            if (pos == 0) return zeros;
            idx[pos] = 0;
            prefix[pos] = grid.axes[pos].at(0);
            --pos;
        }
    }
}

}  // namespace

CountReport count_bruteforce(const Polynomial& F, const GridSpec& grid, int workers,
                             std::uint64_t budget) {
    const auto start = Clock::now();
    workers = clamp_workers(workers);
    if (grid.arity() != F.variables().size())
        fail(ErrorCode::Domain, "grid arity does not match the polynomial's variable count");

    CountReport report;
    report.polynomial = F;
    report.grid = grid;
    report.method = CountMethod::BruteForce;

    const Integer cells = grid.cell_count();
    if (cells == 0) {
        report.millis = elapsed_ms(start);
        return report;  // an empty axis: zero cells, zero count
    }
    check_budget(cells, budget);

    const CompiledPoly cp(F);
    report.count = parallel_sum(grid.axes[0].size(), workers,
                                [&](std::uint64_t b, std::uint64_t e) {
                                    return count_zeros_slice(cp, grid, b, e);
                                });
    report.millis = elapsed_ms(start);
    return report;
}

CountReport count_solved(const Polynomial& F, const GridSpec& grid, std::string_view solve_var,
                         int workers, std::uint64_t budget) {
    const auto start = Clock::now();
    workers = clamp_workers(workers);
    if (grid.arity() != F.variables().size())
        fail(ErrorCode::Domain, "grid arity does not match the polynomial's variable count");

    // validates linearity and the constant-coefficient requirement
    const Polynomial solved = solve_linear_variable(F, solve_var);
    const std::size_t solve_idx = F.var_index(solve_var);

    CountReport report;
    report.polynomial = F;
    report.grid = grid;
    report.method = CountMethod::SolvedVariable;

    GridSpec rest;
    for (std::size_t i = 0; i < grid.arity(); ++i)
        if (i != solve_idx) rest.axes.push_back(grid.axes[i]);
    const Axis& target = grid.axes[solve_idx];

    const Integer evals = rest.cell_count();
    if (evals == 0 || target.size() == 0) {
        report.millis = elapsed_ms(start);
        return report;
    }
    check_budget(evals, budget);

    // CompiledPoly evaluates scale * solved; the forced value is a member of
    // the target axis iff scale divides the scaled value exactly.
    const CompiledPoly cp(solved);
    Integer lcm = 1;
    for (const auto& [m, c] : solved.terms())
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    const bool scale_is_one = lcm == 1;
    const std::int64_t scale64 = fits_int64(lcm) ? lcm.convert_to<std::int64_t>() : 0;

    auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        std::uint64_t hits = 0;
        const std::size_t rarity = rest.arity();
        std::vector<std::uint64_t> idx(rarity, 0);
        idx[0] = begin;
        std::vector<std::int64_t> point(rarity);
        for (std::size_t i = 0; i < rarity; ++i) point[i] = rest.axes[i].at(idx[i]);
        for (;;) {
            std::int64_t v64;
            if (cp.eval64(point.data(), v64)) {
                if (scale_is_one) {
                    if (target.contains(v64)) ++hits;
                } else if (scale64 != 0 && v64 % scale64 == 0) {
                    if (target.contains(v64 / scale64)) ++hits;
                } else if (scale64 == 0) {
                    // scale itself exceeds 64 bits; forced value cannot be
                    // an int64 axis member unless it is zero
                    if (v64 == 0 && target.contains(0)) ++hits;
                }
            } else {
                const Integer big = cp.eval_big(point.data());
                if (big % lcm == 0) {
                    const Integer forced = big / lcm;
                    if (fits_int64(forced) && target.contains(forced.convert_to<std::int64_t>()))
                        ++hits;
                }
            }
            std::size_t pos = rarity - 1;
            for (;;) {
                ++idx[pos];
                const std::uint64_t limit = pos == 0 ? end : rest.axes[pos].size();
                if (idx[pos] < limit) {
                    point[pos] = rest.axes[pos].at(idx[pos]);
                    break;
                }
                if (pos == 0) return hits;
                idx[pos] = 0;
                point[pos] = rest.axes[pos].at(0);
                --pos;
            }
        }
    };

    report.count = parallel_sum(rest.axes[0].size(), workers, chunk);
    report.millis = elapsed_ms(start);
    return report;
}

CountReport count_difference_structure(DifferenceFamily family, long long n, int workers) {
    const auto start = Clock::now();
    workers = clamp_workers(workers);
    if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");

    CountReport report;
    report.method = CountMethod::DifferenceStructure;
    report.n = n;

    if (family == DifferenceFamily::MainF) {
        if (n > (1LL << 40))
            fail(ErrorCode::Budget, "n too large for an exact 64-bit count");
        report.family = "main";
        report.polynomial = parse_polynomial("(x-y)^2 + x - z", {"x", "y", "z"});
        GridSpec g;
        for (int i = 0; i < 3; ++i) g.axes.push_back(Axis::interval(1, n));
        report.grid = g;
        // for each x, count y with 1 <= (x-y)^2 + x <= n; the lower bound is
        // automatic, so y ranges over [x-s, x+s] ∩ [1,n] with s = isqrt(n-x)
        report.count = parallel_sum(
            static_cast<std::uint64_t>(n), workers,
            [&](std::uint64_t b, std::uint64_t e) -> std::uint64_t {
                std::uint64_t acc = 0;
                for (std::uint64_t i = b; i < e; ++i) {
                    const long long x = 1 + static_cast<long long>(i);
                    const long long s = isqrt_floor(n - x);
                    const long long lo = std::max<long long>(1, x - s);
                    const long long hi = std::min<long long>(n, x + s);
                    acc += static_cast<std::uint64_t>(hi - lo + 1);
                }
                return acc;
            });
    } else {
        if (n > (1LL << 24))
            fail(ErrorCode::Budget, "n too large for an exact 64-bit count");
        report.family = "valtr-sym";
        report.polynomial = parse_polynomial("(x-y)^2 + s - t", {"x", "y", "s", "t"});
        GridSpec g;
        for (int i = 0; i < 4; ++i) g.axes.push_back(Axis::interval(1, n));
        report.grid = g;
        // sum over d = x-y: (n - |d|) pairs, and s with s + d^2 in [1,n]
        report.count = parallel_sum(
            static_cast<std::uint64_t>(2 * n - 1), workers,
            [&](std::uint64_t b, std::uint64_t e) -> std::uint64_t {
                std::uint64_t acc = 0;
                for (std::uint64_t i = b; i < e; ++i) {
                    const long long d = static_cast<long long>(i) - (n - 1);
                    const long long d2 = d * d;
                    if (d2 < n)
                        acc += static_cast<std::uint64_t>(n - (d < 0 ? -d : d)) *
                               static_cast<std::uint64_t>(n - d2);
                }
                return acc;
            });
    }
    report.millis = elapsed_ms(start);
    return report;
}

ImageReport image_along_edges(const Polynomial& f, const Axis& A,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>* edges,
                              std::uint64_t budget) {
    const auto start = Clock::now();
    if (f.variables().size() != 2)
        fail(ErrorCode::Domain, "image_along_edges requires a bivariate polynomial");

    ImageReport report;
    report.polynomial = f;
    report.graph = edges ? "custom" : "complete";

    const CompiledPoly cp(f);
    std::unordered_set<std::int64_t> small;
    std::set<Integer> large;  // values outside int64, disjoint from `small` by range
    bool any64 = false, any_big = false;
    std::int64_t min64 = 0, max64 = 0;
    Integer min_big, max_big;

    auto insert_value = [&](std::int64_t a, std::int64_t b) {
        const std::int64_t pt[2] = {a, b};
        std::int64_t v;
        if (cp.eval64(pt, v)) {
            if (!any64 || v < min64) min64 = v;
            if (!any64 || v > max64) max64 = v;
            any64 = true;
            small.insert(v);
            return;
        }
        Integer big = cp.eval_big(pt);
        if (!any_big || big < min_big) min_big = big;
        if (!any_big || big > max_big) max_big = big;
        any_big = true;
        if (fits_int64(big))
            small.insert(big.convert_to<std::int64_t>());
        else
            large.insert(std::move(big));
    };

    if (edges) {
        check_budget(Integer(edges->size()), budget);
        for (const auto& [a, b] : *edges) {
            if (!A.contains(a) || !A.contains(b))
                fail(ErrorCode::Domain, "edge endpoint (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") lies outside the axis set");
            insert_value(a, b);
        }
        report.edge_count = edges->size();
    } else {
        const Integer pairs = Integer(A.size()) * A.size();
        check_budget(pairs, budget);
        const std::uint64_t sz = A.size();
        for (std::uint64_t i = 0; i < sz; ++i)
            for (std::uint64_t j = 0; j < sz; ++j) insert_value(A.at(i), A.at(j));
        report.edge_count = sz * sz;
    }
    report.distinct_values = small.size() + large.size();
    if (any64 && any_big) {
        report.value_min = std::min(Integer(min64), min_big);
        report.value_max = std::max(Integer(max64), max_big);
    } else if (any64) {
        report.value_min = min64;
        report.value_max = max64;
    } else if (any_big) {
        report.value_min = min_big;
        report.value_max = max_big;
    }
    report.millis = elapsed_ms(start);
    return report;
}

ImageReport image_along_construction(const Polynomial& f, const Construction& graph,
                                     std::uint64_t budget) {
    if (graph.arity != 2)
        fail(ErrorCode::InvalidArgument, "image requires an arity-2 (edge set) construction");
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    edges.reserve(graph.size());
    for (std::size_t r = 0; r < graph.size(); ++r)
        edges.emplace_back(graph.tuple(r)[0], graph.tuple(r)[1]);
    ImageReport report = image_along_edges(f, graph.grid.axes[0], &edges, budget);
    report.graph = "main";
    report.n = graph.n;
    return report;
}

bool sz_bound_check(const CountReport& report, int degree) {
    if (degree < 1) fail(ErrorCode::InvalidArgument, "degree must be >= 1");
    const std::size_t arity = report.grid.arity();
    Integer bound = degree;
    for (std::size_t i = 0; i + 1 < arity; ++i) bound *= Integer(report.grid.max_axis_size());
    return Integer(report.count) <= bound;
}

std::string CountReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["polynomial"] = polynomial.to_string();
    j["grid"] = grid.to_string();
    j["count"] = count;
    j["method"] = count_method_str(method);
    if (!family.empty()) j["family"] = family;
    if (n != 0) j["n"] = n;
    j["millis"] = include_timing ? millis : 0;
    return j.dump();
}

std::string CountReport::csv_row(bool include_timing) const {
    std::string row = family.empty() ? "custom" : family;
    row += "," + std::to_string(n != 0 ? n : static_cast<long long>(grid.max_axis_size()));
    row += "," + std::to_string(count);
    row += ",";
    row += count_method_str(method);
    row += "," + std::to_string(include_timing ? millis : 0);
    return row;
}

std::string ImageReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["polynomial"] = polynomial.to_string();
    j["graph"] = graph;
    if (n != 0) j["n"] = n;
    j["edge_count"] = edge_count;
    j["distinct_values"] = distinct_values;
    if (edge_count > 0) {
        j["value_min"] = value_min.str();
        j["value_max"] = value_max.str();
    }
    j["millis"] = include_timing ? millis : 0;
    return j.dump();
}

}  // namespace zg
