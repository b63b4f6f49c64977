#include "zerogrid/analysis.hpp"

#include "zerogrid/degeneracy.hpp"
#include "zerogrid/error.hpp"
#include "zerogrid/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zg {

ExponentFit fit_exponent(const std::vector<FitPoint>& points) {
    ExponentFit fit;
    for (const auto& p : points) {
        if (p.n < 1) fail(ErrorCode::Domain, "fit requires n >= 1");
        if (p.count == 0)
            ++fit.excluded_zero_counts;  // tiny n can produce empty intersections
        else
            fit.points.push_back(p);
    }
    if (fit.points.size() < 2)
        fail(ErrorCode::Domain, "fit requires at least two points with positive counts");
    for (std::size_t i = 0; i < fit.points.size(); ++i)
        for (std::size_t j = i + 1; j < fit.points.size(); ++j)
            if (fit.points[i].n == fit.points[j].n)
                fail(ErrorCode::Domain, "fit requires distinct n values");

    // exact inputs reach floating point only here
    const std::size_t m = fit.points.size();
    std::vector<double> lx(m), ly(m);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < m; ++i) {
        lx[i] = std::log(static_cast<double>(fit.points[i].n));
        ly[i] = std::log(static_cast<double>(fit.points[i].count));
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double pred = fit.intercept + fit.slope * lx[i];
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

std::string ExponentFit::to_json() const {
    nlohmann::json j;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : points) pts.push_back({{"n", p.n}, {"count", p.count}});
    j["points"] = pts;
    j["excluded_zero_counts"] = excluded_zero_counts;
    j["slope"] = slope;
    j["intercept"] = intercept;
    j["r_squared"] = r_squared;
    return j.dump();
}

const char* suite_family_str(SuiteFamily f) {
    switch (f) {
        case SuiteFamily::Main: return "main";
        case SuiteFamily::DegenerateSum: return "degenerate-sum";
        case SuiteFamily::ValtrSym: return "valtr-sym";
        case SuiteFamily::Graph: return "graph";
        case SuiteFamily::MVar: return "mvar";
    }
    return "?";
}

SuiteFamily suite_family_from_str(std::string_view name) {
    if (name == "main") return SuiteFamily::Main;
    if (name == "degenerate-sum") return SuiteFamily::DegenerateSum;
    if (name == "valtr-sym") return SuiteFamily::ValtrSym;
    if (name == "graph") return SuiteFamily::Graph;
    if (name == "mvar") return SuiteFamily::MVar;
    fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

Polynomial family_polynomial(SuiteFamily f, int m) {
    switch (f) {
        case SuiteFamily::Main: return parse_polynomial("(x-y)^2 + x - z", {"x", "y", "z"});
        case SuiteFamily::DegenerateSum: return parse_polynomial("x + y + z", {"x", "y", "z"});
        case SuiteFamily::ValtrSym:
            return parse_polynomial("(x-y)^2 + s - t", {"x", "y", "s", "t"});
        case SuiteFamily::Graph: return parse_polynomial("(x-y)^2 + x", {"x", "y"});
        case SuiteFamily::MVar: {
            if (m < 3) fail(ErrorCode::InvalidArgument, "m must be >= 3");
            std::vector<std::string> vars;
            for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
            std::string expr = "(";
            for (int i = 1; i <= m - 1; ++i) {
                if (i > 1) expr += "+";
                expr += vars[static_cast<std::size_t>(i - 1)];
            }
            expr += ")^2 + x1 - x" + std::to_string(m);
            return parse_polynomial(expr, vars);
        }
    }
    fail(ErrorCode::Internal, "unreachable");
}

GridSpec family_grid(SuiteFamily f, long long n, int m) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
    GridSpec g;
    switch (f) {
        case SuiteFamily::Main:
            for (int i = 0; i < 3; ++i) g.axes.push_back(Axis::interval(1, n));
            return g;
        case SuiteFamily::DegenerateSum:
            g.axes.push_back(Axis::interval(1, n));
            g.axes.push_back(Axis::interval(1, n));
            g.axes.push_back(Axis::interval(-n, -1));
            return g;
        case SuiteFamily::ValtrSym:
            for (int i = 0; i < 4; ++i) g.axes.push_back(Axis::interval(1, n));
            return g;
        case SuiteFamily::Graph:
            for (int i = 0; i < 2; ++i) g.axes.push_back(Axis::interval(1, n));
            return g;
        case SuiteFamily::MVar:
            if (m < 3) fail(ErrorCode::InvalidArgument, "m must be >= 3");
            for (int i = 0; i < m; ++i) g.axes.push_back(Axis::interval(-n, 2 * n));
            return g;
    }
    fail(ErrorCode::Internal, "unreachable");
}

CountReport count_family(SuiteFamily f, long long n, int m, int workers, std::uint64_t budget) {
    CountReport report;
    switch (f) {
        case SuiteFamily::Main:
            report = count_difference_structure(DifferenceFamily::MainF, n, workers);
            break;
        case SuiteFamily::ValtrSym:
            report = count_difference_structure(DifferenceFamily::ValtrSymmetric, n, workers);
            break;
        case SuiteFamily::DegenerateSum:
            report = count_solved(family_polynomial(f, m), family_grid(f, n, m), "z", workers,
                                  budget);
            report.family = "degenerate-sum";
            report.n = n;
            break;
        case SuiteFamily::MVar:
            report = count_solved(family_polynomial(f, m), family_grid(f, n, m),
                                  "x" + std::to_string(m), workers, budget);
            report.family = "mvar";
            report.n = n;
            break;
        case SuiteFamily::Graph:
            fail(ErrorCode::InvalidArgument,
                 "the graph family counts edges and image values, not grid zeros; "
                 "use the image operation");
    }
    return report;
}

CountReport count_valtr_asymmetric(long long M, int workers, std::uint64_t budget) {
    const Construction c = gen_valtr_asymmetric(M);
    CountReport report = count_solved(c.claimed_polynomial, c.grid, "t", workers, budget);
    report.family = "valtr-asym";
    report.n = M;
    return report;
}

std::vector<long long> pow2_schedule(long long min_n, long long max_n) {
    if (min_n < 1 || max_n < min_n)
        fail(ErrorCode::InvalidArgument, "schedule requires 1 <= min_n <= max_n");
    std::vector<long long> out;
    long long p = 1;
    while (p < min_n && p < (1LL << 62)) p <<= 1;
    for (; p <= max_n; p <<= 1) out.push_back(p);
    return out;
}

ExponentFit fit_family(SuiteFamily f, long long min_n, long long max_n, int m, int workers,
                       std::uint64_t budget) {
    const auto schedule = pow2_schedule(min_n, max_n);
    std::vector<FitPoint> points;
    for (long long n : schedule) {
        if (f == SuiteFamily::Graph)
            points.push_back({n, graph_g_size(n)});
        else
            points.push_back({n, count_family(f, n, m, workers, budget).count});
    }
    return fit_exponent(points);
}

namespace {

std::string format_fitted(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct FamilyExpectations {
    bool run_derivative_test = false;
    DerivativeVerdict expected_verdict = DerivativeVerdict::NonzeroCertified;
    bool run_decompositions = false;
    bool expect_additive = false;
    bool expect_multiplicative = false;
    std::string skip_reason;  // when the derivative test does not apply
};

FamilyExpectations expectations_for(SuiteFamily f, int m) {
    FamilyExpectations e;
    switch (f) {
        case SuiteFamily::Main:
            e.run_derivative_test = e.run_decompositions = true;
            e.expected_verdict = DerivativeVerdict::NonzeroCertified;
            break;
        case SuiteFamily::DegenerateSum:
            e.run_derivative_test = e.run_decompositions = true;
            e.expected_verdict = DerivativeVerdict::IdenticallyZero;
            e.expect_additive = true;
            break;
        case SuiteFamily::Graph:
            e.run_derivative_test = e.run_decompositions = true;
            e.expected_verdict = DerivativeVerdict::NonzeroCertified;
            break;
        case SuiteFamily::MVar:
            if (m == 3) {
                e.run_derivative_test = e.run_decompositions = true;
                e.expected_verdict = DerivativeVerdict::NonzeroCertified;
            } else {
                e.skip_reason = "solved form has more than two variables";
            }
            break;
        case SuiteFamily::ValtrSym:
            e.skip_reason = "solved form has more than two variables";
            break;
    }
    return e;
}

}  // namespace

VerificationBundle run_suite(const SuiteConfig& config) {
    if (config.max_n < 4) fail(ErrorCode::InvalidArgument, "max_n must be >= 4");
    VerificationBundle bundle;
    nlohmann::json doc;
    doc["max_n"] = config.max_n;
    doc["workers"] = config.workers;
    doc["seed"] = config.seed;

    std::string plot = "family,n,count,fitted\n";
    nlohmann::json fam_reports = nlohmann::json::array();
    bool all_pass = true;

    for (SuiteFamily fam : config.families) {
        nlohmann::json fj;
        fj["family"] = suite_family_str(fam);
        const int m = config.mvar_m;
        const Polynomial poly = family_polynomial(fam, m);
        fj["polynomial"] = poly.to_string();
        if (fam == SuiteFamily::MVar) fj["m"] = m;
        bool fam_pass = true;

        // geometric schedule; the mvar solved counter enumerates a
        // (3n+1)^{m-1} box, so cap its schedule
        long long fam_max = config.max_n;
        if (fam == SuiteFamily::MVar) fam_max = std::min<long long>(fam_max, 2048);
        long long fam_min = std::max<long long>(4, fam_max / 16);
        const auto schedule = pow2_schedule(fam_min, fam_max);
        fj["schedule"] = schedule;

        // construction + membership verification (size-capped; the subset
        // inequality below still runs at every scheduled n via closed forms)
        if (fam != SuiteFamily::DegenerateSum) {
            long long verify_n = fam_max;
            if (fam == SuiteFamily::Main || fam == SuiteFamily::Graph)
                verify_n = std::min<long long>(verify_n, 4096);
            else if (fam == SuiteFamily::ValtrSym)
                verify_n = std::min<long long>(verify_n, 256);
            else if (fam == SuiteFamily::MVar)
                verify_n = std::min<long long>(verify_n, 64);
            Construction c;
            switch (fam) {
                case SuiteFamily::Main: c = gen_main_t(verify_n); break;
                case SuiteFamily::Graph: c = gen_graph_g(verify_n); break;
                case SuiteFamily::ValtrSym: c = gen_valtr_symmetric(verify_n); break;
                case SuiteFamily::MVar: c = gen_mvar_t(m, verify_n); break;
                default: break;
            }
            const VerifyReport vr = verify_construction(c);
            fj["construction"] = {{"name", construction_name_str(c.name)},
                                  {"verified_n", verify_n},
                                  {"size", c.size()},
                                  {"verify", nlohmann::json::parse(vr.to_json())}};
            fam_pass = fam_pass && vr.pass;
        } else {
            fj["construction"] = nullptr;
        }

        // counts + subset and Schwartz-Zippel inequalities + fit
        std::vector<FitPoint> points;
        nlohmann::json counts = nlohmann::json::array();
        bool subset_ok = true, sz_ok = true;
        for (long long n : schedule) {
            if (fam == SuiteFamily::Graph) {
                const std::uint64_t edges = graph_g_size(n);
                counts.push_back({{"n", n}, {"count", edges}});
                points.push_back({n, edges});
                // |E| >= n^{3/2}/8, exactly: (8|E|)^2 >= n^3
                const Integer lhs = Integer(8 * edges) * Integer(8 * edges);
                subset_ok = subset_ok && lhs >= Integer(n) * n * n;
                continue;
            }
            CountReport r = count_family(fam, n, m, config.workers, config.budget);
            counts.push_back(nlohmann::json::parse(r.to_json(config.timings)));
            points.push_back({n, r.count});
            sz_ok = sz_ok && sz_bound_check(r, *poly.degree());
            switch (fam) {
                case SuiteFamily::Main:
                    subset_ok = subset_ok && r.count >= main_t_size(n);
                    break;
                case SuiteFamily::ValtrSym:
                    subset_ok = subset_ok && r.count >= valtr_sym_size(n);
                    break;
                case SuiteFamily::MVar:
                    subset_ok = subset_ok && Integer(r.count) >= mvar_t_size(m, n);
                    break;
                default: break;  // no embedded construction
            }
        }
        fj["counts"] = counts;

        const ExponentFit fit = fit_exponent(points);
        fj["fit"] = nlohmann::json::parse(fit.to_json());
        for (const auto& p : fit.points) {
            const double fitted =
                std::exp(fit.intercept + fit.slope * std::log(static_cast<double>(p.n)));
            plot += std::string(suite_family_str(fam)) + "," + std::to_string(p.n) + "," +
                    std::to_string(p.count) + "," + format_fitted(fitted) + "\n";
        }

        // image bound for the graph family (distinct values stay <= n)
        bool image_ok = true;
        if (fam == SuiteFamily::Graph) {
            const long long n_img = std::min<long long>(config.max_n, 65536);
            const Construction g = gen_graph_g(n_img);
            const ImageReport img =
                image_along_construction(family_polynomial(SuiteFamily::Graph), g, config.budget);
            fj["image"] = nlohmann::json::parse(img.to_json(config.timings));
            image_ok = img.distinct_values <= static_cast<std::uint64_t>(n_img) &&
                       img.edge_count == graph_g_size(n_img) && img.value_min >= 1 &&
                       img.value_max <= Integer(n_img - 1);
        }

        // structural verdicts on the (solved) family polynomial
        const FamilyExpectations expect = expectations_for(fam, m);
        bool verdicts_ok = true;
        if (expect.run_derivative_test) {
            Polynomial f_solved = poly;
            if (fam == SuiteFamily::Main || fam == SuiteFamily::DegenerateSum)
                f_solved = solve_linear_variable(poly, "z");
            else if (fam == SuiteFamily::MVar)
                f_solved = solve_linear_variable(poly, "x" + std::to_string(m));
            fj["solved_form"] = f_solved.to_string();

            const DerivativeTestResult dt = derivative_test(f_solved);
            fj["derivative_test"] = nlohmann::json::parse(dt.to_json());
            verdicts_ok = verdicts_ok && dt.verdict == expect.expected_verdict;

            const auto add = decompose_additive(f_solved);
            const auto mul = decompose_multiplicative(f_solved);
            fj["decomposition_additive"] =
                nlohmann::json::parse(decomposition_to_json(DecompositionKind::Additive, add));
            fj["decomposition_multiplicative"] = nlohmann::json::parse(
                decomposition_to_json(DecompositionKind::Multiplicative, mul));
            verdicts_ok = verdicts_ok && add.has_value() == expect.expect_additive &&
                          mul.has_value() == expect.expect_multiplicative;
            // a found decomposition must agree with the derivative test
            if (add || mul)
                verdicts_ok =
                    verdicts_ok && dt.verdict == DerivativeVerdict::IdenticallyZero;
        } else {
            fj["derivative_test"] = nullptr;
            fj["derivative_test_skipped"] = expect.skip_reason;
        }

        fj["checks"] = {{"construction", fam_pass},
                        {"subset_bound", subset_ok},
                        {"sz_bound", sz_ok},
                        {"image_bound", image_ok},
                        {"expected_verdicts", verdicts_ok}};
        fam_pass = fam_pass && subset_ok && sz_ok && image_ok && verdicts_ok;
        fj["pass"] = fam_pass;
        all_pass = all_pass && fam_pass;
        fam_reports.push_back(std::move(fj));
    }

    doc["families"] = fam_reports;
    doc["pass"] = all_pass;
    bundle.pass = all_pass;
    bundle.json = doc.dump(2);
    bundle.plot_csv = std::move(plot);
    return bundle;
}

}  // namespace zg
