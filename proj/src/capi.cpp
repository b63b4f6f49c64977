#include "zerogrid.h"

#include "zerogrid/analysis.hpp"
#include "zerogrid/constructions.hpp"
#include "zerogrid/counting.hpp"
#include "zerogrid/degeneracy.hpp"
#include "zerogrid/error.hpp"
#include "zerogrid/parser.hpp"
#include "zerogrid/polynomial.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

struct zg_poly {
    zg::Polynomial value;
};

struct zg_construction {
    zg::Construction value;
};

namespace {

thread_local std::string g_last_error;

zg_status status_of(const zg::Error& e) {
    switch (e.code()) {
        case zg::ErrorCode::Parse: return ZG_ERR_PARSE;
        case zg::ErrorCode::Domain: return ZG_ERR_DOMAIN;
        case zg::ErrorCode::UnsupportedDegree: return ZG_ERR_UNSUPPORTED;
        case zg::ErrorCode::Budget: return ZG_ERR_BUDGET;
        case zg::ErrorCode::InvalidArgument: return ZG_ERR_INVALID_ARGUMENT;
        case zg::ErrorCode::Internal: return ZG_ERR_INTERNAL;
    }
    return ZG_ERR_INTERNAL;
}

/// Runs the body, translating exceptions into status codes + last_error.
template <typename Fn>
zg_status guarded(Fn&& body) {
    try {
        body();
        return ZG_OK;
    } catch (const zg::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ZG_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return ZG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) zg::fail(zg::ErrorCode::InvalidArgument, what);
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::uint64_t budget_or_default(unsigned long long budget) {
    return budget == 0 ? zg::kDefaultBudget : budget;
}

}  // namespace

extern "C" {

const char* zg_version(void) { return "1.0.0"; }

const char* zg_last_error(void) { return g_last_error.c_str(); }

void zg_string_free(char* s) { std::free(s); }

zg_status zg_poly_parse(const char* text, const char* variables_csv, zg_poly** out) {
    return guarded([&] {
        require(text && out, "text and out must not be NULL");
        std::vector<std::string> vars = variables_csv
                                            ? split_csv(variables_csv)
                                            : zg::scan_variables(text);
        *out = new zg_poly{zg::parse_polynomial(text, std::move(vars))};
    });
}

void zg_poly_free(zg_poly* p) { delete p; }

zg_status zg_poly_to_string(const zg_poly* p, char** out) {
    return guarded([&] {
        require(p && out, "p and out must not be NULL");
        *out = dup_string(p->value.to_string());
    });
}

zg_status zg_poly_variables(const zg_poly* p, char** out_csv) {
    return guarded([&] {
        require(p && out_csv, "p and out_csv must not be NULL");
        std::string csv;
        for (const auto& v : p->value.variables()) {
            if (!csv.empty()) csv += ",";
            csv += v;
        }
        *out_csv = dup_string(csv);
    });
}

zg_status zg_poly_degree(const zg_poly* p, int* out_degree) {
    return guarded([&] {
        require(p && out_degree, "p and out_degree must not be NULL");
        const auto d = p->value.degree();
        *out_degree = d ? *d : -1;
    });
}

zg_status zg_poly_arith(const zg_poly* a, const zg_poly* b, char op, zg_poly** out) {
    return guarded([&] {
        require(a && b && out, "a, b and out must not be NULL");
        switch (op) {
            case '+': *out = new zg_poly{a->value + b->value}; return;
            case '-': *out = new zg_poly{a->value - b->value}; return;
            case '*': *out = new zg_poly{a->value * b->value}; return;
            default: zg::fail(zg::ErrorCode::InvalidArgument, "op must be '+', '-' or '*'");
        }
    });
}

zg_status zg_poly_derivative(const zg_poly* p, const char* var, zg_poly** out) {
    return guarded([&] {
        require(p && var && out, "p, var and out must not be NULL");
        *out = new zg_poly{p->value.derivative(var)};
    });
}

zg_status zg_poly_eval(const zg_poly* p, const char* assignments, char** out_value) {
    return guarded([&] {
        require(p && assignments && out_value, "p, assignments and out_value must not be NULL");
        std::map<std::string, zg::Rational> point;
        for (const std::string& item : split_csv(assignments)) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                zg::fail(zg::ErrorCode::Parse, "assignment '" + item + "' is missing '='");
            point[item.substr(0, eq)] = zg::parse_rational(item.substr(eq + 1));
        }
        *out_value = dup_string(zg::rational_to_string(p->value.eval(point)));
    });
}

zg_status zg_solve_linear(const zg_poly* p, const char* var, zg_poly** out) {
    return guarded([&] {
        require(p && var && out, "p, var and out must not be NULL");
        *out = new zg_poly{zg::solve_linear_variable(p->value, var)};
    });
}

zg_status zg_derivative_test(const zg_poly* bivariate, char** out_json) {
    return guarded([&] {
        require(bivariate && out_json, "bivariate and out_json must not be NULL");
        *out_json = dup_string(zg::derivative_test(bivariate->value).to_json());
    });
}

zg_status zg_decompose(const zg_poly* bivariate, const char* kind, char** out_json) {
    return guarded([&] {
        require(bivariate && kind && out_json, "bivariate, kind and out_json must not be NULL");
        const std::string k = kind;
        if (k == "additive") {
            *out_json = dup_string(zg::decomposition_to_json(
                zg::DecompositionKind::Additive, zg::decompose_additive(bivariate->value)));
        } else if (k == "multiplicative") {
            *out_json = dup_string(
                zg::decomposition_to_json(zg::DecompositionKind::Multiplicative,
                                          zg::decompose_multiplicative(bivariate->value)));
        } else {
            zg::fail(zg::ErrorCode::InvalidArgument,
                     "kind must be 'additive' or 'multiplicative'");
        }
    });
}

zg_status zg_construct(const char* family, long long n, int m, long long M,
                       zg_construction** out) {
    return guarded([&] {
        require(family && out, "family and out must not be NULL");
        const std::string f = family;
        if (f == "main-t")
            *out = new zg_construction{zg::gen_main_t(n)};
        else if (f == "graph-g")
            *out = new zg_construction{zg::gen_graph_g(n)};
        else if (f == "valtr-sym")
            *out = new zg_construction{zg::gen_valtr_symmetric(n)};
        else if (f == "valtr-asym")
            *out = new zg_construction{zg::gen_valtr_asymmetric(M)};
        else if (f == "mvar")
            *out = new zg_construction{zg::gen_mvar_t(m, n)};
        else
            zg::fail(zg::ErrorCode::InvalidArgument, "unknown construction '" + f + "'");
    });
}

void zg_construction_free(zg_construction* c) { delete c; }

zg_status zg_construction_size(const zg_construction* c, unsigned long long* out) {
    return guarded([&] {
        require(c && out, "c and out must not be NULL");
        *out = c->value.size();
    });
}

zg_status zg_construction_csv(const zg_construction* c, char** out) {
    return guarded([&] {
        require(c && out, "c and out must not be NULL");
        if (c->value.tuples_absent)
            zg::fail(zg::ErrorCode::Domain,
                     "this construction carries no tuples; export its metadata instead");
        *out = dup_string(c->value.csv());
    });
}

zg_status zg_construction_meta_json(const zg_construction* c, char** out) {
    return guarded([&] {
        require(c && out, "c and out must not be NULL");
        *out = dup_string(c->value.meta_json());
    });
}

zg_status zg_construction_verify(const zg_construction* c, int* out_pass, char** out_json) {
    return guarded([&] {
        require(c && out_pass, "c and out_pass must not be NULL");
        const zg::VerifyReport report = zg::verify_construction(c->value);
        *out_pass = report.pass ? 1 : 0;
        if (out_json) *out_json = dup_string(report.to_json());
    });
}

zg_status zg_count(const zg_poly* p, const char* grid, const char* solve_var, int workers,
                   unsigned long long budget, int timings, char** out_json) {
    return guarded([&] {
        require(p && grid && out_json, "p, grid and out_json must not be NULL");
        const zg::GridSpec spec = zg::GridSpec::parse(grid);
        const zg::CountReport report =
            solve_var ? zg::count_solved(p->value, spec, solve_var, workers,
                                         budget_or_default(budget))
                      : zg::count_bruteforce(p->value, spec, workers,
                                             budget_or_default(budget));
        *out_json = dup_string(report.to_json(timings != 0));
    });
}

zg_status zg_count_family(const char* family, long long n, int m, long long M,
                          const char* method, int workers, unsigned long long budget,
                          int timings, char** out_json) {
    return guarded([&] {
        require(family && out_json, "family and out_json must not be NULL");
        const std::string f = family;
        const std::string meth = method ? method : "auto";
        const std::uint64_t b = budget_or_default(budget);
        zg::CountReport report;
        if (f == "valtr-asym") {
            require(meth == "auto" || meth == "solved",
                    "valtr-asym only supports the solved counter");
            report = zg::count_valtr_asymmetric(M, workers, b);
        } else {
            const zg::SuiteFamily fam = zg::suite_family_from_str(f);
            if (meth == "auto") {
                report = zg::count_family(fam, n, m, workers, b);
            } else {
                const zg::Polynomial poly = zg::family_polynomial(fam, m);
                const zg::GridSpec spec = zg::family_grid(fam, n, m);
                if (meth == "bruteforce") {
                    report = zg::count_bruteforce(poly, spec, workers, b);
                } else if (meth == "solved") {
                    const std::string last = poly.variables().back();
                    report = zg::count_solved(poly, spec, last, workers, b);
                } else if (meth == "difference") {
                    if (fam == zg::SuiteFamily::Main)
                        report = zg::count_difference_structure(zg::DifferenceFamily::MainF, n,
                                                                workers);
                    else if (fam == zg::SuiteFamily::ValtrSym)
                        report = zg::count_difference_structure(
                            zg::DifferenceFamily::ValtrSymmetric, n, workers);
                    else
                        zg::fail(zg::ErrorCode::InvalidArgument,
                                 "no difference-structure counter for family '" + f + "'");
                } else {
                    zg::fail(zg::ErrorCode::InvalidArgument,
                             "method must be auto, bruteforce, solved or difference");
                }
                report.family = f;
                report.n = n;
            }
        }
        *out_json = dup_string(report.to_json(timings != 0));
    });
}

zg_status zg_image(const zg_poly* bivariate, long long n, const char* graph,
                   unsigned long long budget, int timings, char** out_json) {
    return guarded([&] {
        require(bivariate && graph && out_json, "bivariate, graph and out_json must not be NULL");
        require(n >= 1, "n must be >= 1");
        const std::string g = graph;
        zg::ImageReport report;
        if (g == "main") {
            report = zg::image_along_construction(bivariate->value, zg::gen_graph_g(n),
                                                  budget_or_default(budget));
        } else if (g == "complete") {
            report = zg::image_along_edges(bivariate->value, zg::Axis::interval(1, n), nullptr,
                                           budget_or_default(budget));
            report.n = n;
        } else {
            zg::fail(zg::ErrorCode::InvalidArgument, "graph must be 'main' or 'complete'");
        }
        *out_json = dup_string(report.to_json(timings != 0));
    });
}

zg_status zg_fit_family(const char* family, int m, long long min_n, long long max_n,
                        int workers, char** out_json) {
    return guarded([&] {
        require(family && out_json, "family and out_json must not be NULL");
        const zg::ExponentFit fit =
            zg::fit_family(zg::suite_family_from_str(family), min_n, max_n, m, workers);
        *out_json = dup_string(fit.to_json());
    });
}

zg_status zg_suite(long long max_n, const char* families_csv, int mvar_m, int workers,
                   unsigned long long budget, unsigned long long seed, int timings,
                   int* out_pass, char** out_bundle_json, char** out_plot_csv) {
    return guarded([&] {
        require(out_pass && out_bundle_json, "out_pass and out_bundle_json must not be NULL");
        zg::SuiteConfig config;
        config.max_n = max_n;
        if (families_csv) {
            config.families.clear();
            for (const std::string& name : split_csv(families_csv))
                config.families.push_back(zg::suite_family_from_str(name));
        }
        config.mvar_m = mvar_m > 0 ? mvar_m : 3;
        config.workers = workers;
        config.budget = budget_or_default(budget);
        config.seed = seed;
        config.timings = timings != 0;
        const zg::VerificationBundle bundle = zg::run_suite(config);
        *out_pass = bundle.pass ? 1 : 0;
        *out_bundle_json = dup_string(bundle.json);
        if (out_plot_csv) *out_plot_csv = dup_string(bundle.plot_csv);
    });
}

}  // extern "C"
