#include "zerogrid/constructions.hpp"

#include "zerogrid/compiled_poly.hpp"
#include "zerogrid/error.hpp"
#include "zerogrid/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <unordered_set>

namespace zg {

const char* construction_name_str(ConstructionName name) {
    switch (name) {
        case ConstructionName::MainT: return "main-t";
        case ConstructionName::GraphG: return "graph-g";
        case ConstructionName::ValtrAsymmetric: return "valtr-asym";
        case ConstructionName::ValtrSymmetric: return "valtr-sym";
        case ConstructionName::MVarT: return "mvar-t";
    }
    return "?";
}

namespace {

void require_positive(long long n, const char* what) {
    if (n < 1) fail(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
}

GridSpec cube(std::int64_t lo, std::int64_t hi, std::size_t m) {
    GridSpec g;
    for (std::size_t i = 0; i < m; ++i) g.axes.push_back(Axis::interval(lo, hi));
    return g;
}

}  // namespace

std::uint64_t main_t_size(long long n) {
    const std::uint64_t ks = static_cast<std::uint64_t>(n / 2);
    const std::uint64_t ls = static_cast<std::uint64_t>(isqrt_floor(n) / 2);
    return ks * (ls + 1);
}

std::uint64_t graph_g_size(long long n) { return main_t_size(n); }

std::uint64_t valtr_sym_size(long long n) {
    const std::uint64_t ks = static_cast<std::uint64_t>(n / 2);
    const std::uint64_t ls = static_cast<std::uint64_t>(isqrt_floor(n) / 2);
    return ks * ks * ls;
}

Integer mvar_t_size(int m, long long n) {
    if (m < 3) fail(ErrorCode::InvalidArgument, "m must be >= 3");
    Integer size = isqrt_floor(n) + 1;
    for (int i = 0; i < m - 2; ++i) size *= Integer(n + 1);
    return size;
}

Construction gen_main_t(long long n) {
    require_positive(n, "n");
    Construction c;
    c.name = ConstructionName::MainT;
    c.n = n;
    c.arity = 3;
    c.coords = {"x", "y", "z"};
    c.claimed_polynomial = parse_polynomial("(x-y)^2 + x - z", {"x", "y", "z"});
    c.zero_set = true;
    c.grid = cube(1, n, 3);
    const long long ks = n / 2;
    const long long ls = isqrt_floor(n) / 2;
    c.tuples.reserve(static_cast<std::size_t>(main_t_size(n)) * 3);
    for (long long k = 1; k <= ks; ++k)
        for (long long l = 0; l <= ls; ++l) {
            c.tuples.push_back(k);
            c.tuples.push_back(k + l);
            c.tuples.push_back(k + l * l);
        }
    return c;
}

Construction gen_graph_g(long long n) {
    require_positive(n, "n");
    Construction c;
    c.name = ConstructionName::GraphG;
    c.n = n;
    c.arity = 2;
    c.coords = {"x", "y"};
    c.claimed_polynomial = parse_polynomial("(x-y)^2 + x", {"x", "y"});
    c.zero_set = false;  // an edge set; the polynomial is applied along it
    c.grid = cube(1, n, 2);
    const long long ks = n / 2;
    const long long ls = isqrt_floor(n) / 2;
    c.tuples.reserve(static_cast<std::size_t>(graph_g_size(n)) * 2);
    for (long long k = 1; k <= ks; ++k)
        for (long long l = 0; l <= ls; ++l) {
            c.tuples.push_back(k);
            c.tuples.push_back(k + l);
        }
    return c;
}

Construction gen_valtr_symmetric(long long n) {
    require_positive(n, "n");
    Construction c;
    c.name = ConstructionName::ValtrSymmetric;
    c.n = n;
    c.arity = 4;
    c.coords = {"x", "y", "s", "t"};
    c.claimed_polynomial = parse_polynomial("(x-y)^2 + s - t", {"x", "y", "s", "t"});
    c.zero_set = true;
    c.grid = cube(1, n, 4);
    const long long ks = n / 2;
    const long long ls = isqrt_floor(n) / 2;
    c.tuples.reserve(static_cast<std::size_t>(valtr_sym_size(n)) * 4);
    for (long long k = 1; k <= ks; ++k)
        for (long long mm = 1; mm <= ks; ++mm)
            for (long long l = 1; l <= ls; ++l) {
                c.tuples.push_back(k);
                c.tuples.push_back(k + l);
                c.tuples.push_back(mm);
                c.tuples.push_back(mm + l * l);
            }
    return c;
}

Construction gen_valtr_asymmetric(long long M) {
    require_positive(M, "M");
    Construction c;
    c.name = ConstructionName::ValtrAsymmetric;
    c.cap_m = M;
    c.arity = 4;
    c.coords = {"x", "y", "s", "t"};
    c.claimed_polynomial = parse_polynomial("(x-y)^2 + s - t", {"x", "y", "s", "t"});
    c.zero_set = true;
    c.tuples_absent = true;  // the grid count itself is the object
    GridSpec g;
    g.axes.push_back(Axis::interval(1, M));
    g.axes.push_back(Axis::interval(1, M));
    g.axes.push_back(Axis::interval(1, M * M));
    g.axes.push_back(Axis::interval(1, M * M));
    c.grid = std::move(g);
    return c;
}

Construction gen_mvar_t(int m, long long n) {
    if (m < 3) fail(ErrorCode::InvalidArgument, "m must be >= 3");
    require_positive(n, "n");
    Construction c;
    c.name = ConstructionName::MVarT;
    c.n = n;
    c.m = m;
    c.arity = static_cast<std::size_t>(m);
    for (int i = 1; i <= m; ++i) c.coords.push_back("x" + std::to_string(i));
    std::string expr = "(";
    for (int i = 1; i <= m - 1; ++i) {
        if (i > 1) expr += "+";
        expr += "x" + std::to_string(i);
    }
    expr += ")^2 + x1 - x" + std::to_string(m);
    c.claimed_polynomial = parse_polynomial(expr, c.coords);
    c.zero_set = true;
    c.grid = cube(-n, 2 * n, static_cast<std::size_t>(m));

    const Integer total = mvar_t_size(m, n);
    if (total * m > Integer(200'000'000))
        fail(ErrorCode::Budget, "mvar construction too large to materialize");
    c.tuples.reserve((total * m).convert_to<std::size_t>());

    // odometer over (k_1, ..., k_{m-2}), each 0..n, k_1-major; l innermost
    const int kcount = m - 2;
    std::vector<long long> k(static_cast<std::size_t>(kcount), 0);
    const long long lmax = isqrt_floor(n);
    for (;;) {
        for (long long l = 0; l <= lmax; ++l) {
            c.tuples.push_back(k[0]);
            for (int i = 1; i < kcount; ++i)
                c.tuples.push_back(k[static_cast<std::size_t>(i)] -
                                   k[static_cast<std::size_t>(i - 1)]);
            c.tuples.push_back(l - k[static_cast<std::size_t>(kcount - 1)]);
            c.tuples.push_back(k[0] + l * l);
        }
        int pos = kcount - 1;
        while (pos >= 0 && k[static_cast<std::size_t>(pos)] == n) {
            k[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++k[static_cast<std::size_t>(pos)];
    }
    return c;
}

std::string Construction::csv() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += coords[i];
    }
    out += "\n";
    const std::size_t rows = size();
    for (std::size_t r = 0; r < rows; ++r) {
        const std::int64_t* row = tuple(r);
        for (std::size_t i = 0; i < arity; ++i) {
            if (i) out += ",";
            out += std::to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string Construction::meta_json() const {
    nlohmann::json j;
    j["name"] = construction_name_str(name);
    nlohmann::json params;
    if (name == ConstructionName::ValtrAsymmetric)
        params["M"] = cap_m;
    else
        params["n"] = n;
    if (name == ConstructionName::MVarT) params["m"] = m;
    j["params"] = params;
    if (tuples_absent)
        j["size"] = nullptr;
    else
        j["size"] = size();
    j["polynomial"] = claimed_polynomial.to_string();
    j["grid"] = grid.to_string();
    return j.dump();
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    j["tuples_checked"] = tuples_checked;
    if (!failure.empty()) j["failure"] = failure;
    return j.dump();
}

VerifyReport verify_construction(const Construction& c, const GridSpec& grid) {
    VerifyReport report;
    if (c.tuples_absent) return report;  // nothing claimed, nothing to check
    if (grid.arity() != c.arity) {
        report.pass = false;
        report.failure = "grid arity does not match tuple arity";
        return report;
    }

    struct RowHash {
        const Construction* c;
        std::size_t operator()(std::size_t r) const {
            const std::int64_t* row = c->tuple(r);
            std::size_t h = 1469598103934665603ull;
            for (std::size_t i = 0; i < c->arity; ++i) {
                h ^= static_cast<std::size_t>(row[i]);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    struct RowEq {
        const Construction* c;
        bool operator()(std::size_t a, std::size_t b) const {
            return std::equal(c->tuple(a), c->tuple(a) + c->arity, c->tuple(b));
        }
    };
    std::unordered_set<std::size_t, RowHash, RowEq> seen(16, RowHash{&c}, RowEq{&c});
    seen.reserve(c.size());

    const CompiledPoly compiled(c.claimed_polynomial);
    for (std::size_t r = 0; r < c.size(); ++r) {
        const std::int64_t* row = c.tuple(r);
        auto describe = [&](const std::string& what) {
            std::string s = what + " at row " + std::to_string(r) + ": (";
            for (std::size_t i = 0; i < c.arity; ++i)
                s += (i ? "," : "") + std::to_string(row[i]);
            return s + ")";
        };
        if (!seen.insert(r).second) {
            report.pass = false;
            report.failure = describe("duplicate tuple");
            return report;
        }
        for (std::size_t i = 0; i < c.arity; ++i) {
            if (!grid.axes[i].contains(row[i])) {
                report.pass = false;
                report.failure = describe("tuple outside grid");
                return report;
            }
        }
        if (c.zero_set && !compiled.is_zero_at(row)) {
            report.pass = false;
            report.failure =
                describe("polynomial value " + compiled.value_at(row).str() + " is nonzero");
            return report;
        }
        ++report.tuples_checked;
    }
    return report;
}

VerifyReport verify_construction(const Construction& c) { return verify_construction(c, c.grid); }

}  // namespace zg
