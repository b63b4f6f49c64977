#pragma once

#include "zerogrid/grid.hpp"
#include "zerogrid/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zg {

enum class ConstructionName { MainT, GraphG, ValtrAsymmetric, ValtrSymmetric, MVarT };

const char* construction_name_str(ConstructionName name);

/// A named generator output: integer tuples (row-major, arity-strided) plus
/// the polynomial and grid they are claimed against. zero_set marks
/// constructions whose tuples are claimed zeros of the polynomial; GraphG is
/// an edge set, not a zero set. ValtrAsymmetric carries no tuples at all
/// (tuples_absent): the grid and its count are the object.
struct Construction {
    ConstructionName name;
    long long n = 0;        // side parameter where applicable
    int m = 0;              // variable count for MVarT
    long long cap_m = 0;    // M for ValtrAsymmetric
    std::size_t arity = 0;
    std::vector<std::string> coords;
    std::vector<std::int64_t> tuples;
    bool tuples_absent = false;
    Polynomial claimed_polynomial;
    bool zero_set = true;
    GridSpec grid;

    std::size_t size() const { return arity == 0 ? 0 : tuples.size() / arity; }
    const std::int64_t* tuple(std::size_t i) const { return tuples.data() + i * arity; }

    std::string csv() const;        // header row naming coordinates
    std::string meta_json() const;  // {name, params, size, polynomial, grid}
};

/// Triples (k, k+l, k+l^2), 1 <= k <= floor(n/2), 0 <= l <= floor(isqrt(n)/2),
/// emitted k-major / l-minor. All lie in [1,n]^3 on the zero set of
/// (x-y)^2 + x - z.
Construction gen_main_t(long long n);

/// The pair projection of gen_main_t: edges (k, k+l) over identical ranges.
Construction gen_graph_g(long long n);

/// symmetric: quadruples (k, k+l, m, m+l^2), 1 <= k,m <= floor(n/2),
/// 1 <= l <= floor(isqrt(n)/2), in [1,n]^4 on the zero set of (x-y)^2 + s - t.
/// asymmetric: grid [1,M] x [1,M] x [1,M^2] x [1,M^2] for the same
/// polynomial, tuples absent.
Construction gen_valtr_symmetric(long long n);
Construction gen_valtr_asymmetric(long long M);

/// m-variable tuples (k1, k2-k1, ..., k_{m-2}-k_{m-3}, l-k_{m-2}, k1+l^2) for
/// 0 <= k_i <= n, 0 <= l <= isqrt(n), on the zero set of
/// (x1+...+x_{m-1})^2 + x1 - xm over the grid [-n, 2n]^m. Requires m >= 3.
Construction gen_mvar_t(int m, long long n);

// Closed-form sizes matching the generators tuple for tuple.
std::uint64_t main_t_size(long long n);
std::uint64_t graph_g_size(long long n);
std::uint64_t valtr_sym_size(long long n);
Integer mvar_t_size(int m, long long n);

struct VerifyReport {
    bool pass = true;
    std::uint64_t tuples_checked = 0;
    std::string failure;  // first counterexample, empty on pass

    std::string to_json() const;
};

/// Checks tuple distinctness, grid membership, and (for zero-set
/// constructions) that every tuple evaluates the claimed polynomial to zero.
/// Failures are report entries, never exceptions.
VerifyReport verify_construction(const Construction& c, const GridSpec& grid);
VerifyReport verify_construction(const Construction& c);  // against c.grid

}  // namespace zg
