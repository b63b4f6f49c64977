#pragma once

#include "zerogrid/parser.hpp"
#include "zerogrid/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace zgtest {

// Fixed-seed generators so every property run is reproducible.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline zg::Rational random_coeff(std::mt19937_64& g, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    int v = dist(g);
    while (v == 0) v = dist(g);
    return zg::Rational(v);
}

/// Sparse random polynomial with total degree <= max_deg.
inline zg::Polynomial random_poly(std::mt19937_64& g, const std::vector<std::string>& vars,
                                  int max_deg, int max_terms) {
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<int> pick_deg(0, max_deg);
    zg::Polynomial::Terms terms;
    const int nt = term_count(g);
    for (int t = 0; t < nt; ++t) {
        // split a random total degree across the variables
        int remaining = pick_deg(g);
        std::vector<std::uint32_t> exps(vars.size(), 0);
        for (std::size_t i = 0; i < vars.size() && remaining > 0; ++i) {
            std::uniform_int_distribution<int> part(0, remaining);
            const int e = i + 1 == vars.size() ? remaining : part(g);
            exps[i] = static_cast<std::uint32_t>(e);
            remaining -= e;
        }
        terms.insert_or_assign(zg::Monomial(std::move(exps)), random_coeff(g));
    }
    return zg::Polynomial::from_terms(vars, std::move(terms));
}

/// Random univariate polynomial with degree in [min_deg, max_deg].
inline zg::Polynomial random_univariate(std::mt19937_64& g, const std::string& var, int min_deg,
                                        int max_deg) {
    std::uniform_int_distribution<int> pick_deg(min_deg, max_deg);
    std::uniform_int_distribution<int> any(-9, 9);
    const int d = pick_deg(g);
    zg::Polynomial::Terms terms;
    for (int e = 0; e < d; ++e) {
        const int c = any(g);
        if (c != 0) terms.insert_or_assign(zg::Monomial({static_cast<std::uint32_t>(e)}),
                                           zg::Rational(c));
    }
    terms.insert_or_assign(zg::Monomial({static_cast<std::uint32_t>(d)}), random_coeff(g));
    return zg::Polynomial::from_terms({var}, std::move(terms));
}

inline zg::Rational random_point_coord(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 5);
    return zg::Rational(num(g), den(g));
}

inline zg::Polynomial P(const std::string& text, std::vector<std::string> vars) {
    return zg::parse_polynomial(text, std::move(vars));
}

}  // namespace zgtest
