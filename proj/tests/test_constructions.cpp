#include "zerogrid/constructions.hpp"

#include "zerogrid/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace zg;
using zgtest::P;

namespace {

std::vector<std::vector<std::int64_t>> rows(const Construction& c) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t r = 0; r < c.size(); ++r)
        out.emplace_back(c.tuple(r), c.tuple(r) + c.arity);
    return out;
}

}  // namespace

TEST_CASE("main triple set: enumerated examples") {
    const Construction c = gen_main_t(4);
    CHECK(rows(c) == std::vector<std::vector<std::int64_t>>{
                         {1, 1, 1}, {1, 2, 2}, {2, 2, 2}, {2, 3, 3}});
    CHECK(gen_main_t(16).size() == 24);
    CHECK(gen_main_t(1).size() == 0);
    CHECK(gen_main_t(2).size() == 1);
}

TEST_CASE("edge set mirrors the triple set") {
    CHECK(rows(gen_graph_g(4)) ==
          std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}});
    CHECK(gen_graph_g(16).size() == 24);
    CHECK(gen_graph_g(1).size() == 0);

    // projection coherence: dropping the third coordinate gives the edges
    for (long long n : {2, 3, 4, 7, 16, 33, 100, 257}) {
        const Construction t = gen_main_t(n);
        const Construction g = gen_graph_g(n);
        REQUIRE(t.size() == g.size());
        for (std::size_t r = 0; r < t.size(); ++r) {
            CHECK(t.tuple(r)[0] == g.tuple(r)[0]);
            CHECK(t.tuple(r)[1] == g.tuple(r)[1]);
        }
    }
}

TEST_CASE("symmetric quadruples: enumerated examples") {
    CHECK(rows(gen_valtr_symmetric(4)) ==
          std::vector<std::vector<std::int64_t>>{
              {1, 2, 1, 2}, {1, 2, 2, 3}, {2, 3, 1, 2}, {2, 3, 2, 3}});
    CHECK(gen_valtr_symmetric(16).size() == 128);
    CHECK(gen_valtr_symmetric(1).size() == 0);
    CHECK(gen_valtr_symmetric(3).size() == 0);  // floor(isqrt(3)/2) = 0
}

TEST_CASE("asymmetric grid carries no tuples") {
    const Construction c = gen_valtr_asymmetric(2);
    CHECK(c.tuples_absent);
    CHECK(c.size() == 0);
    CHECK(c.grid.to_string() == "1..2,1..2,1..4,1..4");
    CHECK(verify_construction(c).pass);  // nothing claimed, nothing to fail
}

TEST_CASE("m-variable tuples: enumerated examples") {
    CHECK(rows(gen_mvar_t(3, 1)) == std::vector<std::vector<std::int64_t>>{
                                        {0, 0, 0}, {0, 1, 1}, {1, -1, 1}, {1, 0, 2}});
    CHECK(gen_mvar_t(4, 4).size() == 75);
    CHECK_THROWS_AS(gen_mvar_t(2, 4), Error);

    // the all-zero parameter tuple is always present with value 0
    for (int m : {3, 4, 5})
        for (long long n : {1, 2, 5}) {
            const Construction c = gen_mvar_t(m, n);
            const std::vector<std::int64_t> zero(static_cast<std::size_t>(m), 0);
            bool found = false;
            for (std::size_t r = 0; r < c.size() && !found; ++r)
                found = std::equal(c.tuple(r), c.tuple(r) + c.arity, zero.begin());
            CHECK(found);
        }
}

TEST_CASE("closed-form sizes match enumeration") {
    for (long long n = 1; n <= 256; ++n) {
        CHECK(gen_main_t(n).size() == main_t_size(n));
        CHECK(gen_graph_g(n).size() == graph_g_size(n));
    }
    for (long long n : {511, 512, 1023, 1024}) {
        CHECK(gen_main_t(n).size() == main_t_size(n));
        CHECK(gen_graph_g(n).size() == graph_g_size(n));
    }
    for (long long n = 1; n <= 64; ++n) CHECK(gen_valtr_symmetric(n).size() == valtr_sym_size(n));
    for (long long n : {256, 512}) CHECK(gen_valtr_symmetric(n).size() == valtr_sym_size(n));
    for (int m : {3, 4, 5, 6})
        for (long long n : {1, 2, 3, 4, 9, 16})
            CHECK(Integer(gen_mvar_t(m, n).size()) == mvar_t_size(m, n));
}

TEST_CASE("membership verification passes for every generator") {
    for (long long n = 1; n <= 64; ++n) {
        CHECK(verify_construction(gen_main_t(n)).pass);
        CHECK(verify_construction(gen_graph_g(n)).pass);
        CHECK(verify_construction(gen_valtr_symmetric(n)).pass);
    }
    for (long long n : {255, 256, 1023, 1024}) {
        CHECK(verify_construction(gen_main_t(n)).pass);
        CHECK(verify_construction(gen_graph_g(n)).pass);
    }
    CHECK(verify_construction(gen_valtr_symmetric(256)).pass);
    CHECK(verify_construction(gen_valtr_symmetric(512)).pass);
    for (int m : {3, 4, 5, 6})
        for (long long n : {1, 2, 3, 4, 9, 16})
            CHECK(verify_construction(gen_mvar_t(m, n)).pass);
    CHECK(verify_construction(gen_mvar_t(3, 64)).pass);
    CHECK(verify_construction(gen_mvar_t(4, 32)).pass);

    const VerifyReport big = verify_construction(gen_main_t(64));
    CHECK(big.pass);
    CHECK(big.tuples_checked == 160);  // floor(64/2) * (floor(isqrt(64)/2) + 1) = 32 * 5
}

TEST_CASE("verification flags tampered tuples") {
    Construction c = gen_main_t(4);
    // overwrite a row with (1,2,3); F(1,2,3) = (1-2)^2 + 1 - 3 = -1
    c.tuples[3] = 1;
    c.tuples[4] = 2;
    c.tuples[5] = 3;
    const VerifyReport r = verify_construction(c);
    CHECK_FALSE(r.pass);
    CHECK(r.failure.find("-1") != std::string::npos);

    Construction dup = gen_main_t(4);
    dup.tuples[3] = dup.tuples[0];
    dup.tuples[4] = dup.tuples[1];
    dup.tuples[5] = dup.tuples[2];
    CHECK_FALSE(verify_construction(dup).pass);

    Construction outside = gen_graph_g(4);
    outside.tuples[1] = 99;
    CHECK_FALSE(verify_construction(outside).pass);

    CHECK(verify_construction(gen_main_t(1)).pass);  // empty construction
}

TEST_CASE("explicit lower-bound constants") {
    // |T(n)| >= n^{3/2}/8 checked as (8|T|)^2 >= n^3, and friends
    for (long long n = 16; n <= (1 << 16); ++n) {
        const Integer lhs = Integer(8) * main_t_size(n) * 8 * main_t_size(n);
        REQUIRE(lhs >= Integer(n) * n * n);
    }
    for (long long n = 16; n <= (1 << 12); ++n) {
        const Integer lhs = Integer(32) * valtr_sym_size(n) * 32 * valtr_sym_size(n);
        REQUIRE(lhs >= Integer(n) * n * n * n * n);
    }
    for (int m : {3, 4, 5})
        for (long long n = 16; n <= 256; ++n) {
            const Integer size = mvar_t_size(m, n);
            const Integer scale = Integer(1) << m;
            Integer rhs = 1;
            for (int e = 0; e < 2 * m - 3; ++e) rhs *= n;
            REQUIRE(size * size * scale * scale >= rhs);
        }
}

TEST_CASE("substitution coherence with the four-variable polynomial") {
    const Construction v = gen_valtr_symmetric(8);
    const Construction t = gen_main_t(8);
    const std::vector<std::string> xyz{"x", "y", "z"};
    const std::vector<Polynomial> images{
        Polynomial::variable(xyz, "x"), Polynomial::variable(xyz, "y"),
        Polynomial::variable(xyz, "x"), Polynomial::variable(xyz, "z")};
    CHECK(v.claimed_polynomial.substitute(images) == t.claimed_polynomial);
}

TEST_CASE("csv and metadata exports") {
    const Construction c = gen_main_t(4);
    CHECK(c.csv() == "x,y,z\n1,1,1\n1,2,2\n2,2,2\n2,3,3\n");
    const std::string meta = c.meta_json();
    CHECK(meta.find("\"name\":\"main-t\"") != std::string::npos);
    CHECK(meta.find("\"size\":4") != std::string::npos);
    const std::string vmeta = gen_valtr_asymmetric(2).meta_json();
    CHECK(vmeta.find("\"M\":2") != std::string::npos);
    CHECK(vmeta.find("\"size\":null") != std::string::npos);
}
