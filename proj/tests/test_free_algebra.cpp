#include <doctest.h>

#include "nullcone/labels.hpp"
#include "test_util.hpp"

using namespace nullcone;
using testutil::e_unit;

namespace {

MatrixTuple rep(const std::string& label, Field f) {
    return representative(OrbitLabel::parse(label, f), f);
}

}  // namespace

TEST_CASE("eval_poly on the separation examples") {
    Field f = Field::rationals();
    // x2 at A[0,1] = (E21+E32, E32)
    MatrixTuple a01 = rep("A[0,1]", f);
    NCPoly x2 = NCPoly::gen(f, 2);
    Mat v = eval_poly(x2, a01);  // x2 - 0*x1
    CHECK(v == e_unit(f, 3, 2));
    CHECK(v.rank() == 1);

    CHECK(eval_poly(NCPoly::one(f), a01) == Mat::identity(f, 3));

    NCPoly x1x2 = NCPoly::gen(f, 1) * NCPoly::gen(f, 2);
    MatrixTuple a0inf = rep("A[0,inf]", f);   // (E21, E32)
    MatrixTuple ainf0 = rep("A[inf,0]", f);   // (E32, E21)
    CHECK(eval_poly(x1x2, a0inf).is_zero());
    CHECK(eval_poly(x1x2, ainf0) == e_unit(f, 3, 1));
    CHECK(eval_ncmatrix_rank(NCMatrix::single(x1x2), a0inf) == 0);
    CHECK(eval_ncmatrix_rank(NCMatrix::single(x1x2), ainf0) == 1);

    NCPoly x3 = NCPoly::gen(f, 3);
    CHECK_THROWS_AS(eval_poly(x3, a01), error);
}

TEST_CASE("eval_ncmatrix_rank on 1x1 witnesses") {
    Field f = Field::rationals();
    for (long l : {-1L, 0L, 2L})
        for (long m : {-2L, 1L, 3L}) {
            MatrixTuple b = rep("B[" + std::to_string(l) + "," + std::to_string(m) + "]", f);
            // x2 - l*x1 - m*x1^2 annihilates B[l,m]
            std::map<std::string, Scalar> params{{"l", f.from_int(l)}, {"m", f.from_int(m)}};
            NCPoly phi = parse_ncpoly("x2 - l*x1 - m*x1^2", f, params);
            CHECK(eval_ncmatrix_rank(NCMatrix::single(phi), b) == 0);
        }

    CHECK(eval_ncmatrix_rank(NCMatrix::single(NCPoly::zero(f)), rep("C", f)) == 0);

    // x1 - l*x2^2 annihilates B[inf,l]
    std::map<std::string, Scalar> params{{"l", f.from_int(4)}};
    NCPoly phi = parse_ncpoly("x1 - l*x2^2", f, params);
    CHECK(eval_ncmatrix_rank(NCMatrix::single(phi), rep("B[inf,4]", f)) == 0);
}

TEST_CASE("parser grammar and errors") {
    Field f = Field::rationals();
    std::map<std::string, Scalar> params{{"l", f.from_int(1)}, {"m", f.from_int(2)}};
    NCPoly p = parse_ncpoly("x2 - l*x1 - m*x1^2", f, params);
    NCPoly expect = NCPoly::gen(f, 2) - NCPoly::gen(f, 1) -
                    (NCPoly::gen(f, 1) * NCPoly::gen(f, 1)).scaled(f.from_int(2));
    CHECK(p == expect);

    CHECK(parse_ncpoly("0", f).is_zero());
    CHECK(parse_ncpoly("x1*x2", f) == NCPoly::gen(f, 1) * NCPoly::gen(f, 2));
    CHECK(parse_ncpoly("1/2*x1 + 1/2*x1", f) == NCPoly::gen(f, 1));

    CHECK_THROWS_AS(parse_ncpoly("x1 +", f), parse_error);
    CHECK_THROWS_AS(parse_ncpoly("q*x1", f), parse_error);
    CHECK_THROWS_AS(parse_ncpoly("x0", f), parse_error);
}

TEST_CASE("kron_rank examples") {
    Field f = Field::rationals();
    MatrixTuple a = rep("A[0,1]", f);
    std::vector<Mat> zeros(3, Mat::zero(f, 2, 2));
    CHECK(kron_rank(a, zeros) == 0);

    std::vector<Mat> idT{Mat::identity(f, 3), Mat::zero(f, 3, 3), Mat::zero(f, 3, 3)};
    CHECK(kron_rank(a, idT) == 9);

    // 2x2 pair ((0 1; 0 0), 0) with T1 = (0 1; 0 0): rank of A1 (x) T1
    Mat j = Mat::from_ints(f, 2, 2, {0, 1, 0, 0});
    MatrixTuple pair(2, {j, Mat::zero(f, 2, 2)});
    std::vector<Mat> t{Mat::zero(f, 2, 2), j, Mat::zero(f, 2, 2)};
    std::size_t r = kron_rank(pair, t);
    // oracle: expand the 4x4 Kronecker product by hand
    Mat expanded(f, 4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l)
                for (std::size_t s = 0; s < 2; ++s)
                    expanded.at(i * 2 + l, k * 2 + s) = j.at(i, k) * j.at(l, s);
    CHECK(r == expanded.rank());
    CHECK(r == 1);

    std::vector<Mat> bad{Mat::zero(f, 2, 2), Mat::zero(f, 2, 3), Mat::zero(f, 2, 2)};
    CHECK_THROWS_AS(kron_rank(pair, bad), shape_mismatch);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(31);
    for (Field f : {Field::rationals(), Field::gfp(101)}) {
        for (int it = 0; it < 25; ++it) {
            MatrixTuple a(3, {testutil::random_matrix(f, 3, 3, rng),
                              testutil::random_matrix(f, 3, 3, rng)});
            auto rand_poly = [&]() {
                NCPoly p(f);
                std::uniform_int_distribution<int> len(0, 2);
                for (int t = 0; t < 3; ++t) {
                    Word w;
                    int L = len(rng);
                    std::uniform_int_distribution<unsigned> g(1, 2);
                    for (int k = 0; k < L; ++k) w.push_back(g(rng));
                    p = p.plus_term(w, testutil::random_scalar(f, rng));
                }
                return p;
            };
            NCPoly pf = rand_poly(), pg = rand_poly();
            CHECK(eval_poly(pf * pg, a) == eval_poly(pf, a) * eval_poly(pg, a));
            CHECK(eval_poly(pf + pg, a) == eval_poly(pf, a) + eval_poly(pg, a));
        }
    }
}

TEST_CASE("rank of evaluated matrices is conjugation invariant") {
    std::mt19937_64 rng(37);
    Field f = Field::rationals();
    NCMatrix phi(f, 2, 1);
    phi.at(0, 0) = NCPoly::gen(f, 1);
    phi.at(1, 0) = NCPoly::gen(f, 2) * NCPoly::gen(f, 1);
    for (int it = 0; it < 20; ++it) {
        MatrixTuple a(3, {testutil::random_matrix(f, 3, 3, rng),
                          testutil::random_matrix(f, 3, 3, rng)});
        Mat g = testutil::random_invertible(f, 3, rng);
        CHECK(eval_ncmatrix_rank(phi, a.conjugated(g)) == eval_ncmatrix_rank(phi, a));

        // kron_rank shares the invariance
        std::vector<Mat> t{testutil::random_matrix(f, 2, 3, rng),
                           testutil::random_matrix(f, 2, 3, rng),
                           testutil::random_matrix(f, 2, 3, rng)};
        CHECK(kron_rank(a.conjugated(g), t) == kron_rank(a, t));
    }
}
