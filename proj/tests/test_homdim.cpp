#include <doctest.h>

#include "nullcone/gl3_order.hpp"
#include "nullcone/ratfunc.hpp"
#include "test_util.hpp"

using namespace nullcone;
using testutil::e_unit;

namespace {

Field Q = Field::rationals();

MatrixTuple rep(const std::string& label) {
    return representative(OrbitLabel::parse(label, Q), Q);
}

MatrixTuple mt2(Field f, std::initializer_list<long> a, std::initializer_list<long> b) {
    return MatrixTuple(2, {Mat::from_ints(f, 2, 2, a), Mat::from_ints(f, 2, 2, b)});
}

}  // namespace

TEST_CASE("hom_dim frozen values from the stabilizer list") {
    CHECK(hom_dim(rep("O"), rep("O")) == 9);
    CHECK(hom_dim(rep("A[0,1]"), rep("A[0,1]")) == 2);
    CHECK(hom_dim(rep("C"), rep("C")) == 3);
    CHECK(hom_dim(rep("D"), rep("D")) == 3);
    CHECK(hom_dim(rep("B[1,1]"), rep("B[1,1]")) == 3);
    CHECK(hom_dim(rep("E[0]"), rep("E[0]")) == 5);
}

TEST_CASE("every intertwiner basis element intertwines exactly") {
    std::mt19937_64 rng(59);
    for (Field f : {Field::rationals(), Field::gfp(13)}) {
        for (int it = 0; it < 20; ++it) {
            MatrixTuple a(3, {testutil::random_matrix(f, 3, 3, rng),
                              testutil::random_matrix(f, 3, 3, rng)});
            MatrixTuple b(2, {testutil::random_matrix(f, 2, 2, rng),
                              testutil::random_matrix(f, 2, 2, rng)});
            for (const Mat& t : intertwiner_basis(a, b))
                for (std::size_t i = 0; i < 2; ++i)
                    CHECK(t * a.component(i) == b.component(i) * t);
        }
    }
}

TEST_CASE("hom_dim agrees with the kron-structured brute force") {
    std::mt19937_64 rng(61);
    for (Field f : {Field::rationals(), Field::gfp(13)}) {
        for (int it = 0; it < 30; ++it) {
            std::uniform_int_distribution<std::size_t> nd(1, 3);
            std::size_t na = nd(rng), nb = nd(rng);
            MatrixTuple a(na, {testutil::random_matrix(f, na, na, rng),
                               testutil::random_matrix(f, na, na, rng)});
            MatrixTuple b(nb, {testutil::random_matrix(f, nb, nb, rng),
                               testutil::random_matrix(f, nb, nb, rng)});
            CHECK(hom_dim(a, b) == testutil::hom_dim_kron_oracle(a, b));
        }
    }
}

TEST_CASE("orbit_dim matches the diagram levels") {
    CHECK(orbit_dim(rep("O")) == 0);
    CHECK(orbit_dim(rep("E[0]")) == 4);
    CHECK(orbit_dim(rep("B[1,1]")) == 6);
    CHECK(orbit_dim(rep("A[1,1]")) == 7);
    // the infinitesimal route gives the same numbers
    for (const char* l : {"O", "E[0]", "B[1,1]", "A[1,1]", "C", "D"})
        CHECK(conjugation_tangent_rank(rep(l)) == orbit_dim(rep(l)));
}

TEST_CASE("find_invertible_in_span falls back to the exhaustive grid") {
    // a span with no invertible element
    std::vector<Mat> strictly_upper{e_unit(Q, 1, 2), e_unit(Q, 1, 3), e_unit(Q, 2, 3)};
    CHECK_FALSE(find_invertible_in_span(strictly_upper).has_value());
    // a span whose generic element is singular but which contains invertibles
    std::vector<Mat> mixed{Mat::identity(Q, 3), e_unit(Q, 1, 2)};
    auto found = find_invertible_in_span(mixed);
    REQUIRE(found.has_value());
    CHECK_FALSE(found->det().is_zero());
    CHECK_FALSE(find_invertible_in_span({}).has_value());

    // tiny prime fields enumerate the whole space
    Field f2 = Field::gfp(2);
    std::vector<Mat> gf2_span{Mat::identity(f2, 2)};
    CHECK(find_invertible_in_span(gf2_span).has_value());
    std::vector<Mat> gf2_nil{Mat::from_ints(f2, 2, 2, {0, 1, 0, 0})};
    CHECK_FALSE(find_invertible_in_span(gf2_nil).has_value());
}

TEST_CASE("hom_le_check reports the first violated witness") {
    Field f = Q;
    MatrixTuple a = rep("A[1,2]");
    MatrixTuple b = rep("B[0,0]");
    // x2 - l*x1 with l = 1 has rank 1 at A[1,2] and rank 2 at B[0,0]
    NCPoly phi = NCPoly::gen(f, 2) - NCPoly::gen(f, 1);
    auto v = hom_le_check(a, b, {NCMatrix::single(phi)});
    REQUIRE(v.has_value());
    CHECK(v->rank_a == 1);
    CHECK(v->rank_b == 2);

    CHECK_FALSE(hom_le_check(a, a, {NCMatrix::single(phi)}).has_value());

    // all table witnesses pass for a true degeneration C -> E[5]
    std::vector<NCMatrix> witnesses;
    for (const WitnessRow& row : hom_order_rows()) {
        std::map<std::string, Scalar> binding;
        for (const std::string& p : row.params) binding.emplace(p, f.from_int(1));
        witnesses.push_back(NCMatrix::single(row.phi(binding, f)));
    }
    CHECK_FALSE(hom_le_check(rep("C"), rep("E[5]"), witnesses).has_value());
}

TEST_CASE("semisimplify_2x2 examples") {
    Field f = Q;
    MatrixTuple jordan = mt2(f, {0, 1, 0, 0}, {0, 0, 0, 0});
    MatrixTuple ss = semisimplify_2x2(jordan);
    CHECK(ss.component(0).is_zero());
    CHECK(ss.component(1).is_zero());

    MatrixTuple diag = mt2(f, {1, 0, 0, 2}, {3, 0, 0, 4});
    CHECK(semisimplify_2x2(diag) == diag);

    // rotation plus identity: irreducible characteristic polynomial over Q
    MatrixTuple rot = mt2(f, {0, 1, -1, 0}, {1, 0, 0, 1});
    CHECK_THROWS_AS(semisimplify_2x2(rot), needs_field_extension);

    // same matrix over GF(5): x^2 + 1 = (x-2)(x+2), so the factors exist
    Field f5 = Field::gfp(5);
    MatrixTuple rot5 = mt2(f5, {0, 1, -1, 0}, {1, 0, 0, 1});
    MatrixTuple ss5 = semisimplify_2x2(rot5);
    CHECK(ss5.component(0) != rot5.component(0));  // diagonalized

    // p = 1 mod 4 exercises the general square-root path: x^2 = 3 over GF(13)
    Field f13 = Field::gfp(13);
    MatrixTuple comp13 = mt2(f13, {0, 1, 3, 0}, {1, 0, 0, 1});
    MatrixTuple ss13 = semisimplify_2x2(comp13);
    CHECK(ss13.component(0).at(0, 1).is_zero());
    CHECK((ss13.component(0).at(0, 0) * ss13.component(0).at(0, 0)) == f13.from_int(3));

    // brute-force oracle: semisimplification preserves each character pair
    std::mt19937_64 rng(67);
    for (int it = 0; it < 25; ++it) {
        Mat u1(f, 2, 2), u2(f, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = i; j < 2; ++j) {
                u1.at(i, j) = testutil::random_scalar(f, rng);
                u2.at(i, j) = testutil::random_scalar(f, rng);
            }
        MatrixTuple a = MatrixTuple(2, {u1, u2})
                            .conjugated(testutil::random_invertible(f, 2, rng));
        MatrixTuple s = semisimplify_2x2(a);
        for (std::size_t i = 0; i < 2; ++i) {
            // traces and determinants of components match (same composition factors)
            const Mat &ai = a.component(i), &si = s.component(i);
            CHECK(ai.at(0, 0) + ai.at(1, 1) == si.at(0, 0) + si.at(1, 1));
            CHECK(ai.det() == si.det());
            CHECK(si.at(0, 1).is_zero());
            CHECK(si.at(1, 0).is_zero());
        }
    }
}

TEST_CASE("deg2_compare implements the two-orbit closure") {
    Field f = Q;
    MatrixTuple jordan = mt2(f, {0, 1, 0, 0}, {0, 0, 0, 0});
    MatrixTuple zero = mt2(f, {0, 0, 0, 0}, {0, 0, 0, 0});
    CHECK(deg2_compare(jordan, zero));
    CHECK_FALSE(deg2_compare(zero, jordan));
    CHECK(deg2_compare(jordan, jordan));
    CHECK(deg2_compare(zero, zero));

    // cross-check with the curve diag(eps, 1): conjugation scales the
    // off-diagonal entry to eps, so the limit at 0 is the zero pair
    EpsMat g(f, 2);
    g.at(0, 0) = RatFunc::eps(f);
    g.at(1, 1) = RatFunc::constant(f.one());
    EpsMat j = EpsMat::from_scalar(jordan.component(0));
    EpsMat conj = g * j * g.inverse();
    CHECK(conj.pole_free_at_zero());
    CHECK(conj.limit_at_zero().is_zero());

    CHECK_THROWS_AS(deg2_compare(mt2(f, {0, 1, -1, 0}, {1, 0, 0, 1}), zero),
                    needs_field_extension);
}

TEST_CASE("deg2_compare is reflexive and transitive on triangular samples") {
    std::mt19937_64 rng(71);
    Field f = Q;
    std::vector<MatrixTuple> pool;
    for (int it = 0; it < 8; ++it) {
        Mat u1(f, 2, 2), u2(f, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = i; j < 2; ++j) {
                u1.at(i, j) = testutil::random_scalar(f, rng, -1, 1);
                u2.at(i, j) = testutil::random_scalar(f, rng, -1, 1);
            }
        pool.push_back(MatrixTuple(2, {u1, u2})
                           .conjugated(testutil::random_invertible(f, 2, rng)));
    }
    for (const MatrixTuple& a : pool) CHECK(deg2_compare(a, a));
    for (const MatrixTuple& a : pool)
        for (const MatrixTuple& b : pool)
            for (const MatrixTuple& c : pool)
                if (deg2_compare(a, b) && deg2_compare(b, c)) CHECK(deg2_compare(a, c));
}
