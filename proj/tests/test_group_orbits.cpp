#include <doctest.h>

#include "nullcone/gl3_order.hpp"
#include "nullcone/group_orbits.hpp"
#include "nullcone/verify.hpp"
#include "test_util.hpp"

using namespace nullcone;
using testutil::e_unit;

namespace {

Field Q = Field::rationals();

OrbitLabel lab(const std::string& text) { return OrbitLabel::parse(text, Q); }

}  // namespace

TEST_CASE("apply_gl2 mixes components") {
    MatrixTuple a01 = representative(lab("A[0,1]"), Q);
    CHECK(apply_gl2(Mat::identity(Q, 2), a01) == a01);

    // (1 0; l m) sends A[0,1] to the representative of A[l,m]
    for (long l : {-1L, 0L, 2L})
        for (long m : {1L, 3L}) {
            Mat h = Mat::from_ints(Q, 2, 2, {1, 0, l, m});
            MatrixTuple moved = apply_gl2(h, a01);
            OrbitLabel expect = OrbitLabel::A(ExtParam::fin(Q.from_int(l)),
                                              ExtParam::fin(Q.from_int(m)));
            CHECK(moved == representative(expect, Q));
        }

    Mat swap = Mat::from_ints(Q, 2, 2, {0, 1, 1, 0});
    MatrixTuple pair(3, {e_unit(Q, 2, 1), e_unit(Q, 3, 2)});
    MatrixTuple swapped = apply_gl2(swap, pair);
    CHECK(swapped.component(0) == e_unit(Q, 3, 2));
    CHECK(swapped.component(1) == e_unit(Q, 2, 1));

    CHECK_THROWS_AS(apply_gl2(Mat::zero(Q, 2, 2), pair), error);

    // mixing commutes with simultaneous conjugation
    std::mt19937_64 rng(79);
    for (int it = 0; it < 10; ++it) {
        Mat g = testutil::random_invertible(Q, 3, rng);
        Mat h = testutil::random_invertible(Q, 2, rng);
        CHECK(apply_gl2(h, a01.conjugated(g)) == apply_gl2(h, a01).conjugated(g));
    }
}

TEST_CASE("classify_G follows the 12-orbit list") {
    CHECK(classify_G(lab("A[5,inf]")) == GLabel::A0inf);
    CHECK(classify_G(lab("A[inf,5]")) == GLabel::Ainf0);
    CHECK(classify_G(lab("A[5,1]")) == GLabel::A01);
    CHECK(classify_G(lab("B[3,0]")) == GLabel::B00);
    CHECK(classify_G(lab("B[3,2]")) == GLabel::B01);
    CHECK(classify_G(lab("B[inf,0]")) == GLabel::Binf0);
    CHECK(classify_G(lab("B[inf,-2]")) == GLabel::Binf1);
    CHECK(classify_G(lab("C")) == GLabel::C);
    CHECK(classify_G(lab("D")) == GLabel::D);
    CHECK(classify_G(lab("E[9]")) == GLabel::E0);
    CHECK(classify_G(lab("E[inf]")) == GLabel::Einf);
    CHECK(classify_G(lab("O")) == GLabel::O);
}

TEST_CASE("classify_GL32 follows the 7-orbit list") {
    CHECK(classify_GL32(lab("A[inf,2]")) == GL32Label::A01);
    CHECK(classify_GL32(lab("A[1,inf]")) == GL32Label::A01);
    CHECK(classify_GL32(lab("E[inf]")) == GL32Label::E0);
    CHECK(classify_GL32(lab("B[inf,0]")) == GL32Label::B00);
    CHECK(classify_GL32(lab("B[2,0]")) == GL32Label::B00);
    CHECK(classify_GL32(lab("B[inf,3]")) == GL32Label::B01);
    CHECK(classify_GL32(lab("B[1,-1]")) == GL32Label::B01);
    CHECK(classify_GL32(lab("O")) == GL32Label::O);
}

TEST_CASE("coarse order oracles") {
    CHECK(deg_le_G(GLabel::A01, GLabel::Einf));
    CHECK_FALSE(deg_le_G(GLabel::B00, GLabel::C));
    CHECK(deg_le_G(GLabel::B00, GLabel::B00));
    CHECK(deg_le_G(GLabel::A0inf, GLabel::C));  // through B[inf,1]
    CHECK_FALSE(deg_le_G(GLabel::C, GLabel::D));
    CHECK_FALSE(deg_le_G(GLabel::Einf, GLabel::E0));

    CHECK(deg_le_GL32(GL32Label::B01, GL32Label::C));
    CHECK_FALSE(deg_le_GL32(GL32Label::B00, GL32Label::D));
    CHECK_FALSE(deg_le_GL32(GL32Label::O, GL32Label::E0));
    CHECK(deg_le_GL32(GL32Label::A01, GL32Label::O));
}

TEST_CASE("hesselink strata and their order") {
    CHECK(hesselink_stratum(lab("D")) == StratumLabel::beta3);
    CHECK(hesselink_stratum(lab("O")) == StratumLabel::beta5);
    CHECK(hesselink_stratum(lab("B[inf,1]")) == StratumLabel::beta1);
    CHECK(hesselink_stratum(lab("A[1,2]")) == StratumLabel::beta1);
    CHECK(hesselink_stratum(lab("C")) == StratumLabel::beta2);
    CHECK(hesselink_stratum(lab("E[0]")) == StratumLabel::beta4);

    auto b3 = stratum_triple(StratumLabel::beta3);
    CHECK(b3[0] == Q.from_fraction(-1, 3));
    CHECK(b3[1] == Q.from_fraction(-1, 3));
    CHECK(b3[2] == Q.from_fraction(2, 3));
    auto b5 = stratum_triple(StratumLabel::beta5);
    CHECK(b5[0].is_zero());

    CHECK(stratum_le(StratumLabel::beta1, StratumLabel::beta4));
    CHECK_FALSE(stratum_le(StratumLabel::beta2, StratumLabel::beta3));
    CHECK(stratum_le(StratumLabel::beta5, StratumLabel::beta5));
}

TEST_CASE("coarse orbit dimensions match the diagram margins") {
    const std::map<GLabel, std::size_t> g_margin{
        {GLabel::A01, 9},  {GLabel::A0inf, 8}, {GLabel::Ainf0, 8}, {GLabel::B01, 8},
        {GLabel::B00, 7},  {GLabel::Binf1, 7}, {GLabel::Binf0, 6}, {GLabel::C, 6},
        {GLabel::D, 6},    {GLabel::E0, 5},    {GLabel::Einf, 4},  {GLabel::O, 0}};
    for (GLabel g : all_glabels)
        CHECK(g_orbit_dim(g_representative(g, Q)) == g_margin.at(g));

    const std::map<GL32Label, std::size_t> gl32_margin{
        {GL32Label::A01, 9}, {GL32Label::B01, 8}, {GL32Label::B00, 7}, {GL32Label::C, 6},
        {GL32Label::D, 6},   {GL32Label::E0, 5},  {GL32Label::O, 0}};
    for (GL32Label g : all_gl32_labels)
        CHECK(gl32_orbit_dim(gl32_representative(g, Q)) == gl32_margin.at(g));
}

TEST_CASE("random mixing stays in the expected coarse fiber") {
    std::mt19937_64 rng(83);
    for (const OrbitLabel& l : labels_on_grid(Q, {-1, 0, 1, 2})) {
        MatrixTuple r = representative(l, Q);
        GLabel expect = classify_G(l);
        for (int it = 0; it < 10; ++it) {
            // random element of H = {(1 0; l m), m != 0}
            Mat h(Q, 2, 2);
            h.at(0, 0) = Q.one();
            h.at(1, 0) = testutil::random_scalar(Q, rng);
            do {
                h.at(1, 1) = testutil::random_scalar(Q, rng);
            } while (h.at(1, 1).is_zero());
            OrbitLabel got = classify_pair(apply_gl2(h, r));
            CHECK(classify_G(got) == expect);
        }
    }
}

TEST_CASE("dot exports list every node") {
    std::string g = g_hasse_dot();
    for (GLabel l : all_glabels) CHECK(g.find(glabel_name(l)) != std::string::npos);
    std::string s = strata_hasse_dot();
    for (StratumLabel l : all_strata) CHECK(s.find(stratum_name(l)) != std::string::npos);
    std::string g32 = gl32_hasse_dot();
    CHECK(g32.find("GL32.B_{0,0}") != std::string::npos);
}
