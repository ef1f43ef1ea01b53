#pragma once

#include <array>

#include "nullcone/labels.hpp"

namespace nullcone {

// The 12 orbits of GL3 x H, where H is the solvable 2-parameter subgroup of
// GL2 fixing the first component direction.
enum class GLabel {
    A01, A0inf, Ainf0, B01, B00, Binf0, Binf1, C, D, E0, Einf, O
};

// The 7 orbits of GL3 x GL2.
enum class GL32Label { A01, B01, B00, C, D, E0, O };

// The five strata of the Hesselink stratification, each with its rational
// weight triple.
enum class StratumLabel { beta1, beta2, beta3, beta4, beta5 };

std::string glabel_name(GLabel g);
std::string gl32_name(GL32Label g);
std::string stratum_name(StratumLabel s);

// The weight triple attached to a stratum, as exact rationals.
std::array<Scalar, 3> stratum_triple(StratumLabel s);

constexpr std::array<GLabel, 12> all_glabels{
    GLabel::A01, GLabel::A0inf, GLabel::Ainf0, GLabel::B01, GLabel::B00, GLabel::Binf0,
    GLabel::Binf1, GLabel::C, GLabel::D, GLabel::E0, GLabel::Einf, GLabel::O};

constexpr std::array<GL32Label, 7> all_gl32_labels{
    GL32Label::A01, GL32Label::B01, GL32Label::B00, GL32Label::C,
    GL32Label::D, GL32Label::E0, GL32Label::O};

constexpr std::array<StratumLabel, 5> all_strata{
    StratumLabel::beta1, StratumLabel::beta2, StratumLabel::beta3, StratumLabel::beta4,
    StratumLabel::beta5};

// The component-mixing action of GL2 on pairs:
// g . (A1, A2) = (g11 A1 + g12 A2, g21 A1 + g22 A2). g must be invertible.
MatrixTuple apply_gl2(const Mat& g, const MatrixTuple& a);

// Which G-orbit a GL3-orbit belongs to.
GLabel classify_G(const OrbitLabel& l);

// Which GL3 x GL2 orbit a GL3-orbit belongs to.
GL32Label classify_GL32(const OrbitLabel& l);

// Reachability in the two coarser degeneration diagrams.
bool deg_le_G(GLabel a, GLabel b);
bool deg_le_GL32(GL32Label a, GL32Label b);

// Stratum containing a labelled orbit, and the stratum closure order.
StratumLabel hesselink_stratum(const OrbitLabel& l);
bool stratum_le(StratumLabel a, StratumLabel b);

// Hasse edges (covering relations) of the three diagrams, for diagram export
// and for edge-wise dimension checks.
std::vector<std::pair<GLabel, GLabel>> g_hasse_edges();
std::vector<std::pair<GL32Label, GL32Label>> gl32_hasse_edges();
std::vector<std::pair<StratumLabel, StratumLabel>> strata_hasse_edges();

// Canonical representative tuple of a coarse orbit (a representative of the
// base-point GL3-orbit).
MatrixTuple g_representative(GLabel g, Field f);
MatrixTuple gl32_representative(GL32Label g, Field f);

// Orbit dimension under GL3 x H: rank of the combined infinitesimal action
// (9 conjugation directions plus the 2-parameter mixing from Lie(H)).
std::size_t g_orbit_dim(const MatrixTuple& rep);

// Orbit dimension under GL3 x GL2 (9 + 4 tangent directions).
std::size_t gl32_orbit_dim(const MatrixTuple& rep);

// DOT renderings of the three diagrams.
std::string g_hasse_dot();
std::string gl32_hasse_dot();
std::string strata_hasse_dot();

}  // namespace nullcone
