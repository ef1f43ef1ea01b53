#include "nullcone/group_orbits.hpp"

#include <sstream>

#include "nullcone/homdim.hpp"

namespace nullcone {

std::string glabel_name(GLabel g) {
    switch (g) {
        case GLabel::A01: return "G.A_{0,1}";
        case GLabel::A0inf: return "G.A_{0,inf}";
        case GLabel::Ainf0: return "G.A_{inf,0}";
        case GLabel::B01: return "G.B_{0,1}";
        case GLabel::B00: return "G.B_{0,0}";
        case GLabel::Binf0: return "G.B_{inf,0}";
        case GLabel::Binf1: return "G.B_{inf,1}";
        case GLabel::C: return "G.C";
        case GLabel::D: return "G.D";
        case GLabel::E0: return "G.E_0";
        case GLabel::Einf: return "G.E_inf";
        case GLabel::O: return "G.O";
    }
    throw internal_error("unreachable G label");
}

std::string gl32_name(GL32Label g) {
    switch (g) {
        case GL32Label::A01: return "GL32.A_{0,1}";
        case GL32Label::B01: return "GL32.B_{0,1}";
        case GL32Label::B00: return "GL32.B_{0,0}";
        case GL32Label::C: return "GL32.C";
        case GL32Label::D: return "GL32.D";
        case GL32Label::E0: return "GL32.E_0";
        case GL32Label::O: return "GL32.O";
    }
    throw internal_error("unreachable GL32 label");
}

std::string stratum_name(StratumLabel s) {
    switch (s) {
        case StratumLabel::beta1: return "beta1";
        case StratumLabel::beta2: return "beta2";
        case StratumLabel::beta3: return "beta3";
        case StratumLabel::beta4: return "beta4";
        case StratumLabel::beta5: return "beta5";
    }
    throw internal_error("unreachable stratum");
}

std::array<Scalar, 3> stratum_triple(StratumLabel s) {
    Field f = Field::rationals();
    switch (s) {
        case StratumLabel::beta1:
            return {f.from_int(-1), f.from_int(0), f.from_int(1)};
        case StratumLabel::beta2:
            return {f.from_fraction(-2, 3), f.from_fraction(1, 3), f.from_fraction(1, 3)};
        case StratumLabel::beta3:
            return {f.from_fraction(-1, 3), f.from_fraction(-1, 3), f.from_fraction(2, 3)};
        case StratumLabel::beta4:
            return {f.from_fraction(-1, 2), f.from_int(0), f.from_fraction(1, 2)};
        case StratumLabel::beta5:
            return {f.from_int(0), f.from_int(0), f.from_int(0)};
    }
    throw internal_error("unreachable stratum");
}

MatrixTuple apply_gl2(const Mat& g, const MatrixTuple& a) {
    if (g.rows() != 2 || g.cols() != 2) throw shape_mismatch("apply_gl2 expects a 2x2 matrix");
    if (a.m() != 2) throw shape_mismatch("apply_gl2 expects a pair");
    if (g.det().is_zero()) throw error("apply_gl2: singular matrix");
    Mat c1 = a.component(0).scaled(g.at(0, 0)) + a.component(1).scaled(g.at(0, 1));
    Mat c2 = a.component(0).scaled(g.at(1, 0)) + a.component(1).scaled(g.at(1, 1));
    return MatrixTuple(a.n(), {c1, c2});
}

GLabel classify_G(const OrbitLabel& l) {
    switch (l.letter()) {
        case Letter::A:
            if (l.param(1).is_inf()) return GLabel::A0inf;
            if (l.param(0).is_inf()) return GLabel::Ainf0;
            return GLabel::A01;
        case Letter::B:
            if (l.param(0).is_inf())
                return l.param(1).value().is_zero() ? GLabel::Binf0 : GLabel::Binf1;
            return l.param(1).value().is_zero() ? GLabel::B00 : GLabel::B01;
        case Letter::C: return GLabel::C;
        case Letter::D: return GLabel::D;
        case Letter::E: return l.param(0).is_inf() ? GLabel::Einf : GLabel::E0;
        case Letter::O: return GLabel::O;
    }
    throw internal_error("unreachable letter");
}

GL32Label classify_GL32(const OrbitLabel& l) {
    switch (l.letter()) {
        case Letter::A: return GL32Label::A01;
        case Letter::B:
            return l.param(1).value().is_zero() ? GL32Label::B00 : GL32Label::B01;
        case Letter::C: return GL32Label::C;
        case Letter::D: return GL32Label::D;
        case Letter::E: return GL32Label::E0;
        case Letter::O: return GL32Label::O;
    }
    throw internal_error("unreachable letter");
}

std::vector<std::pair<GLabel, GLabel>> g_hasse_edges() {
    using G = GLabel;
    return {
        {G::A01, G::A0inf},  {G::A01, G::Ainf0},  {G::A01, G::B01},
        {G::B01, G::B00},    {G::B01, G::Binf1},  {G::A0inf, G::Binf1},
        {G::Ainf0, G::Binf1}, {G::Binf1, G::C},   {G::Binf1, G::D},
        {G::Binf1, G::Binf0}, {G::B00, G::Binf0}, {G::B00, G::E0},
        {G::Binf0, G::Einf}, {G::C, G::E0},       {G::D, G::E0},
        {G::E0, G::Einf},    {G::Einf, G::O},
    };
}

std::vector<std::pair<GL32Label, GL32Label>> gl32_hasse_edges() {
    using G = GL32Label;
    return {
        {G::A01, G::B01}, {G::B01, G::B00}, {G::B01, G::C}, {G::B01, G::D},
        {G::B00, G::E0},  {G::C, G::E0},    {G::D, G::E0},  {G::E0, G::O},
    };
}

std::vector<std::pair<StratumLabel, StratumLabel>> strata_hasse_edges() {
    using S = StratumLabel;
    return {{S::beta1, S::beta2}, {S::beta1, S::beta3}, {S::beta2, S::beta4},
            {S::beta3, S::beta4}, {S::beta4, S::beta5}};
}

namespace {

template <typename L, std::size_t N>
std::array<std::array<bool, N>, N> reachability(const std::vector<std::pair<L, L>>& edges) {
    std::array<std::array<bool, N>, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i][i] = true;
    for (auto [s, t] : edges) r[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = true;
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

}  // namespace

bool deg_le_G(GLabel a, GLabel b) {
    static const auto table = reachability<GLabel, 12>(g_hasse_edges());
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

bool deg_le_GL32(GL32Label a, GL32Label b) {
    static const auto table = reachability<GL32Label, 7>(gl32_hasse_edges());
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

StratumLabel hesselink_stratum(const OrbitLabel& l) {
    switch (l.letter()) {
        case Letter::O: return StratumLabel::beta5;
        case Letter::E: return StratumLabel::beta4;
        case Letter::D: return StratumLabel::beta3;
        case Letter::C: return StratumLabel::beta2;
        case Letter::A:
        case Letter::B: return StratumLabel::beta1;
    }
    throw internal_error("unreachable letter");
}

bool stratum_le(StratumLabel a, StratumLabel b) {
    static const auto table = reachability<StratumLabel, 5>(strata_hasse_edges());
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

namespace {

OrbitLabel g_base_label(GLabel g, Field f) {
    Scalar z = f.zero(), one = f.one();
    switch (g) {
        case GLabel::A01: return OrbitLabel::A(ExtParam::fin(z), ExtParam::fin(one));
        case GLabel::A0inf: return OrbitLabel::A(ExtParam::fin(z), ExtParam::inf());
        case GLabel::Ainf0: return OrbitLabel::A(ExtParam::inf(), ExtParam::fin(z));
        case GLabel::B01: return OrbitLabel::B(ExtParam::fin(z), ExtParam::fin(one));
        case GLabel::B00: return OrbitLabel::B(ExtParam::fin(z), ExtParam::fin(z));
        case GLabel::Binf0: return OrbitLabel::B(ExtParam::inf(), ExtParam::fin(z));
        case GLabel::Binf1: return OrbitLabel::B(ExtParam::inf(), ExtParam::fin(one));
        case GLabel::C: return OrbitLabel::C();
        case GLabel::D: return OrbitLabel::D();
        case GLabel::E0: return OrbitLabel::E(ExtParam::fin(z));
        case GLabel::Einf: return OrbitLabel::E(ExtParam::inf());
        case GLabel::O: return OrbitLabel::O();
    }
    throw internal_error("unreachable G label");
}

OrbitLabel gl32_base_label(GL32Label g, Field f) {
    Scalar z = f.zero(), one = f.one();
    switch (g) {
        case GL32Label::A01: return OrbitLabel::A(ExtParam::fin(z), ExtParam::fin(one));
        case GL32Label::B01: return OrbitLabel::B(ExtParam::fin(z), ExtParam::fin(one));
        case GL32Label::B00: return OrbitLabel::B(ExtParam::fin(z), ExtParam::fin(z));
        case GL32Label::C: return OrbitLabel::C();
        case GL32Label::D: return OrbitLabel::D();
        case GL32Label::E0: return OrbitLabel::E(ExtParam::fin(z));
        case GL32Label::O: return OrbitLabel::O();
    }
    throw internal_error("unreachable GL32 label");
}

}  // namespace

MatrixTuple g_representative(GLabel g, Field f) { return representative(g_base_label(g, f), f); }

MatrixTuple gl32_representative(GL32Label g, Field f) {
    return representative(gl32_base_label(g, f), f);
}

std::size_t g_orbit_dim(const MatrixTuple& rep) {
    Field f = rep.field();
    // Lie(H) = {(0 0; a b)}: two mixing directions on the second component.
    Mat y1(f, 2, 2), y2(f, 2, 2);
    y1.at(1, 0) = f.one();
    y2.at(1, 1) = f.one();
    return combined_tangent_rank(rep, {y1, y2});
}

std::size_t gl32_orbit_dim(const MatrixTuple& rep) {
    Field f = rep.field();
    std::vector<Mat> mixers;
    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j) mixers.push_back(Mat::unit(f, 2, i, j));
    return combined_tangent_rank(rep, mixers);
}

namespace {

template <typename L, typename Name, typename Edges>
std::string render_dot(const std::string& graph, const std::vector<L>& nodes, Name name,
                       Edges edges) {
    std::ostringstream os;
    os << "digraph " << graph << " {\n  rankdir=TB;\n  node [shape=box];\n";
    for (L n : nodes) os << "  \"" << name(n) << "\";\n";
    for (auto [s, t] : edges) os << "  \"" << name(s) << "\" -> \"" << name(t) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace

std::string g_hasse_dot() {
    std::vector<GLabel> nodes(all_glabels.begin(), all_glabels.end());
    return render_dot("gl3xH_degenerations", nodes, glabel_name, g_hasse_edges());
}

std::string gl32_hasse_dot() {
    std::vector<GL32Label> nodes(all_gl32_labels.begin(), all_gl32_labels.end());
    return render_dot("gl3xgl2_degenerations", nodes, gl32_name, gl32_hasse_edges());
}

std::string strata_hasse_dot() {
    std::vector<StratumLabel> nodes(all_strata.begin(), all_strata.end());
    return render_dot("hesselink_strata", nodes, stratum_name, strata_hasse_edges());
}

}  // namespace nullcone
