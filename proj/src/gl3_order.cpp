#include "nullcone/gl3_order.hpp"

#include <sstream>

namespace nullcone {

namespace {

enum class Fam { Af, Ai1, Ai2, Bf, Bi, C, D, Ef, Ei, O };

Fam family(const OrbitLabel& l) {
    switch (l.letter()) {
        case Letter::A:
            if (l.param(1).is_inf()) return Fam::Ai1;
            if (l.param(0).is_inf()) return Fam::Ai2;
            return Fam::Af;
        case Letter::B:
            return l.param(0).is_inf() ? Fam::Bi : Fam::Bf;
        case Letter::C: return Fam::C;
        case Letter::D: return Fam::D;
        case Letter::E: return l.param(0).is_inf() ? Fam::Ei : Fam::Ef;
        case Letter::O: return Fam::O;
    }
    throw internal_error("unreachable letter");
}

}  // namespace

bool deg_le_labels(const OrbitLabel& a, const OrbitLabel& b) {
    if (a == b) return true;
    switch (a.letter()) {
        case Letter::A:
            return b.letter() == Letter::C || b.letter() == Letter::D ||
                   b.letter() == Letter::E || b.letter() == Letter::O;
        case Letter::B:
            if (b.letter() == Letter::O) return true;
            if (b.letter() != Letter::E) return false;
            // B[l,m] reaches only E[l]; B[inf,l] reaches only E[inf]
            if (a.param(0).is_inf()) return b.param(0).is_inf();
            return !b.param(0).is_inf() && b.param(0).value() == a.param(0).value();
        case Letter::C:
        case Letter::D:
            return b.letter() == Letter::E || b.letter() == Letter::O;
        case Letter::E:
            return b.letter() == Letter::O;
        case Letter::O:
            return false;
    }
    throw internal_error("unreachable letter");
}

namespace {

Scalar fam_param1(const OrbitLabel& l, Field f) {
    switch (family(l)) {
        case Fam::Af: case Fam::Ai1: case Fam::Bf: case Fam::Ef:
            return l.param(0).value();
        case Fam::Ai2: case Fam::Bi:
            return l.param(1).value();
        default:
            return f.zero();
    }
}

Scalar fam_param2(const OrbitLabel& l, Field f) {
    if (family(l) == Fam::Af || family(l) == Fam::Bf) return l.param(1).value();
    return f.zero();
}

std::vector<NCMatrix> obstruction_candidates(const OrbitLabel& a, Field f) {
    NCPoly x1 = NCPoly::gen(f, 1), x2 = NCPoly::gen(f, 2);
    NCPoly x1sq = x1 * x1, x2sq = x2 * x2;
    NCMatrix vert(f, 2, 1);
    vert.at(0, 0) = x1;
    vert.at(1, 0) = x2;
    NCMatrix horiz(f, 1, 2);
    horiz.at(0, 0) = x1;
    horiz.at(0, 1) = x2;

    Scalar l = fam_param1(a, f), m = fam_param2(a, f);
    std::vector<NCMatrix> c;
    auto push = [&](const NCPoly& p) { c.push_back(NCMatrix::single(p)); };

    // witnesses with guaranteed low rank at a, per family
    switch (family(a)) {
        case Fam::Af:
            push(x2 - x1.scaled(l));
            push(x2 - x1.scaled(l + m));
            push(x1 * x2 - x1sq.scaled(l));
            push(x2 * x1 - x1sq.scaled(l + m));
            break;
        case Fam::Ai1:
            push(x2 - x1.scaled(l));
            push(x1 * x2);
            break;
        case Fam::Ai2:
            push(x2 - x1.scaled(l));
            push(x2 * x1);
            break;
        case Fam::Bf:
            push(x2 - x1.scaled(l) - x1sq.scaled(m));
            break;
        case Fam::Bi:
            push(x1 - x2sq.scaled(l));
            break;
        case Fam::C:
            c.push_back(vert);
            break;
        case Fam::D:
            c.push_back(horiz);
            break;
        case Fam::Ef:
            push(x2 - x1.scaled(l));
            c.push_back(vert);
            c.push_back(horiz);
            break;
        case Fam::Ei:
            push(x1);
            c.push_back(vert);
            c.push_back(horiz);
            break;
        case Fam::O:
            break;
    }
    // structural fallbacks
    push(x1);
    push(x2);
    push(x1 * x2);
    push(x2 * x1);
    c.push_back(vert);
    c.push_back(horiz);
    return c;
}

}  // namespace

std::optional<NCMatrix> hom_obstruction(const OrbitLabel& a, const OrbitLabel& b) {
    if (deg_le_labels(a, b)) return std::nullopt;
    Field f = Field::rationals();
    for (const OrbitLabel* l : {&a, &b})
        for (const ExtParam& p : l->params())
            if (!p.is_inf()) f = p.value().field();
    MatrixTuple ra = representative(a, f);
    MatrixTuple rb = representative(b, f);
    for (const NCMatrix& cand : obstruction_candidates(a, f)) {
        std::size_t rank_a = eval_ncmatrix_rank(cand, ra);
        std::size_t rank_b = eval_ncmatrix_rank(cand, rb);
        if (rank_a < rank_b) return cand;
    }
    throw internal_error("no rank witness separates " + a.str() + " from " + b.str());
}

bool deg_compare_pairs(const MatrixTuple& a, const MatrixTuple& b) {
    return deg_le_labels(classify_pair(a), classify_pair(b));
}

std::pair<std::size_t, std::size_t> generating_pair(const MatrixTuple& a) {
    if (a.n() != 3) throw shape_mismatch("generating_pair expects 3x3 tuples");
    std::size_t full = algebra_basis(a).size();
    for (std::size_t i = 0; i < a.m(); ++i)
        for (std::size_t j = i; j < a.m(); ++j) {
            MatrixTuple pair(3, {a.component(i), a.component(j)});
            if (algebra_basis(pair).size() == full) return {i + 1, j + 1};
        }
    throw internal_error("no generating pair in a nilpotent 3x3 tuple");
}

NCPoly express_in_pair(const MatrixTuple& a, std::size_t i, std::size_t j, std::size_t k) {
    if (i < 1 || j < 1 || k < 1 || i > a.m() || j > a.m() || k > a.m())
        throw shape_mismatch("express_in_pair: component index out of range");
    Field f = a.field();
    const Mat& x = a.component(i - 1);
    const Mat& y = a.component(j - 1);
    const std::vector<Word> words = {{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    std::vector<Mat> values = {x, y, x * x, x * y, y * x, y * y};

    std::size_t dim = a.n() * a.n();
    Mat sys(f, dim, words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        Mat fl = values[w].flatten_row();
        for (std::size_t r = 0; r < dim; ++r) sys.at(r, w) = fl.at(0, r);
    }
    Mat rhs(f, dim, 1);
    Mat tf = a.component(k - 1).flatten_row();
    for (std::size_t r = 0; r < dim; ++r) rhs.at(r, 0) = tf.at(0, r);
    auto sol = sys.solve(rhs);
    if (!sol)
        throw not_in_algebra("component " + std::to_string(k) +
                             " is outside the algebra generated by the pair");
    NCPoly phi(f);
    for (std::size_t w = 0; w < words.size(); ++w) phi = phi.plus_term(words[w], sol->at(w, 0));
    return phi;
}

bool deg_compare_m(const MatrixTuple& a, const MatrixTuple& b) {
    if (a.n() != 3 || b.n() != 3) throw shape_mismatch("deg_compare_m expects 3x3 tuples");
    if (a.m() != b.m()) throw shape_mismatch("deg_compare_m: tuple arities differ");
    if (!is_nilpotent(a) || !is_nilpotent(b)) throw error("deg_compare_m: non-nilpotent input");

    auto [i, j] = generating_pair(a);
    MatrixTuple pb(3, {b.component(i - 1), b.component(j - 1)});
    for (std::size_t k = 1; k <= a.m(); ++k) {
        if (k == i || k == j) continue;
        NCPoly phi = express_in_pair(a, i, j, k);
        if (eval_poly(phi, pb) != b.component(k - 1)) return false;
    }
    MatrixTuple pa(3, {a.component(i - 1), a.component(j - 1)});
    return deg_compare_pairs(pa, pb);
}

bool bongartz_consistency(const MatrixTuple& a, const MatrixTuple& b, std::uint64_t seed) {
    std::size_t ea = hom_dim(a, a), eb = hom_dim(b, b);
    if (ea != eb) return true;
    if (orbit_equal(a, b, seed)) return true;
    OrbitLabel la = classify_pair(a), lb = classify_pair(b);
    return !deg_le_labels(la, lb) && !deg_le_labels(lb, la);
}

std::string gl3_hasse_dot() {
    std::ostringstream os;
    os << "digraph gl3_degenerations {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    const char* nodes[] = {"A_{l,m}", "A_{l,inf}", "A_{inf,l}", "B_{l,m}",
                           "B_{inf,l}", "C", "D", "E_l", "E_inf", "O"};
    for (const char* n : nodes) os << "  \"" << n << "\";\n";
    auto edge = [&](const char* s, const char* t, const char* guard = nullptr) {
        os << "  \"" << s << "\" -> \"" << t << "\"";
        if (guard) os << " [label=\"" << guard << "\"]";
        os << ";\n";
    };
    for (const char* afam : {"A_{l,m}", "A_{l,inf}", "A_{inf,l}"}) {
        edge(afam, "C");
        edge(afam, "D");
    }
    edge("B_{l,m}", "E_l", "nu = l");
    edge("B_{inf,l}", "E_inf");
    for (const char* cd : {"C", "D"}) {
        edge(cd, "E_l", "every l");
        edge(cd, "E_inf");
    }
    edge("E_l", "O");
    edge("E_inf", "O");
    os << "}\n";
    return os.str();
}

std::string RankBound::str() const {
    switch (kind) {
        case Exact: return std::to_string(value);
        case AtLeast: return ">=" + std::to_string(value);
        case AtMost: return "<=" + std::to_string(value);
    }
    return "?";
}

namespace {

using Params = std::map<std::string, Scalar>;

Scalar get(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw internal_error("missing table parameter " + name);
    return it->second;
}

OrbitLabel lab_Af(const Scalar& l, const Scalar& m) {
    return OrbitLabel::A(ExtParam::fin(l), ExtParam::fin(m));
}
OrbitLabel lab_Ai1(const Scalar& l) { return OrbitLabel::A(ExtParam::fin(l), ExtParam::inf()); }
OrbitLabel lab_Ai2(const Scalar& l) { return OrbitLabel::A(ExtParam::inf(), ExtParam::fin(l)); }
OrbitLabel lab_Bf(const Scalar& l, const Scalar& m) {
    return OrbitLabel::B(ExtParam::fin(l), ExtParam::fin(m));
}
OrbitLabel lab_Bi(const Scalar& l) { return OrbitLabel::B(ExtParam::inf(), ExtParam::fin(l)); }
OrbitLabel lab_Ef(const Scalar& l) { return OrbitLabel::E(ExtParam::fin(l)); }

RankBound exact(std::size_t v) { return RankBound{RankBound::Exact, v}; }
RankBound at_least(std::size_t v) { return RankBound{RankBound::AtLeast, v}; }
RankBound at_most(std::size_t v) { return RankBound{RankBound::AtMost, v}; }

NCPoly x2_minus_l_x1(const Params& p, Field f) {
    return NCPoly::gen(f, 2) - NCPoly::gen(f, 1).scaled(get(p, "l"));
}

}  // namespace

std::vector<WitnessRow> separation_rows() {
    std::vector<WitnessRow> rows;

    rows.push_back(WitnessRow{
        "A1a", "A[l,m] vs A[l',m'], l != l'", {"l", "m", "lp", "mp"},
        [](const Params& p) {
            Scalar l = get(p, "l"), m = get(p, "m"), lp = get(p, "lp"), mp = get(p, "mp");
            // derived guard: the witness has rank 1 on the target when m' = l - l'
            return !m.is_zero() && !mp.is_zero() && l != lp && !(lp - l + mp).is_zero();
        },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Af(get(p, "lp"), get(p, "mp")); },
        x2_minus_l_x1, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "A1b", "A[l,m] vs A[l,m'], m != m'", {"l", "m", "mp"},
        [](const Params& p) {
            Scalar m = get(p, "m"), mp = get(p, "mp");
            return !m.is_zero() && !mp.is_zero() && m != mp;
        },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "mp")); },
        [](const Params& p, Field f) {
            return NCPoly::gen(f, 2) - NCPoly::gen(f, 1).scaled(get(p, "l") + get(p, "m"));
        },
        exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "A2", "A[l,inf] vs A[l',inf]", {"l", "lp"},
        [](const Params& p) { return get(p, "l") != get(p, "lp"); },
        [](const Params& p) { return lab_Ai1(get(p, "l")); },
        [](const Params& p) { return lab_Ai1(get(p, "lp")); },
        x2_minus_l_x1, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "A3", "A[inf,l] vs A[inf,l']", {"l", "lp"},
        [](const Params& p) { return get(p, "l") != get(p, "lp"); },
        [](const Params& p) { return lab_Ai2(get(p, "l")); },
        [](const Params& p) { return lab_Ai2(get(p, "lp")); },
        x2_minus_l_x1, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "A4", "A[l,m] vs A[l',inf]", {"l", "m", "lp"},
        [](const Params& p) { return !get(p, "m").is_zero(); },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Ai1(get(p, "lp")); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1); }, exact(2), exact(1)});

    rows.push_back(WitnessRow{
        "A5", "A[l,m] vs A[inf,l']", {"l", "m", "lp"},
        [](const Params& p) { return !get(p, "m").is_zero(); },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Ai2(get(p, "lp")); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1); }, exact(2), exact(1)});

    rows.push_back(WitnessRow{
        "A6", "A[l,inf] vs A[inf,l']", {"l", "lp"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Ai1(get(p, "l")); },
        [](const Params& p) { return lab_Ai2(get(p, "lp")); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1) * NCPoly::gen(f, 2); },
        exact(0), exact(1)});

    rows.push_back(WitnessRow{
        "B1", "B[l,m] vs B[l',m']", {"l", "m", "lp", "mp"},
        [](const Params& p) {
            return !(get(p, "l") == get(p, "lp") && get(p, "m") == get(p, "mp"));
        },
        [](const Params& p) { return lab_Bf(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Bf(get(p, "lp"), get(p, "mp")); },
        [](const Params& p, Field f) {
            NCPoly x1 = NCPoly::gen(f, 1);
            return NCPoly::gen(f, 2) - x1.scaled(get(p, "l")) - (x1 * x1).scaled(get(p, "m"));
        },
        exact(0), at_least(1)});

    rows.push_back(WitnessRow{
        "B2", "B[inf,l] vs B[inf,l']", {"l", "lp"},
        [](const Params& p) { return get(p, "l") != get(p, "lp"); },
        [](const Params& p) { return lab_Bi(get(p, "l")); },
        [](const Params& p) { return lab_Bi(get(p, "lp")); },
        [](const Params& p, Field f) {
            NCPoly x2 = NCPoly::gen(f, 2);
            return NCPoly::gen(f, 1) - (x2 * x2).scaled(get(p, "l"));
        },
        exact(0), exact(1)});

    rows.push_back(WitnessRow{
        "B3", "B[l,m] vs B[inf,l']", {"l", "m", "lp"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Bf(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Bi(get(p, "lp")); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1); }, exact(2), at_most(1)});

    rows.push_back(WitnessRow{
        "E1", "E[l] vs E[l']", {"l", "lp"},
        [](const Params& p) { return get(p, "l") != get(p, "lp"); },
        [](const Params& p) { return lab_Ef(get(p, "l")); },
        [](const Params& p) { return lab_Ef(get(p, "lp")); },
        x2_minus_l_x1, exact(0), exact(1)});

    rows.push_back(WitnessRow{
        "E2", "E[l] vs E[inf]", {"l"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Ef(get(p, "l")); },
        [](const Params&) { return OrbitLabel::E(ExtParam::inf()); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1); }, exact(1), exact(0)});

    return rows;
}

std::vector<WitnessRow> hom_order_rows() {
    std::vector<WitnessRow> rows;

    rows.push_back(WitnessRow{
        "H1", "A[inf,l] vs B[l',m']", {"l", "lp", "mp"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Ai2(get(p, "l")); },
        [](const Params& p) { return lab_Bf(get(p, "lp"), get(p, "mp")); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1); }, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "H2", "A[inf,l] vs B[inf,l']", {"l", "lp"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Ai2(get(p, "l")); },
        [](const Params& p) { return lab_Bi(get(p, "lp")); },
        x2_minus_l_x1, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "H3a", "A[l,m] vs B[l',m'], l != l'", {"l", "m", "lp", "mp"},
        [](const Params& p) { return !get(p, "m").is_zero() && get(p, "l") != get(p, "lp"); },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Bf(get(p, "lp"), get(p, "mp")); },
        x2_minus_l_x1, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "H3b", "A[l,m] vs B[l,m']", {"l", "m", "mp"},
        [](const Params& p) { return !get(p, "m").is_zero(); },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Bf(get(p, "l"), get(p, "mp")); },
        [](const Params& p, Field f) {
            Scalar l = get(p, "l"), m = get(p, "m");
            Scalar one = f.one();
            return NCPoly::gen(f, 1).scaled(one + l / m) - NCPoly::gen(f, 2).scaled(one / m);
        },
        exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "H4", "A[l,m] vs B[inf,l']", {"l", "m", "lp"},
        [](const Params& p) { return !get(p, "m").is_zero(); },
        [](const Params& p) { return lab_Af(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Bi(get(p, "lp")); },
        x2_minus_l_x1, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "H5", "A[l,inf] vs B[l',m']", {"l", "lp", "mp"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Ai1(get(p, "l")); },
        [](const Params& p) { return lab_Bf(get(p, "lp"), get(p, "mp")); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1); }, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "H6", "A[l,inf] vs B[inf,l']", {"l", "lp"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Ai1(get(p, "l")); },
        [](const Params& p) { return lab_Bi(get(p, "lp")); },
        x2_minus_l_x1, exact(1), exact(2)});

    rows.push_back(WitnessRow{
        "H7", "B[l,m] vs E[l'], l' != l", {"l", "m", "lp"},
        [](const Params& p) { return get(p, "l") != get(p, "lp"); },
        [](const Params& p) { return lab_Bf(get(p, "l"), get(p, "m")); },
        [](const Params& p) { return lab_Ef(get(p, "lp")); },
        [](const Params& p, Field f) {
            NCPoly x1 = NCPoly::gen(f, 1);
            return NCPoly::gen(f, 2) - x1.scaled(get(p, "l")) - (x1 * x1).scaled(get(p, "m"));
        },
        exact(0), exact(1)});

    rows.push_back(WitnessRow{
        "H8", "B[l,m] vs E[inf]", {"l", "m"},
        [](const Params&) { return true; },
        [](const Params& p) { return lab_Bf(get(p, "l"), get(p, "m")); },
        [](const Params&) { return OrbitLabel::E(ExtParam::inf()); },
        [](const Params& p, Field f) {
            NCPoly x1 = NCPoly::gen(f, 1);
            return NCPoly::gen(f, 2) - x1.scaled(get(p, "l")) - (x1 * x1).scaled(get(p, "m"));
        },
        exact(0), exact(1)});

    rows.push_back(WitnessRow{
        "H9a", "B[inf,0] vs E[l']", {"l", "lp"},
        [](const Params& p) { return get(p, "l").is_zero(); },
        [](const Params& p) { return lab_Bi(get(p, "l")); },
        [](const Params& p) { return lab_Ef(get(p, "lp")); },
        [](const Params&, Field f) { return NCPoly::gen(f, 1); }, exact(0), exact(1)});

    rows.push_back(WitnessRow{
        "H9b", "B[inf,l] vs E[l'], l != 0", {"l", "lp"},
        [](const Params& p) { return !get(p, "l").is_zero(); },
        [](const Params& p) { return lab_Bi(get(p, "l")); },
        [](const Params& p) { return lab_Ef(get(p, "lp")); },
        [](const Params& p, Field f) {
            NCPoly x2 = NCPoly::gen(f, 2);
            return NCPoly::gen(f, 1) - (x2 * x2).scaled(get(p, "l"));
        },
        exact(0), exact(1)});

    return rows;
}

}  // namespace nullcone
