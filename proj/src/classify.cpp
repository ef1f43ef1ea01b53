#include "nullcone/classify.hpp"

#include <sstream>

namespace nullcone {

namespace {

// A subspace of K^3 as the rows of a reduced row echelon matrix; the RREF
// form makes every derived choice deterministic.
Mat subspace_from_columns(Field f, const std::vector<Mat>& cols) {
    if (cols.empty()) return Mat(f, 0, 3);
    Mat stacked(f, cols.size(), 3);
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) stacked.at(i, j) = cols[i].at(j, 0);
    std::vector<std::size_t> pivots;
    Mat e = rref(stacked, pivots);
    Mat basis(f, pivots.size(), 3);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < 3; ++j) basis.at(r, j) = e.at(r, j);
    return basis;
}

std::vector<Mat> matrix_columns(const Mat& m) {
    std::vector<Mat> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Mat v(m.field(), m.rows(), 1);
        bool nonzero = false;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            v.at(i, 0) = m.at(i, j);
            nonzero = nonzero || !v.at(i, 0).is_zero();
        }
        if (nonzero) cols.push_back(std::move(v));
    }
    return cols;
}

Mat column_space(Field f, const std::vector<Mat>& mats) {
    std::vector<Mat> cols;
    for (const Mat& m : mats) {
        auto c = matrix_columns(m);
        cols.insert(cols.end(), c.begin(), c.end());
    }
    return subspace_from_columns(f, cols);
}

bool subspace_contains(const Mat& space, const Mat& v) {
    if (space.rows() == 0) return v.is_zero();
    Mat with = Mat::vstack(space, v.transpose());
    return with.rank() == space.rows();
}

Mat subspace_row_as_column(const Mat& space, std::size_t r) {
    Mat v(space.field(), 3, 1);
    for (std::size_t j = 0; j < 3; ++j) v.at(j, 0) = space.at(r, j);
    return v;
}

Mat standard_vector(Field f, std::size_t k) {
    Mat v(f, 3, 1);
    v.at(k, 0) = f.one();
    return v;
}

// Builds the change-of-basis matrix from a flag: e3' spans g1, e2' completes
// it inside g2 (a 2-dimensional subspace containing g1), e1' completes K^3
// with the first standard basis vector available.
Mat flag_to_basis(Field f, const Mat& g1, const Mat& g2) {
    Mat e3 = g1;
    Mat e2(f, 3, 1);
    bool found = false;
    for (std::size_t r = 0; r < g2.rows() && !found; ++r) {
        Mat cand = subspace_row_as_column(g2, r);
        if (Mat::hstack(e3, cand).rank() == 2) {
            e2 = cand;
            found = true;
        }
    }
    if (!found) throw internal_error("flag_to_basis: could not complete inside G2");
    Mat e1(f, 3, 1);
    found = false;
    for (std::size_t k = 0; k < 3 && !found; ++k) {
        Mat cand = standard_vector(f, k);
        if (Mat::hstack(Mat::hstack(e3, e2), cand).rank() == 3) {
            e1 = cand;
            found = true;
        }
    }
    if (!found) throw internal_error("flag_to_basis: could not complete to a basis");
    Mat p(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        p.at(i, 0) = e1.at(i, 0);
        p.at(i, 1) = e2.at(i, 0);
        p.at(i, 2) = e3.at(i, 0);
    }
    return p;
}

std::vector<Mat> length_two_products(const MatrixTuple& a) {
    std::vector<Mat> prods;
    for (std::size_t i = 0; i < a.m(); ++i)
        for (std::size_t j = 0; j < a.m(); ++j) prods.push_back(a.component(i) * a.component(j));
    return prods;
}

}  // namespace

bool is_nilpotent(const MatrixTuple& a) {
    if (a.n() != 3) throw shape_mismatch("nilpotency test expects 3x3 tuples");
    for (std::size_t i = 0; i < a.m(); ++i)
        for (std::size_t j = 0; j < a.m(); ++j) {
            Mat ij = a.component(i) * a.component(j);
            if (ij.is_zero()) continue;
            for (std::size_t k = 0; k < a.m(); ++k)
                if (!(ij * a.component(k)).is_zero()) return false;
        }
    return true;
}

std::vector<Mat> algebra_basis(const MatrixTuple& a) {
    if (!is_nilpotent(a)) throw error("algebra_basis: tuple is not nilpotent");
    std::vector<Mat> words;
    for (std::size_t i = 0; i < a.m(); ++i) words.push_back(a.component(i));
    for (const Mat& p : length_two_products(a)) words.push_back(p);
    std::vector<Mat> basis;
    for (const Mat& w : words) {
        if (w.is_zero()) continue;
        std::vector<Mat> with = basis;
        with.push_back(w);
        if (span_dim(with) > basis.size()) basis = std::move(with);
    }
    if (basis.size() > 3) throw internal_error("nilpotent 3x3 algebra of dimension > 3");
    return basis;
}

Mat FlagBasis::apply(const Mat& c) const {
    auto inv = basis.inverse();
    if (!inv) throw internal_error("flag basis is singular");
    return *inv * c * basis;
}

MatrixTuple FlagBasis::apply(const MatrixTuple& a) const {
    auto inv = basis.inverse();
    if (!inv) throw internal_error("flag basis is singular");
    return a.conjugated(*inv);
}

FlagBasis triangularize(const MatrixTuple& a) {
    if (!is_nilpotent(a)) throw error("triangularize: tuple is not nilpotent");
    Field f = a.field();

    Mat u = column_space(f, a.components());
    Mat l = column_space(f, length_two_products(a));
    if (u.rows() > 2 || l.rows() > 1)
        throw internal_error("nilpotent tuple with overlarge image spaces");

    Mat g1(f, 3, 1);
    if (l.rows() == 1) {
        g1 = subspace_row_as_column(l, 0);
    } else if (u.rows() > 0) {
        g1 = subspace_row_as_column(u, 0);
    } else {
        g1 = standard_vector(f, 0);
    }

    // G2 must contain the image space and satisfy S . G2 <= G1.
    std::vector<Mat> v_gens{g1};
    for (std::size_t r = 0; r < u.rows(); ++r) v_gens.push_back(subspace_row_as_column(u, r));
    Mat v = subspace_from_columns(f, v_gens);
    Mat g2(f, 0, 3);
    if (v.rows() == 2) {
        g2 = v;
    } else {
        for (std::size_t k = 0; k < 3; ++k) {
            Mat cand = standard_vector(f, k);
            if (!subspace_contains(v, cand)) {
                v_gens.push_back(cand);
                g2 = subspace_from_columns(f, v_gens);
                break;
            }
        }
    }
    if (g2.rows() != 2) throw internal_error("triangularize: no 2-dimensional middle space");

    Mat span_g1 = subspace_from_columns(f, {g1});
    for (std::size_t i = 0; i < a.m(); ++i)
        for (std::size_t r = 0; r < 2; ++r)
            if (!subspace_contains(span_g1, a.component(i) * subspace_row_as_column(g2, r)))
                throw internal_error("triangularize: middle space is not mapped into G1");

    FlagBasis flag{flag_to_basis(f, g1, g2)};
    for (std::size_t i = 0; i < a.m(); ++i)
        if (!flag.apply(a.component(i)).is_strictly_lower())
            throw internal_error("triangularize: conjugate is not strictly lower triangular");
    return flag;
}

OrbitLabel classify_pair(const MatrixTuple& a) {
    if (a.n() != 3 || a.m() != 2) throw shape_mismatch("classify_pair expects 3x3 pairs");
    if (!is_nilpotent(a)) throw error("classify_pair: tuple is not nilpotent");
    Field f = a.field();
    const Mat& a1 = a.component(0);
    const Mat& a2 = a.component(1);

    std::vector<Mat> basis = algebra_basis(a);
    std::size_t d = basis.size();

    if (d == 0) return OrbitLabel::O();

    if (d == 1) {
        if (!a1.is_zero()) {
            auto coords = membership_coords({a1}, a2);
            if (!coords) throw internal_error("1-dimensional algebra with independent pair");
            return OrbitLabel::E(ExtParam::fin((*coords)[0]));
        }
        if (a2.is_zero()) throw internal_error("zero pair classified with algebra dimension 1");
        return OrbitLabel::E(ExtParam::inf());
    }

    if (d == 2) {
        std::vector<Mat> prods = length_two_products(a);
        bool squares_vanish = true;
        for (const Mat& p : prods)
            if (!p.is_zero()) squares_vanish = false;

        if (!squares_vanish) {
            // letter B: the algebra is spanned by a regular element and its square
            if (a1.rank() == 2) {
                auto coords = membership_coords({a1, a1 * a1}, a2);
                if (!coords) throw internal_error("B classification: membership failed");
                return OrbitLabel::B(ExtParam::fin((*coords)[0]), ExtParam::fin((*coords)[1]));
            }
            if (a2.rank() != 2)
                throw internal_error("2-dimensional algebra with squares but no regular element");
            auto coords = membership_coords({a2 * a2}, a1);
            if (!coords) throw internal_error("B[inf] classification: membership failed");
            return OrbitLabel::B(ExtParam::inf(), ExtParam::fin((*coords)[0]));
        }

        // letter C or D, by the relative position of the two image lines
        Mat im1 = column_space(f, {a1});
        Mat im2 = column_space(f, {a2});
        if (im1.rows() != 1 || im2.rows() != 1)
            throw internal_error("square-zero pair without two image lines");
        Mat both = column_space(f, {a1, a2});
        if (both.rows() == 2) return OrbitLabel::C();
        if (both.rows() == 1) return OrbitLabel::D();
        throw internal_error("image lines in impossible position");
    }

    // d == 3, letter A. The canonical flag: G1 = image of the squares,
    // G2 = kernel of their spanning element.
    std::vector<Mat> prods = length_two_products(a);
    if (span_dim(prods) != 1)
        throw internal_error("3-dimensional algebra whose squares do not span a line");
    Mat w(f, 3, 3);
    for (const Mat& p : prods)
        if (!p.is_zero()) {
            w = p;
            break;
        }
    Mat g1_space = column_space(f, {w});
    if (g1_space.rows() != 1) throw internal_error("square element of rank != 1");
    Mat g1 = subspace_row_as_column(g1_space, 0);

    std::vector<Mat> ker = w.kernel_basis();
    Mat g2 = subspace_from_columns(f, ker);
    if (g2.rows() != 2) throw internal_error("square element with kernel of dimension != 2");
    if (!subspace_contains(g2, g1)) throw internal_error("square image not inside its kernel");

    Mat p = flag_to_basis(f, g1, g2);
    FlagBasis flag{p};
    Mat m1 = flag.apply(a1);
    Mat m2 = flag.apply(a2);
    if (!m1.is_strictly_lower() || !m2.is_strictly_lower())
        throw internal_error("A classification: canonical flag did not triangularize");

    Scalar s1 = m1.at(1, 0), t1 = m1.at(2, 1);
    Scalar s2 = m2.at(1, 0), t2 = m2.at(2, 1);
    if ((s1.is_zero() && t1.is_zero()) || (s2.is_zero() && t2.is_zero()))
        throw internal_error("A classification: a component vanishes modulo the square");
    if ((s1 * t2 - s2 * t1).is_zero())
        throw internal_error("A classification: graded parts are dependent");

    if (t1.is_zero()) return OrbitLabel::A(ExtParam::fin(s2 / s1), ExtParam::inf());
    if (s1.is_zero()) return OrbitLabel::A(ExtParam::inf(), ExtParam::fin(t2 / t1));
    return OrbitLabel::A(ExtParam::fin(s2 / s1), ExtParam::fin(t2 / t1 - s2 / s1));
}

bool orbit_equal(const MatrixTuple& a, const MatrixTuple& b, std::uint64_t seed) {
    if (a.n() != b.n() || a.m() != b.m())
        throw shape_mismatch("orbit_equal: tuples of different shape");
    return find_invertible_in_span(intertwiner_basis(a, b), seed).has_value();
}

std::pair<OrbitLabel, Mat> conjugation_witness(const MatrixTuple& a, std::uint64_t seed) {
    OrbitLabel label = classify_pair(a);
    MatrixTuple rep = representative(label, a.field());
    auto g = find_invertible_in_span(intertwiner_basis(a, rep), seed);
    if (!g) {
        std::ostringstream os;
        os << "no invertible intertwiner onto the representative of " << label.str()
           << " for tuple " << a.str() << " over " << a.field().describe();
        throw internal_error(os.str());
    }
    if (a.conjugated(*g) != rep)
        throw internal_error("conjugation witness does not map onto the representative");
    return {label, *g};
}

}  // namespace nullcone
