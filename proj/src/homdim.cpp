#include "nullcone/homdim.hpp"

#include <random>

namespace nullcone {

std::vector<Mat> intertwiner_basis(const MatrixTuple& a, const MatrixTuple& b) {
    if (a.m() != b.m()) throw shape_mismatch("intertwiner_basis: tuple arities differ");
    if (a.field() != b.field()) throw field_mismatch("intertwiner_basis: fields differ");
    Field f = a.field();
    std::size_t na = a.n(), nb = b.n();
    std::size_t unknowns = nb * na;  // T[r][c], row-major
    Mat sys(f, a.m() * unknowns, unknowns);
    std::size_t eq = 0;
    for (std::size_t i = 0; i < a.m(); ++i) {
        const Mat& ai = a.component(i);
        const Mat& bi = b.component(i);
        // (T A_i - B_i T)[r][c] = sum_k A_i[k][c] T[r][k] - sum_k B_i[r][k] T[k][c]
        for (std::size_t r = 0; r < nb; ++r)
            for (std::size_t c = 0; c < na; ++c, ++eq) {
                for (std::size_t k = 0; k < na; ++k)
                    sys.at(eq, r * na + k) += ai.at(k, c);
                for (std::size_t k = 0; k < nb; ++k)
                    sys.at(eq, k * na + c) -= bi.at(r, k);
            }
    }
    std::vector<Mat> basis;
    for (const Mat& v : sys.kernel_basis()) {
        Mat t(f, nb, na);
        for (std::size_t r = 0; r < nb; ++r)
            for (std::size_t c = 0; c < na; ++c) t.at(r, c) = v.at(r * na + c, 0);
        basis.push_back(std::move(t));
    }
    return basis;
}

std::size_t hom_dim(const MatrixTuple& a, const MatrixTuple& b) {
    return intertwiner_basis(a, b).size();
}

std::size_t orbit_dim(const MatrixTuple& a) { return a.n() * a.n() - hom_dim(a, a); }

std::size_t conjugation_tangent_rank(const MatrixTuple& a) {
    Field f = a.field();
    std::size_t n = a.n();
    Mat cols(f, a.m() * n * n, n * n);
    std::size_t col = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s, ++col) {
            Mat x = Mat::unit(f, n, r + 1, s + 1);
            for (std::size_t i = 0; i < a.m(); ++i) {
                Mat bracket = x * a.component(i) - a.component(i) * x;
                Mat fl = bracket.flatten_row();
                for (std::size_t k = 0; k < n * n; ++k) cols.at(i * n * n + k, col) = fl.at(0, k);
            }
        }
    return cols.rank();
}

std::size_t combined_tangent_rank(const MatrixTuple& a, const std::vector<Mat>& mixers) {
    Field f = a.field();
    std::size_t n = a.n(), m = a.m();
    Mat base(f, m * n * n, n * n + mixers.size());
    std::size_t col = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s, ++col) {
            Mat x = Mat::unit(f, n, r + 1, s + 1);
            for (std::size_t i = 0; i < m; ++i) {
                Mat bracket = x * a.component(i) - a.component(i) * x;
                Mat fl = bracket.flatten_row();
                for (std::size_t k = 0; k < n * n; ++k) base.at(i * n * n + k, col) = fl.at(0, k);
            }
        }
    for (const Mat& y : mixers) {
        if (y.rows() != m || y.cols() != m)
            throw shape_mismatch("combined_tangent_rank: mixer must be m x m");
        for (std::size_t i = 0; i < m; ++i) {
            Mat dir(f, n, n);
            for (std::size_t j = 0; j < m; ++j) dir = dir + a.component(j).scaled(y.at(i, j));
            Mat fl = dir.flatten_row();
            for (std::size_t k = 0; k < n * n; ++k) base.at(i * n * n + k, col) = fl.at(0, k);
        }
        ++col;
    }
    return base.rank();
}

namespace {

Scalar random_scalar(Field f, std::mt19937_64& rng) {
    if (f.is_rational()) {
        std::uniform_int_distribution<long> dist(-3, 3);
        return f.from_int(dist(rng));
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, f.prime() - 1);
    return f.from_int(static_cast<long>(dist(rng)));
}

}  // namespace

std::optional<Mat> find_invertible_in_span(const std::vector<Mat>& basis, std::uint64_t seed) {
    if (basis.empty()) return std::nullopt;
    std::size_t n = basis[0].rows();
    if (basis[0].cols() != n) return std::nullopt;
    Field f = basis[0].field();
    std::size_t d = basis.size();

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 64; ++trial) {
        Mat m(f, n, n);
        for (std::size_t k = 0; k < d; ++k) m = m + basis[k].scaled(random_scalar(f, rng));
        if (!m.det().is_zero()) return m;
    }

    // Deterministic exhaustive grid: n+1 values per coordinate suffice since
    // det has degree <= n in each coefficient; a prime p <= n forces full
    // enumeration of GF(p)^d, which is exact outright.
    std::size_t grid = n + 1;
    if (!f.is_rational() && f.prime() <= n) grid = f.prime();
    std::vector<Scalar> values;
    for (std::size_t v = 0; v < grid; ++v) values.push_back(f.from_int(static_cast<long>(v)));

    std::vector<std::size_t> digits(d, 0);
    Mat m(f, n, n);  // all digits zero
    while (true) {
        if (!m.det().is_zero()) return m;
        std::size_t k = 0;
        while (k < d) {
            if (digits[k] + 1 < grid) {
                ++digits[k];
                m = m + basis[k];  // step one grid value, spacing is 1
                break;
            }
            m = m - basis[k].scaled(values[digits[k]]);
            digits[k] = 0;
            ++k;
        }
        if (k == d) break;
    }
    return std::nullopt;
}

std::optional<HomViolation> hom_le_check(const MatrixTuple& a, const MatrixTuple& b,
                                         const std::vector<NCMatrix>& witnesses) {
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        std::size_t ra = eval_ncmatrix_rank(witnesses[i], a);
        std::size_t rb = eval_ncmatrix_rank(witnesses[i], b);
        if (ra < rb) return HomViolation{i, ra, rb};
    }
    return std::nullopt;
}

namespace {

bool is_scalar_matrix(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m.at(i, j).is_zero()) return false;
    for (std::size_t i = 1; i < m.rows(); ++i)
        if (m.at(i, i) != m.at(0, 0)) return false;
    return true;
}

// Dimension of the unital algebra generated by the components; for 2x2
// tuples this is 4 exactly when the module is simple over every extension.
std::size_t unital_algebra_dim(const MatrixTuple& a) {
    std::vector<Mat> basis{Mat::identity(a.field(), a.n())};
    for (std::size_t i = 0; i < a.m(); ++i) {
        if (span_dim(basis) == a.n() * a.n()) break;
        std::vector<Mat> with = basis;
        with.push_back(a.component(i));
        if (span_dim(with) > basis.size()) basis = std::move(with);
    }
    bool grew = true;
    while (grew && basis.size() < a.n() * a.n()) {
        grew = false;
        for (std::size_t i = 0; i < a.m() && !grew; ++i)
            for (const Mat& b : basis) {
                Mat prod = a.component(i) * b;
                std::vector<Mat> with = basis;
                with.push_back(prod);
                if (span_dim(with) > basis.size()) {
                    basis = std::move(with);
                    grew = true;
                    break;
                }
            }
    }
    return basis.size();
}

// Lines spanned by base-field eigenvectors of a 2x2 matrix.
std::vector<Mat> eigen_lines_2x2(const Mat& m) {
    Field f = m.field();
    std::vector<Scalar> eigenvalues;
    Scalar tr = m.at(0, 0) + m.at(1, 1);
    Scalar det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (f.is_rational()) {
        mpq_class disc = (tr * tr - f.from_int(4) * det).rational();
        mpq_class root;
        if (sqrt_rational(disc, root)) {
            Scalar s = f.from_rational(root);
            Scalar half = f.from_fraction(1, 2);
            eigenvalues.push_back((tr + s) * half);
            if (!s.is_zero()) eigenvalues.push_back((tr - s) * half);
        }
    } else if (f.prime() == 2) {
        // brute force over the two field elements
        for (long t = 0; t < 2; ++t) {
            Scalar lam = f.from_int(t);
            if ((lam * lam - tr * lam + det).is_zero()) eigenvalues.push_back(lam);
        }
    } else {
        Scalar disc = tr * tr - f.from_int(4) * det;
        std::uint64_t root;
        if (sqrt_mod_p(disc.residue(), f.prime(), root)) {
            Scalar s = f.from_int(static_cast<long>(root));
            Scalar half = f.from_int(2).inverse();
            eigenvalues.push_back((tr + s) * half);
            if (!s.is_zero()) eigenvalues.push_back((tr - s) * half);
        }
    }
    std::vector<Mat> lines;
    for (const Scalar& lam : eigenvalues) {
        Mat shifted = m - Mat::identity(f, 2).scaled(lam);
        for (const Mat& v : shifted.kernel_basis()) lines.push_back(v);
    }
    return lines;
}

bool line_stable(const Mat& v, const Mat& m) {
    Mat img = m * v;
    return Mat::hstack(v, img).rank() <= 1;
}

}  // namespace

MatrixTuple semisimplify_2x2(const MatrixTuple& a) {
    if (a.n() != 2) throw shape_mismatch("semisimplify_2x2 expects 2x2 tuples");
    Field f = a.field();

    std::optional<Mat> common;
    std::size_t first_nonscalar = a.m();
    for (std::size_t i = 0; i < a.m(); ++i)
        if (!is_scalar_matrix(a.component(i))) {
            first_nonscalar = i;
            break;
        }
    if (first_nonscalar == a.m()) {
        // every component scalar: already a diagonal tuple of characters
        return a;
    }
    // candidate lines: the standard basis directions first (so triangular
    // input reads off its own diagonal), then the eigendirections of the
    // first non-scalar component
    std::vector<Mat> candidates;
    for (std::size_t k = 0; k < 2; ++k) {
        Mat v(f, 2, 1);
        v.at(k, 0) = f.one();
        candidates.push_back(std::move(v));
    }
    for (Mat& v : eigen_lines_2x2(a.component(first_nonscalar)))
        candidates.push_back(std::move(v));
    for (const Mat& v : candidates) {
        bool ok = true;
        for (std::size_t i = 0; i < a.m(); ++i)
            if (!line_stable(v, a.component(i))) {
                ok = false;
                break;
            }
        if (ok) {
            common = v;
            break;
        }
    }

    if (!common) {
        if (unital_algebra_dim(a) == 4) return a;  // simple module, closed orbit
        throw needs_field_extension(
            "2x2 tuple has a common eigenvector only over a field extension");
    }

    // Complete the common eigenvector to a basis and read off the characters.
    Mat p(f, 2, 2);
    p.at(0, 0) = common->at(0, 0);
    p.at(1, 0) = common->at(1, 0);
    for (long e = 0; e < 2; ++e) {
        p.at(0, 1) = f.from_int(e == 0 ? 1 : 0);
        p.at(1, 1) = f.from_int(e == 0 ? 0 : 1);
        if (!p.det().is_zero()) break;
    }
    Mat pinv = *p.inverse();
    std::vector<Mat> comps;
    for (std::size_t i = 0; i < a.m(); ++i) {
        Mat t = pinv * a.component(i) * p;
        if (!t.at(1, 0).is_zero()) throw internal_error("semisimplify: basis change failed");
        Mat d(f, 2, 2);
        d.at(0, 0) = t.at(0, 0);
        d.at(1, 1) = t.at(1, 1);
        comps.push_back(std::move(d));
    }
    return MatrixTuple(2, std::move(comps));
}

bool deg2_compare(const MatrixTuple& a, const MatrixTuple& b, std::uint64_t seed) {
    if (a.n() != 2 || b.n() != 2) throw shape_mismatch("deg2_compare expects 2x2 tuples");
    if (a.m() != b.m()) throw shape_mismatch("deg2_compare: tuple arities differ");
    auto iso = [&](const MatrixTuple& x, const MatrixTuple& y) {
        return find_invertible_in_span(intertwiner_basis(x, y), seed).has_value();
    };
    if (iso(a, b)) return true;
    return iso(semisimplify_2x2(a), b);
}

}  // namespace nullcone
