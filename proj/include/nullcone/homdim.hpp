#pragma once

#include <cstdint>
#include <optional>

#include "nullcone/free_algebra.hpp"

namespace nullcone {

inline constexpr std::uint64_t kDefaultSeed = 123456789;

// Basis of the intertwiner space Hom(V_A, V_B) = {T : T A_i = B_i T}.
// T maps the space of A to the space of B, so T is n_B x n_A. Every returned
// matrix satisfies the intertwining equations exactly.
std::vector<Mat> intertwiner_basis(const MatrixTuple& a, const MatrixTuple& b);

// dim Hom(V_A, V_B), by solving the stacked linear system exactly.
std::size_t hom_dim(const MatrixTuple& a, const MatrixTuple& b);

// Orbit dimension under simultaneous conjugation: n^2 - dim End(V_A).
std::size_t orbit_dim(const MatrixTuple& a);

// Rank of the infinitesimal conjugation action gl_n -> (K^{n x n})^m,
// X -> ([X, A_1], ..., [X, A_m]). Equals orbit_dim; kept as a second,
// independent route to the same number.
std::size_t conjugation_tangent_rank(const MatrixTuple& a);

// Rank of the combined action of gl_n and extra tangent directions acting by
// component mixing: each y in mixers is an m x m matrix contributing
// (sum_j y[i][j] A_j)_i. Used for orbit dimensions under product groups.
std::size_t combined_tangent_rank(const MatrixTuple& a, const std::vector<Mat>& mixers);

// Searches a matrix span for an invertible element: a few random
// combinations first, then an exhaustive evaluation grid. The determinant has
// degree <= n in each combination coefficient, so a grid with n+1 distinct
// values per coordinate decides existence exactly (over GF(p) with p <= n the
// whole finite space is enumerated instead).
std::optional<Mat> find_invertible_in_span(const std::vector<Mat>& basis,
                                           std::uint64_t seed = kDefaultSeed);

struct HomViolation {
    std::size_t witness_index;
    std::size_t rank_a, rank_b;
};

// First witness phi with rk phi(A) < rk phi(B), or nullopt when all pass.
// Absence over a finite list does not prove the hom inequality; complete
// witness sets for nilpotent 3x3 pairs live in the label-level oracle.
std::optional<HomViolation> hom_le_check(const MatrixTuple& a, const MatrixTuple& b,
                                         const std::vector<NCMatrix>& witnesses);

// Semisimplification of a 2x2 tuple: if the components share an eigenvector
// over the base field, the diagonal tuple of the two character sequences;
// if the module is simple (over any extension), the tuple itself.
// Throws needs_field_extension when a common eigenvector exists only over a
// proper extension.
MatrixTuple semisimplify_2x2(const MatrixTuple& a);

// Complete degeneration oracle for 2x2 tuples: true iff B is isomorphic to A
// or to the semisimplification of A.
bool deg2_compare(const MatrixTuple& a, const MatrixTuple& b,
                  std::uint64_t seed = kDefaultSeed);

}  // namespace nullcone
