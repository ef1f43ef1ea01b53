#pragma once

#include "nullcone/homdim.hpp"
#include "nullcone/labels.hpp"

namespace nullcone {

// Nullcone membership for 3x3 tuples: the components generate a nilpotent
// algebra iff every product of three components vanishes.
bool is_nilpotent(const MatrixTuple& a);

// Basis of the non-unital algebra generated by the components of a nilpotent
// 3x3 tuple. Words of length three vanish, so the algebra is spanned by the
// words of length one and two; its dimension is at most 3.
std::vector<Mat> algebra_basis(const MatrixTuple& a);

// A complete flag adapted to a nilpotent tuple: conjugating by the inverse of
// the basis matrix makes every component strictly lower triangular.
struct FlagBasis {
    Mat basis;  // columns are the flag-adapted basis vectors e1', e2', e3'

    // Component expressed in the flag basis: basis^-1 * c * basis.
    Mat apply(const Mat& c) const;
    // Conjugates the whole tuple into the flag basis.
    MatrixTuple apply(const MatrixTuple& a) const;
};

FlagBasis triangularize(const MatrixTuple& a);

// Canonical label of the orbit of a nilpotent 3x3 pair.
OrbitLabel classify_pair(const MatrixTuple& a);

// Whether two tuples lie in one orbit, i.e. whether the intertwiner space
// contains an invertible element. Exact: the randomized search falls back to
// an exhaustive evaluation grid.
bool orbit_equal(const MatrixTuple& a, const MatrixTuple& b,
                 std::uint64_t seed = kDefaultSeed);

// Classifies and also produces an invertible g with g A g^-1 equal to the
// canonical representative, verified by exact multiplication.
std::pair<OrbitLabel, Mat> conjugation_witness(const MatrixTuple& a,
                                               std::uint64_t seed = kDefaultSeed);

}  // namespace nullcone
