#pragma once

#include "nullcone/classify.hpp"

namespace nullcone {

// Degeneration order on orbit labels: true iff the orbit of b lies in the
// closure of the orbit of a. Closed form of the Hasse diagram:
//   every A family  -> C, D, every E, O
//   B[l,m]          -> E[l], O          B[inf,l] -> E[inf], O
//   C, D            -> every E, O
//   every E         -> O
// with no order between distinct labels sharing a letter.
bool deg_le_labels(const OrbitLabel& a, const OrbitLabel& b);

// When a does not degenerate to b (and a != b), a witness matrix phi over
// the free algebra with rk phi(rep a) < rk phi(rep b); absent when
// deg_le_labels(a, b) holds. On the 3x3 nullcone the hom order and the
// degeneration order coincide, so such a witness always exists.
std::optional<NCMatrix> hom_obstruction(const OrbitLabel& a, const OrbitLabel& b);

// Degeneration oracle on nilpotent pairs: classify both sides and compare
// labels.
bool deg_compare_pairs(const MatrixTuple& a, const MatrixTuple& b);

// Lexicographically first (i, j), i <= j, 1-based, such that components i and
// j generate the same algebra as the whole tuple (i = j is allowed: a single
// regular element generates a 2-dimensional algebra).
std::pair<std::size_t, std::size_t> generating_pair(const MatrixTuple& a);

// A two-variable polynomial phi with words of length <= 2 such that
// phi(A_i, A_j) = A_k, where x1 stands for component i and x2 for j.
// Throws not_in_algebra when no such expression exists.
NCPoly express_in_pair(const MatrixTuple& a, std::size_t i, std::size_t j, std::size_t k);

// Degeneration oracle for nilpotent 3x3 m-tuples, by reduction to a
// generating pair: B must satisfy the same length-<=2 expressions that cut
// out A's components, and the projected pairs must be comparable.
bool deg_compare_m(const MatrixTuple& a, const MatrixTuple& b);

// Endomorphism-dimension consistency: false exactly when two hom-comparable
// nilpotent pairs have equal endomorphism dimension yet lie in different
// orbits, which the dimension inequality forbids. Expects nilpotent 3x3
// pairs, where the hom order is decidable through the label oracle.
bool bongartz_consistency(const MatrixTuple& a, const MatrixTuple& b,
                          std::uint64_t seed = kDefaultSeed);

// DOT rendering of the degeneration Hasse diagram with parameterized family
// nodes ("A_{l,m}", "B_{inf,l}", ...).
std::string gl3_hasse_dot();

// --- embedded witness tables -------------------------------------------------

// A row of the separation / hom-order rank tables: patterns for the two
// labels, a guard on the parameter bindings, the witness polynomial, and the
// expected ranks. Expected ranks may be exact or one-sided bounds.
struct RankBound {
    enum Kind { Exact, AtLeast, AtMost } kind = Exact;
    std::size_t value = 0;
    bool matches(std::size_t r) const {
        switch (kind) {
            case Exact: return r == value;
            case AtLeast: return r >= value;
            case AtMost: return r <= value;
        }
        return false;
    }
    std::string str() const;
};

struct WitnessRow {
    std::string id;
    std::string description;
    // Parameter names drawn from {l, m, lp, mp} ("prime" = the second label).
    std::vector<std::string> params;
    std::function<bool(const std::map<std::string, Scalar>&)> guard;
    std::function<OrbitLabel(const std::map<std::string, Scalar>&)> label_a;
    std::function<OrbitLabel(const std::map<std::string, Scalar>&)> label_b;
    std::function<NCPoly(const std::map<std::string, Scalar>&, Field)> phi;
    RankBound rank_a, rank_b;
};

// The within-letter separation table (rows A1a..E2). Row A1a carries the
// derived guard l' - l + m' != 0: the printed witness x2 - l*x1 has rank 1,
// not 2, at A[l',m'] when m' = l - l', even though those orbits are distinct;
// the excluded pairs are separated by hom_obstruction instead.
std::vector<WitnessRow> separation_rows();

// The cross-letter rank table certifying non-degenerations with a dimension
// drop (rows H1..H9b).
std::vector<WitnessRow> hom_order_rows();

}  // namespace nullcone
