#pragma once

#include <functional>
#include <map>

#include "nullcone/labels.hpp"
#include "nullcone/ratfunc.hpp"

namespace nullcone {

using ParamMap = std::map<std::string, Scalar>;

// One degeneration curve: a one-parameter family of group elements whose
// conjugates of the source representative extend to eps = 0 with limit in
// the target orbit. g is the 3x3 conjugating family; h, when present, is a
// 2x2 family mixing the two components before conjugation.
struct CurveRow {
    std::string id;
    std::string description;
    std::vector<std::string> params;
    std::function<bool(const ParamMap&)> guard;
    std::function<OrbitLabel(const ParamMap&, Field)> source;
    std::function<OrbitLabel(const ParamMap&, Field)> target;
    std::function<EpsMat(const ParamMap&, Field)> g;
    std::function<EpsMat(const ParamMap&, Field)> h;  // empty when unused
};

// The twelve curves realizing the edges of the degeneration diagram.
std::vector<CurveRow> degeneration_curves();

// The nine curves realizing the extra edges of the mixed-action diagram.
std::vector<CurveRow> mixing_curves();

// Derived curves completing edge coverage: the top edges of the mixed-action
// diagram (asserted there by irreducibility, without printed curves) and the
// scaling curves into the zero orbit.
std::vector<CurveRow> extra_curves();

struct CurveReport {
    std::string row_id;
    std::string binding;       // e.g. "l=1,m=-2"
    bool invertible = false;   // det g (and det h) nonzero as rational functions
    bool pole_free = false;    // conjugated tuple extends to eps = 0
    bool source_matches = false;  // generic specialization classifies to the source
    bool target_matches = false;  // the limit classifies to the target
    std::string limit_label, target_label;
    bool pass = false;
    std::string detail;
};

// (g A1 g^-1, ..., g Am g^-1) over the rational function field, after the
// optional component mixing h. Throws singular_curve_matrix when g (or h)
// is singular.
std::vector<EpsMat> conjugate_curve(const EpsMat& g, const EpsMat* h, const MatrixTuple& a);

// Runs one curve at one parameter binding and reports the outcome;
// classification mismatches are reported, not thrown.
CurveReport verify_degeneration(const CurveRow& row, const ParamMap& binding, Field f);

// Runs every table row over the grid (values for each parameter, guards
// respected).
std::vector<CurveReport> verify_all_curves(const std::vector<CurveRow>& rows,
                                           const std::vector<long>& grid_values, Field f);

// Limit tuple of a conjugated curve at eps = 0.
MatrixTuple curve_limit(const std::vector<EpsMat>& conjugated, Field f);

}  // namespace nullcone
