#pragma once

#include "nullcone/curves.hpp"
#include "nullcone/gl3_order.hpp"
#include "nullcone/group_orbits.hpp"

namespace nullcone {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, first failure otherwise
};

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    int random_conjugations = 100;  // per label and field
    int lift_samples = 50;          // per tuple arity
    std::vector<long> grid = {-2, -1, 0, 1, 2, 3};
};

// All labels with parameters drawn from the given values, respecting the
// label invariants (second A parameter nonzero, and so on).
std::vector<OrbitLabel> labels_on_grid(Field f, const std::vector<long>& values);

// The family-level Hasse edges of the degeneration diagram instantiated on a
// label grid (used for edge-wise dimension checks).
std::vector<std::pair<OrbitLabel, OrbitLabel>> gl3_hasse_edges_on_grid(
    Field f, const std::vector<long>& values);

// Individual checks; each runs one acceptance criterion.
CheckResult check_separation_table(const VerifyOptions& opt);
CheckResult check_hom_order_table(const VerifyOptions& opt);
CheckResult check_degeneration_curves(const VerifyOptions& opt);
CheckResult check_mixing_curves(const VerifyOptions& opt);
CheckResult check_orbit_dimensions(const VerifyOptions& opt);
CheckResult check_classifier(const VerifyOptions& opt);
CheckResult check_order_completeness(const VerifyOptions& opt);
CheckResult check_partial_order_axioms(const VerifyOptions& opt);
CheckResult check_coarsening_monotonicity(const VerifyOptions& opt);
CheckResult check_m_reduction(const VerifyOptions& opt);
CheckResult check_deg2_oracle(const VerifyOptions& opt);
CheckResult check_dim_hom_equation(const VerifyOptions& opt);

// Additional whole-corpus checks run by the verification command: curve
// coverage of every diagram edge, and soundness of the witness tables along
// true degenerations.
CheckResult check_curve_edge_coverage(const VerifyOptions& opt);
CheckResult check_witness_soundness(const VerifyOptions& opt);

// Everything, in a fixed order.
std::vector<CheckResult> verify_paper(const VerifyOptions& opt);

}  // namespace nullcone
