// Acceptance suite: runs every top-level correctness criterion with exact
// arithmetic (all tolerances are zero) and prints one pass/fail line each.

#include <chrono>
#include <iostream>

#include "nullcone/verify.hpp"

using namespace nullcone;

int main() {
    VerifyOptions opt;  // default seed, full {-2..3} grid, 100 conjugations, 50 lifts

    struct Criterion {
        const char* title;
        CheckResult (*run)(const VerifyOptions&);
    };
    const Criterion criteria[] = {
        {"criterion 1: separation table ranks over the grid", check_separation_table},
        {"criterion 2: hom-order table ranks over the grid", check_hom_order_table},
        {"criterion 3: degeneration curves verify", check_degeneration_curves},
        {"criterion 4: mixed-action curves verify", check_mixing_curves},
        {"criterion 5: orbit dimensions match levels and stabilizers", check_orbit_dimensions},
        {"criterion 6: classifier fixed on representatives and orbits", check_classifier},
        {"criterion 7: order oracle complete (related xor witnessed)", check_order_completeness},
        {"criterion 8: partial-order axioms and edge dimension drop", check_partial_order_axioms},
        {"criterion 9: coarsening monotonicity into G, GL32, strata", check_coarsening_monotonicity},
        {"criterion 10: m-tuple reduction against the pair oracle", check_m_reduction},
        {"criterion 11: 2x2 oracle and kron-rank consistency", check_deg2_oracle},
        {"criterion 12: orbit-dimension/hom-dimension equation", check_dim_hom_equation},
    };

    bool all_pass = true;
    auto t0 = std::chrono::steady_clock::now();
    for (const Criterion& c : criteria) {
        CheckResult r;
        try {
            r = c.run(opt);
        } catch (const std::exception& e) {
            r = CheckResult{c.title, false, e.what()};
        }
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << c.title;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << std::endl;
    }

    // supporting whole-corpus checks (edge coverage by curves, table soundness)
    for (auto run : {check_curve_edge_coverage, check_witness_soundness}) {
        CheckResult r;
        try {
            r = run(opt);
        } catch (const std::exception& e) {
            r = CheckResult{"supporting check", false, e.what()};
        }
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << "supporting: " << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << std::endl;
    }

    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " (" << dt << " ms)"
              << std::endl;
    return all_pass ? 0 : 1;
}
