#pragma once

#include <string>
#include <vector>

#include "helix/catalog.hpp"
#include "helix/p2.hpp"
#include "helix/perp.hpp"
#include "helix/tree.hpp"

namespace helix {

struct Check {
    std::string name;
    bool pass = true;
    long long count = 0;
    std::string witness;
    long long millis = 0;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool all_pass() const;
};

/// The distinguished bundle recomputed from the complementary entries of
/// its foundation: perp(f0, f2, f3) at mark 1, perp(f1, f3, f0(4)) at
/// mark 2. Dual route to the mutation formula.
ChernCharacter perp_complement(const Foundation& f, int mark);

// Individual invariant checks (exposed so negative controls can feed
// corrupted inputs).
Check check_pairing_properties(unsigned samples);
Check check_epsilon_base_values(EpsilonMap& eps);
Check check_exceptionality_sweep(EpsilonMap& eps, unsigned max_order);
Check check_monotone_injective(EpsilonMap& eps, unsigned max_order);
Check check_perp_consistency(EpsilonMap& eps, unsigned max_order);
Check check_parent_positivity(EpsilonMap& eps, unsigned max_order);
Check check_resolution_additivity(EpsilonMap& eps, unsigned max_order);
Check check_twist_equivariance(EpsilonMap& eps, unsigned max_order);
Check check_gg_classifier(EpsilonMap& eps, unsigned max_order);
Check check_helix_relations(const GammaTree& tree);
Check check_tree_structure(const GammaTree& tree);
Check check_tree_index_bijection(EpsilonMap& eps, const GammaTree& tree);
Check check_perp_vs_mutation(const GammaTree& tree);
Check check_mutation_enumeration(const GammaTree& tree);
Check check_p2_monotone_integrality(unsigned max_order);
Check check_p2_delta_zero();
Check check_p2_rank_growth(unsigned max_order);
Check check_catalog_audit(EpsilonMap& eps);

/// Runs every module's invariant suite at the given bounds.
VerificationReport run_verification(unsigned max_order, unsigned tree_depth);

/// Human rendering (includes per-check wall clock).
std::string report_to_text(const VerificationReport& report);

/// Machine rendering; deliberately excludes timing so identical runs are
/// byte-identical.
std::string report_to_json(const VerificationReport& report);

}  // namespace helix
