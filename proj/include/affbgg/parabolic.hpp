#pragma once

#include <vector>

#include "affbgg/bruhat.hpp"
#include "affbgg/integral.hpp"

namespace affbgg {

/// Semi-infinite parabolic data for a subset S of the simple roots: the
/// classical subsystem with its components, the affine simple system
/// Pi_S = S u {-theta_i + delta}, and per-component root data.
struct ParabolicData {
    RootSystemData ambient;
    std::vector<int> S;  // 0-based simple indices, sorted

    struct Component {
        std::vector<int> nodes;       // ambient simple indices
        IntVec theta;                 // highest root of the component, ambient coords
        IntVec theta_short;
        RootSystemData data;          // component with its own normalization
    };
    std::vector<Component> components;

    std::vector<AffineRoot> pi_s;            // S as affine roots, then -theta_i + delta
    std::vector<IntVec> classical_s_plus;    // positive roots of Delta_S (ambient coords)
};

ParabolicData parabolic_data(const RootSystemData& rs, const std::vector<int>& S);

/// w^{-1}(Pi_S) positive — sufficient for w^{-1}(Delta_{S,+}) positive since
/// Pi_S is a simple system for Delta_{S,+}.
bool is_minimal_rep(const ParabolicData& pd, const AffineWeylElement& w);

/// Unique factorization w = u v with u in W_S, v in W^S, by stripping
/// beta in Pi_S with w^{-1}(beta) negative from the left (lexicographically
/// first beta for determinism).
struct ParabolicFactors {
    AffineWeylElement u;
    AffineWeylElement v;
};
ParabolicFactors decompose(const ParabolicData& pd, const AffineWeylElement& w);

/// Arithmetic characterization of W^S for v = t_mu y: alpha(mu) = 0 when
/// y^{-1}(alpha) is positive and 1 when negative, over classical Delta_{S,+}.
bool minimal_rep_criterion(const ParabolicData& pd, const AffineWeylElement& v);

/// k_0 = k + h_check; k_i + h_i_check = (2/(theta_i|theta_i)) (k + h_check).
struct LeviLevels {
    Rat k0;
    std::vector<Rat> k_i;
};
LeviLevels levi_levels(const ParabolicData& pd, const Rat& k);

/// One component of a restricted weight: classical part in the component's
/// own simple-root basis plus the component level.
struct RestrictedWeight {
    RatVec classical;
    Rat level;

    AffineWeight as_weight() const { return AffineWeight{classical, level, Rat(0)}; }

    friend bool operator==(const RestrictedWeight& a, const RestrictedWeight& b) {
        return a.classical == b.classical && a.level == b.level;
    }
};

/// Per-component restriction: classical pairings transfer, component level
/// from (lambda_l + rho_i)(K_i) = (2/(theta_i|theta_i)) (lambda + rho)(K).
std::vector<RestrictedWeight> restrict_weight(const ParabolicData& pd,
                                              const AffineWeight& lambda);

/// Transfer of an element of W_{S_i} to the component's own affine Weyl
/// group: the finite block restricts, coroot coordinates carry over.
AffineWeylElement component_element(const ParabolicData& pd, int comp,
                                    const AffineWeylElement& w);

/// Admissibility of a weight: regular dominant and Delta(lambda) rationally
/// spanning, decided exactly.
bool is_admissible_weight(const RootSystemData& rs, const AffineWeight& lambda);

struct BorelWeilEntry {
    AffineWeylElement w_abstract;   // element of W(lambda)^S, abstract coordinates
    AffineWeylElement w_realized;
    std::vector<RestrictedWeight> restriction;  // (w . lambda)_l per component
};

/// Index set of the parabolic Borel-Weil theorem: W(lambda)^S cap
/// {ell^{inf/2} = p} within the window, with restricted weights attached.
/// Each restricted weight is checked dominant-admissible for its component;
/// violations raise verification_error. S must be a single simple root unless
/// assume_remark lifts the restriction.
std::vector<BorelWeilEntry> borel_weil_index(const IntegralSystem& sys,
                                             const AffineWeight& lambda,
                                             const std::vector<int>& S,
                                             std::int64_t grade_p,
                                             const EnumWindow& window,
                                             bool assume_remark = false);

}  // namespace affbgg
