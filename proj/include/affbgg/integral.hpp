#pragma once

#include <optional>
#include <vector>

#include "affbgg/affine.hpp"
#include "affbgg/root_system.hpp"

namespace affbgg {

/// Outcome of the admissibility test for a level k: k + h_check = p/q in
/// lowest terms with p bounded below by h_check or h according to whether q is
/// prime to the lacing number.
struct AdmissibleNumber {
    bool admissible = false;
    std::int64_t p = 0;
    std::int64_t q = 0;
    bool dual_case = false;  // (r_check, q) = r_check
};

AdmissibleNumber classify_level(const RootSystemData& rs, const Rat& k);

/// <lambda + rho, beta^vee> integral; beta must be real.
bool is_integral_root(const RootSystemData& rs, const AffineWeight& lambda,
                      const AffineRoot& beta);

/// <lambda + rho, alpha^vee> avoids {0,-1,-2,...} on all positive real roots.
/// Exact: for each classical root the pairing is affine-linear in the delta
/// multiple with nonzero slope, so only finitely many candidates need checking.
/// Rejects the critical level k = -h_check.
bool is_regular_dominant(const RootSystemData& rs, const AffineWeight& lambda);
/// Dual condition: the pairings avoid {0,1,2,...}.
bool is_regular_antidominant(const RootSystemData& rs, const AffineWeight& lambda);

/// Realization of Delta(k Lambda_0), Pi(k Lambda_0) and W(k Lambda_0) inside
/// the ambient affine data for an admissible level k.
///
/// The integral Weyl group is handled as an abstract affine Weyl group over
/// `abstract_type` (the base system, or its Langlands dual when q shares the
/// lacing number) plus a realization homomorphism into the ambient group:
/// translations map through `lattice_map`, finite parts conjugate by
/// `finite_map`. All length and order machinery runs on abstract elements.
struct IntegralSystem {
    RootSystemData base;
    Rat level;
    std::int64_t p = 0;
    std::int64_t q = 1;
    bool dual_case = false;

    RootSystemData abstract_type;

    /// Pi(k Lambda_0) realized in the ambient system: alpha_1..alpha_l then
    /// alpha_0-dot (= -theta + q delta, or coroot -theta_s^vee + qK).
    std::vector<AffineRoot> pi_lambda;

    /// Images of the abstract simple affine generators s_1..s_l, s_0-dot.
    std::vector<AffineWeylElement> realized_generators;

    RatMat lattice_map;      // abstract coweight (root-basis) -> ambient coweight
    RatMat lattice_map_inv;
    RatMat finite_map;       // ambient finite part = M * abstract * M^{-1}
    RatMat finite_map_inv;

    AffineWeylElement realize(const AffineWeylElement& abstract_elt) const;

    /// Inverse of realize; empty when the ambient element is not in W(kL0).
    std::optional<AffineWeylElement> abstractize(const AffineWeylElement& ambient) const;

    /// Realized positive roots of Delta(k Lambda_0) with |delta part| <=
    /// max_delta, straight from the integrality definition at k Lambda_0.
    std::vector<AffineRoot> realized_positive_roots(int max_delta) const;

    AffineWeight vacuum_weight() const {
        return AffineWeight{RatVec(base.rank, Rat(0)), level, Rat(0)};
    }
};

/// Rejects non-admissible levels.
IntegralSystem integral_system(const RootSystemData& rs, const Rat& k);

struct AdmissibleWeight {
    AffineWeight weight;
    AffineWeylElement twist;      // y with weight = y . base_weight
    AffineWeight base_weight;     // element of Pr_k^+
};

/// Pr_k^+: admissible weights of level k, classically dominant integral.
/// Exhaustive: iterates over dominant integral classical weights with
/// coordinates <= p, a bound certified at runtime on the first excluded shell.
std::vector<AdmissibleWeight> enumerate_pr_plus(const IntegralSystem& sys);

/// Pr_{k,y} = y . Pr_k^+ for y in W^e with y(Pi(k Lambda_0)) positive;
/// twists violating the positivity condition are rejected.
std::vector<AdmissibleWeight> pr_k_y(const IntegralSystem& sys, const AffineWeylElement& y);

}  // namespace affbgg
