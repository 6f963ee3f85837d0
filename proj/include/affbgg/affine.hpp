#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affbgg/root_system.hpp"

namespace affbgg {

/// Real or imaginary affine root: classical part + n*delta.
/// Real iff the classical part is nonzero.
struct AffineRoot {
    IntVec classical;
    std::int64_t n = 0;

    bool is_imaginary() const {
        for (auto c : classical)
            if (c != 0) return false;
        return true;
    }
    bool is_real() const { return !is_imaginary(); }

    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.n == b.n && a.classical == b.classical;
    }
    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.classical < b.classical;
    }

    AffineRoot negated() const {
        AffineRoot r{classical, -n};
        for (auto& c : r.classical) c = -c;
        return r;
    }
};

/// Positivity: classical > 0 and n >= 0, classical < 0 and n >= 1, or
/// imaginary with n >= 1.
bool is_positive(const AffineRoot& alpha);

/// Weight lambda-bar + level*Lambda_0 + delta_coeff*delta, exact rationals.
struct AffineWeight {
    RatVec classical;
    Rat level;
    Rat delta_coeff;

    friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
        return a.classical == b.classical && a.level == b.level &&
               a.delta_coeff == b.delta_coeff;
    }
};

/// rho = rho-bar + h_check * Lambda_0.
AffineWeight affine_rho(const RootSystemData& rs);

/// Element t_mu * ybar of the (extended) affine Weyl group in canonical form:
/// the translation coweight mu (simple-root-basis coordinates) applied after
/// the finite part.
struct AffineWeylElement {
    RatVec translation;
    IntMat finite;

    friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
        return a.translation == b.translation && a.finite == b.finite;
    }
    friend bool operator!=(const AffineWeylElement& a, const AffineWeylElement& b) {
        return !(a == b);
    }
    friend bool operator<(const AffineWeylElement& a, const AffineWeylElement& b);
};

AffineWeylElement affine_identity(int rank);
bool is_identity(const AffineWeylElement& w);

/// (t_mu1 w1)(t_mu2 w2) = t_{mu1 + w1 mu2} (w1 w2), exact.
AffineWeylElement mult(const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement inverse(const AffineWeylElement& w);
AffineWeylElement translation_element(const RatVec& mu, int rank);

/// s_i for i = 0..rank; s_0 = t_{theta^vee} s_theta.
AffineWeylElement simple_affine_reflection(const RootSystemData& rs, int i);

/// s_alpha = t_{-n alphabar^vee} s_alphabar; imaginary roots rejected.
AffineWeylElement reflection_from_root(const RootSystemData& rs, const AffineRoot& alpha);

/// Image of a real or imaginary root under w; rejects lattice mismatches
/// (non-integral delta coefficient).
AffineRoot act_on_root(const RootSystemData& rs, const AffineWeylElement& w,
                       const AffineRoot& alpha);

/// Level-preserving action: the finite part acts linearly, the translation
/// shifts the classical part by level*mu and corrects the delta coefficient by
/// -(lambdabar|mu) - (mu|mu)/2 * level.
AffineWeight act_on_weight(const RootSystemData& rs, const AffineWeylElement& w,
                           const AffineWeight& lambda);

/// w . lambda = w(lambda + rho) - rho.
AffineWeight dot_action(const RootSystemData& rs, const AffineWeylElement& w,
                        const AffineWeight& lambda);

/// Closed-form length on W^e:
/// sum over alpha in positive roots of |(alpha|mu)| or |1-(alpha|mu)| per the
/// sign of y^{-1}(alpha). Requires mu in the coweight lattice.
std::int64_t length(const RootSystemData& rs, const AffineWeylElement& w);

/// ell^y(w) = ell(y^{-1} w) - ell(y^{-1}).
std::int64_t twisted_length(const RootSystemData& rs, const AffineWeylElement& w,
                            const AffineWeylElement& y);

/// ell^{inf/2}(t_mu y) = ell(y) - 2(rho|mu).
std::int64_t semi_infinite_length(const RootSystemData& rs, const AffineWeylElement& w);

/// mu in Q^vee: integer coordinates over the simple coroots.
bool in_coroot_lattice(const RootSystemData& rs, const RatVec& mu);
/// mu in P^vee: (alpha_i|mu) integral for all simple roots.
bool in_coweight_lattice(const RootSystemData& rs, const RatVec& mu);

/// Coordinates over the simple coroots (c_i with mu = sum c_i alpha_i^vee).
RatVec coroot_coordinates(const RootSystemData& rs, const RatVec& mu);
RatVec coweight_from_coroot_coordinates(const RootSystemData& rs, const RatVec& coords);

/// Reduced word over s_0..s_rank; rejects elements outside W (translation not
/// in the coroot lattice, i.e. a nontrivial diagram-automorphism part).
std::vector<int> reduced_word(const RootSystemData& rs, const AffineWeylElement& w);

/// Element grammar: '*'-separated factors, each 't[c1,...,cn]' (coroot-basis
/// coordinates, rationals allowed) or a run of 's<digit>' letters; 'e' is the
/// identity.
AffineWeylElement parse_element(const RootSystemData& rs, const std::string& text);
std::string format_element(const RootSystemData& rs, const AffineWeylElement& w);

}  // namespace affbgg
