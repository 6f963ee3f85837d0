#pragma once

#include <string>
#include <vector>

#include "affbgg/rational.hpp"

namespace affbgg {

/// Exact data for one finite simple root system.
///
/// Roots are integer vectors in the simple-root basis; the invariant form is
/// the rational Gram matrix of the simple roots, normalized so that the
/// highest root has squared length 2. Everything else (coroots, rho, Coxeter
/// numbers, ...) is generated from the Cartan matrix, not tabulated.
struct RootSystemData {
    char type_letter = 'A';
    int rank = 1;

    /// cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i|alpha_j)/(alpha_i|alpha_i).
    IntMat cartan;

    /// Gram matrix (alpha_i|alpha_j), normalized to (theta|theta) = 2.
    RatMat gram;

    /// All positive roots, simple-root-basis coordinates, sorted by (height, lex).
    std::vector<IntVec> positive_roots;

    /// Fundamental coweights Lambda_i^vee as rational vectors in the
    /// simple-root basis: (alpha_j | Lambda_i^vee) = delta_ij.
    std::vector<RatVec> fundamental_coweights;

    /// Fundamental weights: <Lambda_i, alpha_j^vee> = delta_ij.
    std::vector<RatVec> fundamental_weights;

    RatVec rho;        ///< half-sum of positive roots
    RatVec rho_check;  ///< half-sum of positive coroots
    IntVec theta;      ///< highest root
    IntVec theta_short;
    std::int64_t h = 0;        ///< Coxeter number
    std::int64_t h_check = 0;  ///< dual Coxeter number
    int lacing = 1;            ///< r^vee, max Dynkin edge multiplicity

    // --- pairings -----------------------------------------------------------

    Rat form(const RatVec& x, const RatVec& y) const;
    Rat form(const IntVec& x, const RatVec& y) const { return form(to_rat(x), y); }
    Rat form(const IntVec& x, const IntVec& y) const { return form(to_rat(x), to_rat(y)); }

    /// <lambda, alpha^vee> = 2(lambda|alpha)/(alpha|alpha).
    Rat pair_coroot(const RatVec& lambda, const IntVec& alpha) const;

    bool is_root(const IntVec& v) const;
    bool is_positive_root(const IntVec& v) const;

    /// Simple reflection action matrix on simple-root-basis coordinates.
    IntMat simple_reflection_matrix(int i) const;
};

/// Names a finite simple type; rejects anything that is not one.
RootSystemData build_root_system(char type_letter, int rank);

/// Builds all derived data from an explicit Cartan matrix (used for Langlands
/// duals and Levi components, where node labels must stay aligned).
RootSystemData root_system_from_cartan(char type_letter, int rank, const IntMat& cartan);

/// The canonical type letter whose Cartan matrix matches this one up to a
/// permutation of the nodes.
char detect_type_letter(const IntMat& cartan);

/// 2 alpha / (alpha|alpha) as an exact rational vector; requires alpha a root.
RatVec coroot(const RootSystemData& rs, const IntVec& alpha);

/// Root system with transposed Cartan matrix.
RootSystemData langlands_dual(const RootSystemData& rs);

}  // namespace affbgg
