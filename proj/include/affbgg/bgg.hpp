#pragma once

#include <map>
#include <string>
#include <vector>

#include "affbgg/bruhat.hpp"
#include "affbgg/gf2.hpp"
#include "affbgg/integral.hpp"

namespace affbgg {

/// Signs on cover edges, keyed (upper, lower) in the order sense; every
/// square in scope anticommutes: e(w4,w2)e(w2,w1) + e(w4,w3)e(w3,w1) = 0.
struct SignAssignment {
    std::map<std::pair<AffineWeylElement, AffineWeylElement>, int> sign;
    EnumWindow scope;

    /// Cover edges left unsigned because a case-III/IV partner element fell
    /// outside the window; empty for plain solve_signs output.
    std::vector<std::pair<AffineWeylElement, AffineWeylElement>> boundary_unsigned;

    int sign_of(const AffineWeylElement& upper, const AffineWeylElement& lower) const;
    bool has(const AffineWeylElement& upper, const AffineWeylElement& lower) const {
        return sign.count({upper, lower}) > 0;
    }
};

/// Solves the GF(2) system (one equation per square: the four edge bits sum
/// to 1) and certifies every square of the graph against the result.
/// Inconsistency raises verification_error naming the offending squares.
SignAssignment solve_signs(const CoverGraph& graph);

/// Re-checks the anticommutation equations independently of the solver.
bool verify_signs(const CoverGraph& graph, const SignAssignment& signs);

struct ComplexKind {
    enum Tag { one_sided, twisted, two_sided } tag = one_sided;
    AffineWeylElement twist;  // abstract coordinates, for twisted

    static ComplexKind make_one_sided() { return {one_sided, {}}; }
    static ComplexKind make_twisted(AffineWeylElement y) { return {twisted, std::move(y)}; }
    static ComplexKind make_two_sided() { return {two_sided, {}}; }
};

/// d^2 verification classes: pairs at grade distance 2 joined by exactly two
/// intermediates must cancel; one-intermediate pairs are recorded as
/// requiring module-level vanishing; anything else falsifies the build.
struct VerificationReport {
    int two_intermediate_ok = 0;
    std::vector<std::pair<AffineWeylElement, AffineWeylElement>> module_level;
    std::vector<std::string> failures;
};

/// Truncation of a (one-sided / twisted / two-sided) BGG complex: graded
/// element sets of W(lambda) in abstract coordinates, sign-labeled
/// differential edges, and the verification report.
struct ComplexTruncation {
    AffineWeight lambda;  // ambient weight
    ComplexKind kind;
    std::map<std::int64_t, std::vector<AffineWeylElement>> grades;

    struct Edge {
        AffineWeylElement from;  // domain of the differential (the order-upper element)
        AffineWeylElement to;
        std::int64_t from_grade = 0;
        int sign = 0;
    };
    std::vector<Edge> edges;
    EnumWindow window;
    std::int64_t grade_min = 0, grade_max = 0;
    VerificationReport report;
};

/// Builds the truncated complex for an admissible ambient weight lambda:
/// grade sets by the kind's length function, edges from covers in the kind's
/// order, signs from solve_signs, d^2 report attached. Rejects windows or
/// grade ranges that exclude every grade-0 element, and (for one_sided /
/// two_sided) weights outside Pr_k^+.
ComplexTruncation build_complex(const IntegralSystem& sys, const AffineWeight& lambda,
                                const ComplexKind& kind, std::int64_t grade_min,
                                std::int64_t grade_max, const EnumWindow& window);

VerificationReport verify_d_squared(const ComplexTruncation& c);

/// Compatible sign systems along a reduced word (indices into the Pi(lambda)
/// generators, 0 = s_0-dot): the inductive case-by-case propagation. The
/// result satisfies per-level square anticommutation and agrees across
/// consecutive levels wherever both gradings agree; both are verified.
std::vector<SignAssignment> compatible_sign_system(const IntegralSystem& sys,
                                                   const std::vector<int>& y_word,
                                                   const EnumWindow& window);

/// dim Hom between twisted Verma modules M^y(w . lambda), M^y(w' . lambda):
/// the twisted-order predicate in the integral Weyl group.
int hom_dimension(const IntegralSystem& sys, const AffineWeylElement& w_abstract,
                  const AffineWeylElement& wp_abstract, const AffineWeylElement& y_abstract,
                  bool regular_dominant_side);

struct WakimotoHom {
    int dim = 0;
    bool conjectural = false;
};

/// Semi-infinite order predicate for Wakimoto homs. Anti-dominant answers are
/// theorems; dominant-side nonzero answers are conjectural except for
/// endomorphisms and cover pairs.
WakimotoHom wakimoto_hom_dimension(const RootSystemData& rs, const AffineWeylElement& w,
                                   const AffineWeylElement& wp, bool regular_dominant_side);

/// Graphviz rendering with grade labels and edge signs.
std::string export_dot(const RootSystemData& rs_abstract, const ComplexTruncation& c);

}  // namespace affbgg
