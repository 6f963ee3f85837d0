#pragma once

#include <map>
#include <optional>
#include <vector>

#include "affbgg/bgg.hpp"
#include "affbgg/integral.hpp"

namespace affbgg {

/// Truncation of a formal character: delta depth 0..max_depth and classical
/// offsets with simple-root coordinates bounded by classical_window.
struct CharTruncation {
    int max_depth = 4;
    int classical_window = 8;

    friend bool operator==(const CharTruncation& a, const CharTruncation& b) {
        return a.max_depth == b.max_depth && a.classical_window == b.classical_window;
    }
};

/// Offset key: the coefficient of e^{lambda - beta - n delta}.
using CharKey = std::pair<IntVec, std::int64_t>;

struct CharacterSeries {
    AffineWeight base;
    CharTruncation trunc;
    std::map<CharKey, std::int64_t> coeff;

    std::int64_t at(const IntVec& beta, std::int64_t n) const {
        auto it = coeff.find({beta, n});
        return it == coeff.end() ? 0 : it->second;
    }
};

/// Number of multisets of positive affine roots (the imaginary root n delta
/// counted with multiplicity rank) summing to beta + n delta.
std::int64_t kostant_partitions(const RootSystemData& rs, const IntVec& beta,
                                std::int64_t n, const CharTruncation& trunc);

/// ch M(lambda): coefficient at lambda - beta - n delta is the Kostant count.
/// The offset series is weight-independent and cached per truncation.
CharacterSeries verma_character(const RootSystemData& rs, const AffineWeight& lambda,
                                const CharTruncation& trunc);

/// Alternating sum over the complex's grades of Verma series at w . lambda,
/// restricted to the truncation. The window is certified: the first excluded
/// translation shell (and any element outside the grade range) must be unable
/// to reach the truncation window, else the call is rejected with an estimate.
CharacterSeries euler_character(const IntegralSystem& sys, const ComplexTruncation& c,
                                const CharTruncation& trunc, int jobs = 1);

/// sum over W(lambda) of (-1)^{ell_lambda(w)} ch M(w . lambda) on a certified
/// window; all coefficients of the result must be nonnegative.
CharacterSeries irreducible_character(const IntegralSystem& sys, const AffineWeight& lambda,
                                      const EnumWindow& window, const CharTruncation& trunc,
                                      int jobs = 1);

struct CharDifference {
    CharKey key;
    std::int64_t lhs, rhs;
};

/// Exact comparison; truncation mismatch is an input error. Returns the first
/// differing coefficient, or nullopt when equal.
std::optional<CharDifference> compare(const CharacterSeries& a, const CharacterSeries& b);

/// lambda - (w . lambda) as (beta, n); rejects non-integral offsets.
CharKey dot_offset(const RootSystemData& rs, const AffineWeight& lambda,
                   const AffineWeylElement& w_realized);

}  // namespace affbgg
