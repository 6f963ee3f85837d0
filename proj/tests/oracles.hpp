#pragma once

// Test-only oracles, kept independent of the closed-form implementation paths
// they validate.

#include <cstdint>
#include <vector>

#include "affbgg/affine.hpp"
#include "affbgg/root_system.hpp"

namespace affbgg::oracle {

// All positive real roots alphabar + n delta that the element can possibly
// invert: |n| <= max over roots of |(alphabar|mu)| + 1.
inline std::vector<AffineRoot> inversion_window(const RootSystemData& rs,
                                                const AffineWeylElement& w) {
    std::int64_t bound = 1;
    for (const auto& alpha : rs.positive_roots) {
        Rat p = rs.form(to_rat(alpha), w.translation).abs();
        bound = std::max<std::int64_t>(bound, p.ceil() + 1);
    }
    std::vector<AffineRoot> roots;
    for (const auto& alpha : rs.positive_roots) {
        for (std::int64_t n = 0; n <= bound; ++n) roots.push_back(AffineRoot{alpha, n});
        IntVec neg = alpha;
        for (auto& c : neg) c = -c;
        for (std::int64_t n = 1; n <= bound; ++n) roots.push_back(AffineRoot{neg, n});
    }
    return roots;
}

// Inversion set Delta^re_+ cap w(Delta^re_-), enumerated over the window.
inline std::vector<AffineRoot> inversions(const RootSystemData& rs,
                                          const AffineWeylElement& w) {
    AffineWeylElement winv = inverse(w);
    std::vector<AffineRoot> inv;
    for (const auto& alpha : inversion_window(rs, w))
        if (!is_positive(act_on_root(rs, winv, alpha))) inv.push_back(alpha);
    return inv;
}

inline std::int64_t length_by_counting(const RootSystemData& rs,
                                       const AffineWeylElement& w) {
    return std::int64_t(inversions(rs, w).size());
}

inline std::int64_t twisted_length_by_counting(const RootSystemData& rs,
                                               const AffineWeylElement& w,
                                               const AffineWeylElement& y) {
    AffineWeylElement yinv = inverse(y);
    std::int64_t signed_count = 0;
    for (const auto& alpha : inversions(rs, w))
        signed_count += is_positive(act_on_root(rs, yinv, alpha)) ? 1 : -1;
    return signed_count;
}

inline std::int64_t semi_infinite_length_by_counting(const RootSystemData& rs,
                                                     const AffineWeylElement& w) {
    std::int64_t signed_count = 0;
    for (const auto& alpha : inversions(rs, w)) {
        bool classical_positive = false;
        for (auto c : alpha.classical)
            if (c != 0) {
                classical_positive = c > 0;
                break;
            }
        signed_count += classical_positive ? 1 : -1;
    }
    return signed_count;
}

}  // namespace affbgg::oracle
