#include "affbgg/characters.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

#include "affbgg/weyl.hpp"

namespace affbgg {

namespace {

struct OffsetKeyLess {
    bool operator()(const CharKey& a, const CharKey& b) const {
        if (a.second != b.second) return a.second < b.second;
        std::int64_t ha = 0, hb = 0;
        for (auto c : a.first) ha += c;
        for (auto c : b.first) hb += c;
        if (ha != hb) return ha < hb;
        return a.first < b.first;
    }
};

// Multiset counts over positive affine roots up to depth D, classical
// coordinates kept within an enlarged margin so that negative-classical
// roots (which cost delta budget) cannot re-enter the window unseen.
std::map<CharKey, std::int64_t> offset_series(const RootSystemData& rs,
                                              const CharTruncation& trunc) {
    int D = trunc.max_depth;
    std::int64_t max_root_coord = 1;
    for (const auto& r : rs.positive_roots)
        for (auto c : r) max_root_coord = std::max(max_root_coord, c);
    std::int64_t margin = trunc.classical_window + D * max_root_coord;

    std::vector<CharKey> items;
    for (const auto& alpha : rs.positive_roots) {
        for (std::int64_t m = 0; m <= D; ++m) items.push_back({alpha, m});
        IntVec neg = alpha;
        for (auto& c : neg) c = -c;
        for (std::int64_t m = 1; m <= D; ++m) items.push_back({neg, m});
    }
    for (std::int64_t m = 1; m <= D; ++m)
        for (int copy = 0; copy < rs.rank; ++copy)
            items.push_back({IntVec(rs.rank, 0), m});

    std::map<CharKey, std::int64_t, OffsetKeyLess> dp;
    dp[{IntVec(rs.rank, 0), 0}] = 1;
    auto in_margin = [&](const CharKey& k) {
        if (k.second > D) return false;
        for (auto c : k.first)
            if (c > margin || c < -margin) return false;
        return true;
    };
    for (const auto& item : items) {
        // forward in-place pass = unbounded repetitions of this item
        for (auto it = dp.begin(); it != dp.end(); ++it) {
            if (it->second == 0) continue;
            IntVec beta = it->first.first;
            for (int i = 0; i < rs.rank; ++i) beta[i] += item.first[i];
            CharKey next{std::move(beta), it->first.second + item.second};
            if (!in_margin(next)) continue;
            dp[next] += it->second;  // safe: OffsetKeyLess sorts next after it
        }
    }
    std::map<CharKey, std::int64_t> out;
    for (const auto& [k, v] : dp) {
        if (v == 0) continue;
        bool inside = k.second <= D;
        for (auto c : k.first)
            if (c > trunc.classical_window || c < -trunc.classical_window) inside = false;
        if (inside) out[k] = v;
    }
    return out;
}

const std::map<CharKey, std::int64_t>& cached_offset_series(const RootSystemData& rs,
                                                            const CharTruncation& trunc) {
    struct Key {
        IntMat cartan;
        int depth, window;
        bool operator<(const Key& o) const {
            return std::tie(cartan, depth, window) <
                   std::tie(o.cartan, o.depth, o.window);
        }
    };
    static std::map<Key, std::map<CharKey, std::int64_t>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    Key key{rs.cartan, trunc.max_depth, trunc.classical_window};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, offset_series(rs, trunc)).first;
    return it->second;
}

}  // namespace

std::int64_t kostant_partitions(const RootSystemData& rs, const IntVec& beta,
                                std::int64_t n, const CharTruncation& trunc) {
    if (n < 0) return 0;
    const auto& series = cached_offset_series(rs, trunc);
    auto it = series.find({beta, n});
    return it == series.end() ? 0 : it->second;
}

CharacterSeries verma_character(const RootSystemData& rs, const AffineWeight& lambda,
                                const CharTruncation& trunc) {
    CharacterSeries out;
    out.base = lambda;
    out.trunc = trunc;
    out.coeff = cached_offset_series(rs, trunc);
    return out;
}

CharKey dot_offset(const RootSystemData& rs, const AffineWeight& lambda,
                   const AffineWeylElement& w_realized) {
    AffineWeight img = dot_action(rs, w_realized, lambda);
    if (img.level != lambda.level)
        throw std::logic_error("dot_offset: level changed under the dot action");
    IntVec beta(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        Rat d = lambda.classical[i] - img.classical[i];
        if (!d.is_integer())
            throw verification_error("dot_offset: non-integral classical offset");
        beta[i] = d.num();
    }
    Rat nd = lambda.delta_coeff - img.delta_coeff;
    if (!nd.is_integer())
        throw verification_error("dot_offset: non-integral delta offset");
    return {beta, nd.num()};
}

namespace {

// Can a Verma series based at lambda - beta_w - n_w delta meet the window?
bool can_contribute(const CharKey& off, const CharTruncation& trunc,
                    std::int64_t margin) {
    if (off.second > trunc.max_depth || off.second < 0) return false;
    for (auto c : off.first)
        if (c > trunc.classical_window + margin || c < -(trunc.classical_window + margin))
            return false;
    return true;
}

std::int64_t classical_margin(const RootSystemData& rs, const CharTruncation& trunc) {
    std::int64_t max_root_coord = 1;
    for (const auto& r : rs.positive_roots)
        for (auto c : r) max_root_coord = std::max(max_root_coord, c);
    return trunc.max_depth * max_root_coord + trunc.classical_window;
}

// Alternating accumulation of shifted Verma offset series. The series is
// computed on a classical window enlarged by the largest shift, so that
// shifted tails landing inside the output window are complete.
CharacterSeries accumulate(const IntegralSystem& sys, const AffineWeight& lambda,
                           const std::vector<std::pair<AffineWeylElement, int>>& terms,
                           const CharTruncation& trunc, int jobs) {
    const RootSystemData& rs = sys.base;
    std::int64_t max_shift = 0;
    for (const auto& [w, sign] : terms) {
        CharKey off = dot_offset(rs, lambda, sys.realize(w));
        for (auto c : off.first)
            max_shift = std::max(max_shift, c < 0 ? -c : c);
    }
    CharTruncation enlarged{trunc.max_depth,
                            int(trunc.classical_window + max_shift)};
    const auto& series = cached_offset_series(rs, enlarged);

    auto run = [&](size_t begin, size_t end) {
        std::map<CharKey, std::int64_t> acc;
        for (size_t t = begin; t < end; ++t) {
            CharKey off = dot_offset(rs, lambda, sys.realize(terms[t].first));
            int sign = terms[t].second;
            for (const auto& [k, v] : series) {
                IntVec beta = k.first;
                for (int i = 0; i < rs.rank; ++i) beta[i] += off.first[i];
                std::int64_t n = k.second + off.second;
                if (n > trunc.max_depth) continue;
                bool inside = true;
                for (auto c : beta)
                    if (c > trunc.classical_window || c < -trunc.classical_window)
                        inside = false;
                if (!inside) continue;
                acc[{std::move(beta), n}] += sign * v;
            }
        }
        return acc;
    };

    std::map<CharKey, std::int64_t> total;
    if (jobs <= 1 || terms.size() < 4) {
        total = run(0, terms.size());
    } else {
        size_t chunk = (terms.size() + jobs - 1) / jobs;
        std::vector<std::future<std::map<CharKey, std::int64_t>>> futures;
        for (size_t b = 0; b < terms.size(); b += chunk)
            futures.push_back(std::async(std::launch::async, run, b,
                                         std::min(terms.size(), b + chunk)));
        for (auto& f : futures)
            for (const auto& [k, v] : f.get()) total[k] += v;
    }
    for (auto it = total.begin(); it != total.end();)
        it = it->second == 0 ? total.erase(it) : std::next(it);

    CharacterSeries out;
    out.base = lambda;
    out.trunc = trunc;
    out.coeff = std::move(total);
    return out;
}

// Certifies that no element outside the enumerated set can contribute: the
// first excluded translation shell must be entirely out of reach.
void certify_window(const IntegralSystem& sys, const AffineWeight& lambda,
                    const EnumWindow& window, const CharTruncation& trunc) {
    const RootSystemData& abs = sys.abstract_type;
    FiniteWeylGroup wg(abs);
    // two shells out: lattice pairings can step by 2, so +1 can be vacuous
    EnumWindow outer{window.max_translation_norm + 2, window.max_delta};
    std::int64_t margin = classical_margin(sys.base, trunc);
    auto inner_elts = enumerate_window(abs, wg, window);
    std::set<AffineWeylElement> inner(inner_elts.begin(), inner_elts.end());
    std::int64_t min_excluded_depth = INT64_MAX;
    for (const auto& w : enumerate_window(abs, wg, outer)) {
        if (inner.count(w)) continue;
        CharKey off = dot_offset(sys.base, lambda, sys.realize(w));
        min_excluded_depth = std::min(min_excluded_depth, off.second);
        if (can_contribute(off, trunc, margin)) {
            std::ostringstream msg;
            msg << "character window insufficient: a shell element reaches depth "
                << off.second << " <= " << trunc.max_depth
                << "; enlarge --window-norm beyond " << window.max_translation_norm;
            throw input_error(msg.str());
        }
    }
    (void)min_excluded_depth;
}

}  // namespace

CharacterSeries euler_character(const IntegralSystem& sys, const ComplexTruncation& c,
                                const CharTruncation& trunc, int jobs) {
    certify_window(sys, c.lambda, c.window, trunc);
    // elements cut away by the grade range must also be out of reach
    const RootSystemData& abs = sys.abstract_type;
    FiniteWeylGroup wg(abs);
    std::set<AffineWeylElement> in_complex;
    std::vector<std::pair<AffineWeylElement, int>> terms;
    for (const auto& [g, elts] : c.grades)
        for (const auto& w : elts) {
            in_complex.insert(w);
            terms.push_back({w, (g % 2 == 0) ? 1 : -1});
        }
    std::int64_t margin = classical_margin(sys.base, trunc);
    for (const auto& w : enumerate_window(abs, wg, c.window)) {
        if (in_complex.count(w)) continue;
        CharKey off = dot_offset(sys.base, c.lambda, sys.realize(w));
        if (can_contribute(off, trunc, margin))
            throw input_error(
                "euler_character: the grade range cuts off a contributing element; "
                "widen --grades");
    }
    return accumulate(sys, c.lambda, terms, trunc, jobs);
}

CharacterSeries irreducible_character(const IntegralSystem& sys, const AffineWeight& lambda,
                                      const EnumWindow& window, const CharTruncation& trunc,
                                      int jobs) {
    certify_window(sys, lambda, window, trunc);
    const RootSystemData& abs = sys.abstract_type;
    FiniteWeylGroup wg(abs);
    std::vector<std::pair<AffineWeylElement, int>> terms;
    for (const auto& w : enumerate_window(abs, wg, window))
        terms.push_back({w, length(abs, w) % 2 == 0 ? 1 : -1});
    CharacterSeries out = accumulate(sys, lambda, terms, trunc, jobs);
    for (const auto& [k, v] : out.coeff) {
        if (v < 0)
            throw verification_error(
                "irreducible_character: negative coefficient (window or truncation "
                "inconsistency)");
    }
    return out;
}

std::optional<CharDifference> compare(const CharacterSeries& a, const CharacterSeries& b) {
    if (!(a.trunc == b.trunc) || !(a.base == b.base))
        throw input_error("compare: truncation or base-weight mismatch");
    std::set<CharKey> keys;
    for (const auto& [k, v] : a.coeff) keys.insert(k);
    for (const auto& [k, v] : b.coeff) keys.insert(k);
    for (const auto& k : keys) {
        std::int64_t lhs = a.at(k.first, k.second), rhs = b.at(k.first, k.second);
        if (lhs != rhs) return CharDifference{k, lhs, rhs};
    }
    return std::nullopt;
}

}  // namespace affbgg
