#include "affbgg/parabolic.hpp"

#include <algorithm>
#include <set>

namespace affbgg {

ParabolicData parabolic_data(const RootSystemData& rs, const std::vector<int>& S) {
    ParabolicData pd;
    pd.ambient = rs;
    pd.S = S;
    std::sort(pd.S.begin(), pd.S.end());
    pd.S.erase(std::unique(pd.S.begin(), pd.S.end()), pd.S.end());
    for (int i : pd.S)
        if (i < 0 || i >= rs.rank) throw input_error("parabolic_data: bad simple index");

    // connected components of the induced Dynkin subdiagram
    std::set<int> remaining(pd.S.begin(), pd.S.end());
    while (!remaining.empty()) {
        std::vector<int> comp{*remaining.begin()};
        remaining.erase(remaining.begin());
        for (size_t head = 0; head < comp.size(); ++head) {
            for (auto it = remaining.begin(); it != remaining.end();) {
                if (rs.cartan[comp[head]][*it] != 0) {
                    comp.push_back(*it);
                    it = remaining.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        ParabolicData::Component c;
        c.nodes = comp;
        int m = int(comp.size());
        IntMat sub(m, IntVec(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) sub[a][b] = rs.cartan[comp[a]][comp[b]];
        c.data = root_system_from_cartan(detect_type_letter(sub), m, sub);
        // highest (short) root of the component, in ambient coordinates
        auto expand = [&](const IntVec& v) {
            IntVec amb(rs.rank, 0);
            for (int a = 0; a < m; ++a) amb[comp[a]] = v[a];
            return amb;
        };
        c.theta = expand(c.data.theta);
        c.theta_short = expand(c.data.theta_short);
        pd.components.push_back(std::move(c));
    }
    std::sort(pd.components.begin(), pd.components.end(),
              [](const auto& a, const auto& b) { return a.nodes < b.nodes; });

    for (int i : pd.S) {
        IntVec e(rs.rank, 0);
        e[i] = 1;
        pd.pi_s.push_back(AffineRoot{e, 0});
    }
    for (const auto& c : pd.components) {
        IntVec neg = c.theta;
        for (auto& x : neg) x = -x;
        pd.pi_s.push_back(AffineRoot{neg, 1});
    }

    // Delta_{S,+}: positive roots supported on S
    for (const auto& alpha : rs.positive_roots) {
        bool supported = true;
        for (int i = 0; i < rs.rank && supported; ++i)
            if (alpha[i] != 0 &&
                std::find(pd.S.begin(), pd.S.end(), i) == pd.S.end())
                supported = false;
        if (supported) pd.classical_s_plus.push_back(alpha);
    }
    return pd;
}

bool is_minimal_rep(const ParabolicData& pd, const AffineWeylElement& w) {
    AffineWeylElement winv = inverse(w);
    for (const auto& beta : pd.pi_s)
        if (!is_positive(act_on_root(pd.ambient, winv, beta))) return false;
    return true;
}

ParabolicFactors decompose(const ParabolicData& pd, const AffineWeylElement& w) {
    AffineWeylElement u = affine_identity(pd.ambient.rank);
    AffineWeylElement v = w;
    while (true) {
        AffineWeylElement vinv = inverse(v);
        bool stripped = false;
        for (const auto& beta : pd.pi_s) {
            if (!is_positive(act_on_root(pd.ambient, vinv, beta))) {
                AffineWeylElement s = reflection_from_root(pd.ambient, beta);
                u = mult(u, s);
                v = mult(s, v);
                stripped = true;
                break;
            }
        }
        if (!stripped) break;
    }
    return ParabolicFactors{u, v};
}

bool minimal_rep_criterion(const ParabolicData& pd, const AffineWeylElement& v) {
    const RootSystemData& rs = pd.ambient;
    IntMat yinv = int_inverse(v.finite);
    for (const auto& alpha : pd.classical_s_plus) {
        Rat pairing = rs.form(to_rat(alpha), v.translation);
        IntVec pre = mat_apply(yinv, alpha);
        bool pre_positive = false;
        for (auto c : pre)
            if (c != 0) {
                pre_positive = c > 0;
                break;
            }
        if (pairing != (pre_positive ? Rat(0) : Rat(1))) return false;
    }
    return true;
}

LeviLevels levi_levels(const ParabolicData& pd, const Rat& k) {
    LeviLevels out;
    out.k0 = k + Rat(pd.ambient.h_check);
    for (const auto& c : pd.components) {
        Rat factor = Rat(2) / pd.ambient.form(c.theta, c.theta);
        out.k_i.push_back(factor * out.k0 - Rat(c.data.h_check));
    }
    return out;
}

std::vector<RestrictedWeight> restrict_weight(const ParabolicData& pd,
                                              const AffineWeight& lambda) {
    const RootSystemData& rs = pd.ambient;
    std::vector<RestrictedWeight> out;
    for (const auto& c : pd.components) {
        int m = int(c.nodes.size());
        // classical part: match <x, beta_j^vee>_comp = <lambdabar, alpha_j^vee>
        RatVec target(m);
        for (int j = 0; j < m; ++j) {
            IntVec e(rs.rank, 0);
            e[c.nodes[j]] = 1;
            target[j] = rs.pair_coroot(lambda.classical, e);
        }
        RatMat a(m, RatVec(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a[i][j] = Rat(c.data.cartan[i][j]);
        RatVec x = rat_solve(a, target);
        Rat factor = Rat(2) / rs.form(c.theta, c.theta);
        Rat level = factor * (lambda.level + Rat(rs.h_check)) - Rat(c.data.h_check);
        out.push_back(RestrictedWeight{x, level});
    }
    return out;
}

AffineWeylElement component_element(const ParabolicData& pd, int comp,
                                    const AffineWeylElement& w) {
    const auto& c = pd.components[comp];
    const RootSystemData& rs = pd.ambient;
    int m = int(c.nodes.size());
    // finite block on the component's span
    IntMat fin(m, IntVec(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) fin[a][b] = w.finite[c.nodes[a]][c.nodes[b]];
    if (!is_weyl_matrix(c.data, fin))
        throw input_error("component_element: element does not preserve the component");
    // translation: ambient coroot coordinates at the component's nodes
    RatVec coords = coroot_coordinates(rs, w.translation);
    for (int i = 0; i < rs.rank; ++i) {
        bool in_comp = std::find(c.nodes.begin(), c.nodes.end(), i) != c.nodes.end();
        if (!in_comp && !coords[i].is_zero())
            throw input_error("component_element: translation leaves the component");
    }
    RatVec comp_coords(m);
    for (int a = 0; a < m; ++a) comp_coords[a] = coords[c.nodes[a]];
    return AffineWeylElement{coweight_from_coroot_coordinates(c.data, comp_coords), fin};
}

bool is_admissible_weight(const RootSystemData& rs, const AffineWeight& lambda) {
    if (!is_regular_dominant(rs, lambda)) return false;
    // Q Delta(lambda) = Q Delta^re: every classical root direction meets
    // Delta(lambda) for some delta multiple (then the slope makes the
    // progression infinite, so delta lies in the rational span too).
    AffineWeight rho = affine_rho(rs);
    Rat lev = lambda.level + rho.level;
    for (const auto& alpha : rs.positive_roots) {
        Rat c = rs.pair_coroot(lambda.classical + rho.classical, alpha);
        Rat slope = Rat(2) / rs.form(alpha, alpha) * lev;
        bool hit = false;
        for (std::int64_t r = 0; r < slope.den() && !hit; ++r)
            if ((c + Rat(r) * slope).is_integer()) hit = true;
        if (!hit) return false;
    }
    return true;
}

std::vector<BorelWeilEntry> borel_weil_index(const IntegralSystem& sys,
                                             const AffineWeight& lambda,
                                             const std::vector<int>& S,
                                             std::int64_t grade_p,
                                             const EnumWindow& window,
                                             bool assume_remark) {
    if (S.size() != 1 && !assume_remark)
        throw input_error(
            "borel_weil_index: non-minimal S requires the assume-remark flag "
            "(outputs are then conditional on the Remark)");
    ParabolicData pd_abstract = parabolic_data(sys.abstract_type, S);
    ParabolicData pd_base = parabolic_data(sys.base, S);

    FiniteWeylGroup wg(sys.abstract_type);
    std::vector<BorelWeilEntry> out;
    for (const auto& w : enumerate_window(sys.abstract_type, wg, window)) {
        if (semi_infinite_length(sys.abstract_type, w) != grade_p) continue;
        if (!is_minimal_rep(pd_abstract, w)) continue;
        BorelWeilEntry entry;
        entry.w_abstract = w;
        entry.w_realized = sys.realize(w);
        AffineWeight wl = dot_action(sys.base, entry.w_realized, lambda);
        entry.restriction = restrict_weight(pd_base, wl);
        for (size_t ci = 0; ci < entry.restriction.size(); ++ci) {
            const auto& rw = entry.restriction[ci];
            if (!is_admissible_weight(pd_base.components[ci].data, rw.as_weight()))
                throw verification_error(
                    "borel_weil_index: restricted weight not dominant-admissible "
                    "for its component");
        }
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(), [](const BorelWeilEntry& a, const BorelWeilEntry& b) {
        return a.w_abstract < b.w_abstract;
    });
    return out;
}

}  // namespace affbgg
