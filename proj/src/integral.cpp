#include "affbgg/integral.hpp"

#include <algorithm>
#include <numeric>

#include "affbgg/weyl.hpp"

namespace affbgg {

AdmissibleNumber classify_level(const RootSystemData& rs, const Rat& k) {
    Rat shifted = k + Rat(rs.h_check);
    AdmissibleNumber out;
    if (shifted.sign() <= 0) return out;
    out.p = shifted.num();
    out.q = shifted.den();
    out.dual_case = (std::gcd(std::int64_t(rs.lacing), out.q) == rs.lacing) && rs.lacing > 1;
    std::int64_t bound = out.dual_case ? rs.h : rs.h_check;
    out.admissible = out.p >= bound;
    if (!out.admissible) {
        out.p = out.q = 0;
        out.dual_case = false;
    }
    return out;
}

namespace {

Rat coroot_pairing(const RootSystemData& rs, const AffineWeight& lambda,
                   const AffineRoot& beta) {
    // <lambda, (alphabar + n delta)^vee> = <lambdabar, alphabar^vee>
    //                                     + (2n/(alphabar|alphabar)) * level
    Rat aa = rs.form(beta.classical, beta.classical);
    return rs.pair_coroot(lambda.classical, beta.classical) +
           Rat(2 * beta.n) / aa * lambda.level;
}

}  // namespace

bool is_integral_root(const RootSystemData& rs, const AffineWeight& lambda,
                      const AffineRoot& beta) {
    if (beta.is_imaginary())
        throw input_error("is_integral_root: imaginary roots are excluded");
    if (!rs.is_root(beta.classical))
        throw input_error("is_integral_root: classical part is not a root");
    AffineWeight rho = affine_rho(rs);
    AffineWeight shifted{lambda.classical + rho.classical, lambda.level + rho.level,
                         Rat(0)};
    return coroot_pairing(rs, shifted, beta).is_integer();
}

namespace {

// Shared engine for the two regularity predicates. `dominant` forbids
// integer pairings <= 0 on positive real roots; the dual forbids >= 0.
bool regularity(const RootSystemData& rs, const AffineWeight& lambda, bool dominant) {
    AffineWeight rho = affine_rho(rs);
    Rat lev = lambda.level + rho.level;  // k + h_check
    if (lev.is_zero())
        throw input_error("regularity predicates are undefined at the critical level");
    RatVec shifted_cls = lambda.classical + rho.classical;

    for (const auto& alpha : rs.positive_roots) {
        for (int sign : {+1, -1}) {
            IntVec cls = alpha;
            if (sign < 0)
                for (auto& c : cls) c = -c;
            std::int64_t n_min = sign > 0 ? 0 : 1;
            Rat c = rs.pair_coroot(shifted_cls, cls);
            Rat slope = Rat(2) / rs.form(cls, cls) * lev;
            // integer values of c + n*slope occur along one residue class
            // mod den(slope), if at all
            std::int64_t period = slope.den();
            std::int64_t residue = -1;
            for (std::int64_t r = 0; r < period; ++r) {
                if ((c + Rat(r) * slope).is_integer()) {
                    residue = r;
                    break;
                }
            }
            if (residue < 0) continue;  // no integral pairings in this family
            std::int64_t n0 = residue;
            while (n0 < n_min) n0 += period;
            Rat v0 = c + Rat(n0) * slope;
            std::int64_t step = slope.num();  // integer increment per period
            if (dominant) {
                if (step < 0) return false;  // integer values decrease without bound
                if (v0 <= Rat(0)) return false;
            } else {
                if (step > 0) return false;
                if (v0 >= Rat(0)) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_regular_dominant(const RootSystemData& rs, const AffineWeight& lambda) {
    return regularity(rs, lambda, true);
}

bool is_regular_antidominant(const RootSystemData& rs, const AffineWeight& lambda) {
    return regularity(rs, lambda, false);
}

AffineWeylElement IntegralSystem::realize(const AffineWeylElement& a) const {
    int n = base.rank;
    RatVec mu(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mu[i] += lattice_map[i][j] * a.translation[j];
    // ambient finite part = M * abstract * M^{-1}; entries must come out integral
    IntMat fin(n, IntVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat acc(0);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    acc += finite_map[i][s] * Rat(a.finite[s][t]) * finite_map_inv[t][j];
            if (!acc.is_integer())
                throw std::logic_error("realize: conjugated finite part not integral");
            fin[i][j] = acc.num();
        }
    return AffineWeylElement{mu, fin};
}

std::optional<AffineWeylElement> IntegralSystem::abstractize(
    const AffineWeylElement& w) const {
    int n = base.rank;
    RatVec nu(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) nu[i] += lattice_map_inv[i][j] * w.translation[j];
    if (!in_coroot_lattice(abstract_type, nu)) return std::nullopt;
    IntMat fin(n, IntVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat acc(0);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    acc += finite_map_inv[i][s] * Rat(w.finite[s][t]) * finite_map[t][j];
            if (!acc.is_integer()) return std::nullopt;
            fin[i][j] = acc.num();
        }
    if (!is_weyl_matrix(abstract_type, fin)) return std::nullopt;
    AffineWeylElement a{nu, fin};
    if (!(realize(a) == w)) return std::nullopt;
    return a;
}

std::vector<AffineRoot> IntegralSystem::realized_positive_roots(int max_delta) const {
    std::vector<AffineRoot> out;
    AffineWeight vac = vacuum_weight();
    for (const auto& alpha : base.positive_roots) {
        for (std::int64_t n = 0; n <= max_delta; ++n)
            if (is_integral_root(base, vac, AffineRoot{alpha, n}))
                out.push_back(AffineRoot{alpha, n});
        IntVec neg = alpha;
        for (auto& c : neg) c = -c;
        for (std::int64_t n = 1; n <= max_delta; ++n)
            if (is_integral_root(base, vac, AffineRoot{neg, n}))
                out.push_back(AffineRoot{neg, n});
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntegralSystem integral_system(const RootSystemData& rs, const Rat& k) {
    AdmissibleNumber an = classify_level(rs, k);
    if (!an.admissible)
        throw input_error("integral_system: level " + k.str() + " is not admissible");

    IntegralSystem sys;
    sys.base = rs;
    sys.level = k;
    sys.p = an.p;
    sys.q = an.q;
    sys.dual_case = an.dual_case;
    sys.abstract_type = an.dual_case ? langlands_dual(rs) : rs;

    int n = rs.rank;
    // Lattice map, abstract coweight -> ambient coweight:
    //   principal case: scale q, identity on coordinates;
    //   dual case: scale q/r_check composed with beta_j -> alpha_j^vee,
    //   i.e. diag(1/d_j), d_j = (alpha_j|alpha_j)/2 in ambient normalization.
    sys.lattice_map.assign(n, RatVec(n, Rat(0)));
    sys.finite_map.assign(n, RatVec(n, Rat(0)));
    for (int j = 0; j < n; ++j) {
        if (!an.dual_case) {
            sys.lattice_map[j][j] = Rat(an.q);
            sys.finite_map[j][j] = Rat(1);
        } else {
            Rat dj = rs.gram[j][j] / Rat(2);
            sys.finite_map[j][j] = Rat(1) / dj;
            sys.lattice_map[j][j] = Rat(an.q, rs.lacing) / dj;
        }
    }
    sys.lattice_map_inv = rat_inverse(sys.lattice_map);
    sys.finite_map_inv = rat_inverse(sys.finite_map);

    // Pi(k Lambda_0): the classical simple roots plus alpha_0-dot.
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        sys.pi_lambda.push_back(AffineRoot{e, 0});
    }
    AffineRoot alpha0_dot;
    if (!an.dual_case) {
        IntVec neg_theta = rs.theta;
        for (auto& c : neg_theta) c = -c;
        alpha0_dot = AffineRoot{neg_theta, an.q};
    } else {
        // (alpha_0-dot)^vee = -theta_s^vee + qK, i.e. alpha_0-dot =
        // -theta_s + (q (theta_s|theta_s)/2) delta = -theta_s + (q/r_check) delta.
        IntVec neg_ts = rs.theta_short;
        for (auto& c : neg_ts) c = -c;
        Rat nd = Rat(an.q) * rs.form(rs.theta_short, rs.theta_short) / Rat(2);
        if (!nd.is_integer())
            throw std::logic_error("integral_system: fractional delta multiple");
        alpha0_dot = AffineRoot{neg_ts, nd.num()};
    }
    sys.pi_lambda.push_back(alpha0_dot);

    for (int i = 1; i <= n; ++i)
        sys.realized_generators.push_back(simple_affine_reflection(rs, i));
    sys.realized_generators.push_back(reflection_from_root(rs, alpha0_dot));

    // The realization must send abstract generators to the listed ones.
    for (int i = 0; i < n; ++i) {
        AffineWeylElement abs_si = simple_affine_reflection(sys.abstract_type, i + 1);
        if (!(sys.realize(abs_si) == sys.realized_generators[i]))
            throw std::logic_error("integral_system: finite generator mismatch");
    }
    AffineWeylElement abs_s0 = simple_affine_reflection(sys.abstract_type, 0);
    if (!(sys.realize(abs_s0) == sys.realized_generators[n]))
        throw std::logic_error("integral_system: affine generator mismatch");

    AffineWeight vac = sys.vacuum_weight();
    for (const auto& gamma : sys.pi_lambda)
        if (!is_integral_root(rs, vac, gamma))
            throw std::logic_error("integral_system: simple root fails integrality");

    return sys;
}

std::vector<AdmissibleWeight> enumerate_pr_plus(const IntegralSystem& sys) {
    const RootSystemData& rs = sys.base;
    int n = rs.rank;
    const auto& fw = rs.fundamental_weights;
    std::int64_t bound = sys.p;

    // Certify the bound: a dominant integral weight with any coordinate
    // beyond it fails regular dominance at the realized root alpha_0-dot,
    // whose pairing is integral and monotone decreasing in each coordinate.
    const AffineRoot& a0 = sys.pi_lambda.back();
    AffineWeight rho = affine_rho(rs);
    for (int i = 0; i < n; ++i) {
        RatVec lam = Rat(bound + 1) * fw[i];
        AffineWeight shifted{lam + rho.classical, sys.level + rho.level, Rat(0)};
        Rat f = coroot_pairing(rs, shifted, a0);
        if (!f.is_integer() || f.sign() > 0)
            throw verification_error(
                "enumerate_pr_plus: coordinate bound certificate failed");
    }

    std::vector<AdmissibleWeight> out;
    std::vector<std::int64_t> m(n, 0);
    AffineWeight vac = sys.vacuum_weight();
    while (true) {
        RatVec lam(n, Rat(0));
        for (int i = 0; i < n; ++i) lam = lam + Rat(m[i]) * fw[i];
        AffineWeight cand{lam, sys.level, Rat(0)};
        if (is_regular_dominant(rs, cand)) {
            // Delta(lambda) = Delta(k Lambda_0), checked on a window of roots
            bool same = true;
            for (const auto& alpha : rs.positive_roots) {
                for (std::int64_t d = 0; d <= 2 * sys.q && same; ++d) {
                    for (int sgn : {+1, -1}) {
                        IntVec cls = alpha;
                        if (sgn < 0)
                            for (auto& c : cls) c = -c;
                        AffineRoot beta{cls, d};
                        if (!is_positive(beta)) continue;
                        if (is_integral_root(rs, cand, beta) !=
                            is_integral_root(rs, vac, beta)) {
                            same = false;
                            break;
                        }
                    }
                }
                if (!same) break;
            }
            if (same) out.push_back(AdmissibleWeight{cand, affine_identity(n), cand});
        }
        int i = 0;
        while (i < n && m[i] == bound) {
            m[i] = 0;
            ++i;
        }
        if (i == n) break;
        ++m[i];
    }
    return out;
}

std::vector<AdmissibleWeight> pr_k_y(const IntegralSystem& sys, const AffineWeylElement& y) {
    const RootSystemData& rs = sys.base;
    if (!in_coweight_lattice(rs, y.translation))
        throw input_error("pr_k_y: twist must lie in the extended affine Weyl group");
    for (const auto& gamma : sys.pi_lambda) {
        if (!is_positive(act_on_root(rs, y, gamma)))
            throw input_error("pr_k_y: twist sends Pi(k Lambda_0) outside Delta^re_+");
    }
    std::vector<AdmissibleWeight> out;
    for (const auto& base : enumerate_pr_plus(sys)) {
        AdmissibleWeight tw;
        tw.base_weight = base.weight;
        tw.twist = y;
        tw.weight = dot_action(rs, y, base.weight);
        out.push_back(std::move(tw));
    }
    return out;
}

}  // namespace affbgg
