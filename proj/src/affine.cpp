#include "affbgg/affine.hpp"

#include <algorithm>

#include "affbgg/weyl.hpp"

namespace affbgg {

bool is_positive(const AffineRoot& alpha) {
    if (alpha.is_imaginary()) return alpha.n >= 1;
    int sign = 0;
    for (auto c : alpha.classical)
        if (c != 0) {
            sign = c > 0 ? 1 : -1;
            break;
        }
    return sign > 0 ? alpha.n >= 0 : alpha.n >= 1;
}

AffineWeight affine_rho(const RootSystemData& rs) {
    return AffineWeight{rs.rho, Rat(rs.h_check), Rat(0)};
}

bool operator<(const AffineWeylElement& a, const AffineWeylElement& b) {
    for (size_t i = 0; i < a.translation.size(); ++i) {
        if (a.translation[i] != b.translation[i]) return a.translation[i] < b.translation[i];
    }
    return a.finite < b.finite;
}

AffineWeylElement affine_identity(int rank) {
    return AffineWeylElement{RatVec(rank, Rat(0)), identity_mat(rank)};
}

bool is_identity(const AffineWeylElement& w) {
    return is_zero(w.translation) && w.finite == identity_mat(w.finite.size());
}

AffineWeylElement mult(const AffineWeylElement& a, const AffineWeylElement& b) {
    return AffineWeylElement{a.translation + mat_apply(a.finite, b.translation),
                             mat_mul(a.finite, b.finite)};
}

AffineWeylElement inverse(const AffineWeylElement& w) {
    IntMat fin_inv = int_inverse(w.finite);
    return AffineWeylElement{-mat_apply(fin_inv, w.translation), fin_inv};
}

AffineWeylElement translation_element(const RatVec& mu, int rank) {
    return AffineWeylElement{mu, identity_mat(rank)};
}

namespace {

IntMat finite_reflection_matrix(const RootSystemData& rs, const IntVec& alpha) {
    // s_alpha(alpha_j) = alpha_j - <alpha_j, alpha^vee> alpha
    IntMat m = identity_mat(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        RatVec ej(rs.rank, Rat(0));
        ej[j] = Rat(1);
        Rat p = rs.pair_coroot(ej, alpha);
        if (!p.is_integer())
            throw std::logic_error("non-integral root pairing");
        for (int i = 0; i < rs.rank; ++i) m[i][j] -= p.num() * alpha[i];
    }
    return m;
}

}  // namespace

AffineWeylElement simple_affine_reflection(const RootSystemData& rs, int i) {
    if (i < 0 || i > rs.rank) throw input_error("simple reflection index out of range");
    if (i >= 1) {
        return AffineWeylElement{RatVec(rs.rank, Rat(0)), rs.simple_reflection_matrix(i - 1)};
    }
    return reflection_from_root(rs, AffineRoot{[&] {
                                                   IntVec v = rs.theta;
                                                   for (auto& c : v) c = -c;
                                                   return v;
                                               }(),
                                               1});
}

AffineWeylElement reflection_from_root(const RootSystemData& rs, const AffineRoot& alpha) {
    if (alpha.is_imaginary())
        throw input_error("reflection_from_root: imaginary root has no reflection");
    if (!rs.is_root(alpha.classical))
        throw input_error("reflection_from_root: classical part is not a root");
    RatVec acheck = coroot(rs, alpha.classical);
    return AffineWeylElement{Rat(-alpha.n) * acheck,
                             finite_reflection_matrix(rs, alpha.classical)};
}

AffineRoot act_on_root(const RootSystemData& rs, const AffineWeylElement& w,
                       const AffineRoot& alpha) {
    if (alpha.is_imaginary()) return alpha;  // w(delta) = delta
    IntVec img = mat_apply(w.finite, alpha.classical);
    Rat shift = rs.form(to_rat(img), w.translation);
    Rat n = Rat(alpha.n) - shift;
    if (!n.is_integer())
        throw input_error("act_on_root: translation does not preserve the root lattice");
    return AffineRoot{img, n.num()};
}

AffineWeight act_on_weight(const RootSystemData& rs, const AffineWeylElement& w,
                           const AffineWeight& lambda) {
    if (w.translation.size() != lambda.classical.size())
        throw input_error("act_on_weight: rank mismatch");
    RatVec cls = mat_apply(w.finite, lambda.classical);
    const RatVec& mu = w.translation;
    Rat corr = rs.form(cls, mu) + rs.form(mu, mu) / Rat(2) * lambda.level;
    RatVec shifted(rs.rank);
    for (int i = 0; i < rs.rank; ++i) shifted[i] = cls[i] + lambda.level * mu[i];
    return AffineWeight{shifted, lambda.level, lambda.delta_coeff - corr};
}

AffineWeight dot_action(const RootSystemData& rs, const AffineWeylElement& w,
                        const AffineWeight& lambda) {
    AffineWeight rho = affine_rho(rs);
    AffineWeight shifted{lambda.classical + rho.classical, lambda.level + rho.level,
                         lambda.delta_coeff};
    AffineWeight img = act_on_weight(rs, w, shifted);
    return AffineWeight{img.classical - rho.classical, img.level - rho.level,
                        img.delta_coeff};
}

std::int64_t length(const RootSystemData& rs, const AffineWeylElement& w) {
    if (!in_coweight_lattice(rs, w.translation))
        throw input_error("length: translation not in the coweight lattice");
    IntMat yinv = int_inverse(w.finite);
    std::int64_t total = 0;
    for (const auto& alpha : rs.positive_roots) {
        Rat p = rs.form(to_rat(alpha), w.translation);
        IntVec pre = mat_apply(yinv, alpha);
        bool pre_positive = false;
        for (auto c : pre)
            if (c != 0) {
                pre_positive = c > 0;
                break;
            }
        Rat term = pre_positive ? p : Rat(1) - p;
        total += term.abs().num();
    }
    return total;
}

std::int64_t twisted_length(const RootSystemData& rs, const AffineWeylElement& w,
                            const AffineWeylElement& y) {
    AffineWeylElement yinv = inverse(y);
    return length(rs, mult(yinv, w)) - length(rs, yinv);
}

std::int64_t semi_infinite_length(const RootSystemData& rs, const AffineWeylElement& w) {
    Rat two_rho_mu = Rat(2) * rs.form(rs.rho, w.translation);
    if (!two_rho_mu.is_integer())
        throw input_error("semi_infinite_length: translation not in the coweight lattice");
    return finite_length(rs, w.finite) - two_rho_mu.num();
}

RatVec coroot_coordinates(const RootSystemData& rs, const RatVec& mu) {
    // alpha_i^vee = (2/(alpha_i|alpha_i)) alpha_i, so the coroot basis is a
    // diagonal rescaling of the root basis.
    RatVec c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) c[i] = mu[i] * rs.gram[i][i] / Rat(2);
    return c;
}

RatVec coweight_from_coroot_coordinates(const RootSystemData& rs, const RatVec& coords) {
    RatVec mu(rs.rank);
    for (int i = 0; i < rs.rank; ++i) mu[i] = coords[i] * Rat(2) / rs.gram[i][i];
    return mu;
}

bool in_coroot_lattice(const RootSystemData& rs, const RatVec& mu) {
    for (const auto& c : coroot_coordinates(rs, mu))
        if (!c.is_integer()) return false;
    return true;
}

bool in_coweight_lattice(const RootSystemData& rs, const RatVec& mu) {
    for (int i = 0; i < rs.rank; ++i) {
        RatVec ei(rs.rank, Rat(0));
        ei[i] = Rat(1);
        if (!rs.form(ei, mu).is_integer()) return false;
    }
    return true;
}

std::vector<int> reduced_word(const RootSystemData& rs, const AffineWeylElement& w) {
    if (!in_coroot_lattice(rs, w.translation))
        throw input_error(
            "reduced_word: element lies outside W (nontrivial extended part); factor it out");
    std::vector<AffineRoot> simples;
    {
        IntVec neg_theta = rs.theta;
        for (auto& c : neg_theta) c = -c;
        simples.push_back(AffineRoot{neg_theta, 1});
        for (int i = 0; i < rs.rank; ++i) {
            IntVec e(rs.rank, 0);
            e[i] = 1;
            simples.push_back(AffineRoot{e, 0});
        }
    }
    std::vector<int> word;
    AffineWeylElement cur = w;
    while (!is_identity(cur)) {
        AffineWeylElement cur_inv = inverse(cur);
        bool found = false;
        for (int i = 0; i <= rs.rank; ++i) {
            if (!is_positive(act_on_root(rs, cur_inv, simples[i]))) {
                word.push_back(i);
                cur = mult(simple_affine_reflection(rs, i), cur);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("reduced_word: no descent on a non-identity element");
    }
    return word;
}

namespace {

RatVec parse_coroot_coords(const RootSystemData& rs, const std::string& body) {
    RatVec coords;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            coords.push_back(Rat::parse(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) coords.push_back(Rat::parse(cur));
    if (int(coords.size()) != rs.rank)
        throw input_error("element grammar: expected " + std::to_string(rs.rank) +
                          " translation coordinates");
    return coords;
}

}  // namespace

AffineWeylElement parse_element(const RootSystemData& rs, const std::string& text) {
    if (text.empty()) throw input_error("element grammar: empty element (use 'e')");
    AffineWeylElement acc = affine_identity(rs.rank);
    size_t pos = 0;
    auto take_factor = [&](const std::string& f) {
        if (f.empty() || f == "e") return;
        if (f[0] == 't') {
            if (f.size() < 3 || f[1] != '[' || f.back() != ']')
                throw input_error("element grammar: malformed translation '" + f + "'");
            RatVec coords = parse_coroot_coords(rs, f.substr(2, f.size() - 3));
            acc = mult(acc, translation_element(
                                coweight_from_coroot_coordinates(rs, coords), rs.rank));
            return;
        }
        size_t i = 0;
        while (i < f.size()) {
            if (f[i] != 's' || i + 1 >= f.size() || !isdigit(f[i + 1]))
                throw input_error("element grammar: malformed factor '" + f + "'");
            int idx = f[i + 1] - '0';
            if (idx > rs.rank)
                throw input_error("element grammar: reflection index out of range in '" +
                                  f + "'");
            acc = mult(acc, simple_affine_reflection(rs, idx));
            i += 2;
        }
    };
    while (pos <= text.size()) {
        size_t star = text.find('*', pos);
        if (star == std::string::npos) {
            take_factor(text.substr(pos));
            break;
        }
        take_factor(text.substr(pos, star - pos));
        pos = star + 1;
    }
    return acc;
}

std::string format_element(const RootSystemData& rs, const AffineWeylElement& w) {
    std::string out;
    if (!is_zero(w.translation)) {
        RatVec coords = coroot_coordinates(rs, w.translation);
        out += "t[";
        for (int i = 0; i < rs.rank; ++i) {
            if (i) out += ",";
            out += coords[i].str();
        }
        out += "]";
    }
    if (w.finite != identity_mat(rs.rank)) {
        // smallest-left-descent reduced word of the finite part
        IntMat cur = w.finite;
        std::string word;
        while (cur != identity_mat(rs.rank)) {
            for (int i = 0; i < rs.rank; ++i) {
                IntMat si = rs.simple_reflection_matrix(i);
                IntMat next = mat_mul(si, cur);
                if (finite_length(rs, next) < finite_length(rs, cur)) {
                    word += "s" + std::to_string(i + 1);
                    cur = next;
                    break;
                }
            }
        }
        if (!out.empty()) out += "*";
        out += word;
    }
    if (out.empty()) out = "e";
    return out;
}

}  // namespace affbgg
