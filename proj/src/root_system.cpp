#include "affbgg/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace affbgg {

namespace {

IntMat cartan_matrix(char type, int rank) {
    auto chain = [&](int n) {
        IntMat m = identity_mat(n);
        for (int i = 0; i < n; ++i) m[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
        return m;
    };
    switch (type) {
        case 'A': {
            if (rank < 1) throw input_error("type A requires rank >= 1");
            return chain(rank);
        }
        case 'B': {
            // alpha_rank is the short root.
            if (rank < 2) throw input_error("type B requires rank >= 2");
            IntMat m = chain(rank);
            m[rank - 2][rank - 1] = -1;
            m[rank - 1][rank - 2] = -2;
            return m;
        }
        case 'C': {
            if (rank < 2) throw input_error("type C requires rank >= 2");
            IntMat m = chain(rank);
            m[rank - 2][rank - 1] = -2;
            m[rank - 1][rank - 2] = -1;
            return m;
        }
        case 'D': {
            if (rank < 3) throw input_error("type D requires rank >= 3");
            IntMat m = chain(rank - 1);
            for (auto& row : m) row.push_back(0);
            m.push_back(IntVec(rank, 0));
            m[rank - 1][rank - 1] = 2;
            m[rank - 3][rank - 1] = -1;
            m[rank - 1][rank - 3] = -1;
            return m;
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw input_error("type E requires rank 6, 7 or 8");
            // Chain 1-3-4-5-...-rank with node 2 attached to node 4 (Bourbaki).
            IntMat m = identity_mat(rank);
            for (int i = 0; i < rank; ++i) m[i][i] = 2;
            auto link = [&](int a, int b) {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < rank; ++i) link(i, i + 1);
            return m;
        }
        case 'F': {
            if (rank != 4) throw input_error("type F requires rank 4");
            IntMat m = chain(4);
            m[1][2] = -1;
            m[2][1] = -2;
            return m;
        }
        case 'G': {
            if (rank != 2) throw input_error("type G requires rank 2");
            // alpha_1 long, alpha_2 short.
            return {{2, -1}, {-3, 2}};
        }
        default:
            throw input_error(std::string("unknown root system type '") + type + "'");
    }
}

// Symmetrizer d_i proportional to (alpha_i|alpha_i)/2: d_i a_ij = d_j a_ji.
RatVec symmetrizer(const IntMat& cartan) {
    int n = static_cast<int>(cartan.size());
    RatVec d(n, Rat(0));
    d[0] = Rat(1);
    std::vector<int> queue = {0};
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (int j = 0; j < n; ++j) {
            if (i == j || cartan[i][j] == 0) continue;
            Rat dj = d[i] * Rat(cartan[i][j], cartan[j][i]);
            if (d[j].is_zero()) {
                d[j] = dj;
                queue.push_back(j);
            } else if (d[j] != dj) {
                throw std::logic_error("non-symmetrizable Cartan matrix");
            }
        }
    }
    for (const auto& x : d)
        if (x.is_zero()) throw std::logic_error("disconnected Dynkin diagram");
    return d;
}

RootSystemData build_from_cartan(char type_letter, int rank, const IntMat& cartan) {
    RootSystemData rs;
    rs.type_letter = type_letter;
    rs.rank = rank;
    rs.cartan = cartan;

    // Positive roots by closure of the simple roots under simple reflections.
    std::set<IntVec> pos;
    std::vector<IntVec> frontier;
    for (int i = 0; i < rank; ++i) {
        IntVec e(rank, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < rank; ++i) {
                std::int64_t pairing = 0;
                for (int j = 0; j < rank; ++j) pairing += cartan[i][j] * r[j];
                IntVec img = r;
                img[i] -= pairing;
                bool positive = false;
                for (auto c : img)
                    if (c != 0) {
                        positive = c > 0;
                        break;
                    }
                if (positive && pos.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    rs.positive_roots.assign(pos.begin(), pos.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const IntVec& a, const IntVec& b) {
                  std::int64_t ha = 0, hb = 0;
                  for (auto c : a) ha += c;
                  for (auto c : b) hb += c;
                  if (ha != hb) return ha < hb;
                  return a < b;
              });

    // Gram matrix: symmetrized Cartan, scaled so the highest root has squared
    // length 2. theta is the unique root of maximal height.
    RatVec d = symmetrizer(cartan);
    auto raw_gram = [&](const IntVec& x, const IntVec& y) {
        Rat s(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (x[i] != 0 && y[j] != 0)
                    s += Rat(x[i]) * d[i] * Rat(cartan[i][j]) * Rat(y[j]);
        return s;
    };
    rs.theta = rs.positive_roots.back();
    Rat scale = Rat(2) / raw_gram(rs.theta, rs.theta);
    rs.gram.assign(rank, RatVec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            rs.gram[i][j] = scale * d[i] * Rat(cartan[i][j]);

    // Highest short root: the maximal-height root of minimal length. Sorting
    // is by height, so the last minimal-length root wins.
    Rat min_len = rs.form(rs.theta, rs.theta);
    for (const auto& r : rs.positive_roots) min_len = std::min(min_len, rs.form(r, r));
    for (const auto& r : rs.positive_roots)
        if (rs.form(r, r) == min_len) rs.theta_short = r;

    rs.lacing = 1;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (i != j) rs.lacing = std::max<int>(rs.lacing, int(-cartan[i][j]));

    rs.rho.assign(rank, Rat(0));
    rs.rho_check.assign(rank, Rat(0));
    for (const auto& r : rs.positive_roots) {
        for (int i = 0; i < rank; ++i) rs.rho[i] += Rat(r[i], 2);
        RatVec rv = coroot(rs, r);
        for (int i = 0; i < rank; ++i) rs.rho_check[i] += rv[i] / Rat(2);
    }

    // h = 1 + sum of marks; h_check = 1 + sum of comarks, the comarks being
    // the coefficients of theta^vee over the simple coroots.
    std::int64_t marks = 0;
    for (auto c : rs.theta) marks += c;
    rs.h = 1 + marks;
    RatVec theta_check = coroot(rs, rs.theta);
    Rat comarks(0);
    for (int i = 0; i < rank; ++i) {
        Rat di = rs.gram[i][i] / Rat(2);  // (alpha_i|alpha_i)/2
        comarks += theta_check[i] * di;
    }
    if (!comarks.is_integer()) throw std::logic_error("non-integral comark sum");
    rs.h_check = 1 + comarks.num();

    RatMat ginv = rat_inverse(rs.gram);
    rs.fundamental_coweights.assign(rank, RatVec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rs.fundamental_coweights[i][j] = ginv[j][i];

    RatMat cart(rank, RatVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) cart[i][j] = Rat(cartan[i][j]);
    RatMat cinv = rat_inverse(cart);
    rs.fundamental_weights.assign(rank, RatVec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rs.fundamental_weights[i][j] = cinv[j][i];

    return rs;
}

}  // namespace

Rat RootSystemData::form(const RatVec& x, const RatVec& y) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < rank; ++j)
            if (!y[j].is_zero()) s += x[i] * gram[i][j] * y[j];
    }
    return s;
}

Rat RootSystemData::pair_coroot(const RatVec& lambda, const IntVec& alpha) const {
    Rat aa = form(alpha, alpha);
    return Rat(2) * form(to_rat(alpha), lambda) / aa;
}

bool RootSystemData::is_root(const IntVec& v) const {
    IntVec a = v;
    bool pos = false, nonzero = false;
    for (auto c : a)
        if (c != 0) {
            nonzero = true;
            pos = c > 0;
            break;
        }
    if (!nonzero) return false;
    if (!pos)
        for (auto& c : a) c = -c;
    return is_positive_root(a);
}

bool RootSystemData::is_positive_root(const IntVec& v) const {
    return std::find(positive_roots.begin(), positive_roots.end(), v) !=
           positive_roots.end();
}

IntMat RootSystemData::simple_reflection_matrix(int i) const {
    // s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i
    IntMat m = identity_mat(rank);
    for (int j = 0; j < rank; ++j) m[i][j] -= cartan[i][j];
    return m;
}

RootSystemData build_root_system(char type_letter, int rank) {
    return build_from_cartan(type_letter, rank, cartan_matrix(type_letter, rank));
}

RootSystemData root_system_from_cartan(char type_letter, int rank, const IntMat& cartan) {
    return build_from_cartan(type_letter, rank, cartan);
}

char detect_type_letter(const IntMat& cartan) {
    int n = int(cartan.size());
    std::vector<int> perm(n);
    for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
        IntMat canonical;
        try {
            canonical = cartan_matrix(letter, n);
        } catch (const input_error&) {
            continue;
        }
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            bool match = true;
            for (int i = 0; i < n && match; ++i)
                for (int j = 0; j < n && match; ++j)
                    if (canonical[perm[i]][perm[j]] != cartan[i][j]) match = false;
            if (match) return letter;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw input_error("detect_type_letter: not a finite-type Cartan matrix");
}

RatVec coroot(const RootSystemData& rs, const IntVec& alpha) {
    if (!rs.is_root(alpha)) throw input_error("coroot: vector is not a root");
    Rat aa = rs.form(alpha, alpha);
    RatVec r(rs.rank);
    for (int i = 0; i < rs.rank; ++i) r[i] = Rat(2) * Rat(alpha[i]) / aa;
    return r;
}

RootSystemData langlands_dual(const RootSystemData& rs) {
    static const std::map<char, char> dual_letter = {{'A', 'A'}, {'B', 'C'}, {'C', 'B'},
                                                     {'D', 'D'}, {'E', 'E'}, {'F', 'F'},
                                                     {'G', 'G'}};
    IntMat transposed(rs.rank, IntVec(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) transposed[i][j] = rs.cartan[j][i];
    // Keep node labels aligned with the original system; for F4/G2 this means
    // the arrow reverses in place rather than the nodes being renumbered.
    return build_from_cartan(dual_letter.at(rs.type_letter), rs.rank, transposed);
}

}  // namespace affbgg
