#include "affbgg/rational.hpp"

namespace affbgg {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    size_t slash = s.find('/');
    auto to_i64 = [](const std::string& t) -> std::int64_t {
        if (t.empty()) throw input_error("malformed rational literal");
        size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            throw input_error("malformed rational literal: '" + t + "'");
        }
        if (pos != t.size()) throw input_error("malformed rational literal: '" + t + "'");
        return v;
    };
    if (slash == std::string::npos) return Rat(to_i64(s));
    return Rat(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
}

RatMat rat_inverse(const RatMat& m) {
    size_t n = m.size();
    RatMat a = m;
    RatMat inv(n, RatVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

RatVec rat_solve(const RatMat& m, const RatVec& rhs) {
    RatMat inv = rat_inverse(m);
    size_t n = m.size();
    RatVec x(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) x[i] += inv[i][j] * rhs[j];
    return x;
}

IntMat int_inverse(const IntMat& m) {
    size_t n = m.size();
    RatMat q(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = Rat(m[i][j]);
    RatMat inv = rat_inverse(q);
    IntMat r(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!inv[i][j].is_integer())
                throw std::domain_error("int_inverse: inverse is not integral");
            r[i][j] = inv[i][j].num();
        }
    return r;
}

}  // namespace affbgg
