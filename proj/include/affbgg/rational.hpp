#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affbgg {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational number on int64 with checked arithmetic.
/// Always stored normalized: gcd(num, den) = 1, den > 0.
class Rat {
  public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                   checked(i128(a.den_) * b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
                   checked(i128(a.den_) * b.den_));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
    }
    Rat operator-() const { return Rat(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const { return -(-*this).floor(); }

    /// Renders "p" or "p/q".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p", "-p", "p/q"; rejects anything else.
    static Rat parse(const std::string& s);

  private:
    using i128 = __int128;

    static std::int64_t checked(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rat: int64 overflow");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_, den_;
};

using RatVec = std::vector<Rat>;
using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec operator*(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline RatVec operator-(const RatVec& v) { return Rat(-1) * v; }

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Matrix-vector product over rationals, matrix given columnwise action
/// m[i][j] = coefficient of basis i in the image of basis j.
inline RatVec mat_apply(const IntMat& m, const RatVec& v) {
    RatVec r(v.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0) r[i] += Rat(m[i][j]) * v[j];
    return r;
}

inline IntVec mat_apply(const IntMat& m, const IntVec& v) {
    IntVec r(v.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t n = a.size();
    IntMat r(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline IntMat identity_mat(size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat rat_inverse(const RatMat& m);
RatVec rat_solve(const RatMat& m, const RatVec& rhs);

/// Inverse of a (unimodular-over-Q) integer matrix that is known to have an
/// integer inverse, e.g. a finite Weyl group action matrix.
IntMat int_inverse(const IntMat& m);

}  // namespace affbgg
