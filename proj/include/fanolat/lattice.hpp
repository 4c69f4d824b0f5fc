#pragma once

#include "rational.hpp"

#include <array>
#include <string>

namespace fanolat {

// Numerical class r + c H + l L + p P, with H^2 = d L, H L = P, deg P = 1.
struct ChernCharacter {
    Rational r, c, l, p;

    ChernCharacter() = default;
    ChernCharacter(Rational r_, Rational c_, Rational l_ = 0, Rational p_ = 0)
        : r(std::move(r_)), c(std::move(c_)), l(std::move(l_)), p(std::move(p_)) {}

    const Rational& operator[](int i) const {
        switch (i) {
            case 0: return r;
            case 1: return c;
            case 2: return l;
            default: return p;
        }
    }

    ChernCharacter& operator+=(const ChernCharacter& o) {
        r += o.r; c += o.c; l += o.l; p += o.p;
        return *this;
    }
    ChernCharacter& operator-=(const ChernCharacter& o) {
        r -= o.r; c -= o.c; l -= o.l; p -= o.p;
        return *this;
    }
    ChernCharacter operator-() const { return {-r, -c, -l, -p}; }
    friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
    friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
    friend ChernCharacter operator*(const Rational& k, const ChernCharacter& x) {
        return {k * x.r, k * x.c, k * x.l, k * x.p};
    }
    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

    bool is_zero() const { return r.is_zero() && c.is_zero() && l.is_zero() && p.is_zero(); }

    std::string str() const { return r.str() + "," + c.str() + "," + l.str() + "," + p.str(); }
};

inline ChernCharacter mul(const ChernCharacter& a, const ChernCharacter& b, const Rational& d) {
    return {a.r * b.r,
            a.r * b.c + b.r * a.c,
            a.r * b.l + b.r * a.l + d * a.c * b.c,
            a.r * b.p + b.r * a.p + a.c * b.l + b.c * a.l};
}

inline ChernCharacter exp_line(const Rational& t, const Rational& d) {
    return {1, t, d * t * t / 2, d * t * t * t / 6};
}

// x . exp(-beta H)
inline ChernCharacter twist(const ChernCharacter& x, const Rational& beta, const Rational& d) {
    return mul(x, exp_line(-beta, d), d);
}

// x (x) O(nH)
inline ChernCharacter twist_line(const ChernCharacter& x, const Rational& n, const Rational& d) {
    return mul(x, exp_line(n, d), d);
}

inline ChernCharacter dual(const ChernCharacter& x) { return {x.r, -x.c, x.l, -x.p}; }

// [k] acts on classes by (-1)^k.
inline ChernCharacter shift(const ChernCharacter& x, int k) { return (k % 2 == 0) ? x : -x; }

// The degree-one term in L is fixed by chi(O) = 1 and chi(O(H)) = g + 2.
inline ChernCharacter todd_class(int genus) { return {1, Rational(1, 2), Rational(genus + 11, 6), 1}; }

inline Rational euler_pairing(const ChernCharacter& x, const ChernCharacter& y, int genus) {
    Rational d(2 * genus - 2);
    return mul(mul(dual(x), y, d), todd_class(genus), d).p;
}

}  // namespace fanolat
