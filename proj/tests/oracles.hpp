#pragma once

// Reference computations written without the library's product, twist or pairing code.

#include "fanolat/rational.hpp"
#include "fanolat/lattice.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace oracle {

using fanolat::ChernCharacter;
using fanolat::Rational;

// chi(O, O(n)) on a prime Fano threefold of index one and degree d.
inline Rational chi_line(long long n, const Rational& d) {
    return d * Rational(n * (n + 1) * (2 * n + 1), 12) + 2 * n + 1;
}

// x = sum_k w[k] ch(O(kH)), k = 0..3; ch(O(kH)) = (1, k, k^2 d / 2, k^3 d / 6).
inline std::array<Rational, 4> line_weights(const ChernCharacter& x, const Rational& d) {
    std::array<std::array<Rational, 5>, 4> m;
    for (int row = 0; row < 4; ++row)
        for (int k = 0; k < 4; ++k) {
            m[row][k] = row == 0 ? Rational(1)
                      : row == 1 ? Rational(k)
                      : row == 2 ? Rational(k * k) * d / 2
                                 : Rational(k * k * k) * d / 6;
        }
    m[0][4] = x.r;
    m[1][4] = x.c;
    m[2][4] = x.l;
    m[3][4] = x.p;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (m[piv][col].is_zero()) ++piv;
        std::swap(m[piv], m[col]);
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[col][col];
            for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::array<Rational, 4> w;
    for (int k = 0; k < 4; ++k) w[k] = m[k][4] / m[k][k];
    return w;
}

// chi(x, y) from chi(O(j), O(k)) = chi(O, O((k - j)H)).
inline Rational chi(const ChernCharacter& x, const ChernCharacter& y, int genus) {
    const Rational d(2 * genus - 2);
    auto wx = line_weights(x, d), wy = line_weights(y, d);
    Rational s;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) s += wx[j] * wy[k] * chi_line(k - j, d);
    return s;
}

inline Rational random_rational(std::mt19937_64& rng, int num, int den) {
    std::uniform_int_distribution<int> n(-num, num), q(1, den);
    return Rational(n(rng), q(rng));
}

inline ChernCharacter random_class(std::mt19937_64& rng) {
    return {random_rational(rng, 9, 4), random_rational(rng, 9, 4), random_rational(rng, 20, 6),
            random_rational(rng, 20, 12)};
}

}  // namespace oracle
