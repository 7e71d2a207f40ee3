#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pentuniv/checked.hpp"

namespace pentuniv {

using Vec3 = std::array<i64, 3>;

struct Mat3 {
    // row major
    std::array<std::array<i64, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1;
        return r;
    }

    i64& operator()(int i, int j) { return m[i][j]; }
    i64 operator()(int i, int j) const { return m[i][j]; }
    bool operator==(const Mat3&) const = default;

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[j][i] = m[i][j];
        return r;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                i64 s = 0;
                for (int k = 0; k < 3; ++k)
                    s = checked_add(s, checked_mul(m[i][k], o.m[k][j]));
                r.m[i][j] = s;
            }
        return r;
    }

    Vec3 operator*(const Vec3& v) const {
        Vec3 r{};
        for (int i = 0; i < 3; ++i) {
            i64 s = 0;
            for (int k = 0; k < 3; ++k) s = checked_add(s, checked_mul(m[i][k], v[k]));
            r[i] = s;
        }
        return r;
    }

    Mat3 scaled(i64 c) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = checked_mul(m[i][j], c);
        return r;
    }

    i64 trace() const { return checked_add(checked_add(m[0][0], m[1][1]), m[2][2]); }

    i64 det() const {
        i64 a = checked_mul(m[0][0], checked_sub(checked_mul(m[1][1], m[2][2]),
                                                 checked_mul(m[1][2], m[2][1])));
        i64 b = checked_mul(m[0][1], checked_sub(checked_mul(m[1][0], m[2][2]),
                                                 checked_mul(m[1][2], m[2][0])));
        i64 c = checked_mul(m[0][2], checked_sub(checked_mul(m[1][0], m[2][1]),
                                                 checked_mul(m[1][1], m[2][0])));
        return checked_add(checked_sub(a, b), c);
    }
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
            checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
            checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

// Divide out the gcd and make the first nonzero entry positive.
inline Vec3 primitive(Vec3 v) {
    i64 g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
    if (g > 1)
        for (auto& c : v) c /= g;
    for (auto c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return v;
}

// Positive definite integral ternary form, stored as
//   f(v) = a11 v1^2 + a22 v2^2 + a33 v3^2 + 2 a12 v1 v2 + 2 a13 v1 v3 + 2 a23 v2 v3,
// i.e. the Gram matrix has the a_ij off diagonal as written.
struct TernaryForm {
    i64 a11 = 0, a22 = 0, a33 = 0, a12 = 0, a13 = 0, a23 = 0;

    static TernaryForm diagonal(i64 a, i64 b, i64 c) { return {a, b, c, 0, 0, 0}; }

    static TernaryForm from_six(const std::array<i64, 6>& s) {
        return {s[0], s[1], s[2], s[3], s[4], s[5]};
    }

    std::array<i64, 6> six() const { return {a11, a22, a33, a12, a13, a23}; }
    bool operator==(const TernaryForm&) const = default;

    Mat3 gram() const {
        Mat3 g;
        g.m = {{{a11, a12, a13}, {a12, a22, a23}, {a13, a23, a33}}};
        return g;
    }

    i64 operator()(const Vec3& v) const {
        i64 s = checked_mul(a11, checked_mul(v[0], v[0]));
        s = checked_add(s, checked_mul(a22, checked_mul(v[1], v[1])));
        s = checked_add(s, checked_mul(a33, checked_mul(v[2], v[2])));
        s = checked_add(s, checked_mul(2 * a12, checked_mul(v[0], v[1])));
        s = checked_add(s, checked_mul(2 * a13, checked_mul(v[0], v[2])));
        s = checked_add(s, checked_mul(2 * a23, checked_mul(v[1], v[2])));
        return s;
    }

    i64 det() const { return gram().det(); }

    bool positive_definite() const {
        if (a11 <= 0) return false;
        if (checked_sub(checked_mul(a11, a22), checked_mul(a12, a12)) <= 0) return false;
        return det() > 0;
    }

    // All integer vectors with f(v) = m, sorted lexicographically. v1 and v2
    // are boxed by the adjugate bound v_i^2 <= m * adj_ii / det (standard for
    // positive definite forms); v3 then comes out of a quadratic with integer
    // discriminant.
    std::vector<Vec3> vectors(i64 m) const {
        std::vector<Vec3> out;
        if (m < 0) return out;
        if (m == 0) {
            out.push_back({0, 0, 0});
            return out;
        }
        i64 dt = det();
        if (dt <= 0) throw std::domain_error("form not positive definite");
        i64 adj1 = checked_sub(checked_mul(a22, a33), checked_mul(a23, a23));
        i64 adj2 = checked_sub(checked_mul(a11, a33), checked_mul(a13, a13));
        i64 b1 = isqrt(checked_mul(m, adj1) / dt) + 1;
        i64 b2 = isqrt(checked_mul(m, adj2) / dt) + 1;
        for (i64 v1 = -b1; v1 <= b1; ++v1) {
            for (i64 v2 = -b2; v2 <= b2; ++v2) {
                // a33 v3^2 + 2(a13 v1 + a23 v2) v3 + (f restricted - m) = 0
                i64 B = checked_add(checked_mul(a13, v1), checked_mul(a23, v2));
                i64 C = checked_add(checked_mul(a11, checked_mul(v1, v1)),
                                    checked_mul(a22, checked_mul(v2, v2)));
                C = checked_add(C, checked_mul(2 * a12, checked_mul(v1, v2)));
                C = checked_sub(C, m);
                i64 disc = checked_sub(checked_mul(B, B), checked_mul(a33, C));
                if (disc < 0) continue;
                i64 s = isqrt(disc);
                if (s * s != disc) continue;
                for (i64 sg : {s, -s}) {
                    if (s == 0 && sg < 0) continue;
                    i64 num = checked_sub(sg, B);
                    if (num % a33 == 0) out.push_back({v1, v2, num / a33});
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool represents(i64 m) const { return !vectors(m).empty(); }
};

// ---- integer spectra of 3x3 integer matrices ----

struct EigenPair {
    i64 value;
    Vec3 vector;  // primitive
};

// char poly det(x I - A) = x^3 - tr x^2 + c1 x - det with c1 the sum of the
// principal 2x2 minors.
inline std::array<i64, 3> char_poly(const Mat3& a) {
    i64 tr = a.trace();
    i64 c1 = 0;
    int idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : idx) {
        i64 minor = checked_sub(checked_mul(a(i, i), a(j, j)), checked_mul(a(i, j), a(j, i)));
        c1 = checked_add(c1, minor);
    }
    return {checked_neg(tr), c1, checked_neg(a.det())};
}

// Integer eigenvalues with primitive eigenvectors. Scans the Gershgorin disc
// for integer roots of the characteristic polynomial; for each root the
// kernel of A - xI must be one dimensional (the cross product of two
// independent rows spans it), anything bigger throws.
inline std::vector<EigenPair> integer_eigenpairs(const Mat3& a) {
    auto [c2, c1, c0] = char_poly(a);
    i64 bound = 0;
    for (int i = 0; i < 3; ++i) {
        i64 row = std::abs(a(i, 0)) + std::abs(a(i, 1)) + std::abs(a(i, 2));
        bound = std::max(bound, row);
    }
    if (bound > 10'000'000) throw std::domain_error("matrix too large for eigen scan");
    auto eval = [&](i64 x) {
        __int128 v = x;
        v = (v + c2) * x;
        v = (v + c1) * x;
        return v + c0;
    };
    std::vector<EigenPair> out;
    for (i64 x = -bound; x <= bound; ++x) {
        if (eval(x) != 0) continue;
        Mat3 b = a;
        for (int i = 0; i < 3; ++i) b(i, i) = checked_sub(b(i, i), x);
        Vec3 k{0, 0, 0};
        for (auto [r0, r1] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
            Vec3 c = cross({b(r0, 0), b(r0, 1), b(r0, 2)}, {b(r1, 0), b(r1, 1), b(r1, 2)});
            if (c != Vec3{0, 0, 0}) {
                k = c;
                break;
            }
        }
        if (k == Vec3{0, 0, 0})
            throw std::runtime_error("eigenspace dimension exceeds one");
        k = primitive(k);
        Vec3 ak = a * k;
        for (int i = 0; i < 3; ++i)
            if (ak[i] != checked_mul(x, k[i]))
                throw std::logic_error("eigen scan produced a non-eigenvector");
        out.push_back({x, k});
    }
    return out;
}

}  // namespace pentuniv
