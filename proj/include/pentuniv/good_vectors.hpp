#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pentuniv/ternary_form.hpp"

namespace pentuniv {

// Machinery for passing representations between ternary forms along an
// arithmetic progression a (mod d): residue vectors of the receiving form,
// integral transfer matrices into the donor form, and the good/bad split
// that tells which residues the transfer handles.

inline i64 mod_pos(i64 x, i64 d) {
    i64 r = x % d;
    return r < 0 ? r + d : r;
}

inline i64 flat_index(const Vec3& v, i64 d) { return (v[0] * d + v[1]) * d + v[2]; }

inline Vec3 unflatten(i64 idx, i64 d) {
    return {idx / (d * d), (idx / d) % d, idx % d};
}

// All v in [0,d)^3 with g(v) = a (mod d).
inline std::vector<Vec3> residue_set(const TernaryForm& g, i64 d, i64 a) {
    std::vector<Vec3> out;
    i64 want = mod_pos(a, d);
    for (i64 v1 = 0; v1 < d; ++v1) {
        i64 p1 = g.a11 * v1 * v1;
        for (i64 v2 = 0; v2 < d; ++v2) {
            i64 p2 = p1 + g.a22 * v2 * v2 + 2 * g.a12 * v1 * v2;
            i64 lin = 2 * g.a13 * v1 + 2 * g.a23 * v2;
            for (i64 v3 = 0; v3 < d; ++v3) {
                i64 q = p2 + v3 * (g.a33 * v3 + lin);
                if (mod_pos(q, d) == want) out.push_back({v1, v2, v3});
            }
        }
    }
    return out;
}

// All integer matrices T with T^t M_f T = d^2 M_g. Column j lies on the
// shell f(c) = d^2 g_jj; the off diagonal entries of the target Gram matrix
// filter the column pairs.
inline std::vector<Mat3> transfer_set(const TernaryForm& f, const TernaryForm& g, i64 d) {
    const Mat3 mf = f.gram();
    const Mat3 mg = g.gram();
    const i64 d2 = checked_mul(d, d);
    std::array<std::vector<Vec3>, 3> shells;
    for (int j = 0; j < 3; ++j) shells[j] = f.vectors(checked_mul(d2, mg(j, j)));

    auto dot = [](const Vec3& a, const Vec3& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };

    std::vector<Mat3> out;
    std::vector<Vec3> c1s, c2pre;
    for (const Vec3& c0 : shells[0]) {
        Vec3 mfc0 = mf * c0;
        c1s.clear();
        for (const Vec3& c1 : shells[1])
            if (dot(mfc0, c1) == d2 * mg(0, 1)) c1s.push_back(c1);
        if (c1s.empty()) continue;
        c2pre.clear();
        for (const Vec3& c2 : shells[2])
            if (dot(mfc0, c2) == d2 * mg(0, 2)) c2pre.push_back(c2);
        if (c2pre.empty()) continue;
        for (const Vec3& c1 : c1s) {
            Vec3 mfc1 = mf * c1;
            for (const Vec3& c2 : c2pre) {
                if (dot(mfc1, c2) != d2 * mg(1, 2)) continue;
                Mat3 t;
                for (int i = 0; i < 3; ++i) {
                    t(i, 0) = c0[i];
                    t(i, 1) = c1[i];
                    t(i, 2) = c2[i];
                }
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Mat3& x, const Mat3& y) { return x.m < y.m; });
    return out;
}

struct GoodBadSplit {
    std::vector<Vec3> good;
    std::vector<Vec3> bad;
};

// v is good when some transfer matrix sends it to 0 mod d; then Tv/d carries
// a representation g(v) over to f.
inline GoodBadSplit split_good_bad(const std::vector<Vec3>& residues,
                                   const std::vector<Mat3>& transfers, i64 d) {
    GoodBadSplit split;
    std::vector<Mat3> tmod(transfers.size());
    for (std::size_t t = 0; t < transfers.size(); ++t)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) tmod[t](i, j) = mod_pos(transfers[t](i, j), d);
    for (const Vec3& v : residues) {
        bool good = false;
        for (const Mat3& t : tmod) {
            bool zero = true;
            for (int i = 0; i < 3 && zero; ++i) {
                i64 s = t(i, 0) * v[0] + t(i, 1) * v[1] + t(i, 2) * v[2];
                zero = (s % d == 0);
            }
            if (zero) {
                good = true;
                break;
            }
        }
        (good ? split.good : split.bad).push_back(v);
    }
    return split;
}

struct ProgressionCertificate {
    TernaryForm sub, sup;
    i64 d = 0, a = 0;
    i64 residue_count = 0;
    i64 transfer_count = 0;
    i64 bad_count = 0;
    bool holds() const { return bad_count == 0; }
};

// sub passes its representations in the class a (mod d) up to sup when no
// residue vector is left bad.
inline ProgressionCertificate certify_progression(const TernaryForm& sub, const TernaryForm& sup,
                                                  i64 d, i64 a) {
    ProgressionCertificate c;
    c.sub = sub;
    c.sup = sup;
    c.d = d;
    c.a = a;
    auto residues = residue_set(sub, d, a);
    auto transfers = transfer_set(sup, sub, d);
    auto split = split_good_bad(residues, transfers, d);
    c.residue_count = static_cast<i64>(residues.size());
    c.transfer_count = static_cast<i64>(transfers.size());
    c.bad_count = static_cast<i64>(split.bad.size());
    return c;
}

// Conjunction of linear congruences on a vector; each row constrains
// coeffs . v to a residue list.
struct VectorCondition {
    Vec3 coeffs;
    i64 mod;
    std::vector<i64> residues;
};

inline bool satisfies(const Vec3& v, const VectorCondition& c) {
    i64 s = mod_pos(c.coeffs[0] * v[0] + c.coeffs[1] * v[1] + c.coeffs[2] * v[2], c.mod);
    for (i64 r : c.residues)
        if (mod_pos(r, c.mod) == s) return true;
    return false;
}

inline bool satisfies_all(const Vec3& v, const std::vector<VectorCondition>& cs) {
    for (const auto& c : cs)
        if (!satisfies(v, c)) return false;
    return true;
}

inline std::vector<Vec3> filter_by_conditions(const std::vector<Vec3>& vs,
                                              const std::vector<VectorCondition>& cs) {
    std::vector<Vec3> out;
    for (const auto& v : vs)
        if (satisfies_all(v, cs)) out.push_back(v);
    return out;
}

// Category map over (Z/d)^3: 0 outside the residue set, 1 good, 2 + i for
// membership in bad part i.
inline std::vector<std::uint8_t> category_map(i64 d, const std::vector<Vec3>& good,
                                              const std::vector<std::vector<Vec3>>& bad_parts) {
    std::vector<std::uint8_t> cat(static_cast<std::size_t>(d) * d * d, 0);
    for (const auto& v : good) cat[flat_index(v, d)] = 1;
    for (std::size_t p = 0; p < bad_parts.size(); ++p)
        for (const auto& v : bad_parts[p]) {
            auto& c = cat[flat_index(v, d)];
            if (c != 0) throw std::logic_error("bad parts overlap good or each other");
            c = static_cast<std::uint8_t>(2 + p);
        }
    return cat;
}

// Image of (Z/d)^3 under T, i.e. the span of T's columns mod d, as sorted
// flat indices. Chasing an escape through all integer lifts of a residue
// vector lands exactly on a coset of this span.
inline std::vector<i64> column_span(const Mat3& t, i64 d) {
    std::vector<std::uint8_t> present(static_cast<std::size_t>(d) * d * d, 0);
    Vec3 c0{mod_pos(t(0, 0), d), mod_pos(t(1, 0), d), mod_pos(t(2, 0), d)};
    Vec3 c1{mod_pos(t(0, 1), d), mod_pos(t(1, 1), d), mod_pos(t(2, 1), d)};
    Vec3 c2{mod_pos(t(0, 2), d), mod_pos(t(1, 2), d), mod_pos(t(2, 2), d)};
    Vec3 vi{0, 0, 0};
    for (i64 i = 0; i < d; ++i) {
        Vec3 vj = vi;
        for (i64 j = 0; j < d; ++j) {
            Vec3 vk = vj;
            for (i64 k = 0; k < d; ++k) {
                present[flat_index(vk, d)] = 1;
                for (int q = 0; q < 3; ++q) {
                    vk[q] += c2[q];
                    if (vk[q] >= d) vk[q] -= d;
                }
            }
            for (int q = 0; q < 3; ++q) {
                vj[q] += c1[q];
                if (vj[q] >= d) vj[q] -= d;
            }
        }
        for (int q = 0; q < 3; ++q) {
            vi[q] += c0[q];
            if (vi[q] >= d) vi[q] -= d;
        }
    }
    std::vector<i64> out;
    for (i64 idx = 0; idx < static_cast<i64>(present.size()); ++idx)
        if (present[idx]) out.push_back(idx);
    return out;
}

// Verify the escape T moves every vector of a bad part, along with all its
// integer lifts, back into the residue set and never into the same part.
// Returns an error description, or nullopt when the whole part checks out.
inline std::optional<std::string> escape_covers(const std::vector<Vec3>& part, const Mat3& t,
                                                const std::vector<i64>& span,
                                                const std::vector<std::uint8_t>& cat, i64 d,
                                                std::uint8_t self_category) {
    for (const Vec3& u : part) {
        Vec3 w = t * u;
        for (int i = 0; i < 3; ++i)
            if (w[i] % d != 0)
                return "escape image not divisible by modulus at vector (" +
                       std::to_string(u[0]) + "," + std::to_string(u[1]) + "," +
                       std::to_string(u[2]) + ")";
        Vec3 w0{mod_pos(w[0] / d, d), mod_pos(w[1] / d, d), mod_pos(w[2] / d, d)};
        for (i64 idx : span) {
            Vec3 l = unflatten(idx, d);
            Vec3 target{};
            for (int i = 0; i < 3; ++i) target[i] = (w0[i] + l[i]) % d;
            std::uint8_t c = cat[flat_index(target, d)];
            if (c == 0)
                return "escape image leaves the residue set at vector (" +
                       std::to_string(u[0]) + "," + std::to_string(u[1]) + "," +
                       std::to_string(u[2]) + ")";
            if (c == self_category)
                return "escape image returns to the same part at vector (" +
                       std::to_string(u[0]) + "," + std::to_string(u[1]) + "," +
                       std::to_string(u[2]) + ")";
        }
    }
    return std::nullopt;
}

}  // namespace pentuniv
