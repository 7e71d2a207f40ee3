#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "pentuniv/checked.hpp"

namespace pentuniv {

// Values (3x^2 - x)/2 over all integers x. Injective on the integers:
// 24*pent(x) + 1 = (6x - 1)^2 and 6x - 1 determines x.
inline i64 pent(i64 x) {
    i64 sq = checked_mul(x, x);
    return checked_sub(checked_mul(3, sq), x) / 2;
}

// Index enumeration 0, 1, -1, 2, -2, ... Values along this order are
// nondecreasing (0, 1, 2, 5, 7, 12, 15, ...), which every search below
// relies on for cutoffs and for canonical first-found witnesses.
inline i64 pent_index_at(i64 j) {
    if (j == 0) return 0;
    return (j % 2 == 1) ? (j + 1) / 2 : -(j / 2);
}

inline std::vector<i64> pent_values_upto(i64 limit) {
    std::vector<i64> out;
    for (i64 j = 0;; ++j) {
        i64 v = pent(pent_index_at(j));
        if (v > limit) break;
        out.push_back(v);
    }
    return out;
}

// Bit row with an "or in a shifted copy" primitive; the representability
// table below is a fold of these over the coefficient list.
class BitRow {
  public:
    explicit BitRow(i64 bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    void set(i64 i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(i64 i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    i64 size() const { return bits_; }

    void or_shifted(const BitRow& src, i64 shift) {
        i64 ws = shift >> 6;
        int bs = static_cast<int>(shift & 63);
        i64 n = static_cast<i64>(w_.size());
        for (i64 i = static_cast<i64>(src.w_.size()) - 1; i >= 0; --i) {
            std::uint64_t word = src.w_[i];
            if (word == 0) continue;
            if (i + ws < n) w_[i + ws] |= word << bs;
            if (bs != 0 && i + ws + 1 < n) w_[i + ws + 1] |= word >> (64 - bs);
        }
    }

  private:
    i64 bits_;
    std::vector<std::uint64_t> w_;
};

// rep[N] == 1 iff N is a sum of pent values weighted by the coefficients,
// for 0 <= N <= limit. Straight subset-sum sweep, one coefficient at a time.
inline std::vector<char> representable_upto(std::span<const i64> coeffs, i64 limit) {
    BitRow row(limit + 1);
    row.set(0);
    for (i64 a : coeffs) {
        BitRow next(limit + 1);
        for (i64 p : pent_values_upto(a == 0 ? limit : limit / a)) {
            next.or_shifted(row, checked_mul(a, p));
        }
        row = next;
    }
    std::vector<char> out(limit + 1);
    for (i64 i = 0; i <= limit; ++i) out[i] = row.test(i);
    return out;
}

// Smallest positive integer the sum misses, or nullopt if it covers
// everything up to search_limit.
inline std::optional<i64> truant(std::span<const i64> coeffs, i64 search_limit = 200) {
    auto rep = representable_upto(coeffs, search_limit);
    for (i64 n = 1; n <= search_limit; ++n)
        if (!rep[n]) return n;
    return std::nullopt;
}

// A sum represents every positive integer iff it represents these twelve.
inline const std::array<i64, 12>& critical_numbers() {
    static const std::array<i64, 12> c = {1, 3, 8, 9, 11, 18, 19, 25, 27, 43, 98, 109};
    return c;
}

inline bool is_universal(std::span<const i64> coeffs) {
    auto rep = representable_upto(coeffs, critical_numbers().back());
    for (i64 c : critical_numbers())
        if (!rep[c]) return false;
    return true;
}

inline i64 pent_sum(std::span<const i64> coeffs, std::span<const i64> xs) {
    i64 s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s = checked_add(s, checked_mul(coeffs[i], pent(xs[i])));
    return s;
}

// First witness in index order (per coordinate: 0, 1, -1, 2, -2, ...),
// depth first. The last coordinate is solved directly: pent(x) = v has a
// solution iff 24v + 1 is an odd square r^2 with r = +-1 (mod 6), and the
// residue of r picks the sign of the index.
inline std::optional<i64> pent_index_of_value(i64 v) {
    if (v < 0) return std::nullopt;
    i64 disc = checked_add(checked_mul(24, v), 1);
    i64 r = isqrt(disc);
    if (r * r != disc) return std::nullopt;
    if (r % 6 == 1) return (1 - r) / 6;
    if (r % 6 == 5) return (r + 1) / 6;
    return std::nullopt;
}

inline std::optional<std::vector<i64>> pent_witness(std::span<const i64> coeffs, i64 n) {
    if (n < 0) return std::nullopt;
    std::vector<i64> xs(coeffs.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, i64 rem) -> bool {
        if (i + 1 == coeffs.size()) {
            if (rem % coeffs[i] != 0) return false;
            auto x = pent_index_of_value(rem / coeffs[i]);
            if (!x) return false;
            xs[i] = *x;
            return true;
        }
        for (i64 j = 0;; ++j) {
            i64 x = pent_index_at(j);
            i64 v = checked_mul(coeffs[i], pent(x));
            if (v > rem) break;
            xs[i] = x;
            if (self(self, i + 1, rem - v)) return true;
        }
        return false;
    };
    if (coeffs.empty()) {
        if (n == 0) return std::vector<i64>{};
        return std::nullopt;
    }
    if (!rec(rec, 0, n)) return std::nullopt;
    return xs;
}

// ---- the quadratic reformulation ----
//
// Sum a_i * pent(x_i) = N  iff  sum a_i * (6 x_i - 1)^2 = 24 N + sum a_i,
// so representability is equivalent to representing 24N + sum(a) by the
// diagonal quadratic form with the same coefficients using values coprime
// to 6 (the odd non-multiples of 3 are exactly the |6x - 1|).

inline bool coprime6(i64 x) { return std::gcd(x, i64{6}) == 1; }

inline i64 quadratic_target(std::span<const i64> coeffs, i64 n) {
    i64 s = 0;
    for (i64 a : coeffs) s = checked_add(s, a);
    return checked_add(checked_mul(24, n), s);
}

// Positive units mod 6 in ascending order: 1, 5, 7, 11, 13, ...
inline i64 next_unit6(i64 x) { return (x % 6 == 1) ? x + 4 : x + 2; }

// First witness (all entries positive, coprime to 6) in ascending depth
// first order, last coordinate solved directly.
inline std::optional<std::vector<i64>> quad_witness_coprime6(std::span<const i64> coeffs,
                                                            i64 target) {
    if (coeffs.empty()) {
        if (target == 0) return std::vector<i64>{};
        return std::nullopt;
    }
    std::vector<i64> xs(coeffs.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, i64 rem) -> bool {
        i64 a = coeffs[i];
        if (i + 1 == coeffs.size()) {
            if (rem <= 0 || rem % a != 0) return false;
            i64 q = rem / a;
            i64 r = isqrt(q);
            if (r * r != q || !coprime6(r)) return false;
            xs[i] = r;
            return true;
        }
        for (i64 x = 1; checked_mul(a, checked_mul(x, x)) <= rem; x = next_unit6(x)) {
            xs[i] = x;
            if (self(self, i + 1, rem - a * x * x)) return true;
        }
        return false;
    };
    if (!rec(rec, 0, target)) return std::nullopt;
    return xs;
}

// Map a positive unit u = |6k - 1| back to the index k.
inline i64 pent_index_from_unit(i64 u) {
    if (u % 6 == 5) return (u + 1) / 6;   // 6k - 1 = u
    if (u % 6 == 1) return (1 - u) / 6;   // 6k - 1 = -u
    throw std::domain_error("not a unit mod 6");
}

}  // namespace pentuniv
