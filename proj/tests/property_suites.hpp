#pragma once

// The five randomized and exhaustive property suites shared by the Catch2
// test binary and the acceptance gate. Each returns one CheckResult; a fixed
// seed keeps every run identical.

#include <random>
#include <sstream>
#include <vector>

#include "pentuniv/case_data.hpp"
#include "pentuniv/cases.hpp"
#include "pentuniv/escalation.hpp"
#include "pentuniv/good_vectors.hpp"
#include "pentuniv/pentagonal.hpp"

namespace suites {

using pentuniv::CheckResult;
using pentuniv::i64;
using pentuniv::Vec3;

constexpr unsigned kSeed = 0x5eed;

// (a) The pentagonal-sum search and the unit-coordinate quadratic search
// agree on solvability, and both witnesses hit their targets.
inline CheckResult pent_quad_equivalence(int tuples = 300) {
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<i64> klen(1, 4), coeff(1, 12), target(0, 300);
    i64 solvable = 0;
    for (int t = 0; t < tuples; ++t) {
        std::vector<i64> cs(static_cast<std::size_t>(klen(rng)));
        for (auto& c : cs) c = coeff(rng);
        i64 n = target(rng);
        auto pw = pentuniv::pent_witness(cs, n);
        auto qw = pentuniv::quad_witness_coprime6(cs, pentuniv::quadratic_target(cs, n));
        if (pw.has_value() != qw.has_value())
            return {"pent quad equivalence", false,
                    "solvability mismatch at n=" + std::to_string(n)};
        if (!pw) continue;
        ++solvable;
        if (pentuniv::pent_sum(cs, *pw) != n)
            return {"pent quad equivalence", false, "pentagonal witness off target"};
        i64 s = 0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (!pentuniv::coprime6((*qw)[i]))
                return {"pent quad equivalence", false, "quadratic witness not a unit"};
            s += cs[i] * (*qw)[i] * (*qw)[i];
        }
        if (s != pentuniv::quadratic_target(cs, n))
            return {"pent quad equivalence", false, "quadratic witness off target"};
    }
    std::ostringstream os;
    os << tuples << " random tuples, " << solvable << " solvable, both searches agree";
    return {"pent quad equivalence", true, os.str()};
}

// (b) The square identity, index recovery, and the nondecreasing value order
// along the zigzag enumeration, over ten thousand indices and up.
inline CheckResult value_identities(i64 span = 5000) {
    i64 checked = 0;
    for (i64 x = -span; x <= span; ++x) {
        i64 v = pentuniv::pent(x);
        i64 u = 6 * x - 1;
        if (24 * v + 1 != u * u)
            return {"value identities", false, "square identity fails at x=" + std::to_string(x)};
        auto back = pentuniv::pent_index_of_value(v);
        if (!back || *back != x)
            return {"value identities", false, "index recovery fails at x=" + std::to_string(x)};
        ++checked;
    }
    i64 prev = -1;
    for (i64 j = 0; j <= 2 * span; ++j) {
        i64 v = pentuniv::pent(pentuniv::pent_index_at(j));
        if (v < prev)
            return {"value identities", false, "zigzag order breaks at j=" + std::to_string(j)};
        prev = v;
    }
    return {"value identities", true, std::to_string(checked) + " indices checked"};
}

// (c) The rotation isometries sustain their iterations: integral images of
// the same value, and the termination conditions never strand a vector.
// Checked exhaustively for every applicable target up to the bound.
inline CheckResult isometry_iteration(i64 bound = 500) {
    using pentuniv::apply_isometry;
    const auto& data = pentuniv::case_data();

    // First family: targets = 9 (mod 24), solutions with every coordinate
    // divisible by 3. Some swap/sign variant with middle minus last = 0
    // (mod 4) must exist, the image must be integral with the same value,
    // and an all-divisible image must admit the same renormalization.
    const auto& a41 = *data.by_id("4-1").automorphism;
    const pentuniv::TernaryForm f41 = data.by_id("4-1").form(a41.form);
    i64 checked41 = 0;
    auto variants = [](const Vec3& v) {
        std::vector<Vec3> out;
        for (const Vec3& base : {v, Vec3{v[1], v[0], v[2]}})
            for (i64 sb : {1, -1})
                for (i64 sc : {1, -1})
                    if (pentuniv::mod_pos(sb * base[1] - sc * base[2], 4) == 0)
                        out.push_back({base[0], sb * base[1], sc * base[2]});
        return out;
    };
    for (i64 m = 9; m <= bound; m += 24) {
        for (const Vec3& v : f41.vectors(m)) {
            if (v[0] % 3 != 0 || v[1] % 3 != 0 || v[2] % 3 != 0) continue;
            ++checked41;
            auto vars = variants(v);
            if (vars.empty())
                return {"isometry iteration", false, "no renormalization at m=" + std::to_string(m)};
            for (const Vec3& w : vars) {
                auto img = apply_isometry(a41.numerator, a41.denominator, w);
                if (!img)
                    return {"isometry iteration", false,
                            "non integral image at m=" + std::to_string(m)};
                if (f41(*img) != m)
                    return {"isometry iteration", false, "value drift at m=" + std::to_string(m)};
                bool alldiv = (*img)[0] % 3 == 0 && (*img)[1] % 3 == 0 && (*img)[2] % 3 == 0;
                if (alldiv && variants(*img).empty())
                    return {"isometry iteration", false,
                            "image stuck without renormalization at m=" + std::to_string(m)};
            }
        }
    }

    // Second family: targets = 8 (mod 24), solutions coprime to 3, signs
    // normalized to 1 (mod 3). Iterating the rotation keeps integrality,
    // value, and coprimality, and reaches an all-odd vector.
    const auto& a43 = *data.by_id("4-3").automorphism;
    const pentuniv::TernaryForm f43 = data.by_id("4-3").form(a43.form);
    i64 checked43 = 0;
    for (i64 m = 8; m <= bound; m += 24) {
        for (Vec3 v : f43.vectors(m)) {
            if (v[0] % 3 == 0 || v[1] % 3 == 0 || v[2] % 3 == 0) continue;
            for (auto& c : v)
                if (pentuniv::mod_pos(c, 3) != 1) c = -c;
            ++checked43;
            int guard = 200;
            while (!(v[0] % 2 != 0 && v[1] % 2 != 0 && v[2] % 2 != 0)) {
                auto img = apply_isometry(a43.numerator, a43.denominator, v);
                if (!img)
                    return {"isometry iteration", false,
                            "second family non integral at m=" + std::to_string(m)};
                v = *img;
                if (f43(v) != m)
                    return {"isometry iteration", false,
                            "second family value drift at m=" + std::to_string(m)};
                if (v[0] % 3 == 0 || v[1] % 3 == 0 || v[2] % 3 == 0)
                    return {"isometry iteration", false,
                            "second family loses coprimality at m=" + std::to_string(m)};
                if (--guard == 0)
                    return {"isometry iteration", false,
                            "second family fails to terminate at m=" + std::to_string(m)};
            }
        }
    }
    std::ostringstream os;
    os << checked41 << " + " << checked43 << " solutions iterated, no anomalies";
    return {"isometry iteration", true, os.str()};
}

// (d) Every certified progression actually transfers representability: in
// the certified class, any value the lower form represents, the upper form
// represents too. Checked by direct enumeration.
inline CheckResult progression_transfer(i64 bound = 2000) {
    const auto& data = pentuniv::case_data();
    i64 instances = 0, values = 0;
    for (const auto& rec : data.cases) {
        for (const auto& tc : rec.transfer_checks) {
            if (tc.bad != 0) continue;  // the escape analysis owns that one
            auto cert = pentuniv::certify_progression(rec.form(tc.sub), rec.form(tc.sup),
                                                      tc.d, tc.a);
            if (!cert.holds())
                return {"progression transfer", false, rec.id + " certificate no longer holds"};
            ++instances;
            const auto& sub = rec.form(tc.sub);
            const auto& sup = rec.form(tc.sup);
            for (i64 n = pentuniv::mod_pos(tc.a, tc.d); n <= bound; n += tc.d) {
                ++values;
                if (sub.represents(n) && !sup.represents(n))
                    return {"progression transfer", false,
                            rec.id + " " + tc.sub + "->" + tc.sup + " drops n=" +
                                std::to_string(n)};
            }
        }
    }
    std::ostringstream os;
    os << instances << " certified pairs, " << values << " class values enumerated";
    return {"progression transfer", true, os.str()};
}

// (e) The bit-parallel representability table against a naive reference on
// random coefficient tuples.
inline CheckResult table_against_brute_force(int tuples = 500, i64 limit = 200) {
    std::mt19937 rng(kSeed + 1);
    std::uniform_int_distribution<i64> klen(1, 6), coeff(1, 120);
    for (int t = 0; t < tuples; ++t) {
        std::vector<i64> cs(static_cast<std::size_t>(klen(rng)));
        for (auto& c : cs) c = coeff(rng);
        auto table = pentuniv::representable_upto(cs, limit);
        std::vector<char> ref(static_cast<std::size_t>(limit) + 1, 0);
        ref[0] = 1;
        for (i64 a : cs) {
            std::vector<char> next(ref.size(), 0);
            for (i64 p : pentuniv::pent_values_upto(a == 0 ? limit : limit / a))
                for (i64 n = a * p; n <= limit; ++n)
                    if (ref[static_cast<std::size_t>(n - a * p)]) next[n] = 1;
            ref = next;
        }
        if (!std::equal(table.begin(), table.end(), ref.begin()))
            return {"table against brute force", false, "mismatch on tuple " + std::to_string(t)};
    }
    std::ostringstream os;
    os << tuples << " random tuples match up to " << limit;
    return {"table against brute force", true, os.str()};
}

inline std::vector<CheckResult> run_all() {
    return {pent_quad_equivalence(), value_identities(), isometry_iteration(),
            progression_transfer(), table_against_brute_force()};
}

}  // namespace suites
