#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentuniv/pentagonal.hpp"

namespace pentuniv {

struct EscalationNode {
    std::vector<i64> coeffs;
    i64 truant;
};

struct EscalationTree {
    std::vector<EscalationNode> internals;  // nodes that miss some integer
    std::vector<std::vector<i64>> leaves;   // universal sums
    i64 node_count() const {
        return static_cast<i64>(internals.size() + leaves.size());
    }
};

// Depth-first escalation from the empty sum: a node that misses some integer
// gains one more coefficient, ranging from its last coefficient (keeping the
// tuple nondecreasing) up to the missed integer. Appending anything larger
// than the truant can never fix it, so the tree is finite.
//
// Every node is judged twice on purpose: by table lookup up to truant_limit
// and by the twelve-number criterion. The two must agree or something deep is
// wrong, so disagreement throws rather than producing a quietly wrong tree.
inline EscalationTree escalate(i64 truant_limit = 200) {
    EscalationTree tree;
    std::vector<i64> coeffs;
    auto visit = [&](auto&& self) -> void {
        auto t = truant(coeffs, truant_limit);
        bool universal = is_universal(coeffs);
        if (!t.has_value()) {
            if (!universal)
                throw std::logic_error("escalation: full table but twelve-number test fails");
            tree.leaves.push_back(coeffs);
            return;
        }
        if (universal)
            throw std::logic_error("escalation: missing value but twelve-number test passes");
        tree.internals.push_back({coeffs, *t});
        i64 lo = coeffs.empty() ? 1 : coeffs.back();
        for (i64 a = lo; a <= *t; ++a) {
            coeffs.push_back(a);
            self(self);
            coeffs.pop_back();
        }
    };
    visit(visit);
    return tree;
}

// The truants of the internal nodes, deduplicated and sorted. Universality
// testing only ever needs these values.
inline std::vector<i64> critical_set(const EscalationTree& tree) {
    std::set<i64> s;
    for (const auto& n : tree.internals) s.insert(n.truant);
    return {s.begin(), s.end()};
}

// Universal, and no proper sub-sum (drop one coefficient) is already
// universal. Duplicate coefficients produce duplicate sub-sums; skip them.
inline bool is_proper_universal(std::span<const i64> coeffs) {
    std::vector<i64> c(coeffs.begin(), coeffs.end());
    if (!is_universal(c)) return false;
    std::set<std::vector<i64>> seen;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<i64> sub = c;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        if (!seen.insert(sub).second) continue;
        if (is_universal(sub)) return false;
    }
    return true;
}

struct Classification {
    std::vector<std::vector<i64>> ternary;
    std::vector<std::vector<i64>> quaternary;
    std::vector<std::vector<i64>> quinary;
    std::vector<i64> critical;

    i64 total() const {
        return static_cast<i64>(ternary.size() + quaternary.size() + quinary.size());
    }

    std::string render() const {
        std::ostringstream os;
        auto block = [&](const char* name, const std::vector<std::vector<i64>>& v) {
            os << name << " (" << v.size() << ")\n";
            for (const auto& f : v) {
                for (std::size_t i = 0; i < f.size(); ++i)
                    os << (i ? "," : "") << f[i];
                os << "\n";
            }
        };
        block("ternary", ternary);
        block("quaternary", quaternary);
        block("quinary", quinary);
        os << "total " << total() << "\n";
        os << "critical-set";
        for (i64 c : critical) os << " " << c;
        os << "\n";
        return os.str();
    }
};

// Full classification of the universal sums nothing can be dropped from.
inline Classification classify() {
    EscalationTree tree = escalate();
    Classification out;
    out.critical = critical_set(tree);
    for (const auto& leaf : tree.leaves) {
        if (!is_proper_universal(leaf)) continue;
        switch (leaf.size()) {
            case 3: out.ternary.push_back(leaf); break;
            case 4: out.quaternary.push_back(leaf); break;
            case 5: out.quinary.push_back(leaf); break;
            default:
                throw std::logic_error("classification: unexpected arity");
        }
    }
    std::sort(out.ternary.begin(), out.ternary.end());
    std::sort(out.quaternary.begin(), out.quaternary.end());
    std::sort(out.quinary.begin(), out.quinary.end());
    return out;
}

// Expand an arithmetic pattern (prefix, last coefficient lo..hi minus skips)
// into explicit tuples; the classification should tile exactly into these.
inline std::vector<std::vector<i64>> expand_row(const std::vector<i64>& prefix, i64 lo, i64 hi,
                                                const std::vector<i64>& skip) {
    std::vector<std::vector<i64>> out;
    for (i64 a = lo; a <= hi; ++a) {
        if (std::find(skip.begin(), skip.end(), a) != skip.end()) continue;
        std::vector<i64> f = prefix;
        f.push_back(a);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace pentuniv
