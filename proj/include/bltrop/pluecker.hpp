#pragma once

#include <array>

#include "bltrop/extvalue.hpp"

namespace bltrop {

/// Index of the unordered pair {i,j} in lexicographic order
/// (01, 02, 03, 12, 13, 23).
inline std::size_t pair_index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    int k = table[i][j];
    if (k < 0) throw std::logic_error("pair_index expects i != j");
    return static_cast<std::size_t>(k);
}

inline std::pair<std::size_t, std::size_t> pair_from_index(std::size_t k) {
    static constexpr std::pair<std::size_t, std::size_t> pairs[6] = {{0, 1}, {0, 2}, {0, 3},
                                                                     {1, 2}, {1, 3}, {2, 3}};
    return pairs[k];
}

/// The complementary pair {0,1,2,3} \ {i,j}.
inline std::pair<std::size_t, std::size_t> complement_pair(std::size_t i, std::size_t j) {
    std::array<bool, 4> used{};
    used[i] = used[j] = true;
    std::array<std::size_t, 2> rest{};
    std::size_t k = 0;
    for (std::size_t m = 0; m < 4; ++m)
        if (!used[m]) rest[k++] = m;
    return {rest[0], rest[1]};
}

/// Candidate tropical Pluecker coordinates of a line, indexed
/// (p01, p02, p03, p12, p13, p23).
struct TropPlueckerVector {
    std::array<ExtVal, 6> p;

    const ExtVal& operator[](std::size_t k) const { return p[k]; }
    ExtVal& operator[](std::size_t k) { return p[k]; }
    const ExtVal& at(std::size_t i, std::size_t j) const { return p[pair_index(i, j)]; }

    /// The three pairing sums p01+p23, p02+p13, p03+p12.
    std::array<ExtVal, 3> pairing_sums() const {
        return {p[0] + p[5], p[1] + p[4], p[2] + p[3]};
    }

    /// Tropical Pluecker relation: the minimum of the pairing sums is
    /// attained at least twice (all-infinite counts as attained).
    bool satisfies_relation() const {
        auto s = pairing_sums();
        ExtVal m = min(min(s[0], s[1]), s[2]);
        int hits = 0;
        for (const auto& v : s)
            if (v == m) ++hits;
        return hits >= 2;
    }

    int infinite_entries() const {
        int k = 0;
        for (const auto& v : p)
            if (v.is_infinite()) ++k;
        return k;
    }

    bool all_infinite() const { return infinite_entries() == 6; }

    /// Canonical representative modulo the all-ones shift: first finite
    /// entry set to 0.
    TropPlueckerVector normalized() const {
        TropPlueckerVector r = *this;
        for (const auto& v : p)
            if (v.is_finite()) {
                for (auto& w : r.p)
                    if (w.is_finite()) w = w - v;
                break;
            }
        return r;
    }

    friend bool operator==(const TropPlueckerVector& a, const TropPlueckerVector& b) {
        return a.p == b.p;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < 6; ++k) {
            if (k) s += ",";
            s += p[k].str();
        }
        return s + "]";
    }
};

inline TropPlueckerVector make_pluecker(ExtVal p01, ExtVal p02, ExtVal p03, ExtVal p12,
                                        ExtVal p13, ExtVal p23) {
    return TropPlueckerVector{{p01, p02, p03, p12, p13, p23}};
}

/// Lexicographic comparison with infinity sorted last; used for
/// deterministic grouping and serialization.
inline bool pluecker_less(const TropPlueckerVector& a, const TropPlueckerVector& b) {
    for (std::size_t k = 0; k < 6; ++k) {
        if (a.p[k] == b.p[k]) continue;
        return a.p[k] < b.p[k];
    }
    return false;
}

} // namespace bltrop
