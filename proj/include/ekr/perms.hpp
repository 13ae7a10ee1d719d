#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ekr {

// Permutations are one-line notation over {0..n-1}. Vertex order everywhere is
// lexicographic on this notation, so ranks are stable across runs.
using Perm = std::vector<int>;

inline std::vector<Perm> all_permutations(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (p * q)(i) = p(q(i))
inline Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

// Lexicographic rank via the Lehmer code; O(n^2), n <= 7 here.
inline std::size_t perm_rank(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::size_t rank = 0, fact = 1;
    for (int i = n - 2; i >= 0; --i) {
        fact *= static_cast<std::size_t>(n - 1 - i);
        std::size_t smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += smaller * fact;
    }
    return rank;
}

inline int fixed_points(const Perm& p) {
    int c = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i)) ++c;
    return c;
}

}  // namespace ekr
