#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ekr/partition.hpp"
#include "ekr/rational.hpp"

namespace ekr {

// Highest n for which full character tables / spectra are built. 16! and the
// associated degrees are far inside mpz range; the cap only guards runtime.
inline constexpr int kTableCap = 16;

// Exact value of the irreducible character chi^lambda on the class C_rho,
// by the Murnaghan-Nakayama recursion (largest class part stripped first).
// Memoized internally per call; results are identical with the cache disabled.
Int mn_character(const Partition& lambda, const Partition& rho);

// Same recursion without any memoization; kept as a cross-check oracle.
Int mn_character_nomemo(const Partition& lambda, const Partition& rho);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> rows;  // lambda labels, descending lex
    std::vector<Partition> cols;  // rho labels, descending lex
    std::vector<std::vector<Int>> entries;

    const Int& at(const Partition& lambda, const Partition& rho) const;
};

CharacterTable character_table(int n);

// The eight shapes of dimension below 2*C(n+1,2), valid for n >= 13.
std::vector<Partition> low_dim_partitions(int n);

// One instantiated row of the appendix character table: the concrete shape at
// this n and its six values on the classes
// (n), (n-1,1), (n-2,2), (n-3,3), (n-3,2,1), (n-4,3,1) in that order.
struct Table3Row {
    std::string family;  // printed row label, e.g. "[n-k-4,4,1^k]"
    int k = -1;          // instantiated k for ranged families, -1 otherwise
    Partition shape;
    std::array<Int, 6> values;
    bool valid_shape = false;  // instantiation is a genuine partition of n
};

struct Table3 {
    int n = 0;
    std::array<Partition, 6> column_classes;
    std::vector<Table3Row> rows;
    // distinct printed rows instantiating the same shape at this n
    std::vector<std::pair<std::string, std::string>> collisions;
};

// Every appendix row instantiated at n (n >= 13), ranged families expanded
// over their printed k-ranges. Shape collisions are reported, never merged.
Table3 symbolic_table3(int n);

}  // namespace ekr
