#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ekr/partition.hpp"
#include "ekr/perms.hpp"
#include "ekr/verifier.hpp"

namespace ekr {

inline constexpr int kGraphCap = 7;

// Explicit derangement graph on all n! permutations (lexicographic vertex
// order); g ~ h iff h g^{-1} lies in a derangement class for the action.
struct DerangementGraph {
    int n = 0;
    Action action = Action::setwise2;
    int vertex_count = 0;
    int words = 0;                   // 64-bit words per adjacency row
    std::vector<uint64_t> adjacency;  // row-major bit rows

    bool adjacent(int g, int h) const {
        return adjacency[size_t(g) * words + size_t(h) / 64] >> (h % 64) & 1;
    }
    long degree(int g) const;
};

struct PermutationFamily {
    int n = 0;
    std::vector<Perm> members;  // distinct, sorted lexicographically

    std::vector<Rational> characteristic_vector() const;  // over vertex order
};

struct CocliqueResult {
    int size = 0;
    PermutationFamily witness;  // lexicographically least maximum coclique
};

DerangementGraph build_derangement_graph(int n, Action action);

// Exact maximum independent set: branch and bound with a greedy-coloring
// upper bound on the complement, then a lexicographic refinement of the
// witness so ties resolve deterministically.
CocliqueResult max_coclique(const DerangementGraph& graph);

// The stabilizer of the anchor as a family: setwise stabilizer of the 2-set
// {a,b} (size 2(n-2)!) or pointwise stabilizer of the pair (a,b) (size (n-2)!).
PermutationFamily canonical_coset_family(int n, Action action,
                                         std::pair<int, int> anchor);

// Definitional pairwise intersection check.
bool is_intersecting_family(const PermutationFamily& family, Action action);

// Set of lambda with P_lambda * (characteristic vector) != 0, exact; n <= 6.
std::set<Partition> module_signature(const PermutationFamily& family);

// The n cyclic shifts x -> x+i (mod n): a clique of size n in the
// 1-intersection derangement graph.
PermutationFamily latin_square_clique(int n);

}  // namespace ekr
