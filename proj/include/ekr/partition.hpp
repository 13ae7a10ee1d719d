#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ekr/rational.hpp"

namespace ekr {

// Integer partition with weakly decreasing positive parts. Indexes both
// irreducible characters of Sym(n) and its conjugacy classes.
class Partition {
  public:
    Partition() = default;  // the empty partition of 0

    explicit Partition(std::vector<int> parts);

    // Convenience: Partition{4,1}
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }

    // number of parts equal to k
    int multiplicity(int k) const;

    Partition conjugate() const;

    // "(4,1)"; the empty partition renders as "()"
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

// One border-strip removal: the remaining shape, the sign datum, and the
// removed cells as (row, col) pairs, 0-based.
struct RimHookRemoval {
    Partition remaining;
    int leg_length = 0;
    std::vector<std::pair<int, int>> cells;
};

// All partitions of n in descending lexicographic order ([n] first, [1^n] last).
std::vector<Partition> enumerate_partitions(int n);

// n!/z_rho with z_rho = prod_k k^{m_k} m_k!. Rejects the empty partition.
Int conjugacy_class_size(const Partition& rho);

// Degree of the irreducible character chi^lambda, by the hook length formula.
Int hook_length_degree(const Partition& lambda);

// Every removal of a border strip of exactly k cells from lambda.
std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int k);

// Cycle type of a permutation given in one-line notation (0-based images).
// Rejects non-bijective input.
Partition cycle_type(const std::vector<int>& perm);

}  // namespace ekr
