#pragma once

#include <map>
#include <vector>

#include "ekr/characters.hpp"
#include "ekr/partition.hpp"
#include "ekr/rational.hpp"

namespace ekr {

// A = sum_rho omega_rho A_rho over the conjugacy class scheme of Sym(n).
// Absent classes carry weight 0; the identity class must not appear.
struct WeightedClassSum {
    int n = 0;
    std::map<Partition, Rational> weights;

    WeightedClassSum(int n_, std::map<Partition, Rational> w);

    Rational weight(const Partition& rho) const;
    // sum_rho omega_rho |C_rho|, the constant row sum of A
    Rational degree() const;
};

struct SpectrumRow {
    Partition lambda;
    Rational eigenvalue;
    Int degree;        // chi^lambda(id)
    Int multiplicity;  // degree^2
};

struct SpectrumReport {
    int n = 0;
    std::vector<SpectrumRow> rows;  // in enumerate_partitions order
    Rational max_eigenvalue, min_eigenvalue;
    std::vector<Partition> attaining_max, attaining_min;

    const SpectrumRow& row(const Partition& lambda) const;
};

// Eigenvalue of A on the lambda-isotypic component:
// xi = sum_rho omega_rho |C_rho| chi^lambda(rho) / chi^lambda(id).
Rational weighted_eigenvalue(const Partition& lambda, const WeightedClassSum& w);

// Eigenvalues for all lambda |- n with multiplicities d^2 and the extremes.
// The per-lambda loop runs under OpenMP; full_spectrum_serial is the
// reference implementation the parallel kernel is tested against.
SpectrumReport full_spectrum(const WeightedClassSum& w);
SpectrumReport full_spectrum_serial(const WeightedClassSum& w);

// alpha(X) <= |V| / (1 - d/tau) for least eigenvalue tau < 0 < d.
Rational weighted_ratio_bound(const Int& vertex_count, const Rational& degree,
                              const Rational& min_eig);

// alpha(X) <= |V| / omega(X) for vertex-transitive X.
Rational clique_coclique_bound(const Int& vertex_count, const Int& clique_size);

}  // namespace ekr
