#include "ekr/spectra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

namespace {

std::vector<int> all_ones(int n) { return std::vector<int>(n, 1); }

SpectrumReport spectrum_impl(const WeightedClassSum& w, bool parallel) {
    if (w.n > kTableCap)
        throw std::length_error("full_spectrum: n exceeds the n<=16 cap");
    SpectrumReport rep;
    rep.n = w.n;
    auto lambdas = enumerate_partitions(w.n);
    rep.rows.resize(lambdas.size());
    const int count = static_cast<int>(lambdas.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < count; ++i) {
        SpectrumRow row;
        row.lambda = lambdas[i];
        row.degree = hook_length_degree(lambdas[i]);
        row.multiplicity = row.degree * row.degree;
        row.eigenvalue = weighted_eigenvalue(lambdas[i], w);
        rep.rows[i] = std::move(row);
    }
    rep.max_eigenvalue = rep.rows.front().eigenvalue;
    rep.min_eigenvalue = rep.rows.front().eigenvalue;
    for (const auto& r : rep.rows) {
        rep.max_eigenvalue = std::max(rep.max_eigenvalue, r.eigenvalue);
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, r.eigenvalue);
    }
    for (const auto& r : rep.rows) {
        if (r.eigenvalue == rep.max_eigenvalue) rep.attaining_max.push_back(r.lambda);
        if (r.eigenvalue == rep.min_eigenvalue) rep.attaining_min.push_back(r.lambda);
    }
    return rep;
}

}  // namespace

WeightedClassSum::WeightedClassSum(int n_, std::map<Partition, Rational> w)
    : n(n_), weights(std::move(w)) {
    if (n < 1) throw std::invalid_argument("WeightedClassSum: n must be positive");
    const Partition identity(all_ones(n));
    for (const auto& [rho, omega] : weights) {
        if (rho.n() != n)
            throw std::invalid_argument("WeightedClassSum: class " + rho.str() +
                                        " is not a partition of n");
        if (rho == identity && omega != 0)
            throw std::invalid_argument(
                "WeightedClassSum: identity class must have weight 0");
    }
}

Rational WeightedClassSum::weight(const Partition& rho) const {
    auto it = weights.find(rho);
    return it == weights.end() ? Rational(0) : it->second;
}

Rational WeightedClassSum::degree() const {
    Rational d = 0;
    for (const auto& [rho, omega] : weights) d += omega * conjugacy_class_size(rho);
    return d;
}

const SpectrumRow& SpectrumReport::row(const Partition& lambda) const {
    for (const auto& r : rows)
        if (r.lambda == lambda) return r;
    throw std::invalid_argument("SpectrumReport::row: " + lambda.str() +
                                " not present");
}

Rational weighted_eigenvalue(const Partition& lambda, const WeightedClassSum& w) {
    if (lambda.n() != w.n)
        throw std::invalid_argument("weighted_eigenvalue: size mismatch");
    Rational sum = 0;
    for (const auto& [rho, omega] : w.weights) {
        if (omega == 0) continue;
        sum += omega * Rational(conjugacy_class_size(rho) * mn_character(lambda, rho));
    }
    Rational xi = sum / Rational(hook_length_degree(lambda));
    xi.canonicalize();
    return xi;
}

SpectrumReport full_spectrum(const WeightedClassSum& w) {
    return spectrum_impl(w, true);
}

SpectrumReport full_spectrum_serial(const WeightedClassSum& w) {
    return spectrum_impl(w, false);
}

Rational weighted_ratio_bound(const Int& vertex_count, const Rational& degree,
                              const Rational& min_eig) {
    if (!(min_eig < 0))
        throw std::invalid_argument("weighted_ratio_bound: least eigenvalue must be negative");
    if (!(degree > 0))
        throw std::invalid_argument("weighted_ratio_bound: degree must be positive");
    Rational r = Rational(vertex_count) / (1 - degree / min_eig);
    r.canonicalize();
    return r;
}

Rational clique_coclique_bound(const Int& vertex_count, const Int& clique_size) {
    if (clique_size < 1)
        throw std::invalid_argument("clique_coclique_bound: clique size must be >= 1");
    return rat(vertex_count, clique_size);
}

}  // namespace ekr
