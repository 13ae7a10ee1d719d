#include "ekr/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

namespace {

Rational cls(const Partition& rho) { return Rational(conjugacy_class_size(rho)); }

}  // namespace

std::set<Partition> derangement_classes(int n, Action action) {
    if (n < 2) throw std::invalid_argument("derangement_classes: requires n >= 2");
    std::set<Partition> out;
    for (const auto& rho : enumerate_partitions(n)) {
        const bool at_most_one_fix = rho.multiplicity(1) <= 1;
        const bool no_two_cycle = rho.multiplicity(2) == 0;
        if (action == Action::setwise2 ? (no_two_cycle && at_most_one_fix)
                                       : at_most_one_fix)
            out.insert(rho);
    }
    return out;
}

WeightedClassSum setwise_weight_solution(int n, const Rational& s,
                                         const Rational& t) {
    if (n < 8)
        throw std::invalid_argument(
            "setwise_weight_solution: requires n >= 8 (all four support classes)");
    const Partition cn{n}, cn11{n - 1, 1}, cn33{n - 3, 3}, cn431{n - 4, 3, 1};
    const Rational alpha = cls(cn), beta = cls(cn11), gamma = cls(cn33),
                   delta = cls(cn431);
    const Rational half = Rational(n) * (n - 3) / 2;
    std::map<Partition, Rational> w;
    w[cn] = (-gamma * s + (n - 1)) / alpha;
    w[cn11] = (-delta * t + half) / beta;
    w[cn33] = s;
    w[cn431] = t;
    return WeightedClassSum(n, std::move(w));
}

WeightedClassSum pointwise_weight_solution(int n, const Rational& r,
                                           const Rational& s, const Rational& t) {
    if (n < 8)
        throw std::invalid_argument(
            "pointwise_weight_solution: requires n >= 8 (all six support classes)");
    const Partition cn{n}, cn11{n - 1, 1}, cn22{n - 2, 2}, cn33{n - 3, 3},
        cn321{n - 3, 2, 1}, cn431{n - 4, 3, 1};
    const Rational alpha = cls(cn), beta = cls(cn11), gamma = cls(cn22),
                   delta = cls(cn33), mu = cls(cn321), nu = cls(cn431);
    const Rational c2 = Rational(binomial(n, 2)), c2m = Rational(binomial(n - 1, 2));
    std::map<Partition, Rational> w;
    w[cn] = (c2 - 1 - beta * r - nu * t - delta * s) / alpha;
    w[cn11] = r;
    w[cn22] = (1 - c2m + beta * r + nu * t) / gamma;
    w[cn33] = s;
    w[cn321] = (c2 + c2m - 1 - beta * r - nu * t) / mu;
    w[cn431] = t;
    return WeightedClassSum(n, std::move(w));
}

WeightedClassSum oracle_weighting_small(int n, Action action) {
    if (n < 4 || n > 7)
        throw std::invalid_argument("oracle_weighting_small: requires 4 <= n <= 7");
    if (action == Action::setwise2) {
        // The s = t = 0 solution with the absent classes dropped: trivial
        // eigenvalue C(n,2)-1, targets [n-1,1] and [n-2,2] at -1.
        const Partition cn{n}, cn11{n - 1, 1};
        std::map<Partition, Rational> w;
        w[cn] = Rational(n - 1) / cls(cn);
        w[cn11] = (Rational(n) * (n - 3) / 2) / cls(cn11);
        return WeightedClassSum(n, std::move(w));
    }
    if (n != 5)
        throw std::invalid_argument(
            "oracle_weighting_small: pointwise weighting is pinned at n = 5 only");
    // Exact solution of the n = 5 pointwise eigenvalue conditions (trivial
    // eigenvalue 19, targets [4,1],[3,2],[3,1,1] at -1) with the single free
    // parameter fixed to omega_(5) = 1/12.
    std::map<Partition, Rational> w;
    w[Partition{5}] = rat(1, 12);
    w[Partition{4, 1}] = rat(11, 30);
    w[Partition{3, 2}] = rat(1, 10);
    w[Partition{2, 2, 1}] = rat(4, 15);
    return WeightedClassSum(5, std::move(w));
}

VerificationReport verify_action(int n, Action action) {
    if (n < 8)
        throw std::invalid_argument(
            "verify_action: spectral path requires n >= 8 (small n is exhaustive)");
    if (n > kTableCap)
        throw std::length_error("verify_action: n exceeds the n<=16 cap");

    VerificationReport rep;
    rep.n = n;
    rep.action = action;

    OpenPolytope2D poly;
    std::pair<Rational, Rational> pt;
    if (action == Action::setwise2) {
        rep.branch = "setwise";
        poly = polytope(n, PolytopeKind::setwise_strip);
        pt = interior_sample(poly);
        rep.sample_point = {pt.first, pt.second};
        rep.weights = setwise_weight_solution(n, pt.first, pt.second);
        rep.target_degree = Rational(binomial(n, 2)) - 1;
        rep.target_lambdas = {Partition{n - 1, 1}, Partition{n - 2, 2}};
    } else {
        const bool even = n % 2 == 0;
        rep.branch = even ? "pointwise-even" : "pointwise-odd";
        poly = polytope(n, even ? PolytopeKind::pointwise_even
                                : PolytopeKind::pointwise_odd);
        pt = interior_sample(poly);
        rep.sample_point = {pt.first, pt.second};
        rep.weights = even ? pointwise_weight_solution(n, pt.first, 0, pt.second)
                           : pointwise_weight_solution(n, pt.first, pt.second, 0);
        rep.target_degree = 2 * Rational(binomial(n, 2)) - 1;
        rep.target_lambdas = {Partition{n - 1, 1}, Partition{n - 2, 2},
                              Partition{n - 2, 1, 1}};
    }

    rep.spectrum = full_spectrum(rep.weights);

    const Partition trivial{n};
    rep.trivial_eigenvalue_ok =
        rep.spectrum.row(trivial).eigenvalue == rep.target_degree;
    if (!rep.trivial_eigenvalue_ok) rep.offending.push_back(trivial);

    rep.targets_attain_minus_one = true;
    for (const auto& lam : rep.target_lambdas)
        if (rep.spectrum.row(lam).eigenvalue != -1) {
            rep.targets_attain_minus_one = false;
            rep.offending.push_back(lam);
        }

    rep.others_strictly_inside = true;
    for (const auto& row : rep.spectrum.rows) {
        if (row.lambda == trivial) continue;
        if (std::find(rep.target_lambdas.begin(), rep.target_lambdas.end(),
                      row.lambda) != rep.target_lambdas.end())
            continue;
        if (!(row.eigenvalue > -1 && row.eigenvalue < rep.target_degree)) {
            rep.others_strictly_inside = false;
            rep.offending.push_back(row.lambda);
        }
    }

    // The odd pointwise branch allows a negative weight on (n-3,3); every
    // other weight (and every setwise/even weight) must be nonnegative.
    rep.weights_nonnegative = true;
    const Partition exempt{n - 3, 3};
    const bool odd_pointwise = rep.branch == "pointwise-odd";
    for (const auto& [rho, omega] : rep.weights.weights) {
        if (odd_pointwise && rho == exempt) continue;
        if (omega < 0) rep.weights_nonnegative = false;
    }

    if (rep.pass())
        rep.bound =
            weighted_ratio_bound(factorial(n), rep.target_degree, Rational(-1));
    return rep;
}

}  // namespace ekr
