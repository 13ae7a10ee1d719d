#include <doctest.h>

#include <set>

#include "ekr/perms.hpp"
#include "ekr/verifier.hpp"

using namespace ekr;

namespace {

// definitional derangement tests over explicit permutations
bool setwise_derangement(const Perm& p) {
    const int n = int(p.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((p[a] == a && p[b] == b) || (p[a] == b && p[b] == a)) return false;
    return true;
}

bool pointwise_derangement(const Perm& p) { return fixed_points(p) <= 1; }

}  // namespace

TEST_CASE("derangement classes against the brute-force definition") {
    for (int n : {4, 5, 6}) {
        std::set<Partition> set_brute, point_brute;
        for (const auto& p : all_permutations(n)) {
            if (setwise_derangement(p)) set_brute.insert(cycle_type(p));
            if (pointwise_derangement(p)) point_brute.insert(cycle_type(p));
        }
        CHECK(derangement_classes(n, Action::setwise2) == set_brute);
        CHECK(derangement_classes(n, Action::pointwise2) == point_brute);
    }
    CHECK_THROWS(derangement_classes(1, Action::setwise2));
}

TEST_CASE("setwise weight solution at the origin") {
    const int n = 9;
    auto w = setwise_weight_solution(n, 0, 0);
    CHECK(w.weight(Partition{n}) ==
          Rational(n - 1) / Rational(conjugacy_class_size(Partition{n})));
    CHECK(w.weight(Partition{n - 1, 1}) ==
          (Rational(n) * (n - 3) / 2) /
              Rational(conjugacy_class_size(Partition{n - 1, 1})));
    CHECK(w.weight(Partition{n - 3, 3}) == 0);
    CHECK(w.weight(Partition{n - 4, 3, 1}) == 0);
    CHECK_THROWS(setwise_weight_solution(7, 0, 0));
}

TEST_CASE("pointwise weight solution at the origin has a negative weight") {
    const int n = 10;
    auto w = pointwise_weight_solution(n, 0, 0, 0);
    // (1 - C(n-1,2)) / gamma < 0, which is why the origin is never used
    CHECK(w.weight(Partition{n - 2, 2}) < 0);
    CHECK_THROWS(pointwise_weight_solution(7, 0, 0, 0));
}

TEST_CASE("eigenvalue conditions hold identically in the free parameters") {
    // the defining property of both solution families: trivial eigenvalue
    // pinned and every target at exactly -1, for any parameter choice
    for (int n = 8; n <= 16; ++n) {
        for (auto [s, t] : {std::pair{rat(1, 7), rat(3, 11)},
                            {rat(-2, 5), rat(1, 9)},
                            {Rational(0), rat(5, 3)}}) {
            auto ws = setwise_weight_solution(n, s, t);
            CHECK(weighted_eigenvalue(Partition{n}, ws) ==
                  Rational(binomial(n, 2)) - 1);
            CHECK(weighted_eigenvalue(Partition{n - 1, 1}, ws) == -1);
            CHECK(weighted_eigenvalue(Partition{n - 2, 2}, ws) == -1);

            auto wp = pointwise_weight_solution(n, s, t, s + t);
            CHECK(weighted_eigenvalue(Partition{n}, wp) ==
                  2 * Rational(binomial(n, 2)) - 1);
            CHECK(weighted_eigenvalue(Partition{n - 1, 1}, wp) == -1);
            CHECK(weighted_eigenvalue(Partition{n - 2, 2}, wp) == -1);
            CHECK(weighted_eigenvalue(Partition{n - 2, 1, 1}, wp) == -1);
        }
    }
}

TEST_CASE("weighting support stays inside the derangement classes") {
    for (int n = 8; n <= 12; ++n) {
        auto set_classes = derangement_classes(n, Action::setwise2);
        auto pt = interior_sample(polytope(n, PolytopeKind::setwise_strip));
        for (const auto& [rho, omega] : setwise_weight_solution(n, pt.first, pt.second).weights)
            CHECK(set_classes.count(rho));

        auto point_classes = derangement_classes(n, Action::pointwise2);
        const bool even = n % 2 == 0;
        auto pp = interior_sample(polytope(
            n, even ? PolytopeKind::pointwise_even : PolytopeKind::pointwise_odd));
        auto wp = even ? pointwise_weight_solution(n, pp.first, 0, pp.second)
                       : pointwise_weight_solution(n, pp.first, pp.second, 0);
        for (const auto& [rho, omega] : wp.weights) CHECK(point_classes.count(rho));
    }
}

TEST_CASE("pointwise polytope vertices match the closed-form triangles") {
    for (int n = 8; n <= 16; ++n) {
        const Rational beta = Rational(conjugacy_class_size(Partition{n - 1, 1}));
        const Rational c2 = Rational(binomial(n, 2));
        const Rational c2m = Rational(binomial(n - 1, 2));
        if (n % 2 == 0) {
            const Rational nu = Rational(conjugacy_class_size(Partition{n - 4, 3, 1}));
            auto poly = polytope(n, PolytopeKind::pointwise_even);
            std::set<std::pair<Rational, Rational>> expect = {
                {(c2m - 1) / beta, Rational(n - 1) / nu},
                {(c2 - 1) / beta, Rational(0)},
                {(c2 + c2m - 2) / (2 * beta), Rational(0)}};
            CHECK(std::set<std::pair<Rational, Rational>>(
                      poly.vertices.begin(), poly.vertices.end()) == expect);
        } else {
            const Rational delta = Rational(conjugacy_class_size(Partition{n - 3, 3}));
            auto poly = polytope(n, PolytopeKind::pointwise_odd);
            std::set<std::pair<Rational, Rational>> expect = {
                {c2 / beta, Rational(-n) / delta},
                {(c2m - 1) / beta, Rational(0)},
                {(c2 + c2m - 1) / (2 * beta), Rational(0)}};
            CHECK(std::set<std::pair<Rational, Rational>>(
                      poly.vertices.begin(), poly.vertices.end()) == expect);
        }
    }
}

TEST_CASE("interior samples really are interior") {
    for (int n = 8; n <= 16; ++n) {
        for (auto kind : {PolytopeKind::setwise_strip,
                          n % 2 == 0 ? PolytopeKind::pointwise_even
                                     : PolytopeKind::pointwise_odd}) {
            auto poly = polytope(n, kind);
            auto [x, y] = interior_sample(poly);
            for (const auto& h : poly.halfspaces) CHECK(h.strictly_satisfied(x, y));
            CHECK(poly.contains(x, y));
        }
    }
}

TEST_CASE("empty region is reported, not sampled") {
    OpenPolytope2D empty;
    empty.halfspaces = {{Rational(1), Rational(0), Rational(0)},
                        {Rational(-1), Rational(0), Rational(-1)}};
    empty.vertices = enumerate_vertices(empty.halfspaces);
    CHECK_THROWS(interior_sample(empty));
}

TEST_CASE("small-n oracle weightings satisfy the eigenvalue conditions") {
    for (int n = 4; n <= 7; ++n) {
        auto w = oracle_weighting_small(n, Action::setwise2);
        auto s = full_spectrum(w);
        CHECK(s.row(Partition{n}).eigenvalue == Rational(binomial(n, 2)) - 1);
        CHECK(s.row(Partition{n - 1, 1}).eigenvalue == -1);
        CHECK(s.row(Partition{n - 2, 2}).eigenvalue == -1);
    }
    auto w5 = oracle_weighting_small(5, Action::pointwise2);
    auto s5 = full_spectrum(w5);
    CHECK(s5.row(Partition{5}).eigenvalue == 19);
    CHECK(s5.row(Partition{4, 1}).eigenvalue == -1);
    CHECK(s5.row(Partition{3, 2}).eigenvalue == -1);
    CHECK(s5.row(Partition{3, 1, 1}).eigenvalue == -1);
    CHECK_THROWS(oracle_weighting_small(6, Action::pointwise2));
    CHECK_THROWS(oracle_weighting_small(8, Action::setwise2));
}

TEST_CASE("spectral certification passes on representative cases") {
    auto set11 = verify_action(11, Action::setwise2);
    CHECK(set11.pass());
    CHECK(set11.bound == 2 * factorial(9));
    CHECK(set11.branch == "setwise");

    auto pt13 = verify_action(13, Action::pointwise2);
    CHECK(pt13.pass());
    CHECK(pt13.bound == factorial(11));
    CHECK(pt13.branch == "pointwise-odd");

    auto pt14 = verify_action(14, Action::pointwise2);
    CHECK(pt14.pass());
    CHECK(pt14.bound == factorial(12));
    CHECK(pt14.branch == "pointwise-even");

    CHECK_THROWS(verify_action(7, Action::setwise2));
    CHECK_THROWS(verify_action(17, Action::setwise2));
}

TEST_CASE("certification is deterministic") {
    auto a = verify_action(12, Action::setwise2);
    auto b = verify_action(12, Action::setwise2);
    CHECK(a.sample_point == b.sample_point);
    CHECK(a.weights.weights == b.weights.weights);
    CHECK(a.spectrum.min_eigenvalue == b.spectrum.min_eigenvalue);
}
