#pragma once

#include <set>
#include <string>
#include <vector>

#include "ekr/polytope.hpp"
#include "ekr/spectra.hpp"

namespace ekr {

enum class Action { setwise2, pointwise2 };

inline const char* action_name(Action a) {
    return a == Action::setwise2 ? "setwise" : "pointwise";
}

// Classes whose members are derangements for the action: no 2-cycles and at
// most one fixed point (setwise), at most one fixed point (pointwise).
std::set<Partition> derangement_classes(int n, Action action);

// General solution of the 2-setwise weight system over classes
// (n), (n-1,1), (n-3,3), (n-4,3,1); requires n >= 8 so all four shapes exist.
WeightedClassSum setwise_weight_solution(int n, const Rational& s,
                                         const Rational& t);

// General solution of the 2-pointwise weight system over classes
// (n), (n-1,1), (n-2,2), (n-3,3), (n-3,2,1), (n-4,3,1); requires n >= 8.
WeightedClassSum pointwise_weight_solution(int n, const Rational& r,
                                           const Rational& s, const Rational& t);

// Fixed small-n weightings for the explicit-operator oracles (4 <= n <= 7).
// Setwise uses the two surviving support classes; pointwise n=5 uses an exact
// solution of the eigenvalue conditions with one free parameter pinned.
WeightedClassSum oracle_weighting_small(int n, Action action);

struct VerificationReport {
    int n = 0;
    Action action = Action::setwise2;
    std::string branch;  // "setwise", "pointwise-even" or "pointwise-odd"
    std::vector<Rational> sample_point;
    WeightedClassSum weights{1, {}};
    SpectrumReport spectrum;
    std::vector<Partition> target_lambdas;  // must attain exactly -1
    Rational target_degree;                 // required trivial eigenvalue

    bool trivial_eigenvalue_ok = false;
    bool targets_attain_minus_one = false;
    bool others_strictly_inside = false;
    bool weights_nonnegative = false;  // over the branch's required indices
    std::vector<Partition> offending;  // lambdas violating a condition

    Rational bound;  // ratio bound when the conditions hold

    bool pass() const {
        return trivial_eigenvalue_ok && targets_attain_minus_one &&
               others_strictly_inside && weights_nonnegative;
    }
};

// End-to-end spectral certification for one n and action (n >= 8): pick the
// parity branch, sample the feasibility region, build the weighting, compute
// the exact spectrum over all partitions, and check the three eigenvalue
// conditions. A failed condition yields a fail verdict, not an exception.
VerificationReport verify_action(int n, Action action);

}  // namespace ekr
