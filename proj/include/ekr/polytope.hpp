#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ekr/rational.hpp"

namespace ekr {

// Open halfspace a*x + b*y + c > 0 with (a,b) != (0,0).
struct Halfspace2D {
    Rational a, b, c;
    bool strictly_satisfied(const Rational& x, const Rational& y) const {
        return a * x + b * y + c > 0;
    }
    bool closure_satisfied(const Rational& x, const Rational& y) const {
        return a * x + b * y + c >= 0;
    }
};

enum class PolytopeKind { setwise_strip, pointwise_even, pointwise_odd, custom };

// Intersection of strict halfspaces; vertices are those of the closure.
struct OpenPolytope2D {
    PolytopeKind kind = PolytopeKind::custom;
    std::vector<Halfspace2D> halfspaces;
    std::vector<std::pair<Rational, Rational>> vertices;  // sorted, deduped
    // designated rational sample (strip midpoint / vertex centroid)
    bool has_sample = false;
    std::pair<Rational, Rational> sample;

    bool contains(const Rational& x, const Rational& y) const;
};

// Pairwise boundary-line intersections that satisfy every halfspace
// non-strictly, deduplicated and sorted lexicographically.
std::vector<std::pair<Rational, Rational>> enumerate_vertices(
    const std::vector<Halfspace2D>& halfspaces);

// The feasibility region for the free weighting parameters at this n:
//  - setwise_strip: the corrected strip form of the 2-setwise region in (s,t)
//  - pointwise_even: the (r,t) triangle used when n is even (s = 0)
//  - pointwise_odd: the (r,s) triangle used when n is odd (t = 0)
OpenPolytope2D polytope(int n, PolytopeKind kind);

// A rational point strictly inside every halfspace; throws if the region is
// empty. Deterministic: the designated sample when present, otherwise the
// vertex centroid.
std::pair<Rational, Rational> interior_sample(const OpenPolytope2D& poly);

}  // namespace ekr
