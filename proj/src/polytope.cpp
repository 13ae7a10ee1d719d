#include "ekr/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "ekr/partition.hpp"

namespace ekr {

bool OpenPolytope2D::contains(const Rational& x, const Rational& y) const {
    for (const auto& h : halfspaces)
        if (!h.strictly_satisfied(x, y)) return false;
    return true;
}

std::vector<std::pair<Rational, Rational>> enumerate_vertices(
    const std::vector<Halfspace2D>& hs) {
    std::vector<std::pair<Rational, Rational>> verts;
    for (size_t i = 0; i < hs.size(); ++i) {
        for (size_t j = i + 1; j < hs.size(); ++j) {
            Rational det = hs[i].a * hs[j].b - hs[j].a * hs[i].b;
            if (det == 0) continue;  // parallel boundaries
            Rational x = (hs[i].b * hs[j].c - hs[j].b * hs[i].c) / det;
            Rational y = (hs[j].a * hs[i].c - hs[i].a * hs[j].c) / det;
            bool inside = true;
            for (const auto& h : hs)
                if (!h.closure_satisfied(x, y)) {
                    inside = false;
                    break;
                }
            if (inside) verts.emplace_back(x, y);
        }
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

OpenPolytope2D polytope(int n, PolytopeKind kind) {
    if (n < 8) throw std::invalid_argument("polytope: requires n >= 8");
    OpenPolytope2D poly;
    poly.kind = kind;

    const Rational choose2 = Rational(binomial(n, 2));
    const Rational choose2m = Rational(binomial(n - 1, 2));
    const Rational beta = Rational(conjugacy_class_size(Partition{n - 1, 1}));

    switch (kind) {
        case PolytopeKind::setwise_strip: {
            // free variables (s, t); classes (n-3,3) and (n-4,3,1)
            const Rational g = Rational(conjugacy_class_size(Partition{n - 3, 3}));
            const Rational d =
                Rational(conjugacy_class_size(Partition{n - 4, 3, 1}));
            const Rational strip = choose2m - (n - 1);
            const Rational half = Rational(n) * (n - 3) / 2;
            poly.halfspaces = {
                {2 * g, -2 * d, strip},           // parity form > 0  (n even)
                {-2 * g, 2 * d, 2 - strip},       // parity form < 2  (n odd)
                {g, Rational(0), Rational(0)},    // 0 < gamma s
                {-g, Rational(0), Rational(n - 1)},
                {Rational(0), d, Rational(0)},    // 0 < delta t
                {Rational(0), -d, half},
            };
            // midpoint of the strip at gamma*s = (n-1)/2
            poly.sample = {Rational(n - 1) / (2 * g), (choose2m - 1) / (2 * d)};
            poly.has_sample = true;
            break;
        }
        case PolytopeKind::pointwise_even: {
            // free variables (r, t); class (n-4,3,1) carries nu
            const Rational nu =
                Rational(conjugacy_class_size(Partition{n - 4, 3, 1}));
            poly.halfspaces = {
                {2 * beta, nu, 2 - choose2 - choose2m},
                {-beta, -nu, choose2 - 1},
                {Rational(0), Rational(1), Rational(0)},
            };
            break;
        }
        case PolytopeKind::pointwise_odd: {
            // free variables (r, s); class (n-3,3) carries delta
            const Rational d =
                Rational(conjugacy_class_size(Partition{n - 3, 3}));
            poly.halfspaces = {
                {-2 * beta, -d, choose2 + choose2m - 1},
                {beta, d, 1 - choose2m},
                {Rational(0), Rational(-1), Rational(0)},
            };
            break;
        }
        case PolytopeKind::custom:
            throw std::invalid_argument("polytope: custom is not constructible here");
    }
    poly.vertices = enumerate_vertices(poly.halfspaces);
    if (!poly.has_sample && !poly.vertices.empty()) {
        Rational cx = 0, cy = 0;
        for (const auto& [x, y] : poly.vertices) {
            cx += x;
            cy += y;
        }
        poly.sample = {cx / int(poly.vertices.size()),
                       cy / int(poly.vertices.size())};
        poly.has_sample = true;
    }
    return poly;
}

std::pair<Rational, Rational> interior_sample(const OpenPolytope2D& poly) {
    if (poly.has_sample && poly.contains(poly.sample.first, poly.sample.second))
        return poly.sample;
    // fall back to the centroid of the closure vertices
    auto verts = poly.vertices.empty() ? enumerate_vertices(poly.halfspaces)
                                       : poly.vertices;
    if (!verts.empty()) {
        Rational cx = 0, cy = 0;
        for (const auto& [x, y] : verts) {
            cx += x;
            cy += y;
        }
        cx /= int(verts.size());
        cy /= int(verts.size());
        if (poly.contains(cx, cy)) return {cx, cy};
    }
    throw std::runtime_error("interior_sample: polytope is empty");
}

}  // namespace ekr
