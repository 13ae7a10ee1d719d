#include "ekr/coclique.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ekr/characters.hpp"
#include "ekr/operators.hpp"

namespace ekr {

namespace {

size_t fact(int n) {
    size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= size_t(i);
    return f;
}

// --- exact max clique on a bit-matrix graph (Tomita-style coloring bound) ---

struct BitGraph {
    int n = 0, words = 0;
    std::vector<uint64_t> rows;

    explicit BitGraph(int n_) : n(n_), words((n_ + 63) / 64), rows(size_t(n_) * words) {}
    uint64_t* row(int v) { return rows.data() + size_t(v) * words; }
    const uint64_t* row(int v) const { return rows.data() + size_t(v) * words; }
    void add_edge(int a, int b) {
        rows[size_t(a) * words + size_t(b) / 64] |= uint64_t(1) << (b % 64);
        rows[size_t(b) * words + size_t(a) / 64] |= uint64_t(1) << (a % 64);
    }
    bool adjacent(int a, int b) const {
        return rows[size_t(a) * words + size_t(b) / 64] >> (b % 64) & 1;
    }
};

struct CliqueSolver {
    const BitGraph& g;
    int best = 0;
    int stop_at;  // early exit once a clique this large is known
    std::vector<int> best_clique, current;

    CliqueSolver(const BitGraph& graph, int stop = -1)
        : g(graph), stop_at(stop < 0 ? graph.n + 1 : stop) {}

    // Greedy coloring of the candidates; returns them ordered by color with
    // the per-vertex color bound alongside.
    void color_sort(const std::vector<int>& cand, std::vector<int>& order,
                    std::vector<int>& bound) {
        order.clear();
        bound.clear();
        std::vector<std::vector<int>> color_classes;
        for (int v : cand) {
            size_t c = 0;
            for (; c < color_classes.size(); ++c) {
                bool clash = false;
                for (int u : color_classes[c])
                    if (g.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == color_classes.size()) color_classes.emplace_back();
            color_classes[c].push_back(v);
        }
        for (size_t c = 0; c < color_classes.size(); ++c)
            for (int v : color_classes[c]) {
                order.push_back(v);
                bound.push_back(int(c) + 1);
            }
    }

    void expand(std::vector<int>& cand) {
        if (best >= stop_at) return;
        if (cand.empty()) {
            if (int(current.size()) > best) {
                best = int(current.size());
                best_clique = current;
            }
            return;
        }
        std::vector<int> order, bound;
        color_sort(cand, order, bound);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (best >= stop_at) return;
            if (int(current.size()) + bound[i] <= best) return;
            int v = order[i];
            current.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(order[j], v)) next.push_back(order[j]);
            expand(next);
            current.pop_back();
        }
    }

    int solve(const std::vector<int>& cand, int initial_best = 0) {
        best = initial_best;
        best_clique.clear();
        current.clear();
        std::vector<int> c(cand);
        // high-degree-first ordering helps the first coloring
        std::sort(c.begin(), c.end(), [&](int a, int b) {
            int da = 0, db = 0;
            for (int w = 0; w < g.words; ++w) {
                da += __builtin_popcountll(g.row(a)[w]);
                db += __builtin_popcountll(g.row(b)[w]);
            }
            return da > db || (da == db && a < b);
        });
        expand(c);
        return best;
    }
};

BitGraph complement_graph(const DerangementGraph& graph) {
    BitGraph c(graph.vertex_count);
    for (int a = 0; a < graph.vertex_count; ++a)
        for (int b = a + 1; b < graph.vertex_count; ++b)
            if (!graph.adjacent(a, b)) c.add_edge(a, b);
    return c;
}

bool has_clique_of_size(const BitGraph& g, const std::vector<int>& cand, int k) {
    if (k <= 0) return true;
    if (int(cand.size()) < k) return false;
    CliqueSolver s(g, k);
    return s.solve(cand, k - 1) >= k;
}

std::map<Partition, int> class_index(int n) {
    std::map<Partition, int> idx;
    int i = 0;
    for (const auto& rho : enumerate_partitions(n)) idx[rho] = i++;
    return idx;
}

}  // namespace

long DerangementGraph::degree(int g) const {
    long d = 0;
    for (int w = 0; w < words; ++w)
        d += __builtin_popcountll(adjacency[size_t(g) * words + w]);
    return d;
}

std::vector<Rational> PermutationFamily::characteristic_vector() const {
    std::vector<Rational> v(fact(n));
    for (const auto& p : members) v[perm_rank(p)] = 1;
    return v;
}

DerangementGraph build_derangement_graph(int n, Action action) {
    if (n < 2 || n > kGraphCap)
        throw std::length_error("build_derangement_graph: requires 2 <= n <= 7");
    DerangementGraph graph;
    graph.n = n;
    graph.action = action;
    graph.vertex_count = int(fact(n));
    graph.words = (graph.vertex_count + 63) / 64;
    graph.adjacency.assign(size_t(graph.vertex_count) * graph.words, 0);

    const auto perms = all_permutations(n);
    const auto classes = derangement_classes(n, action);
    std::vector<Perm> connection;  // the derangement set for this action
    for (const auto& p : perms)
        if (classes.count(cycle_type(p))) connection.push_back(p);

#pragma omp parallel for schedule(static)
    for (long g = 0; g < long(perms.size()); ++g) {
        uint64_t* row = graph.adjacency.data() + size_t(g) * graph.words;
        for (const auto& d : connection) {
            // h g^{-1} = d  <=>  h = d g
            size_t h = perm_rank(compose(d, perms[g]));
            row[h / 64] |= uint64_t(1) << (h % 64);
        }
    }
    return graph;
}

CocliqueResult max_coclique(const DerangementGraph& graph) {
    const BitGraph comp = complement_graph(graph);
    std::vector<int> all(graph.vertex_count);
    for (int i = 0; i < graph.vertex_count; ++i) all[i] = i;

    CliqueSolver solver(comp);
    const int alpha = solver.solve(all);

    // Lexicographic refinement: repeatedly commit the least vertex that still
    // extends to a maximum coclique.
    std::vector<int> chosen;
    std::vector<int> cand(all);
    while (int(chosen.size()) < alpha) {
        bool advanced = false;
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            std::vector<int> rest;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (comp.adjacent(cand[j], v)) rest.push_back(cand[j]);
            if (has_clique_of_size(comp, rest, alpha - int(chosen.size()) - 1)) {
                chosen.push_back(v);
                cand = std::move(rest);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::logic_error("max_coclique: refinement lost the optimum");
    }

    const auto perms = all_permutations(graph.n);
    CocliqueResult res;
    res.size = alpha;
    res.witness.n = graph.n;
    for (int v : chosen) res.witness.members.push_back(perms[v]);
    std::sort(res.witness.members.begin(), res.witness.members.end());
    return res;
}

PermutationFamily canonical_coset_family(int n, Action action,
                                         std::pair<int, int> anchor) {
    auto [a, b] = anchor;
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw std::invalid_argument("canonical_coset_family: invalid anchor");
    PermutationFamily fam;
    fam.n = n;
    for (const auto& p : all_permutations(n)) {
        bool keep;
        if (action == Action::setwise2)
            keep = (p[a] == a && p[b] == b) || (p[a] == b && p[b] == a);
        else
            keep = p[a] == a && p[b] == b;
        if (keep) fam.members.push_back(p);
    }
    return fam;
}

bool is_intersecting_family(const PermutationFamily& family, Action action) {
    const auto& m = family.members;
    const int n = family.n;
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = i + 1; j < m.size(); ++j) {
            bool hit = false;
            if (action == Action::pointwise2) {
                int agree = 0;
                for (int x = 0; x < n; ++x)
                    if (m[i][x] == m[j][x]) ++agree;
                hit = agree >= 2;
            } else {
                for (int x = 0; x < n && !hit; ++x)
                    for (int y = x + 1; y < n && !hit; ++y)
                        hit = (m[i][x] == m[j][x] && m[i][y] == m[j][y]) ||
                              (m[i][x] == m[j][y] && m[i][y] == m[j][x]);
            }
            if (!hit) return false;
        }
    }
    return true;
}

std::set<Partition> module_signature(const PermutationFamily& family) {
    const int n = family.n;
    if (n < 1 || n > kExplicitCap)
        throw std::length_error("module_signature: requires n <= 6");
    const auto perms = all_permutations(n);
    const auto classes = enumerate_partitions(n);
    const auto idx = class_index(n);

    // count members of the family per class of h g^{-1}, for each g
    std::vector<std::vector<long>> counts(perms.size(),
                                          std::vector<long>(classes.size(), 0));
#pragma omp parallel for schedule(static)
    for (long g = 0; g < long(perms.size()); ++g) {
        const Perm ginv = inverse(perms[g]);
        for (const auto& h : family.members)
            ++counts[g][idx.at(cycle_type(compose(h, ginv)))];
    }

    std::set<Partition> sig;
    for (const auto& lambda : classes) {
        std::vector<Int> chi(classes.size());
        for (size_t c = 0; c < classes.size(); ++c)
            chi[c] = mn_character(lambda, classes[c]);
        bool nonzero = false;
        for (size_t g = 0; g < perms.size() && !nonzero; ++g) {
            Int acc = 0;
            for (size_t c = 0; c < classes.size(); ++c)
                if (counts[g][c]) acc += chi[c] * counts[g][c];
            nonzero = acc != 0;
        }
        if (nonzero) sig.insert(lambda);
    }
    return sig;
}

PermutationFamily latin_square_clique(int n) {
    if (n < 1) throw std::invalid_argument("latin_square_clique: requires n >= 1");
    PermutationFamily fam;
    fam.n = n;
    for (int shift = 0; shift < n; ++shift) {
        Perm p(n);
        for (int x = 0; x < n; ++x) p[x] = (x + shift) % n;
        fam.members.push_back(p);
    }
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

}  // namespace ekr
