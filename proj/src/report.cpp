#include "ekr/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "ekr/characters.hpp"
#include "ekr/coclique.hpp"
#include "ekr/operators.hpp"

namespace ekr {

namespace {

using Clock = std::chrono::steady_clock;

Json rational_json(const Rational& q) { return rat_str(q); }
Json int_json(const Int& z) { return z.get_str(); }

Json spectrum_json(const SpectrumReport& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"lambda", r.lambda.str()},
                        {"eigenvalue", rational_json(r.eigenvalue)},
                        {"degree", int_json(r.degree)},
                        {"multiplicity", int_json(r.multiplicity)}});
    Json attain_max = Json::array(), attain_min = Json::array();
    for (const auto& p : s.attaining_max) attain_max.push_back(p.str());
    for (const auto& p : s.attaining_min) attain_min.push_back(p.str());
    return {{"rows", rows},
            {"max_eigenvalue", rational_json(s.max_eigenvalue)},
            {"min_eigenvalue", rational_json(s.min_eigenvalue)},
            {"attaining_max", attain_max},
            {"attaining_min", attain_min}};
}

Json weights_json(const WeightedClassSum& w) {
    Json out = Json::object();
    for (const auto& [rho, omega] : w.weights) out[rho.str()] = rational_json(omega);
    return out;
}

Json polytope_json(const OpenPolytope2D& poly) {
    Json hs = Json::array(), vs = Json::array();
    for (const auto& h : poly.halfspaces)
        hs.push_back({rational_json(h.a), rational_json(h.b), rational_json(h.c)});
    for (const auto& [x, y] : poly.vertices)
        vs.push_back({rational_json(x), rational_json(y)});
    return {{"halfspaces", hs}, {"closure_vertices", vs}};
}

Json family_json(const PermutationFamily& fam) {
    Json members = Json::array();
    for (const auto& p : fam.members) members.push_back(p);
    return members;
}

Json document(const std::string& command, int n, const char* action) {
    Json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = command;
    doc["n"] = n;
    if (action) doc["action"] = action;
    return doc;
}

void finish(Json& doc, const std::string& verdict, Json payload,
            Clock::time_point start) {
    doc["verdict"] = verdict;
    doc["payload"] = std::move(payload);
    doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - start)
                           .count();
}

Int theorem_bound(int n, Action action) {
    return action == Action::setwise2 ? 2 * factorial(n - 2) : factorial(n - 2);
}

Json spectral_payload(const VerificationReport& rep) {
    Json conditions = {{"trivial_eigenvalue", rep.trivial_eigenvalue_ok},
                       {"targets_attain_minus_one", rep.targets_attain_minus_one},
                       {"others_strictly_inside", rep.others_strictly_inside},
                       {"weights_nonnegative", rep.weights_nonnegative}};
    Json targets = Json::array(), offending = Json::array();
    for (const auto& p : rep.target_lambdas) targets.push_back(p.str());
    for (const auto& p : rep.offending) offending.push_back(p.str());
    Json point = Json::array();
    for (const auto& q : rep.sample_point) point.push_back(rational_json(q));
    Json payload = {{"branch", rep.branch},
                    {"sample_point", point},
                    {"weights", weights_json(rep.weights)},
                    {"target_degree", rational_json(rep.target_degree)},
                    {"target_lambdas", targets},
                    {"conditions", conditions},
                    {"offending", offending},
                    {"spectrum", spectrum_json(rep.spectrum)}};
    if (rep.pass()) payload["bound"] = rational_json(rep.bound);
    return payload;
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                    out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

}  // namespace

Json cmd_verify(int n, Action action) {
    const auto start = Clock::now();
    if (n < 2) throw std::invalid_argument("verify: requires n >= 2");
    if (action == Action::pointwise2 && n < 5)
        throw std::invalid_argument("verify: pointwise requires n >= 5");
    Json doc = document("verify", n, action_name(action));

    const Int bound = theorem_bound(n, action);
    if (n <= kGraphCap) {
        auto graph = build_derangement_graph(n, action);
        auto result = max_coclique(graph);
        bool witness_ok = is_intersecting_family(result.witness, action);
        bool meets = Int(result.size) == bound;
        Json payload = {{"path", "exhaustive"},
                        {"alpha", result.size},
                        {"bound", int_json(bound)},
                        {"witness", family_json(result.witness)},
                        {"witness_intersecting", witness_ok}};
        if (n <= kExplicitCap) {
            Json sig = Json::array();
            for (const auto& p : module_signature(result.witness)) sig.push_back(p.str());
            payload["witness_module_signature"] = sig;
        }
        finish(doc, meets && witness_ok ? "pass" : "fail", std::move(payload), start);
    } else {
        auto rep = verify_action(n, action);
        Json payload = spectral_payload(rep);
        payload["path"] = "spectral";
        finish(doc, rep.pass() ? "pass" : "fail", std::move(payload), start);
    }
    return doc;
}

Json cmd_table3(int n) {
    const auto start = Clock::now();
    Json doc = document("table3", n, nullptr);
    auto table = symbolic_table3(n);  // throws below n = 13

    Json cols = Json::array();
    for (const auto& c : table.column_classes) cols.push_back(c.str());
    Json rows = Json::array();
    bool all_match = true;
    for (const auto& row : table.rows) {
        Json r = {{"family", row.family}};
        if (row.k >= 0) r["k"] = row.k;
        if (!row.valid_shape) {
            r["instantiable"] = false;
            rows.push_back(std::move(r));
            continue;
        }
        r["instantiable"] = true;
        r["shape"] = row.shape.str();
        Json cells = Json::array();
        for (int c = 0; c < 6; ++c) {
            Int recomputed = mn_character(row.shape, table.column_classes[c]);
            bool match = recomputed == row.values[c];
            all_match = all_match && match;
            cells.push_back({{"printed", int_json(row.values[c])},
                             {"recomputed", int_json(recomputed)},
                             {"match", match}});
        }
        r["cells"] = std::move(cells);
        rows.push_back(std::move(r));
    }
    Json collisions = Json::array();
    for (const auto& [a, b] : table.collisions) collisions.push_back({a, b});
    Json payload = {{"columns", cols}, {"rows", rows}, {"collisions", collisions}};
    finish(doc, all_match ? "pass" : "fail", std::move(payload), start);
    return doc;
}

Json cmd_spectrum(int n, Action action,
                  std::optional<std::vector<Rational>> point) {
    const auto start = Clock::now();
    if (n < 8) throw std::invalid_argument("spectrum: requires n >= 8");
    if (n > kTableCap) throw std::length_error("spectrum: n exceeds the n<=16 cap");
    if (point && point->size() != 2 &&
        !(point->size() == 3 && action == Action::pointwise2))
        throw std::invalid_argument(
            "spectrum: --point takes 2 coordinates (or 3 for pointwise)");
    Json doc = document("spectrum", n, action_name(action));

    const bool even = n % 2 == 0;
    PolytopeKind kind = action == Action::setwise2
                            ? PolytopeKind::setwise_strip
                            : (even ? PolytopeKind::pointwise_even
                                    : PolytopeKind::pointwise_odd);
    auto poly = polytope(n, kind);

    // full (r,s,t) for pointwise; branch coordinates otherwise
    std::vector<Rational> coords;
    if (point) {
        coords = *point;
    } else {
        auto pt = interior_sample(poly);
        coords = {pt.first, pt.second};
    }

    WeightedClassSum w{1, {}};
    std::pair<Rational, Rational> branch_pt;
    if (action == Action::setwise2) {
        branch_pt = {coords[0], coords[1]};
        w = setwise_weight_solution(n, coords[0], coords[1]);
    } else if (coords.size() == 3) {
        w = pointwise_weight_solution(n, coords[0], coords[1], coords[2]);
        branch_pt = even ? std::pair{coords[0], coords[2]}
                         : std::pair{coords[0], coords[1]};
        // the parity polytope only describes the s=0 / t=0 slice
        if ((even && coords[1] != 0) || (!even && coords[2] != 0))
            branch_pt = {poly.vertices.empty() ? Rational(0) : Rational(-1) - 1,
                         Rational(0)};  // forced outside below
    } else {
        branch_pt = {coords[0], coords[1]};
        w = even ? pointwise_weight_solution(n, coords[0], 0, coords[1])
                 : pointwise_weight_solution(n, coords[0], coords[1], 0);
    }
    const bool inside = poly.contains(branch_pt.first, branch_pt.second);
    auto spec = full_spectrum(w);

    Json pt_json = Json::array();
    for (const auto& q : coords) pt_json.push_back(rational_json(q));
    Json payload = {{"polytope", polytope_json(poly)},
                    {"point", pt_json},
                    {"point_inside_polytope", inside},
                    {"weights", weights_json(w)},
                    {"spectrum", spectrum_json(spec)}};
    std::string verdict = "pass";
    if (!inside) {
        payload["warning"] = "parameter point lies outside the feasibility polytope";
        verdict = "not-applicable";
    }
    finish(doc, verdict, std::move(payload), start);
    return doc;
}

Json cmd_coclique(int n, Action action) {
    const auto start = Clock::now();
    if (n < 2 || n > kGraphCap)
        throw std::invalid_argument("coclique: requires 2 <= n <= 7");
    Json doc = document("coclique", n, action_name(action));

    auto graph = build_derangement_graph(n, action);
    auto result = max_coclique(graph);
    bool witness_ok = is_intersecting_family(result.witness, action);
    const bool theorem_applies = action == Action::setwise2 || n >= 5;
    const Int bound = theorem_bound(n, action);

    Json payload = {{"vertices", graph.vertex_count},
                    {"graph_degree", graph.degree(0)},
                    {"alpha", result.size},
                    {"bound", int_json(bound)},
                    {"witness", family_json(result.witness)},
                    {"witness_intersecting", witness_ok}};
    if (n <= kExplicitCap) {
        Json sig = Json::array();
        for (const auto& p : module_signature(result.witness)) sig.push_back(p.str());
        payload["witness_module_signature"] = sig;
    }
    std::string verdict;
    if (!theorem_applies)
        verdict = "not-applicable";
    else
        verdict = (witness_ok && Int(result.size) == bound) ? "pass" : "fail";
    finish(doc, verdict, std::move(payload), start);
    return doc;
}

std::string to_csv(const Json& doc) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : rows) {
        std::string escaped;
        for (char c : v) {
            escaped += c;
            if (c == '"') escaped += '"';
        }
        os << k << ",\"" << escaped << "\"\n";
    }
    return os.str();
}

std::string to_markdown(const Json& doc) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::ostringstream os;
    os << "| key | value |\n|---|---|\n";
    for (const auto& [k, v] : rows) os << "| " << k << " | " << v << " |\n";
    return os.str();
}

std::string render(const Json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    if (format == "csv") return to_csv(doc);
    if (format == "md") return to_markdown(doc);
    throw std::invalid_argument("unknown format: " + format);
}

}  // namespace ekr
