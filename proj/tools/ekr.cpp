#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ekr/report.hpp"

namespace {

ekr::Action parse_action(const std::string& s) {
    if (s == "setwise") return ekr::Action::setwise2;
    if (s == "pointwise") return ekr::Action::pointwise2;
    throw CLI::ValidationError("--action", "must be setwise or pointwise");
}

std::vector<ekr::Rational> parse_point(const std::string& s) {
    std::vector<ekr::Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(ekr::parse_rational(tok));
    if (out.size() < 2 || out.size() > 3)
        throw CLI::ValidationError("--point", "expected 2 or 3 comma-separated rationals");
    return out;
}

int emit(const ekr::Json& doc, const std::string& format, const std::string& out) {
    const std::string text = ekr::render(doc, format);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "error: cannot open " << out << " for writing\n";
            return 2;
        }
        f << text;
    }
    return doc["verdict"] == "pass" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification toolkit for 2-intersecting permutation families"};
    app.require_subcommand(1);

    int n = 0;
    std::string action_str = "setwise", format = "json", out, point_str;

    auto add_common = [&](CLI::App* sub, bool with_action) {
        sub->add_option("--n", n, "symmetric group degree")->required();
        if (with_action)
            sub->add_option("--action", action_str, "setwise or pointwise")
                ->check(CLI::IsMember({"setwise", "pointwise"}));
        sub->add_option("--format", format, "json, csv or md")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--out", out, "output file (default stdout)");
    };

    auto* verify = app.add_subcommand("verify", "certify the extremal coclique size");
    add_common(verify, true);
    auto* table3 = app.add_subcommand("table3", "instantiate and cross-check the character table");
    add_common(table3, false);
    auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of a weighted class sum");
    add_common(spectrum, true);
    spectrum->add_option("--point", point_str,
                         "parameter point p/q,p/q[,p/q] overriding the sampled one");
    auto* coclique = app.add_subcommand("coclique", "exhaustive maximum coclique, n <= 7");
    add_common(coclique, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        ekr::Json doc;
        if (verify->parsed()) {
            doc = ekr::cmd_verify(n, parse_action(action_str));
        } else if (table3->parsed()) {
            doc = ekr::cmd_table3(n);
        } else if (spectrum->parsed()) {
            std::optional<std::vector<ekr::Rational>> point;
            if (!point_str.empty()) point = parse_point(point_str);
            doc = ekr::cmd_spectrum(n, parse_action(action_str), point);
        } else {
            doc = ekr::cmd_coclique(n, parse_action(action_str));
        }
        return emit(doc, format, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
