#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsgs/enumeration.hpp"
#include "nsgs/render.hpp"
#include "nsgs/sum_ops.hpp"
#include "nsgs/symmetry.hpp"
#include "nsgs/young_diagram.hpp"

namespace {

using nsgs::Int;
using nsgs::NumericalSet;

std::string join(const std::vector<Int>& values) {
    std::string out;
    for (Int v : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int run_analyze(const std::string& text, bool as_json) {
    const NumericalSet s = nsgs::parse_set(text);
    const bool semigroup = nsgs::is_semigroup(s);
    std::optional<bool> symmetric;
    std::optional<bool> pseudo;
    std::optional<std::vector<Int>> generators;
    std::optional<nsgs::RingLabel> label;
    if (semigroup) {
        symmetric = nsgs::is_symmetric(s);
        pseudo = nsgs::is_pseudo_symmetric(s);
        generators = nsgs::minimal_generators(s);
        label = nsgs::classify_ring(s);
    }
    if (as_json) {
        nlohmann::json doc{
            {"set", nsgs::to_string(s)},
            {"small_elements", s.small_elements()},
            {"conductor", s.conductor()},
            {"gaps", s.gaps().values()},
            {"frobenius", s.frobenius()},
            {"genus", s.genus()},
            {"semigroup", semigroup},
            {"symmetric", symmetric ? nlohmann::json(*symmetric) : nullptr},
            {"pseudo_symmetric", pseudo ? nlohmann::json(*pseudo) : nullptr},
            {"minimal_generators", generators ? nlohmann::json(*generators) : nullptr},
            {"ring_label", label ? nlohmann::json(nsgs::to_string(*label)) : nullptr},
        };
        std::cout << doc.dump() << '\n';
        return 0;
    }
    std::cout << "set: " << nsgs::to_string(s) << '\n'
              << "gaps: " << join(s.gaps().values()) << '\n'
              << "frobenius: " << s.frobenius() << '\n'
              << "conductor: " << s.conductor() << '\n'
              << "genus: " << s.genus() << '\n'
              << "semigroup: " << yes_no(semigroup) << '\n';
    if (semigroup) {
        std::cout << "symmetric: " << yes_no(*symmetric) << '\n'
                  << "pseudo-symmetric: " << yes_no(*pseudo) << '\n'
                  << "minimal-generators: " << join(*generators) << '\n'
                  << "ring-label: " << nsgs::to_string(*label) << '\n';
    }
    return 0;
}

int run_sum(const std::string& kind_token, const std::string& left,
            const std::string& right, bool expect_gaps) {
    const nsgs::SumKind kind = nsgs::parse_sum_kind(kind_token);
    const NumericalSet s = nsgs::parse_set(left);
    const NumericalSet t = nsgs::parse_set(right);
    const NumericalSet result = nsgs::set_sum(s, t, kind);
    if (!expect_gaps) {
        std::cout << nsgs::to_string(result) << '\n';
        return 0;
    }
    const nsgs::GapSet predicted = nsgs::predicted_gaps(s, t, kind);
    const nsgs::GapSet actual = result.gaps();
    std::cout << "sum: " << nsgs::to_string(result) << '\n'
              << "predicted-gaps: " << join(predicted.values()) << '\n'
              << "actual-gaps: " << join(actual.values()) << '\n'
              << "agree: " << yes_no(predicted == actual) << '\n';
    return 0;
}

int run_decompose(const std::string& text) {
    const NumericalSet s = nsgs::parse_set(text);
    if (!nsgs::is_semigroup(s)) {
        throw nsgs::NotASemigroup("decomposition is defined for semigroups only");
    }
    const bool symmetric = nsgs::is_symmetric(s);
    if (!symmetric && !nsgs::is_pseudo_symmetric(s)) {
        throw std::domain_error("set is neither symmetric nor pseudo-symmetric");
    }
    nsgs::Decomposition d = symmetric ? nsgs::decompose_symmetric(s)
                                      : nsgs::decompose_pseudo_symmetric(s);
    std::cout << "kind: " << nsgs::to_string(d.kind) << '\n'
              << "T: " << nsgs::to_string(d.summand) << '\n'
              << "T*: " << nsgs::to_string(d.dual_summand) << '\n';
    return 0;
}

int run_check_closure(const std::string& text) {
    const NumericalSet s = nsgs::parse_set(text);
    const NumericalSet star = nsgs::dual(s);
    std::printf("%-12s%-11s%-13s%s\n", "kind", "criterion", "brute-force", "agree");
    for (nsgs::SumKind kind : nsgs::kAllSumKinds) {
        const bool by_criterion = nsgs::dual_sum_is_semigroup(s, kind);
        const bool by_force = nsgs::is_semigroup(nsgs::set_sum(s, star, kind));
        std::printf("%-12s%-11s%-13s%s\n", nsgs::to_string(kind).c_str(),
                    yes_no(by_criterion), yes_no(by_force),
                    yes_no(by_criterion == by_force));
    }
    return 0;
}

int run_render(const std::string& text, bool hooks, bool svg, const std::string& out_path) {
    const NumericalSet s = nsgs::parse_set(text);
    nsgs::RenderOptions options;
    options.format = svg ? nsgs::RenderFormat::Svg : nsgs::RenderFormat::Ascii;
    options.show_hooks = hooks;
    const std::string doc = nsgs::render(nsgs::diagram_of(s), options);
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw nsgs::MalformedInput("cannot open output file: " + out_path);
        }
        out << doc;
    }
    return 0;
}

int run_enumerate(std::optional<Int> genus, std::optional<Int> frobenius,
                  const std::string& filter) {
    if (genus.has_value() == frobenius.has_value()) {
        throw nsgs::MalformedInput("pass exactly one of --genus and --frobenius");
    }
    const auto print = [](const NumericalSet& s) { std::cout << nsgs::to_string(s) << '\n'; };
    const auto print_filtered = [&](const NumericalSet& s) {
        if (filter == "symmetric" ? nsgs::is_symmetric(s) : nsgs::is_pseudo_symmetric(s)) {
            print(s);
        }
    };
    if (frobenius && filter.empty()) {
        nsgs::enumerate_numerical_sets(*frobenius, print);
        return 0;
    }
    // Genus bounds only make numerical *semigroups* a finite family, so the
    // genus form always enumerates semigroups.
    const nsgs::EnumBound bound =
        genus ? nsgs::EnumBound{nsgs::EnumMode::ByGenus, *genus}
              : nsgs::EnumBound{nsgs::EnumMode::ByFrobenius, *frobenius};
    if (filter.empty() || filter == "semigroup") {
        nsgs::enumerate_semigroups(bound, print);
    } else if (filter == "symmetric" || filter == "pseudo-symmetric") {
        nsgs::enumerate_semigroups(bound, print_filtered);
    } else {
        throw nsgs::MalformedInput(
            "filter must be semigroup, symmetric, or pseudo-symmetric");
    }
    return 0;
}

int run_verify(const std::string& theorem, std::optional<Int> genus,
               std::optional<Int> frobenius, bool as_json) {
    if (genus.has_value() == frobenius.has_value()) {
        throw nsgs::MalformedInput("pass exactly one of --genus and --frobenius");
    }
    const nsgs::EnumBound bound =
        genus ? nsgs::EnumBound{nsgs::EnumMode::ByGenus, *genus}
              : nsgs::EnumBound{nsgs::EnumMode::ByFrobenius, *frobenius};
    const nsgs::VerificationReport report = nsgs::verify_theorem(theorem, bound);
    if (as_json) {
        std::cout << report.to_json().dump() << '\n';
    } else {
        std::cout << "theorem: " << report.theorem << '\n'
                  << "mode: " << nsgs::to_string(report.bound.mode) << '\n'
                  << "limit: " << report.bound.limit << '\n'
                  << "checked: " << report.checked << '\n'
                  << "failures: " << report.failures.size() << '\n';
        std::size_t shown = 0;
        for (const auto& f : report.failures) {
            if (++shown > 100) break;
            std::cout << "failure: input=" << f.input
                      << " kind=" << (f.kind ? *f.kind : "-")
                      << " expected=" << f.expected << " got=" << f.got << '\n';
        }
    }
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical sets, semigroups, and Young diagram glueing sums"};
    app.require_subcommand(1);

    std::string set_text;
    std::string other_text;
    std::string kind_token;
    std::string filter;
    std::string theorem;
    std::string out_path;
    bool as_json = false;
    bool expect_gaps = false;
    bool hooks = false;
    bool svg = false;
    std::optional<Int> genus;
    std::optional<Int> frobenius;

    auto* analyze = app.add_subcommand("analyze", "invariants and classification of a set");
    analyze->add_option("set", set_text, "set in text notation")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");

    auto* sum = app.add_subcommand("sum", "glueing sum of two sets");
    sum->add_option("--kind", kind_token, "D, E, C, or O")->required();
    sum->add_option("left", set_text, "first operand")->required();
    sum->add_option("right", other_text, "second operand")->required();
    sum->add_flag("--expect-gaps", expect_gaps, "also print the closed-form gap list");

    auto* dual_cmd = app.add_subcommand("dual", "dual of a set");
    dual_cmd->add_option("set", set_text, "set in text notation")->required();

    auto* decompose = app.add_subcommand(
        "decompose", "split a symmetric or pseudo-symmetric semigroup as T (+) T*");
    decompose->add_option("set", set_text, "set in text notation")->required();

    auto* closure = app.add_subcommand(
        "check-closure", "closure of all four dual sums: criterion vs brute force");
    closure->add_option("set", set_text, "set in text notation")->required();

    auto* render_cmd = app.add_subcommand("render", "draw the Young diagram of a set");
    render_cmd->add_option("set", set_text, "set in text notation")->required();
    render_cmd->add_flag("--hooks", hooks, "annotate boxes with hook lengths");
    render_cmd->add_flag("--svg", svg, "emit SVG instead of text");
    render_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "list sets in canonical order");
    enumerate->add_option("--genus", genus, "all semigroups with genus <= N");
    enumerate->add_option("--frobenius", frobenius, "all sets with Frobenius number <= N");
    enumerate->add_option("--filter", filter, "semigroup, symmetric, or pseudo-symmetric");

    auto* verify = app.add_subcommand("verify", "replay a registered claim against brute force");
    verify->add_option("--theorem", theorem, "registry identifier")->required();
    verify->add_option("--genus", genus, "check semigroups with genus <= N");
    verify->add_option("--frobenius", frobenius, "check instances with Frobenius <= N");
    verify->add_flag("--json", as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(set_text, as_json);
        if (sum->parsed()) return run_sum(kind_token, set_text, other_text, expect_gaps);
        if (dual_cmd->parsed()) {
            std::cout << nsgs::to_string(nsgs::dual(nsgs::parse_set(set_text))) << '\n';
            return 0;
        }
        if (decompose->parsed()) return run_decompose(set_text);
        if (closure->parsed()) return run_check_closure(set_text);
        if (render_cmd->parsed()) return run_render(set_text, hooks, svg, out_path);
        if (enumerate->parsed()) return run_enumerate(genus, frobenius, filter);
        if (verify->parsed()) return run_verify(theorem, genus, frobenius, as_json);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
