/* Command-line front end: tree enumeration, stratum rings, stratum classes,
 * restrictions, deformations, Mumford classes, equivariant pushforward
 * tables, and the verification suites.  All numeric output is exact rational
 * text; every command has a --json mirror wrapped as
 * {"command":..., "inputs":..., "outputs":...}. */

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chow/deformations.hpp"
#include "chow/dual_tree.hpp"
#include "chow/equivariant_p1.hpp"
#include "chow/errors.hpp"
#include "chow/json_io.hpp"
#include "chow/mumford.hpp"
#include "chow/polynomial.hpp"
#include "chow/strata_classes.hpp"
#include "chow/stratum_ring.hpp"
#include "chow/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string tree;
    std::string from;
    std::string to;
    std::string klass = "1";
    std::string quotient;
    int m = 1;
    int max_exponent = 10;
    int max_edges = 3;
    int max_multiplicity = 3;
    bool json_out = false;
};

void emit(const json& report) { std::cout << report.dump(2) << '\n'; }

json tree_input_json(const chow::DualTree& t) {
    json j = chow::tree_to_json(t);
    const std::string name = chow::stratum_name_of(t);
    if (!name.empty()) j["name"] = name;
    return j;
}

std::string edge_list_text(const chow::DualTree& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        if (i) os << ", ";
        os << t.edges[i].first << '-' << t.edges[i].second;
    }
    return os.str();
}

int cmd_enumerate(const Options& opt) {
    const auto trees = chow::enumerate_trees(opt.max_edges, opt.max_multiplicity);
    if (opt.json_out) {
        json out = json::array();
        for (const auto& t : trees) out.push_back(tree_input_json(t));
        emit(json{{"command", "enumerate"},
                  {"inputs",
                   {{"max_edges", opt.max_edges}, {"max_multiplicity", opt.max_multiplicity}}},
                  {"outputs", {{"count", trees.size()}, {"trees", out}}}});
        return 0;
    }
    std::cout << trees.size() << " isomorphism classes (max edges " << opt.max_edges
              << ", max multiplicity " << opt.max_multiplicity << ")\n";
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const auto& t = trees[i];
        const std::string name = chow::stratum_name_of(t);
        std::cout << "  " << (i + 1) << ". vertices=" << t.vertices.size()
                  << " edges=" << t.edges.size();
        if (!name.empty()) std::cout << " name=" << name;
        if (!t.edges.empty()) std::cout << "  [" << edge_list_text(t) << "]";
        std::cout << '\n';
    }
    return 0;
}

int cmd_ring(const Options& opt) {
    const chow::DualTree t = chow::parse_tree_argument(opt.tree);
    const chow::AnyPresentation pres = chow::build_presentation(t);
    if (chow::is_smooth(pres)) {
        const auto& smooth = std::get<chow::SmoothStratumPresentation>(pres);
        if (opt.json_out) {
            emit(json{{"command", "ring"},
                      {"inputs", {{"tree", tree_input_json(t)}}},
                      {"outputs",
                       {{"smooth", true}, {"generator", smooth.generator}, {"degree", 2}}}});
            return 0;
        }
        std::cout << "smooth stratum: polynomial ring on " << smooth.generator
                  << " (degree 2)\n";
        return 0;
    }
    const auto& ring = std::get<chow::StratumPresentation>(pres);
    if (opt.json_out) {
        json action = json::array();
        for (const auto& g : ring.action) {
            json images;
            for (const auto& [var, img] : g.images())
                images[var] = (img.second < 0 ? "-" : "") + img.first;
            action.push_back(images);
        }
        emit(json{{"command", "ring"},
                  {"inputs", {{"tree", tree_input_json(t)}}},
                  {"outputs",
                   {{"smooth", false},
                    {"variables", ring.variables},
                    {"sigma", ring.sigma},
                    {"action", action}}}});
        return 0;
    }
    std::cout << "variables:";
    for (const auto& v : ring.variables) std::cout << ' ' << v;
    std::cout << "\nsigma: " << ring.sigma << "\naction:\n";
    for (const auto& g : ring.action) std::cout << "  " << g.to_string() << '\n';
    return 0;
}

int cmd_gamma(const Options& opt) {
    const chow::DualTree t = chow::parse_tree_argument(opt.tree);
    const chow::InvariantPolynomial g = chow::gamma_class(t);
    if (opt.json_out) {
        emit(json{{"command", "gamma"},
                  {"inputs", {{"tree", tree_input_json(t)}}},
                  {"outputs",
                   {{"gamma", chow::polynomial_to_json(g.value)},
                    {"text", g.value.to_string()},
                    {"vanishes", g.value.is_zero()}}}});
        return 0;
    }
    std::cout << g.value.to_string() << '\n';
    return 0;
}

int cmd_restrict(const Options& opt) {
    const chow::DualTree from = chow::parse_tree_argument(opt.from);
    const chow::DualTree to = chow::parse_tree_argument(opt.to);
    const chow::Polynomial a = chow::parse_class_argument(opt.klass);
    const chow::InvariantPolynomial r = chow::restrict_extended_class(from, a, to);
    if (opt.json_out) {
        emit(json{{"command", "restrict"},
                  {"inputs",
                   {{"from", tree_input_json(from)},
                    {"to", tree_input_json(to)},
                    {"class", chow::polynomial_to_json(a)}}},
                  {"outputs",
                   {{"restriction", chow::polynomial_to_json(r.value)},
                    {"text", r.value.to_string()}}}});
        return 0;
    }
    std::cout << r.value.to_string() << '\n';
    return 0;
}

int cmd_global_gamma(const Options& opt) {
    const chow::DualTree t = chow::parse_tree_argument(opt.tree);
    const chow::GlobalChowClass g = chow::global_gamma(t);
    if (opt.json_out) {
        json comps = json::array();
        for (const auto& [name, part] : g.components)
            comps.push_back(json{{"stratum", name},
                                 {"class", chow::polynomial_to_json(part.value)},
                                 {"text", part.value.to_string()}});
        emit(json{{"command", "global-gamma"},
                  {"inputs", {{"tree", tree_input_json(t)}}},
                  {"outputs", {{"components", comps}}}});
        return 0;
    }
    for (const auto& [name, part] : g.components)
        std::cout << std::setw(6) << name << ": " << part.value.to_string() << '\n';
    return 0;
}

int cmd_deformations(const Options& opt) {
    const chow::DualTree target = chow::parse_tree_argument(opt.from);
    const chow::DualTree source = chow::parse_tree_argument(opt.to);
    const auto defs = chow::enumerate_ordered_deformations(target, source);

    json maps = json::array();
    for (const auto& d : defs) maps.push_back(json(d.vertex_map));

    const bool want_quotient = !opt.quotient.empty();
    std::vector<chow::DeformationClass> classes;
    std::string class_label;
    if (want_quotient) {
        const auto kind = (opt.quotient == "gamma") ? chow::QuotientKind::byGamma
                                                    : chow::QuotientKind::byGammaPrime;
        classes = chow::quotient(defs, kind);
        class_label = (opt.quotient == "gamma")
                          ? "postcomposition by target automorphisms"
                          : "precomposition by source automorphisms";
    }

    if (opt.json_out) {
        json out{{"count", defs.size()}, {"maps", maps}};
        if (want_quotient) {
            json jclasses = json::array();
            for (const auto& cl : classes) {
                json members = json::array();
                for (const auto idx : cl.member_indices) members.push_back(idx);
                jclasses.push_back(json{{"size", cl.members.size()}, {"members", members}});
            }
            out["quotient"] = opt.quotient;
            out["classes"] = jclasses;
        }
        emit(json{{"command", "deformations"},
                  {"inputs", {{"from", tree_input_json(target)}, {"to", tree_input_json(source)}}},
                  {"outputs", out}});
        return 0;
    }

    std::cout << defs.size() << " ordered deformations\n";
    for (std::size_t i = 0; i < defs.size(); ++i)
        std::cout << "  " << (i + 1) << ": " << defs[i].to_string() << '\n';
    if (want_quotient) {
        std::cout << classes.size() << " classes under " << class_label << '\n';
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::cout << "  class " << (i + 1) << " (size " << classes[i].members.size()
                      << "):";
            for (const auto idx : classes[i].member_indices) std::cout << ' ' << (idx + 1);
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_mumford(const Options& opt) {
    const chow::DualTree t = chow::parse_tree_argument(opt.tree);
    chow::Polynomial value;
    if (opt.m == 0) {
        chow::build_presentation(t);  // still validates the stratum
        value = chow::Polynomial(chow::kappa_zero());
    } else {
        value = chow::kappa(t, opt.m).value;
    }
    if (opt.json_out) {
        emit(json{{"command", "mumford"},
                  {"inputs", {{"tree", tree_input_json(t)}, {"m", opt.m}}},
                  {"outputs",
                   {{"kappa", chow::polynomial_to_json(value)}, {"text", value.to_string()}}}});
        return 0;
    }
    std::cout << value.to_string() << '\n';
    return 0;
}

int cmd_grr_table(const Options& opt) {
    const auto rows = chow::pushforward_table(opt.max_exponent);
    bool all_ok = true;
    for (const auto& row : rows) all_ok = all_ok && row.ok;
    if (opt.json_out) {
        json jrows = json::array();
        for (const auto& row : rows)
            jrows.push_back(json{{"family", row.family},
                                 {"exponent", row.exponent},
                                 {"expected", row.expected.to_string()},
                                 {"actual", row.actual.to_string()},
                                 {"ok", row.ok}});
        emit(json{{"command", "grr-table"},
                  {"inputs", {{"max_exponent", opt.max_exponent}}},
                  {"outputs", {{"rows", jrows}, {"all_verified", all_ok}}}});
        return all_ok ? 0 : 1;
    }
    std::cout << std::left << std::setw(12) << "family" << std::setw(4) << "e"
              << std::setw(22) << "pushforward" << std::setw(6) << "ok" << '\n';
    for (const auto& row : rows)
        std::cout << std::left << std::setw(12) << row.family << std::setw(4) << row.exponent
                  << std::setw(22) << row.actual.to_string() << std::setw(6)
                  << (row.ok ? "yes" : "NO") << '\n';
    std::cout << (all_ok ? "all rows verified" : "TABLE MISMATCH") << '\n';
    return all_ok ? 0 : 1;
}

int cmd_verify_mumford(const Options& opt) {
    int passed = 0;
    json jrows = json::array();
    std::ostringstream text;
    for (const auto& name : chow::stratum_names()) {
        const bool ok = chow::verify_defmumpol(chow::tree_from_name(name));
        passed += ok ? 1 : 0;
        jrows.push_back(json{{"stratum", name}, {"ok", ok}});
        text << std::setw(6) << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    }
    const bool all_ok = passed == static_cast<int>(chow::stratum_names().size());
    if (opt.json_out) {
        emit(json{{"command", "verify-mumford"},
                  {"inputs", json::object()},
                  {"outputs", {{"strata", jrows}, {"passed", passed}, {"all_passed", all_ok}}}});
        return all_ok ? 0 : 1;
    }
    std::cout << text.str() << passed << "/" << chow::stratum_names().size() << " pass\n";
    return all_ok ? 0 : 1;
}

int cmd_verify_all(const Options& opt) {
    const auto results = chow::run_acceptance_criteria();
    const bool ok = chow::all_passed(results);
    if (opt.json_out) {
        json jrows = json::array();
        for (const auto& r : results)
            jrows.push_back(json{{"index", r.index},
                                 {"name", r.name},
                                 {"passed", r.passed},
                                 {"detail", r.detail}});
        emit(json{{"command", "verify-all"},
                  {"inputs", json::object()},
                  {"outputs", {{"criteria", jrows}, {"all_passed", ok}}}});
        return ok ? 0 : 1;
    }
    for (const auto& r : results)
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.index
                  << ": " << r.name << " (" << r.detail << ")\n";
    std::cout << (ok ? "all criteria passed" : "CRITERIA FAILED") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Chow rings of the genus-0 nodal strata: classes, restrictions, Mumford classes"};
    app.require_subcommand(1);

    auto add_json = [&opt](CLI::App* sub) {
        sub->add_flag("--json", opt.json_out, "emit a JSON report instead of text");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list isomorphism classes of dual trees");
    enumerate->add_option("--max-edges", opt.max_edges, "largest edge count (<= 8)")
        ->check(CLI::Range(0, 8));
    enumerate
        ->add_option("--max-multiplicity", opt.max_multiplicity, "largest vertex degree (3 or 4)")
        ->check(CLI::IsMember({3, 4}));
    add_json(enumerate);

    auto* ring = app.add_subcommand("ring", "print the stratum ring presentation");
    ring->add_option("--tree", opt.tree, "tree shorthand or JSON")->required();
    add_json(ring);

    auto* gamma = app.add_subcommand("gamma", "print the class of the stratum closure");
    gamma->add_option("--tree", opt.tree, "tree shorthand or JSON")->required();
    add_json(gamma);

    auto* restrict_cmd =
        app.add_subcommand("restrict", "restrict an extended class to a deeper stratum");
    restrict_cmd->add_option("--from", opt.from, "stratum carrying the class")->required();
    restrict_cmd->add_option("--to", opt.to, "stratum restricted to")->required();
    restrict_cmd->add_option("--class", opt.klass,
                             "invariant polynomial (JSON or rational constant; default 1)");
    add_json(restrict_cmd);

    auto* global = app.add_subcommand("global-gamma",
                                      "restrict the stratum class to all five strata");
    global->add_option("--tree", opt.tree, "tree shorthand or JSON")->required();
    add_json(global);

    auto* deformations =
        app.add_subcommand("deformations", "enumerate ordered deformations and their classes");
    deformations->add_option("--from", opt.from, "generic stratum (deformation target)")
        ->required();
    deformations->add_option("--to", opt.to, "degenerate stratum (deformation source)")
        ->required();
    deformations->add_option("--quotient", opt.quotient, "group the maps into classes")
        ->check(CLI::IsMember({"gamma", "gammaprime"}));
    add_json(deformations);

    auto* mumford = app.add_subcommand("mumford", "print a Mumford class");
    mumford->add_option("--tree", opt.tree, "tree shorthand or JSON")->required();
    mumford->add_option("--m", opt.m, "class index (m >= 0)")->required()
        ->check(CLI::Range(0, 1000));
    add_json(mumford);

    auto* grr = app.add_subcommand("grr-table", "verified equivariant pushforward table");
    grr->add_option("--max-exponent", opt.max_exponent, "largest exponent")
        ->check(CLI::Range(0, 1000));
    add_json(grr);

    auto* verify_mumford =
        app.add_subcommand("verify-mumford", "check the kappa/Chern identities on all strata");
    add_json(verify_mumford);

    auto* verify_all = app.add_subcommand("verify-all", "run the full verification suite");
    add_json(verify_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (ring->parsed()) return cmd_ring(opt);
        if (gamma->parsed()) return cmd_gamma(opt);
        if (restrict_cmd->parsed()) return cmd_restrict(opt);
        if (global->parsed()) return cmd_global_gamma(opt);
        if (deformations->parsed()) return cmd_deformations(opt);
        if (mumford->parsed()) return cmd_mumford(opt);
        if (grr->parsed()) return cmd_grr_table(opt);
        if (verify_mumford->parsed()) return cmd_verify_mumford(opt);
        if (verify_all->parsed()) return cmd_verify_all(opt);
    } catch (const chow::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
