// Command line front end: exact invariants of constructive exceptional
// bundles on P^3 (and the slope machinery on P^2).
//
// Exit codes: 0 success, 1 computational check failure, 2 runtime error,
// 64 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "helix/catalog.hpp"
#include "helix/json_io.hpp"
#include "helix/p2.hpp"
#include "helix/perp.hpp"
#include "helix/tree.hpp"
#include "helix/verify.hpp"

namespace {

using helix::Rational;
using helix::ThreeAdic;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run(int argc, char** argv) {
    CLI::App app{"exact mutation calculus for exceptional bundles on P^3"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // eval
    auto* eval = app.add_subcommand("eval", "full catalog record of one 3-adic index");
    std::string eval_index;
    eval->add_option("index", eval_index, "3-adic rational, e.g. 1/9 or 5/3^2")->required();
    eval->callback([&] {
        helix::EpsilonMap eps;
        std::cout << helix::record_to_json(eps.record(ThreeAdic::parse(eval_index)));
    });

    // chi
    auto* chi = app.add_subcommand("chi", "Euler pairing chi(a, b) of two Chern characters");
    std::string chi_a, chi_b;
    chi->add_option("A", chi_a, "Chern character, e.g. \"(1,0,0,0)\"")->required();
    chi->add_option("B", chi_b, "Chern character")->required();
    chi->callback([&] {
        std::cout << helix::euler_pair(helix::parse_chern(chi_a), helix::parse_chern(chi_b)).str()
                  << "\n";
    });

    // perp
    auto* perp_cmd = app.add_subcommand("perp", "class orthogonal to e (right) and g, h (left)");
    std::string perp_e, perp_g, perp_h;
    perp_cmd->add_option("E", perp_e)->required();
    perp_cmd->add_option("G", perp_g)->required();
    perp_cmd->add_option("H", perp_h)->required();
    perp_cmd->callback([&] {
        const auto v = helix::perp(helix::parse_chern(perp_e), helix::parse_chern(perp_g),
                                   helix::parse_chern(perp_h));
        std::cout << helix::chern_to_json(v) << "\n";
    });

    // mutate
    auto* mutate = app.add_subcommand("mutate", "apply a canonical move to a foundation");
    std::string mutate_foundation, mutate_move;
    mutate->add_option("foundation", mutate_foundation, "JSON array of four Chern characters")
        ->required();
    mutate->add_option("move", mutate_move, "one of R0 R1 R2 L0 L1 L2")->required();
    mutate->callback([&] {
        const auto f = helix::parse_foundation_json(mutate_foundation);
        const auto g = helix::apply_move(f, helix::move_from_string(mutate_move));
        std::cout << helix::foundation_to_json(g) << "\n";
    });

    // resolve
    auto* resolve = app.add_subcommand("resolve", "standard resolutions of one index");
    std::string resolve_index;
    resolve->add_option("index", resolve_index)->required();
    resolve->callback([&] {
        helix::EpsilonMap eps;
        const auto res = eps.standard_resolutions(ThreeAdic::parse(resolve_index));
        std::cout << helix::resolutions_to_json({res.begin(), res.end()});
    });

    // parents
    auto* parents = app.add_subcommand("parents", "indices adjacent to the marked bundle");
    std::string parents_index;
    parents->add_option("index", parents_index)->required();
    parents->callback([&] {
        helix::EpsilonMap eps;
        std::cout << helix::parents_to_json(eps.parents(ThreeAdic::parse(parents_index)));
    });

    // table
    auto* table = app.add_subcommand("table", "catalog of all indices in (0,1) up to an order");
    unsigned table_order = 3;
    std::string table_format = "json";
    table->add_option("--max-order", table_order, "largest order to include")->capture_default_str();
    table->add_option("--format", table_format, "json, csv or md")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    table->callback([&] {
        helix::EpsilonMap eps;
        const auto fmt = table_format == "json"  ? helix::TableFormat::Json
                         : table_format == "csv" ? helix::TableFormat::Csv
                                                 : helix::TableFormat::Markdown;
        std::cout << helix::generate_table(eps, table_order, fmt);
    });

    // tree
    auto* tree_cmd = app.add_subcommand("tree", "admissible-mutation tree");
    unsigned tree_depth = 3;
    std::string tree_format = "dot";
    tree_cmd->add_option("--depth", tree_depth, "expansion depth")->capture_default_str();
    tree_cmd->add_option("--format", tree_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();
    tree_cmd->callback([&] {
        const auto tree = helix::build_tree(tree_depth);
        std::cout << (tree_format == "dot" ? helix::export_dot(tree) : helix::export_json(tree));
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run every module invariant suite");
    unsigned verify_order = 6, verify_depth = 4;
    std::string verify_format = "text";
    verify->add_option("--max-order", verify_order)->capture_default_str();
    verify->add_option("--tree-depth", verify_depth)->capture_default_str();
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->callback([&] {
        const auto report = helix::run_verification(verify_order, verify_depth);
        std::cout << (verify_format == "text" ? helix::report_to_text(report)
                                              : helix::report_to_json(report));
        if (!report.all_pass()) exit_code = kExitCheckFailed;
    });

    // audit
    auto* audit = app.add_subcommand("audit", "diff recomputed invariants against the reference table");
    std::string audit_format = "text";
    audit->add_option("--format", audit_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    audit->callback([&] {
        helix::EpsilonMap eps;
        const auto rows = helix::audit_table(eps);
        std::cout << (audit_format == "text" ? helix::audit_to_text(rows)
                                             : helix::audit_to_json(rows));
        if (!helix::audit_clean_outside_ch2(rows)) exit_code = kExitCheckFailed;
    });

    // p2
    auto* p2 = app.add_subcommand("p2", "Drezet-Le Potier slope machinery on P^2");
    p2->require_subcommand(1);

    auto* p2_eval = p2->add_subcommand("eval", "exceptional slope of a dyadic index");
    std::string p2_eval_index;
    p2_eval->add_option("index", p2_eval_index, "dyadic rational, e.g. 5/8 or 3/2^3")->required();
    p2_eval->callback([&] {
        helix::P2Map map;
        const auto t = helix::Dyadic::parse(p2_eval_index);
        const auto alpha = map.epsilon(t);
        const auto sd = helix::slope_data(alpha);
        ordered_json j;
        j["t"] = t.str();
        j["alpha"] = alpha.str();
        j["r"] = helix::int_str(sd.r);
        j["delta"] = sd.delta.str();
        j["chi"] = sd.chi.str();
        std::cout << j.dump() << "\n";
    });

    auto* p2_delta = p2->add_subcommand("delta", "stability boundary delta(mu)");
    std::string p2_mu;
    unsigned p2_cutoff = 6;
    p2_delta->add_option("mu", p2_mu, "rational slope")->required();
    p2_delta->add_option("--cutoff", p2_cutoff, "largest exceptional order enumerated")
        ->capture_default_str();
    p2_delta->callback([&] {
        helix::P2Map map;
        const auto b = helix::delta_of_mu(map, Rational::parse(p2_mu), p2_cutoff);
        ordered_json j;
        j["mu"] = p2_mu;
        j["cutoff"] = b.cutoff;
        j["delta"] = b.value.str();
        j["witness_alpha"] = b.witness_alpha.str();
        j["rank_threshold"] = helix::int_str(b.rank_threshold);
        j["min_rank_beyond_cutoff"] = helix::int_str(b.min_rank_beyond);
        j["certified"] = b.certified;
        std::cout << j.dump() << "\n";
    });

    auto* p2_stable = p2->add_subcommand("stable", "membership test for a character (r, mu, Delta)");
    std::string p2_r, p2_smu, p2_sdelta;
    unsigned p2_scutoff = 6;
    p2_stable->add_option("R", p2_r, "rank")->required();
    p2_stable->add_option("mu", p2_smu, "slope")->required();
    p2_stable->add_option("delta", p2_sdelta, "discriminant")->required();
    p2_stable->add_option("--cutoff", p2_scutoff)->capture_default_str();
    p2_stable->callback([&] {
        helix::P2Map map;
        const Rational r = Rational::parse(p2_r);
        if (!r.is_integer()) throw UsageError("rank must be an integer");
        const auto result = helix::is_stable_character(map, r.numerator(), Rational::parse(p2_smu),
                                                       Rational::parse(p2_sdelta), p2_scutoff);
        ordered_json j;
        j["verdict"] = helix::to_string(result.verdict);
        j["delta_mu"] = result.bound.value.str();
        j["certified"] = result.bound.certified;
        std::cout << j.dump() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "p3helix: " << e.what() << "\n";
        return kExitUsage;
    } catch (const helix::ParseError& e) {
        std::cerr << "p3helix: " << e.what() << "\n";
        return kExitUsage;
    } catch (const helix::Error& e) {
        std::cerr << "p3helix: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "p3helix: " << e.what() << "\n";
        return kExitRuntime;
    }
}
