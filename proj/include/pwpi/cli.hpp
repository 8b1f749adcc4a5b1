/**
 * @file cli.hpp
 * @brief Command dispatch for the pwpi tool.
 *
 * Every invocation names one space file (--space) and one subcommand. Output
 * is line oriented; --json switches to a single JSON object per command.
 * Exit codes: 0 success/true, 1 false/none, 2 error.
 */

#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pwpi/codes.hpp"
#include "pwpi/isometry.hpp"
#include "pwpi/space_io.hpp"

namespace pwpi {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, "cannot read space file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string permutation_word(const PosetAutomorphism& psi) {
    std::string word;
    for (int i = 1; i <= psi.size(); ++i) {
        if (i > 1) word += ' ';
        word += std::to_string(psi.image(i));
    }
    return word;
}

}  // namespace detail

inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weighted-coordinates poset block metric spaces and their linear isometries"};
    app.name("pwpi");

    std::string space_path;
    bool json = false;
    std::optional<std::uint64_t> budget_matrices, budget_vectors, budget_group;
    app.add_option("--space", space_path, "space description file (JSON)")->required();
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--budget-matrices", budget_matrices, "cap on q^(N^2) candidate enumerations");
    app.add_option("--budget-vectors", budget_vectors, "cap on q^N / q^k vector sweeps");
    app.add_option("--budget-group", budget_group, "cap on materialized group size");
    app.require_subcommand(1);

    auto* cmd_validate = app.add_subcommand("validate", "parse, validate, and echo the normalized space");
    auto* cmd_weight = app.add_subcommand("weight", "weight of a vector");
    std::string weight_vec;
    cmd_weight->add_option("vector", weight_vec, "vector as a block list, e.g. [[0],[1,0],[0]]")->required();
    auto* cmd_distance = app.add_subcommand("distance", "distance between two vectors");
    std::string dist_a, dist_b;
    cmd_distance->add_option("first", dist_a)->required();
    cmd_distance->add_option("second", dist_b)->required();
    auto* cmd_aut = app.add_subcommand("aut", "list order automorphisms of the poset");
    bool aut_labels = false;
    cmd_aut->add_flag("--labels", aut_labels, "restrict to label-preserving automorphisms");
    auto* cmd_check = app.add_subcommand("check", "exhaustive isometry test plus triangular membership");
    std::string check_matrix;
    cmd_check->add_option("matrix", check_matrix, "matrix as a row list")->required();
    auto* cmd_phi = app.add_subcommand("phi", "poset automorphism induced by an isometry");
    std::string phi_matrix;
    cmd_phi->add_option("matrix", phi_matrix)->required();
    auto* cmd_decompose = app.add_subcommand("decompose", "split an isometry into triangular and permutation parts");
    std::string decompose_matrix;
    cmd_decompose->add_option("matrix", decompose_matrix)->required();
    auto* cmd_order = app.add_subcommand("order", "exact order of the linear isometry group");
    auto* cmd_enumerate = app.add_subcommand("enumerate", "stream the structured isometry group");
    std::optional<std::uint64_t> enum_limit;
    cmd_enumerate->add_option("--limit", enum_limit, "print at most this many maps");
    auto* cmd_verify = app.add_subcommand("verify", "compare the structured group against the brute-force oracle");
    auto* cmd_mindist = app.add_subcommand("mindist", "minimum distance of a linear code");
    std::string mindist_gen;
    cmd_mindist->add_option("generator", mindist_gen, "generator matrix as a row list")->required();
    auto* cmd_equivalent = app.add_subcommand("equivalent", "search for an isometry mapping one code onto another");
    std::string equiv_g1, equiv_g2;
    cmd_equivalent->add_option("first", equiv_g1)->required();
    cmd_equivalent->add_option("second", equiv_g2)->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const SpaceDescription desc = parse_space_description(detail::read_file(space_path));
        const SpaceSpec space = build_space(desc);
        Budgets budgets = desc.budgets.value_or(Budgets{});
        if (budget_matrices) budgets.matrices = *budget_matrices;
        if (budget_vectors) budgets.vectors = *budget_vectors;
        if (budget_group) budgets.group = *budget_group;

        if (cmd_validate->parsed()) {
            out << serialize_space(space, desc.budgets) << "\n";
            return 0;
        }
        if (cmd_weight->parsed()) {
            const int w = pwpi_weight(space, parse_block_vector(space, weight_vec));
            if (json)
                out << nlohmann::ordered_json{{"weight", w}}.dump() << "\n";
            else
                out << w << "\n";
            return 0;
        }
        if (cmd_distance->parsed()) {
            const int d =
                pwpi_distance(space, parse_block_vector(space, dist_a), parse_block_vector(space, dist_b));
            if (json)
                out << nlohmann::ordered_json{{"distance", d}}.dump() << "\n";
            else
                out << d << "\n";
            return 0;
        }
        if (cmd_aut->parsed()) {
            const auto auts = enumerate_automorphisms(space.poset(), aut_labels ? &space.labels() : nullptr);
            if (json) {
                nlohmann::ordered_json doc;
                doc["count"] = auts.size();
                auto list = nlohmann::ordered_json::array();
                for (const auto& psi : auts) list.push_back(psi.images());
                doc["automorphisms"] = std::move(list);
                out << doc.dump() << "\n";
            } else {
                for (const auto& psi : auts) out << detail::permutation_word(psi) << "\n";
            }
            return 0;
        }
        if (cmd_check->parsed()) {
            const Matrix m = parse_matrix(space.field(), check_matrix);
            const bool isometry = is_isometry_exhaustive(space, m, budgets);
            const bool triangular = in_triangular_group(space, m);
            if (json)
                out << nlohmann::ordered_json{{"isometry", isometry}, {"triangular", triangular}}.dump() << "\n";
            else
                out << "isometry " << (isometry ? "true" : "false") << "\n"
                    << "triangular " << (triangular ? "true" : "false") << "\n";
            return isometry ? 0 : 1;
        }
        if (cmd_phi->parsed()) {
            const auto psi = phi_of(space, parse_matrix(space.field(), phi_matrix));
            if (json)
                out << nlohmann::ordered_json{{"phi", psi.images()}}.dump() << "\n";
            else
                out << detail::permutation_word(psi) << "\n";
            return 0;
        }
        if (cmd_decompose->parsed()) {
            const auto d = decompose(space, parse_matrix(space.field(), decompose_matrix));
            if (json) {
                nlohmann::ordered_json doc;
                doc["psi"] = d.psi.images();
                doc["triangular"] = matrix_to_json(d.triangular);
                out << doc.dump() << "\n";
            } else {
                out << "psi " << detail::permutation_word(d.psi) << "\n"
                    << "triangular " << matrix_to_json(d.triangular).dump() << "\n";
            }
            return 0;
        }
        if (cmd_order->parsed()) {
            const auto order = group_order(space, budgets);
            if (json)
                out << nlohmann::ordered_json{{"order", order.to_string()}}.dump() << "\n";
            else
                out << order.to_string() << "\n";
            return 0;
        }
        if (cmd_enumerate->parsed()) {
            GroupEnumerator stream(space, budgets);
            std::uint64_t printed = 0;
            if (json) {
                nlohmann::ordered_json doc;
                doc["order"] = stream.order().to_string();
                auto maps = nlohmann::ordered_json::array();
                while (auto m = stream.next()) {
                    if (enum_limit && printed >= *enum_limit) break;
                    maps.push_back(matrix_to_json(*m));
                    ++printed;
                }
                doc["maps"] = std::move(maps);
                out << doc.dump() << "\n";
            } else {
                while (auto m = stream.next()) {
                    if (enum_limit && printed >= *enum_limit) break;
                    out << matrix_to_json(*m).dump() << "\n";
                    ++printed;
                }
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            const auto order = group_order(space, budgets);
            auto structured = enumerate_group(space, budgets);
            std::sort(structured.begin(), structured.end(), lex_less);
            const auto brute = oracle_group(space, budgets);
            const bool equal = structured == brute && !order.exceeds(brute.size()) &&
                               order.fits_u64() && order.as_u64() == brute.size();
            if (json)
                out << nlohmann::ordered_json{{"order", order.to_string()},
                                              {"oracle_size", brute.size()},
                                              {"equal", equal}}
                           .dump()
                    << "\n";
            else
                out << "order " << order.to_string() << "\n"
                    << "equal " << (equal ? "true" : "false") << "\n";
            return equal ? 0 : 1;
        }
        if (cmd_mindist->parsed()) {
            const LinearCode code(space.field(), parse_matrix(space.field(), mindist_gen));
            const int d = min_distance(space, code, budgets);
            if (json)
                out << nlohmann::ordered_json{{"min_distance", d}}.dump() << "\n";
            else
                out << d << "\n";
            return 0;
        }
        if (cmd_equivalent->parsed()) {
            const LinearCode first(space.field(), parse_matrix(space.field(), equiv_g1));
            const LinearCode second(space.field(), parse_matrix(space.field(), equiv_g2));
            const auto witness = are_equivalent(space, first, second, budgets);
            if (json) {
                nlohmann::ordered_json doc;
                doc["equivalent"] = witness.has_value();
                if (witness) {
                    doc["map"] = matrix_to_json(witness->map);
                    doc["psi"] = witness->psi.images();
                }
                out << doc.dump() << "\n";
            } else if (witness) {
                out << "map " << matrix_to_json(witness->map).dump() << "\n"
                    << "psi " << detail::permutation_word(witness->psi) << "\n";
            } else {
                out << "none\n";
            }
            return witness.has_value() ? 0 : 1;
        }
        err << "no subcommand dispatched\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace pwpi
