#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphnil/error.hpp"
#include "graphnil/field.hpp"
#include "graphnil/graph.hpp"
#include "graphnil/group.hpp"
#include "graphnil/iso.hpp"
#include "graphnil/liealg.hpp"
#include "graphnil/morphism.hpp"
#include "graphnil/pcl.hpp"
#include "graphnil/proofreplay.hpp"

namespace graphnil {
namespace cli {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json read_json(const std::string& path) {
    auto j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded())
        throw error("malformed JSON in " + path);
    return j;
}

inline void emit(const nlohmann::json& doc, const std::string& out_path, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw error("cannot open file: " + out_path);
    f << text;
}

inline PrimeField prime_field_or_die(const FieldSpec& spec) {
    if (spec.kind != FieldSpec::Kind::PrimeField)
        throw error("this subcommand needs a prime field (use --field fp:<p>)");
    return PrimeField(spec.p);
}

inline VertexPermutation parse_permutation(const std::string& text, int n) {
    std::vector<int> img;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        try {
            img.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw error("bad permutation entry \"" + tok + "\"");
        }
    if (static_cast<int>(img.size()) != n)
        throw error("permutation length " + std::to_string(img.size()) +
                    " does not match vertex count " + std::to_string(n));
    return VertexPermutation(std::move(img));
}

// subcommand bodies; each returns the process exit code

inline int cmd_build(const std::string& graph_path, const FieldSpec& spec,
                     const std::string& out_path, std::ostream& out) {
    const Graph g = parse_graph(read_file(graph_path));
    const auto doc = with_field(spec, [&](const auto& f) {
        return export_structure_constants(build_algebra(g, f));
    });
    emit(doc, out_path, out);
    return 0;
}

inline int cmd_check(const std::string& structure_path, const FieldSpec& spec,
                     const std::string& out_path, std::ostream& out) {
    const auto j = read_json(structure_path);
    return with_field(spec, [&](const auto& f) {
        const auto table = structure_from_json(j, f);
        const bool jacobi = jacobi_holds(table);
        const bool two_step = is_two_step(table);
        const auto inv = structural_invariants(table);
        const bool ok = jacobi && two_step;
        emit({{"dim", inv.dim},
              {"derived_dim", inv.derived_dim},
              {"center_dim", inv.center_dim},
              {"is_abelian", inv.is_abelian},
              {"is_two_step", two_step},
              {"jacobi_ok", jacobi},
              {"ok", ok}},
             out_path, out);
        return ok ? 0 : 1;
    });
}

inline int cmd_iso_graph(const std::string& g_path, const std::string& h_path,
                         const std::string& out_path, std::ostream& out) {
    const Graph g = parse_graph(read_file(g_path));
    const Graph h = parse_graph(read_file(h_path));
    const auto witness = graph_iso(g, h);
    nlohmann::json doc{{"graph_iso", witness.has_value()}};
    if (witness)
        doc["witness"] = witness->image;
    emit(doc, out_path, out);
    return 0;
}

inline int cmd_iso_lie(const std::string& g_path, const std::string& h_path,
                       const FieldSpec& spec, const std::string& out_path, std::ostream& out) {
    const Graph g = parse_graph(read_file(g_path));
    const Graph h = parse_graph(read_file(h_path));
    const auto f = prime_field_or_die(spec);
    const auto rep = lie_iso_equivalent(g, h, f);
    emit(iso_report_to_json(rep), out_path, out);
    return rep.graph_iso == rep.lie_iso ? 0 : 1;
}

inline int cmd_enumerate(int n_max, const std::string& out_path, std::ostream& out) {
    nlohmann::json graphs = nlohmann::json::array();
    nlohmann::json counts = nlohmann::json::array();
    int total = 0;
    for (int n = 1; n <= n_max; ++n) {
        const auto list = enumerate_graphs(n);
        counts.push_back(list.size());
        total += static_cast<int>(list.size());
        for (const auto& g : list)
            graphs.push_back(graph_to_json(g));
    }
    emit({{"n_max", n_max}, {"counts_per_n", counts}, {"total", total}, {"graphs", graphs}},
         out_path, out);
    return 0;
}

inline int cmd_classify(int total, const FieldSpec& spec, const std::string& out_path,
                        std::ostream& out) {
    const auto f = prime_field_or_die(spec);
    const auto classes = graphs_with_total(total);
    std::vector<Fingerprint> fps;
    nlohmann::json class_docs = nlohmann::json::array();
    for (const auto& g : classes) {
        const GraphLieAlgebra<PrimeField> a(g, f);
        fps.push_back(fingerprint(a));
        class_docs.push_back(
            {{"graph", graph_to_json(g)}, {"fingerprint", fingerprint_to_json(fps.back())}});
    }
    bool fps_distinct = true;
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = i + 1; j < fps.size(); ++j)
            if (fps[i] == fps[j])
                fps_distinct = false;
    // distinct classes sharing a vertex/edge profile must be separated by the
    // exhaustive search as well, not only by fingerprints
    bool ok = true;
    nlohmann::json separations = nlohmann::json::array();
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            if (classes[i].vertex_count() != classes[j].vertex_count() ||
                classes[i].edge_count() != classes[j].edge_count())
                continue;
            const bool iso = graded_iso_search(classes[i], classes[j], f).has_value();
            if (iso)
                ok = false;
            separations.push_back({{"i", i}, {"j", j}, {"lie_iso", iso}});
        }
    emit({{"total", total},
          {"count", classes.size()},
          {"classes", class_docs},
          {"fingerprints_distinct", fps_distinct},
          {"separations", separations},
          {"ok", ok}},
         out_path, out);
    return ok ? 0 : 1;
}

inline int cmd_group_mul(const std::string& graph_path, const std::string& e1_path,
                         const std::string& e2_path, const FieldSpec& spec,
                         const std::string& out_path, std::ostream& out) {
    const Graph g = parse_graph(read_file(graph_path));
    const auto j1 = read_json(e1_path);
    const auto j2 = read_json(e2_path);
    const auto doc = with_field(spec, [&](const auto& f) {
        const auto alg = build_algebra(g, f);
        const auto g1 = group_from_json(j1, alg);
        const auto g2 = group_from_json(j2, alg);
        return group_to_json(f, bch_multiply(alg, g1, g2));
    });
    emit(doc, out_path, out);
    return 0;
}

inline int cmd_functor(const std::string& g_path, const std::string& h_path,
                       const std::string& perm_text, const FieldSpec& spec,
                       const std::string& out_path, std::ostream& out) {
    const Graph g = parse_graph(read_file(g_path));
    const Graph h = parse_graph(read_file(h_path));
    const auto perm = parse_permutation(perm_text, g.vertex_count());
    const auto doc = with_field(spec, [&](const auto& f) {
        return graded_to_json(functor_pushforward(perm, g, h, f));
    });
    emit(doc, out_path, out);
    return 0;
}

inline int cmd_replay(const std::string& g_path, const std::string& h_path,
                      const std::string& map_path, const FieldSpec& spec, std::uint64_t seed,
                      const std::string& out_path, std::ostream& out) {
    const Graph g = parse_graph(read_file(g_path));
    const Graph h = parse_graph(read_file(h_path));
    const auto mj = read_json(map_path);
    return with_field(spec, [&](const auto& f) {
        using K = std::decay_t<decltype(f)>;
        const GraphLieAlgebra<K> src(g, f), tgt(h, f);
        Matrix<K> F(f, 0, 0);
        if (mj.contains("F"))
            F = matrix_from_json(mj["F"], f);
        else if (mj.contains("A") && mj.contains("B"))
            F = GradedMap<K>{g, h, matrix_from_json(mj["A"], f), matrix_from_json(mj["B"], f)}
                    .full();
        else
            throw error("map JSON needs either \"F\" or \"A\" and \"B\"");
        const ReplayInput<K> input{src, tgt, std::move(F)};

        std::mt19937_64 rng(seed);
        std::vector<typename K::Scalar> ones(
            static_cast<std::size_t>(src.vertex_dim()), f.one());
        std::vector<typename K::Scalar> d;
        for (int i = 0; i < src.vertex_dim(); ++i)
            d.push_back(f.random_nonzero(rng));
        const auto rep_ones = replay(input, ones);
        const auto rep_rand = replay(input, d);
        auto doc = replay_report_to_json(f, rep_rand);
        doc["torus_ok_all_ones"] = rep_ones.torus_ok;
        emit(doc, out_path, out);
        return rep_rand.all_ok() && rep_ones.all_ok() ? 0 : 1;
    });
}

inline int cmd_pcl_verify(const std::string& g_path, const FieldSpec& spec,
                          const std::string& out_path, std::ostream& out) {
    const Graph g = parse_graph(read_file(g_path));
    return with_field(spec, [&](const auto& f) {
        const auto pcl = pcl_mod_cube(g, f);
        const auto res = verify_remark3(g, f);
        emit({{"ok", res.ok},
              {"pcl", structure_to_json(pcl.table)},
              {"witness", graded_to_json(res.witness)}},
             out_path, out);
        return res.ok ? 0 : 1;
    });
}

inline int cmd_theorem_check(int n_max, const FieldSpec& spec, int jobs,
                             const std::string& out_path, std::ostream& out) {
    const auto f = prime_field_or_die(spec);
    const auto report = theorem_check(n_max, f, jobs);
    emit(theorem_report_to_json(report), out_path, out);
    return report.violations.empty() ? 0 : 1;
}

} // namespace cli

/// Entry point shared by the binary and the in-process tests.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"two-step nilpotent Lie algebras of finite simple graphs"};
    app.require_subcommand(1);

    std::string field_str = "q";
    std::string out_path;
    std::string g_path, h_path, structure_path, map_path, e1_path, e2_path, perm_text;
    int n_max = 4, total = 6, jobs = 1;
    std::uint64_t seed = 0;

    std::vector<std::pair<CLI::App*, std::string>> field_defaults;
    auto add_field = [&](CLI::App* cmd, const char* def) {
        field_defaults.emplace_back(cmd, def);
        cmd->add_option("--field", field_str, std::string("field spec, default ") + def);
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output path"); };

    auto* build = app.add_subcommand("build", "structure constants of n(S,E)");
    build->add_option("graph", g_path, "graph file")->required();
    auto* check = app.add_subcommand("check", "validate a structure-constant file");
    check->add_option("structure", structure_path, "structure JSON")->required();
    auto* iso_graph_cmd = app.add_subcommand("iso-graph", "graph isomorphism");
    iso_graph_cmd->add_option("first", g_path, "first graph")->required();
    iso_graph_cmd->add_option("second", h_path, "second graph")->required();
    auto* iso_lie = app.add_subcommand("iso-lie", "two-route isomorphism report");
    iso_lie->add_option("first", g_path, "first graph")->required();
    iso_lie->add_option("second", h_path, "second graph")->required();
    auto* enumerate = app.add_subcommand("enumerate", "graphs up to isomorphism");
    enumerate->add_option("--nmax", n_max, "largest vertex count")->required();
    auto* classify = app.add_subcommand("classify", "classes with |S|+|E| = total");
    classify->add_option("--total", total, "target of |S|+|E|")->required();
    auto* group_mul = app.add_subcommand("group-mul", "BCH product of two group elements");
    group_mul->add_option("graph", g_path, "graph file")->required();
    group_mul->add_option("e1", e1_path, "first element JSON")->required();
    group_mul->add_option("e2", e2_path, "second element JSON")->required();
    auto* functor = app.add_subcommand("functor", "pushforward of a graph isomorphism");
    functor->add_option("source", g_path, "source graph")->required();
    functor->add_option("target", h_path, "target graph")->required();
    functor->add_option("perm", perm_text, "permutation, e.g. 2,1,0")->required();
    auto* replay_cmd = app.add_subcommand("replay", "replay the proof steps for one map");
    replay_cmd->add_option("source", g_path, "source graph")->required();
    replay_cmd->add_option("target", h_path, "target graph")->required();
    replay_cmd->add_option("map", map_path, "map JSON (A/B blocks or full F)")->required();
    replay_cmd->add_option("--seed", seed, "seed for the random torus diagonal");
    auto* pcl_verify = app.add_subcommand("pcl-verify", "certify l(S,E)/l^3 = n(S,E)");
    pcl_verify->add_option("graph", g_path, "graph file")->required();
    auto* theorem = app.add_subcommand("theorem-check", "graph iso vs Lie iso on all pairs");
    theorem->add_option("--nmax", n_max, "vertex budget");
    theorem->add_option("--jobs", jobs, "worker threads");

    add_out(build);
    add_out(check);
    add_out(iso_graph_cmd);
    add_out(iso_lie);
    add_out(enumerate);
    add_out(classify);
    add_out(group_mul);
    add_out(functor);
    add_out(replay_cmd);
    add_out(pcl_verify);
    add_out(theorem);

    add_field(build, "q");
    add_field(check, "q");
    add_field(group_mul, "q");
    add_field(functor, "q");
    add_field(replay_cmd, "q");
    add_field(pcl_verify, "q");
    add_field(iso_lie, "fp:3");
    add_field(classify, "fp:3");
    add_field(theorem, "fp:3");

    std::vector<char*> argv;
    std::string prog = "graphnil";
    argv.push_back(prog.data());
    for (auto& a : args)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    for (const auto& [cmd, def] : field_defaults)
        if (cmd->parsed() && cmd->get_option("--field")->count() == 0)
            field_str = def;

    try {
        const FieldSpec spec = FieldSpec::parse(field_str);
        if (build->parsed())
            return cli::cmd_build(g_path, spec, out_path, out);
        if (check->parsed())
            return cli::cmd_check(structure_path, spec, out_path, out);
        if (iso_graph_cmd->parsed())
            return cli::cmd_iso_graph(g_path, h_path, out_path, out);
        if (iso_lie->parsed())
            return cli::cmd_iso_lie(g_path, h_path, spec, out_path, out);
        if (enumerate->parsed())
            return cli::cmd_enumerate(n_max, out_path, out);
        if (classify->parsed())
            return cli::cmd_classify(total, spec, out_path, out);
        if (group_mul->parsed())
            return cli::cmd_group_mul(g_path, e1_path, e2_path, spec, out_path, out);
        if (functor->parsed())
            return cli::cmd_functor(g_path, h_path, perm_text, spec, out_path, out);
        if (replay_cmd->parsed())
            return cli::cmd_replay(g_path, h_path, map_path, spec, seed, out_path, out);
        if (pcl_verify->parsed())
            return cli::cmd_pcl_verify(g_path, spec, out_path, out);
        if (theorem->parsed())
            return cli::cmd_theorem_check(n_max, spec, jobs, out_path, out);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace graphnil
