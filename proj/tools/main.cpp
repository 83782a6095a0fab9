#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gen.hpp"
#include "indcut/cover.hpp"
#include "indcut/dimacs.hpp"
#include "indcut/reduction.hpp"
#include "indcut/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitNoCut = 10;

indcut::Graph load_graph(const std::string& path) {
    indcut::DimacsStats stats;
    indcut::Graph g;
    if (path.empty() || path == "-") {
        g = indcut::read_dimacs_graph(std::cin, &stats);
    } else {
        std::ifstream in(path);
        if (!in) throw indcut::parse_error(0, "cannot open '" + path + "'");
        g = indcut::read_dimacs_graph(in, &stats);
    }
    if (stats.duplicate_edges > 0)
        std::cerr << "warning: collapsed " << stats.duplicate_edges
                  << " duplicate edge line(s)\n";
    return g;
}

// All file output goes through a temp-and-rename so failed runs leave no
// partial files behind.
void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << content;
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file_atomic(path, content);
}

std::string cover_to_text(const indcut::QuasiCover& c) {
    std::ostringstream out;
    out << (c.method == indcut::CoverMethod::windmill ? "windmill" : "dense") << '\n';
    for (const indcut::VertexSet& grp : c.groups) {
        bool first = true;
        for (int v : grp) {
            if (!first) out << ' ';
            out << v + 1;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

struct SolveArgs {
    std::string input;
    std::string strategy = "auto";
    std::string format = "json";
    std::string dump_cover;
    int threads = 1;
};

int cmd_solve(const SolveArgs& args) {
    const indcut::Graph g = load_graph(args.input);
    indcut::SolveOptions opts;
    opts.strategy = *indcut::strategy_from_name(args.strategy);
    opts.threads = args.threads;

    if (!args.dump_cover.empty() && opts.strategy != indcut::Strategy::brute) {
        indcut::QuasiCover cover;
        switch (opts.strategy) {
            case indcut::Strategy::windmill: cover = indcut::windmill_cover(g); break;
            case indcut::Strategy::dense: cover = indcut::dense_cover(g); break;
            default: cover = indcut::auto_cover(g); break;
        }
        write_file_atomic(args.dump_cover, cover_to_text(cover));
    }

    const indcut::Verdict verdict = indcut::solve(g, opts);
    if (args.format == "json") {
        std::cout << indcut::verdict_to_json(verdict) << '\n';
    } else {
        if (verdict.has_cut) {
            std::cout << "independent cut:";
            for (int v : *verdict.certificate) std::cout << ' ' << v + 1;
            std::cout << "\nreason: " << verdict.reason << '\n';
        } else {
            std::cout << "no independent cut (" << verdict.reason << ")\n";
        }
    }
    return verdict.has_cut ? kExitOk : kExitNoCut;
}

int cmd_verify(const std::string& input, const std::vector<int>& ids) {
    const indcut::Graph g = load_graph(input);
    indcut::VertexSet s(g.order());
    for (int id : ids) {
        if (id < 1 || id > g.order())
            throw indcut::parse_error(0, "vertex id " + std::to_string(id) +
                                             " out of range 1.." +
                                             std::to_string(g.order()));
        s.add(id - 1);
    }
    const bool independent = indcut::is_independent(g, s);
    const bool cuts = indcut::components(g, s).size() >= 2;
    if (independent && cuts) {
        std::cout << "valid independent cut\n";
        return kExitOk;
    }
    if (!independent) std::cout << "set not independent\n";
    if (!cuts) std::cout << "removal leaves connected graph\n";
    return kExitVerifyFailed;
}

int cmd_reduce(const std::string& input, const std::string& output,
               std::string labels_path) {
    indcut::Cnf3 f;
    if (input.empty() || input == "-") {
        f = indcut::read_dimacs_cnf(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) throw indcut::parse_error(0, "cannot open '" + input + "'");
        f = indcut::read_dimacs_cnf(in);
    }
    const indcut::IcInstance inst = indcut::reduce_full(f);

    std::ostringstream graph_text;
    indcut::write_dimacs_graph(graph_text, inst.graph);
    emit(output, graph_text.str());

    if (labels_path.empty() && !output.empty() && output != "-")
        labels_path = output + ".labels";
    if (!labels_path.empty()) {
        std::ostringstream label_text;
        indcut::write_labels(label_text, inst);
        write_file_atomic(labels_path, label_text.str());
    }

    std::cerr << "n'=" << inst.sizes.n_prime << " m'=" << inst.sizes.m_prime
              << " n''=" << inst.sizes.n_dprime << " m''=" << inst.sizes.m_dprime
              << " order=" << inst.sizes.order << " size=" << inst.sizes.size << '\n';
    return kExitOk;
}

std::string graph_to_text(const indcut::Graph& g) {
    std::ostringstream out;
    indcut::write_dimacs_graph(out, g);
    return out.str();
}

int cmd_bench(std::vector<std::string> paths, const std::string& dir,
              const std::vector<std::string>& gen_specs, int count, uint64_t seed,
              const std::string& strategy, int threads, const std::string& out_path) {
    if (!dir.empty()) {
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file()) paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
    }

    struct Item {
        std::string name;
        indcut::Graph graph;
        bool ok;
    };
    std::vector<Item> items;
    for (const std::string& p : paths) {
        Item item{p, {}, true};
        try {
            std::ifstream in(p);
            if (!in) throw std::runtime_error("cannot open");
            item.graph = indcut::read_dimacs_graph(in);
        } catch (const std::exception&) {
            item.ok = false;
        }
        items.push_back(std::move(item));
    }
    for (const std::string& spec : gen_specs) {
        std::vector<std::string> parts;
        std::istringstream ss(spec);
        for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
        for (int i = 0; i < count; ++i) {
            Item item{spec + "#" + std::to_string(i), {}, true};
            try {
                if (parts.size() == 4 && parts[0] == "maxdeg")
                    item.graph = indcut::gen::max_degree_graph(
                        std::stoi(parts[1]), std::stoi(parts[2]), std::stod(parts[3]),
                        seed + i);
                else if (parts.size() == 3 && parts[0] == "dense")
                    item.graph = indcut::gen::dense_graph(std::stoi(parts[1]),
                                                          std::stod(parts[2]), seed + i);
                else if (parts.size() == 2 && parts[0] == "prismlike")
                    item.graph = indcut::gen::circular_ladder(std::stoi(parts[1]));
                else if (parts.size() == 2 && parts[0] == "necklace")
                    item.graph = indcut::gen::triangle_necklace(std::stoi(parts[1]));
                else if (parts.size() == 2 && parts[0] == "linegraph")
                    item.graph = indcut::gen::line_graph(
                        indcut::gen::random_cubic(std::stoi(parts[1]), seed + i));
                else
                    throw std::runtime_error("bad generator spec");
            } catch (const std::exception&) {
                item.ok = false;
            }
            items.push_back(std::move(item));
        }
    }

    std::ostringstream csv;
    csv << "instance,n,m,max_deg,cover_size,partitions,twosat_calls,has_cut,wall_ms\n";
    for (const Item& item : items) {
        if (!item.ok) {
            csv << item.name << ",,,,,,,error,\n";
            continue;
        }
        indcut::SolveOptions opts;
        opts.strategy = *indcut::strategy_from_name(strategy);
        opts.threads = threads;
        try {
            const indcut::Verdict v = indcut::solve(item.graph, opts);
            csv << item.name << ',' << item.graph.order() << ',' << item.graph.size()
                << ',' << item.graph.max_degree() << ',' << v.stats.cover_size << ','
                << v.stats.partitions_tried << ',' << v.stats.twosat_solves << ','
                << (v.has_cut ? 1 : 0) << ',' << v.stats.wall_ms << '\n';
        } catch (const std::invalid_argument&) {
            csv << item.name << ",,,,,,,error,\n";
        }
    }
    emit(out_path, csv.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent cut decision tool"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "decide whether a graph has an independent cut");
    solve_cmd->add_option("input", solve_args.input, "DIMACS edge file ('-' for stdin)");
    solve_cmd->add_option("--strategy", solve_args.strategy, "windmill|dense|auto|brute")
        ->check(CLI::IsMember({"windmill", "dense", "auto", "brute"}));
    solve_cmd->add_option("--threads", solve_args.threads,
                          "mask-loop workers (1 = serial, 0 = all cores)");
    solve_cmd->add_option("--format", solve_args.format, "json|plain")
        ->check(CLI::IsMember({"json", "plain"}));
    solve_cmd->add_option("--dump-cover", solve_args.dump_cover,
                          "write the quasi-cover to this file");

    std::string verify_input;
    std::vector<int> verify_ids;
    auto* verify_cmd = app.add_subcommand("verify", "check a candidate independent cut");
    verify_cmd->add_option("input", verify_input, "DIMACS edge file")->required();
    verify_cmd->add_option("ids", verify_ids, "1-based vertex ids of the candidate cut");

    std::string reduce_input, reduce_output, reduce_labels;
    auto* reduce_cmd =
        app.add_subcommand("reduce", "turn a 3-CNF into an equivalent cut instance");
    reduce_cmd->add_option("input", reduce_input, "DIMACS CNF file ('-' for stdin)");
    reduce_cmd->add_option("-o,--output", reduce_output, "graph output path");
    reduce_cmd->add_option("--labels", reduce_labels, "label sidecar path");

    auto* gen_cmd = app.add_subcommand("gen", "generate test instances");
    gen_cmd->require_subcommand(1);
    uint64_t gen_seed = 1;
    std::string gen_output;
    int gm_n = 20, gm_delta = 4, gp_k = 3;
    double gm_p = 0.5, gd_beta = 0.6;
    int gd_n = 20;
    std::vector<int> gw_ps;
    bool gw_connect = false;

    auto* gen_maxdeg = gen_cmd->add_subcommand("maxdeg", "random graph with a degree cap");
    gen_maxdeg->add_option("n", gm_n)->required();
    gen_maxdeg->add_option("delta", gm_delta)->required();
    gen_maxdeg->add_option("p", gm_p)->required();
    auto* gen_dense = gen_cmd->add_subcommand("dense", "random graph with a degree floor");
    gen_dense->add_option("n", gd_n)->required();
    gen_dense->add_option("beta", gd_beta)->required();
    auto* gen_windmill = gen_cmd->add_subcommand("windmill", "union of windmills");
    gen_windmill->add_option("p", gw_ps, "pair counts, one per windmill")->required();
    gen_windmill->add_flag("--connect", gw_connect, "join consecutive centers");
    auto* gen_prism = gen_cmd->add_subcommand("prismlike", "circular ladder");
    gen_prism->add_option("k", gp_k)->required();
    for (auto* sub : {gen_maxdeg, gen_dense, gen_windmill, gen_prism}) {
        sub->add_option("--seed", gen_seed, "generator seed");
        sub->add_option("-o,--output", gen_output, "output path (default stdout)");
    }

    std::vector<std::string> bench_paths, bench_gens;
    std::string bench_dir, bench_out, bench_strategy = "auto";
    int bench_count = 1, bench_threads = 1;
    uint64_t bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "solve a batch and emit CSV");
    bench_cmd->add_option("paths", bench_paths, "instance files");
    bench_cmd->add_option("--dir", bench_dir, "directory of instances");
    bench_cmd->add_option(
        "--gen", bench_gens,
        "generator spec maxdeg:n:delta:p | dense:n:beta | prismlike:k | necklace:k | linegraph:q");
    bench_cmd->add_option("--count", bench_count, "instances per generator spec");
    bench_cmd->add_option("--seed", bench_seed, "base seed for generator specs");
    bench_cmd->add_option("--strategy", bench_strategy, "windmill|dense|auto|brute")
        ->check(CLI::IsMember({"windmill", "dense", "auto", "brute"}));
    bench_cmd->add_option("--threads", bench_threads, "mask-loop workers");
    bench_cmd->add_option("-o,--output", bench_out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_input, verify_ids);
        if (reduce_cmd->parsed())
            return cmd_reduce(reduce_input, reduce_output, reduce_labels);
        if (gen_cmd->parsed()) {
            indcut::Graph g;
            if (gen_maxdeg->parsed())
                g = indcut::gen::max_degree_graph(gm_n, gm_delta, gm_p, gen_seed);
            else if (gen_dense->parsed())
                g = indcut::gen::dense_graph(gd_n, gd_beta, gen_seed);
            else if (gen_windmill->parsed())
                g = indcut::gen::windmill_union(gw_ps, gw_connect);
            else
                g = indcut::gen::circular_ladder(gp_k);
            emit(gen_output, graph_to_text(g));
            return kExitOk;
        }
        if (bench_cmd->parsed())
            return cmd_bench(bench_paths, bench_dir, bench_gens, bench_count, bench_seed,
                             bench_strategy, bench_threads, bench_out);
    } catch (const indcut::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const indcut::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
