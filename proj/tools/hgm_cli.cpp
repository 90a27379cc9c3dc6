#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hgm/algorithms.hpp"
#include "hgm/bench.hpp"
#include "hgm/exact.hpp"
#include "hgm/generators.hpp"
#include "hgm/io.hpp"
#include "hgm/rng.hpp"

using namespace hgm;

namespace {

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--output", "cannot open " + path);
    return file;
}

Hypergraph load_input(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

BenchmarkKind parse_benchmark(const std::string& name) {
    if (name == "perfect") return BenchmarkKind::Perfect;
    if (name == "maximal") return BenchmarkKind::Maximal;
    if (name == "exact") return BenchmarkKind::Exact;
    throw CLI::ValidationError("--benchmark", "expected perfect, maximal or exact");
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t m, double r, std::size_t d,
            std::uint64_t seed, const std::string& citations_path, const std::string& uniform_mode,
            const std::string& output) {
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    if (kind == "uniform") {
        write_edge_list(out, random_uniform_hypergraph(n, m, d, seed));
    } else if (kind == "geometric") {
        GeometricConfig cfg;
        cfg.n = n;
        cfg.r = r;
        cfg.d = d;
        cfg.seed = seed;
        write_edge_list(out, random_geometric_hypergraph(cfg));
    } else {  // cocitation
        std::ifstream in(citations_path);
        if (!in) throw CLI::ValidationError("--citations", "cannot open " + citations_path);
        auto candidates = build_cocitation_hypergraph(read_citations(in));
        auto mode = uniform_mode == "pad" ? UniformMode::Pad : UniformMode::Filter;
        auto reduced = make_uniform(candidates, d, mode);
        std::cerr << "kept " << reduced.candidates_kept << " of " << reduced.candidates_total
                  << " candidates, " << reduced.duplicates_dropped << " duplicates dropped\n";
        write_edge_list(out, reduced.hypergraph);
    }
    return 0;
}

int cmd_run(ExperimentConfig cfg, const std::string& preset, const std::string& benchmark,
            long long beta, long long beta_minus, const std::string& output,
            const std::string& archive_path, const CLI::App& app) {
    ExperimentConfig base = cfg;
    if (!preset.empty()) {
        auto found = find_preset(preset);
        if (!found) throw CLI::ValidationError("--preset", "unknown preset " + preset);
        base = *found;
        // explicit flags override the preset
        auto touched = [&](const std::string& flag) { return app.count(flag) > 0; };
        if (touched("--n")) base.n = cfg.n;
        if (touched("--m")) base.m = cfg.m;
        if (touched("--r")) base.r = cfg.r;
        if (touched("--d")) base.d = cfg.d;
        if (touched("--k")) base.k = cfg.k;
        if (touched("--s")) base.s = cfg.s;
        if (touched("--s-hedcs")) base.s_hedcs = cfg.s_hedcs;
        if (touched("--seed")) base.seed = cfg.seed;
        if (touched("--instances")) base.instances = cfg.instances;
        if (touched("--threads")) base.threads = cfg.threads;
        if (touched("--max-attempts")) base.max_attempts = cfg.max_attempts;
        if (touched("--oracle-budget")) base.oracle_budget = cfg.oracle_budget;
        if (touched("--generator")) base.generator = cfg.generator;
        if (touched("--name")) base.name = cfg.name;
    }
    if (app.count("--benchmark") || preset.empty()) base.benchmark = parse_benchmark(benchmark);
    if (app.count("--beta") || preset.empty()) base.hedcs.beta = beta;
    if (app.count("--beta-minus") || preset.empty()) base.hedcs.beta_minus = beta_minus;

    std::vector<ArchiveEntry> archive;
    auto table = run_table(base, archive_path.empty() ? nullptr : &archive);

    std::ofstream file;
    write_csv(open_output(file, output), table);
    if (!archive_path.empty()) {
        std::ofstream arch(archive_path);
        if (!arch) throw CLI::ValidationError("--archive", "cannot open " + archive_path);
        write_archive(arch, archive);
    }
    return 0;
}

int cmd_verify(const std::string& archive_path) {
    std::ifstream in(archive_path);
    if (!in) throw CLI::ValidationError("archive", "cannot open " + archive_path);
    auto report = verify_run(read_archive(in));
    std::cout << "checked " << report.checked << " entries, " << report.failures.size()
              << " failures\n";
    for (const auto& f : report.failures) std::cout << "  " << f << '\n';
    return report.pass() ? 0 : 1;
}

int cmd_hedcs(const std::string& input, long long beta, long long beta_minus, std::uint64_t seed,
              bool verify_only, const std::string& output) {
    const HedcsParams params{beta, beta_minus};
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    if (verify_only) {
        // input is a dump: host + params + members
        std::ifstream in_file;
        std::istream& in = input == "-" ? std::cin : (in_file.open(input), in_file);
        if (input != "-" && !in_file)
            throw CLI::ValidationError("--input", "cannot open " + input);
        auto dump = read_hedcs_dump(in);
        auto report = verify_hedcs(dump.host, dump.members, dump.params);
        out << (report.pass ? "pass" : "fail") << ", " << report.violations.size()
            << " violations\n";
        return report.pass ? 0 : 1;
    }
    Hypergraph g = load_input(input);
    HedcsConstructStats stats;
    auto h = construct_hedcs(g, params, seed, &stats);
    std::cerr << "edges " << h.size() << " of " << g.num_edges() << ", fixes " << stats.fixes
              << " (bound " << fix_step_bound(g.num_vertices(), g.cardinality(), params.beta)
              << ")\n";
    write_hedcs_dump(out, g, params, h.members());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-uniform hypergraph matching toolkit"};
    app.set_config("--config", "",
                   "key=value config file with a [run] section; flags override it");
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a hypergraph edge list");
    std::string gen_kind = "uniform", citations_path, uniform_mode = "filter",
                gen_output = "-";
    std::size_t gen_n = 100, gen_m = 1000, gen_d = 3;
    double gen_r = 0.2;
    std::uint64_t gen_seed = 1;
    gen->add_option("--generator", gen_kind, "uniform, geometric or cocitation")
        ->check(CLI::IsMember({"uniform", "geometric", "cocitation"}));
    gen->add_option("--n", gen_n, "number of vertices");
    gen->add_option("--m", gen_m, "number of edges (uniform)");
    gen->add_option("--r", gen_r, "radius (geometric)");
    gen->add_option("--d", gen_d, "edge cardinality");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--citations", citations_path, "citation edge list (cocitation)");
    gen->add_option("--uniform-mode", uniform_mode, "filter or pad (cocitation)")
        ->check(CLI::IsMember({"filter", "pad"}));
    gen->add_option("--output,-o", gen_output, "output path, - for stdout");

    // ---- run ----
    auto* run = app.add_subcommand("run", "run a benchmark table");
    ExperimentConfig rc;
    std::string run_preset, run_benchmark = "perfect", run_generator = "uniform",
                run_output = "-", run_archive;
    long long run_beta = 5, run_beta_minus = 3;
    run->add_option("--preset", run_preset, "builtin preset name (see --list-presets)");
    run->add_option("--name", rc.name, "config label in the CSV");
    run->add_option("--generator", run_generator, "uniform or geometric")
        ->check(CLI::IsMember({"uniform", "geometric"}));
    run->add_option("--n", rc.n, "number of vertices");
    run->add_option("--m", rc.m, "number of edges (uniform)");
    run->add_option("--r", rc.r, "radius (geometric)");
    run->add_option("--d", rc.d, "edge cardinality");
    run->add_option("--k", rc.k, "number of machines");
    run->add_option("--s", rc.s, "memory budget per machine (0: 2m/k)");
    run->add_option("--s-hedcs", rc.s_hedcs, "HEDCS union budget (0: same as --s)");
    run->add_option("--beta", run_beta, "HEDCS beta");
    run->add_option("--beta-minus", run_beta_minus, "HEDCS beta-");
    run->add_option("--benchmark", run_benchmark, "perfect, maximal or exact");
    run->add_option("--instances", rc.instances, "number of instances");
    run->add_option("--seed", rc.seed, "base seed");
    run->add_option("--threads", rc.threads, "worker threads");
    run->add_option("--max-attempts", rc.max_attempts, "sampling retry limit");
    run->add_option("--oracle-budget", rc.oracle_budget, "branch and bound node budget");
    run->add_option("--output,-o", run_output, "CSV path, - for stdout");
    run->add_option("--archive", run_archive, "write per-instance evidence (JSON lines)");
    bool list_presets = false;
    run->add_flag("--list-presets", list_presets, "print preset names and exit");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "re-check an archived run");
    std::string verify_archive;
    verify->add_option("archive", verify_archive, "archive written by run --archive")
        ->required();

    // ---- hedcs ----
    auto* hedcs = app.add_subcommand("hedcs", "construct or verify an HEDCS");
    std::string hedcs_input = "-", hedcs_output = "-";
    long long hedcs_beta = 5, hedcs_beta_minus = 3;
    std::uint64_t hedcs_seed = 1;
    bool hedcs_verify = false;
    hedcs->add_option("--input,-i", hedcs_input, "edge list (construct) or dump (--verify)");
    hedcs->add_option("--beta", hedcs_beta, "degree-sum cap for member edges");
    hedcs->add_option("--beta-minus", hedcs_beta_minus, "degree-sum floor for non-members");
    hedcs->add_option("--seed", hedcs_seed, "scan-order seed");
    hedcs->add_flag("--verify", hedcs_verify, "verify a dump instead of constructing");
    hedcs->add_option("--output,-o", hedcs_output, "output path, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_n, gen_m, gen_r, gen_d, gen_seed, citations_path,
                           uniform_mode, gen_output);
        if (run->parsed()) {
            if (list_presets) {
                for (const auto& preset : builtin_presets()) std::cout << preset.name << '\n';
                return 0;
            }
            rc.generator = run_generator == "geometric" ? GeneratorKind::Geometric
                                                        : GeneratorKind::Uniform;
            return cmd_run(rc, run_preset, run_benchmark, run_beta, run_beta_minus, run_output,
                           run_archive, *run);
        }
        if (verify->parsed()) return cmd_verify(verify_archive);
        if (hedcs->parsed())
            return cmd_hedcs(hedcs_input, hedcs_beta, hedcs_beta_minus, hedcs_seed, hedcs_verify,
                             hedcs_output);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
