#include <fptprop/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

// fptprop propagate INSTANCE [--format ...] [caps]
// fptprop compare (INSTANCE | --random SEED N D K [--count C] [--kind K]) [caps]
// fptprop gen-hitting-set -s 1,2 -s 2,3 -k 2
// fptprop bench --kind nvalue -n 100 -n 200 -k 4 [-d 4] [--seed 1]

int main(int argc, char **argv)
{
    CLI::App app{"fixed-parameter propagation for global constraints"};
    app.require_subcommand(1);

    fptprop::cli::Options opts;
    auto add_caps = [&](CLI::App *cmd) {
        cmd->add_option("--k-max", opts.config.k_max, "largest backdoor size to expand");
        cmd->add_option("--run-product-cap", opts.config.run_product_cap,
            "largest run-count product the interval lift will probe");
        cmd->add_option("--bitmask-cap", opts.config.bitmask_cap,
            "largest subset universe the automata encode");
        cmd->add_option("--oracle-cap", opts.config.oracle_cap,
            "largest assignment space the enumeration oracle will walk");
    };

    std::string instance_path;
    auto *propagate = app.add_subcommand("propagate", "parse an instance, run to fixpoint");
    propagate->add_option("instance", instance_path, "instance file")->required();
    propagate->add_option("--format", opts.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    add_caps(propagate);

    std::string compare_path;
    std::vector<long long> random_args;
    fptprop::cli::RandomRuns runs;
    auto *compare =
        app.add_subcommand("compare", "check propagators against the enumeration oracle");
    compare->add_option("instance", compare_path, "instance file");
    compare
        ->add_option("--random", random_args,
            "SEED N D K: compare on generated instances instead of a file")
        ->expected(4);
    compare->add_option("--count", runs.count, "instances per kind for --random");
    compare->add_option("--kind", runs.kind, "restrict --random to one constraint kind");
    add_caps(compare);

    std::vector<std::string> set_specs;
    int budget = 1;
    auto *gen = app.add_subcommand("gen-hitting-set",
        "emit an instance asking for a hitting set of bounded size");
    gen->add_option("-s,--set", set_specs, "one set as comma-separated values (repeatable)")
        ->required();
    gen->add_option("-k,--budget", budget, "largest hitting set size allowed")->required();

    std::string bench_kind;
    std::vector<int> bench_n, bench_k;
    int bench_d = 4;
    unsigned bench_seed = 1;
    auto *bench = app.add_subcommand("bench", "time one propagator across sizes");
    bench->add_option("--kind", bench_kind, "constraint kind")->required();
    bench->add_option("-n", bench_n, "scope sizes (repeatable)")->required();
    bench->add_option("-k", bench_k, "parameter sizes (repeatable)")->required();
    bench->add_option("-d", bench_d, "domain size");
    bench->add_option("--seed", bench_seed, "generator seed");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e) {
        return app.exit(e); // prints help, exits 0
    }
    catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (propagate->parsed())
        return fptprop::cli::cmd_propagate(instance_path, opts, std::cout, std::cerr);

    if (compare->parsed()) {
        if (!random_args.empty()) {
            runs.seed = static_cast<unsigned>(random_args[0]);
            runs.n = static_cast<int>(random_args[1]);
            runs.d = static_cast<int>(random_args[2]);
            runs.k = static_cast<int>(random_args[3]);
            return fptprop::cli::cmd_compare_random(runs, opts, std::cout, std::cerr);
        }
        if (compare_path.empty()) {
            std::cerr << "error: compare needs an instance file or --random\n";
            return 2;
        }
        return fptprop::cli::cmd_compare(compare_path, opts, std::cout, std::cerr);
    }

    if (gen->parsed())
        return fptprop::cli::cmd_gen_hitting_set(set_specs, budget, std::cout, std::cerr);

    if (bench->parsed())
        return fptprop::cli::cmd_bench(bench_kind, bench_n, bench_k, bench_d, bench_seed,
            std::cout, std::cerr);

    return 2; // unreachable with require_subcommand(1)
}
