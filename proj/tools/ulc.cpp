#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ulc/generators.hpp"
#include "ulc/io.hpp"
#include "ulc/oracle.hpp"
#include "ulc/solver.hpp"

namespace {

constexpr const char* kCsvHeader =
    "instance,n,m,s,k,decision,nodes_expanded,max_depth,wall_time_ms";

std::string csv_row(const std::string& name, const ulc::Instance& inst,
                    bool yes, const ulc::SearchStats& st) {
    std::ostringstream out;
    out << name << ',' << inst.n() << ',' << inst.m() << ',' << inst.s() << ','
        << inst.k << ',' << (yes ? "YES" : "NO") << ',' << st.nodes_expanded
        << ',' << st.max_depth << ',' << st.wall_seconds * 1000.0;
    return out.str();
}

int cmd_solve(const std::string& path, bool stats, bool check,
              bool assert_measure, bool verbose) {
    ulc::Instance inst = ulc::parse_instance_file(path);
    ulc::SolveOptions opts;
    opts.assert_measure = assert_measure;
    if (verbose) opts.trace = &std::cerr;
    ulc::SearchStats st;
    ulc::Solution sol = ulc::solve(inst, opts, &st);
    if (check && sol.yes) {
        ulc::VerifyResult vr = ulc::verify_solution(inst, sol);
        if (!vr.ok()) {
            std::cerr << "self-check failed: " << vr.describe() << '\n';
            return 3;
        }
    }
    ulc::serialize_solution(std::cout, sol);
    if (stats) std::cerr << kCsvHeader << '\n'
                         << csv_row(path, inst, sol.yes, st) << '\n';
    return sol.yes ? 0 : 1;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
    ulc::Instance inst = ulc::parse_instance_file(inst_path);
    ulc::Solution sol = ulc::parse_solution_file(sol_path);
    ulc::VerifyResult vr = ulc::verify_solution(inst, sol);
    if (vr.ok()) return 0;
    std::cout << vr.describe() << '\n';
    return 1;
}

int cmd_oracle(const std::string& path) {
    ulc::Instance inst = ulc::parse_instance_file(path);
    ulc::Solution sol;
    try {
        sol = ulc::brute_force(inst);
    } catch (const ulc::SizeLimitError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    ulc::serialize_solution(std::cout, sol);
    return sol.yes ? 0 : 1;
}

struct GenFlags {
    std::string family;
    int cycle = 0, path = 0, complete = 0;
    bool petersen = false;
    int n = 0, m = 0, s = 2, k = 0, r = 2;
    double p = 0.3, p_full = 1.0;
    bool planted = false;
    std::vector<int> terminals;
    std::uint64_t seed = 0;
};

ulc::SimpleGraph base_graph(const GenFlags& f) {
    if (f.cycle) return ulc::cycle_graph(f.cycle);
    if (f.path) return ulc::path_graph(f.path);
    if (f.complete) return ulc::complete_graph(f.complete);
    if (f.petersen) return ulc::petersen_graph();
    if (f.n) return ulc::random_graph(f.n, f.p, f.seed);
    throw std::invalid_argument("no graph shape given (try --cycle or --n)");
}

int cmd_gen(const GenFlags& f) {
    ulc::Instance inst;
    std::vector<std::string> params{"seed=" + std::to_string(f.seed),
                                    "k=" + std::to_string(f.k)};
    if (f.family == "oct") {
        inst = ulc::gen_oct(base_graph(f), f.k);
    } else if (f.family == "groupfvs") {
        ulc::SimpleGraph g = base_graph(f);
        std::mt19937_64 rng(f.seed + 1);  // labels drawn separately from shape
        std::vector<int> labels(g.edges.size());
        for (int& l : labels)
            l = std::uniform_int_distribution<int>(0, f.r - 1)(rng);
        inst = ulc::gen_group_fvs(g, labels, f.r, f.k);
        params.push_back("r=" + std::to_string(f.r));
    } else if (f.family == "multiway") {
        inst = ulc::gen_multiway_cut(base_graph(f), f.terminals, f.k);
        params.push_back("terminals=" + std::to_string(f.terminals.size()));
    } else if (f.family == "random") {
        inst = ulc::gen_random(
            {f.n, f.p, f.s, f.k, f.p_full, f.planted, f.seed});
        params.push_back("sigma=" + std::to_string(f.s));
        if (f.planted) params.push_back("planted");
    } else if (f.family == "planted-oct") {
        inst = ulc::gen_planted_oct(f.n, f.m ? f.m : 2 * f.n, f.k, f.seed);
        params.push_back("m=" + std::to_string(f.m ? f.m : 2 * f.n));
    } else {
        throw std::invalid_argument("unknown family: " + f.family);
    }
    ulc::serialize_instance(std::cout, inst,
                            ulc::describe_gen(f.family, params));
    return 0;
}

struct BenchFlags {
    std::vector<int> sizes{1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14};
    int k = 2, reps = 1, jobs = 1;
    std::uint64_t seed = 1;
    bool fit = false;
};

int cmd_bench(const BenchFlags& f) {
    struct Run {
        std::string name;
        ulc::Instance inst;
        ulc::SearchStats st;
        bool yes = false;
    };
    std::vector<Run> runs;
    for (int n : f.sizes)
        for (int r = 0; r < f.reps; ++r) {
            Run run;
            run.name = "planted-oct-" + std::to_string(n) + "-r" +
                       std::to_string(r);
            run.inst = ulc::gen_planted_oct(n, 2 * n, f.k,
                                            f.seed + 1000 * n + r);
            runs.push_back(std::move(run));
        }

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < runs.size(); i = next++) {
            ulc::Solution sol = ulc::solve(runs[i].inst, {}, &runs[i].st);
            runs[i].yes = sol.yes;
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < f.jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::cout << kCsvHeader << '\n';
    for (const Run& r : runs)
        std::cout << csv_row(r.name, r.inst, r.yes, r.st) << '\n';

    if (f.fit) {
        // per-size medians, then consecutive ratios and an LS fit vs (m+n)
        std::vector<double> med, x;
        for (size_t i = 0; i < f.sizes.size(); ++i) {
            std::vector<double> t;
            for (int r = 0; r < f.reps; ++r)
                t.push_back(runs[i * f.reps + r].st.wall_seconds * 1000.0);
            std::sort(t.begin(), t.end());
            med.push_back(t[t.size() / 2]);
            x.push_back(f.sizes[i] + 2.0 * f.sizes[i]);  // n + m
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            sx += x[i], sy += med[i], sxx += x[i] * x[i], sxy += x[i] * med[i];
        }
        double nn = static_cast<double>(x.size());
        double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
        std::cout << "# fit slope_ms_per_unit=" << slope << '\n';
        for (size_t i = 1; i < med.size(); ++i)
            std::cout << "# median_ratio " << f.sizes[i - 1] << "->"
                      << f.sizes[i] << " = " << med[i] / med[i - 1] << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Node unique label cover solver and tooling"};
    app.require_subcommand(1);

    std::string inst_path, sol_path;
    bool stats = false, check = false, assert_measure = false, verbose = false;
    auto* solve = app.add_subcommand("solve", "decide an instance");
    solve->add_option("instance", inst_path)->required();
    solve->add_flag("--stats", stats, "search statistics CSV on stderr");
    solve->add_flag("--check", check, "verify the witness before printing");
    solve->add_flag("--assert-measure", assert_measure,
                    "enable measure-decrease runtime assertions");
    solve->add_flag("-v,--verbose", verbose, "branching trace on stderr");

    auto* verify = app.add_subcommand("verify", "check a solution file");
    verify->add_option("instance", inst_path)->required();
    verify->add_option("solution", sol_path)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force a small instance");
    oracle->add_option("instance", inst_path)->required();

    GenFlags gf;
    auto* gen = app.add_subcommand("gen", "generate an instance on stdout");
    gen->add_option("family", gf.family,
                    "oct | groupfvs | multiway | random | planted-oct")
        ->required();
    gen->add_option("--cycle", gf.cycle);
    gen->add_option("--path", gf.path);
    gen->add_option("--complete", gf.complete);
    gen->add_flag("--petersen", gf.petersen);
    gen->add_option("--n", gf.n);
    gen->add_option("--m", gf.m);
    gen->add_option("--p", gf.p);
    gen->add_option("--sigma", gf.s);
    gen->add_option("--r", gf.r);
    gen->add_option("--k", gf.k);
    gen->add_option("--p-full", gf.p_full);
    gen->add_flag("--planted", gf.planted);
    gen->add_option("--terminals", gf.terminals)->delimiter(',');
    gen->add_option("--seed", gf.seed);

    BenchFlags bf;
    auto* bench = app.add_subcommand("bench", "planted-OCT scaling ladder");
    bench->add_option("--sizes", bf.sizes)->delimiter(',');
    bench->add_option("--k", bf.k);
    bench->add_option("--reps", bf.reps);
    bench->add_option("--jobs", bf.jobs);
    bench->add_option("--seed", bf.seed);
    bench->add_flag("--fit", bf.fit);

    CLI11_PARSE(app, argc, argv);
    try {
        if (solve->parsed())
            return cmd_solve(inst_path, stats, check, assert_measure, verbose);
        if (verify->parsed()) return cmd_verify(inst_path, sol_path);
        if (oracle->parsed()) return cmd_oracle(inst_path);
        if (gen->parsed()) return cmd_gen(gf);
        if (bench->parsed()) return cmd_bench(bf);
    } catch (const ulc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
