// fsc: two-machine flow-shop scheduling under conflict constraints.
//
// Subcommands: gen, matching, pathcover, solve-unit, solve-cliques,
// verify, bench. Exit codes: 0 success, 1 usage or input error,
// 2 verification failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsc/generate.hpp"
#include "fsc/graph.hpp"
#include "fsc/matching.hpp"
#include "fsc/oracle.hpp"
#include "fsc/path_cover.hpp"
#include "fsc/report.hpp"
#include "fsc/scheduling.hpp"
#include "fsc/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from) {
    return std::chrono::duration<double, std::milli>(Clock::now() - from).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

fsc::CoverObjective objective_from_mode(const std::string& mode) {
    if (mode == "A") return fsc::CoverObjective::zero_paths;
    if (mode == "B") return fsc::CoverObjective::zero_one_paths;
    if (mode == "B-refined") return fsc::CoverObjective::zero_one_then_zero;
    throw std::runtime_error("unknown mode '" + mode + "', expected A, B or B-refined");
}

char job_symbol(int job) {
    static const char* alphabet =
        "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    return alphabet[job % 62];
}

std::string render_gantt(const fsc::Instance& inst, const fsc::Schedule& s) {
    std::string m1(static_cast<std::size_t>(s.makespan), '.');
    std::string m2(static_cast<std::size_t>(s.makespan), '.');
    for (int j = 0; j < inst.num_jobs(); ++j) {
        for (std::int64_t t = 0; t < inst.times[j].first; ++t)
            m1[static_cast<std::size_t>(s.start1[j] + t)] = job_symbol(j);
        for (std::int64_t t = 0; t < inst.times[j].second; ++t)
            m2[static_cast<std::size_t>(s.start2[j] + t)] = job_symbol(j);
    }
    return "M1 " + m1 + "\nM2 " + m2 + "\n";
}

nlohmann::json schedule_json(const fsc::Schedule& s, const fsc::RunReport& report) {
    nlohmann::json jobs = nlohmann::json::array();
    for (std::size_t j = 0; j < s.start1.size(); ++j)
        jobs.push_back({{"job", j}, {"start1", s.start1[j]}, {"start2", s.start2[j]}});
    nlohmann::json out{{"instance", report.instance_id},
                       {"algorithm", report.algorithm},
                       {"makespan", s.makespan},
                       {"jobs", jobs}};
    if (report.lower_bound) out["lower_bound"] = *report.lower_bound;
    if (report.ratio) out["ratio"] = *report.ratio;
    if (report.num_paths) {
        out["cover"] = {{"paths", *report.num_paths},
                        {"zero_paths", *report.num_zero_paths},
                        {"one_paths", *report.num_one_paths}};
    }
    return out;
}

int run_gen(const std::string& family, int n, double p, std::uint64_t seed, int k, int l,
            std::int64_t pmax, const std::string& graph_path, const std::string& out_path) {
    fsc::Instance inst;
    if (family == "random_gnp") {
        inst = fsc::gen_random_gnp(n, p, seed);
    } else if (family == "chained_triangles") {
        inst = fsc::gen_chained_triangles(k);
    } else if (family == "two_cliques") {
        inst = fsc::gen_two_cliques(l, n, pmax, seed);
    } else if (family == "unit_from_graph") {
        if (graph_path.empty()) throw std::runtime_error("unit_from_graph requires --graph");
        inst = fsc::gen_unit_from_graph(fsc::parse_instance(read_file(graph_path)));
    } else {
        throw std::runtime_error("unknown family '" + family + "'");
    }
    write_output(out_path, fsc::format_instance(inst));
    return 0;
}

int run_matching(const std::string& path) {
    fsc::Instance inst = fsc::parse_instance(read_file(path));
    fsc::Graph agreement = fsc::complement(inst.conflicts);
    fsc::TwoMatching m = fsc::maximum_two_matching(agreement);
    fsc::MatchingDecomposition dec = fsc::decompose(m);
    std::cout << "edges " << m.edges.size() << '\n'
              << "p0 " << dec.p0.size() << " p1 " << dec.p1.size() << " p2 " << dec.p2.size()
              << " p3 " << dec.p3.size() << " p4 " << dec.p4.size() << " p5plus "
              << dec.p_ge5.size() << " cycles " << dec.cycles.size() << '\n';
    return 0;
}

int run_pathcover(const std::string& path, const std::string& mode) {
    fsc::Instance inst = fsc::parse_instance(read_file(path));
    fsc::Graph agreement = fsc::complement(inst.conflicts);
    fsc::PathCover cover = fsc::compute_path_cover(agreement, objective_from_mode(mode));
    for (const auto& p : cover.paths) {
        std::cout << "path";
        for (int v : p) std::cout << ' ' << v;
        std::cout << '\n';
    }
    std::cout << "paths " << cover.num_paths() << " zero-paths " << cover.num_zero_paths()
              << " one-paths " << cover.num_one_paths() << '\n';
    return 0;
}

int run_solve_unit(const std::string& path, const std::string& mode, bool gantt, bool as_json) {
    fsc::Instance inst = fsc::parse_instance(read_file(path));
    if (!inst.is_unit())
        throw std::runtime_error(
            "instance has non-unit processing times; solve-unit handles unit jobs only "
            "(use solve-cliques for two-clique instances)");
    auto t0 = Clock::now();
    fsc::Graph agreement = fsc::complement(inst.conflicts);
    fsc::CoverObjective objective = objective_from_mode(mode);
    fsc::PathCover cover = fsc::compute_path_cover(agreement, objective);
    fsc::Schedule s = fsc::schedule_from_cover(cover, inst.num_jobs());
    double ms = elapsed_ms(t0);

    fsc::ValidationResult val = fsc::validate_schedule(inst, s);
    if (!val.ok) throw std::logic_error("produced schedule failed validation: " + val.message);

    // Certified bound: optimum >= n + minimum number of 0- and 1-paths.
    std::int64_t bound =
        inst.num_jobs() +
        [&] {
            if (objective != fsc::CoverObjective::zero_paths)
                return cover.num_zero_paths() + cover.num_one_paths();
            fsc::PathCover b = fsc::min_zero_one_path_cover(agreement);
            return b.num_zero_paths() + b.num_one_paths();
        }();

    fsc::RunReport report;
    report.instance_id = path;
    report.algorithm = "solve-unit/" + mode;
    report.makespan = s.makespan;
    report.num_paths = cover.num_paths();
    report.num_zero_paths = cover.num_zero_paths();
    report.num_one_paths = cover.num_one_paths();
    report.wall_ms = ms;
    report.set_bound(bound);

    if (as_json) {
        std::cout << schedule_json(s, report).dump(2) << '\n';
        return 0;
    }
    std::cout << fsc::format_schedule(s);
    if (gantt) std::cout << render_gantt(inst, s);
    std::cout << report.render() << '\n';
    return 0;
}

int run_solve_cliques(const std::string& path, bool as_json) {
    fsc::Instance inst = fsc::parse_instance(read_file(path));
    auto part = fsc::recognize_two_cliques(inst.conflicts);
    if (!part)
        throw std::runtime_error(
            "conflict graph is not a union of at most two cliques; solve-cliques does not apply");
    auto t0 = Clock::now();
    fsc::Schedule s = fsc::two_clique_schedule(inst, *part);
    double ms = elapsed_ms(t0);

    fsc::ValidationResult val = fsc::validate_schedule(inst, s);
    if (!val.ok) throw std::logic_error("produced schedule failed validation: " + val.message);

    fsc::RunReport report;
    report.instance_id = path;
    report.algorithm = "solve-cliques";
    report.makespan = s.makespan;
    report.wall_ms = ms;
    report.set_bound(fsc::two_clique_lower_bound(inst, *part));

    if (as_json) {
        std::cout << schedule_json(s, report).dump(2) << '\n';
        return 0;
    }
    std::cout << fsc::format_schedule(s) << report.render() << '\n';
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
    fsc::VerifyReport report;
    if (suite == "small-exhaustive") {
        report = fsc::verify_small_exhaustive();
    } else if (suite == "random") {
        report = fsc::verify_random(seed);
    } else if (suite == "ratios") {
        report = fsc::verify_ratios(seed);
    } else {
        throw std::runtime_error("unknown suite '" + suite +
                                 "', expected small-exhaustive, random or ratios");
    }
    for (const fsc::VerifyCheck& check : report.checks) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.passed) std::cout << ": " << check.detail;
        std::cout << '\n';
    }
    return report.all_passed() ? 0 : 2;
}

int run_bench(const std::string& family, const std::vector<int>& sizes, int repeat, double p,
              std::uint64_t seed, const std::string& mode) {
    std::vector<fsc::RunReport> reports;
    for (int size : sizes) {
        for (int rep = 0; rep < repeat; ++rep) {
            const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(rep);
            fsc::Instance inst;
            std::string id;
            if (family == "random_gnp") {
                inst = fsc::gen_random_gnp(size, p, run_seed);
                id = "gnp-n" + std::to_string(size) + "-r" + std::to_string(rep);
            } else if (family == "chained_triangles") {
                inst = fsc::gen_chained_triangles(size);
                id = "chain-k" + std::to_string(size) + "-r" + std::to_string(rep);
            } else if (family == "two_cliques") {
                inst = fsc::gen_two_cliques(size / 2, size, 100, run_seed);
                id = "cliques-n" + std::to_string(size) + "-r" + std::to_string(rep);
            } else {
                throw std::runtime_error("unknown family '" + family + "'");
            }

            fsc::RunReport report;
            report.instance_id = id;
            auto t0 = Clock::now();
            if (family == "two_cliques") {
                auto part = fsc::recognize_two_cliques(inst.conflicts);
                fsc::Schedule s = fsc::two_clique_schedule(inst, *part);
                report.makespan = s.makespan;
                report.algorithm = "solve-cliques";
                report.wall_ms = elapsed_ms(t0);
                report.set_bound(fsc::two_clique_lower_bound(inst, *part));
            } else {
                fsc::Graph agreement = fsc::complement(inst.conflicts);
                fsc::PathCover cover =
                    fsc::compute_path_cover(agreement, objective_from_mode(mode));
                fsc::Schedule s = fsc::schedule_from_cover(cover, inst.num_jobs());
                report.makespan = s.makespan;
                report.algorithm = "solve-unit/" + mode;
                report.wall_ms = elapsed_ms(t0);
                report.num_paths = cover.num_paths();
                report.num_zero_paths = cover.num_zero_paths();
                report.num_one_paths = cover.num_one_paths();
                report.set_bound(inst.num_jobs() + cover.num_zero_paths() + cover.num_one_paths());
            }
            reports.push_back(std::move(report));
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const fsc::RunReport& a, const fsc::RunReport& b) {
                  return a.instance_id < b.instance_id;
              });
    for (const fsc::RunReport& r : reports) std::cout << r.render() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-machine flow-shop scheduling with a conflict graph"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string family, out_path = "-", graph_path;
    int gen_n = 10, gen_k = 2, gen_l = 1;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::int64_t gen_pmax = 1;
    gen->add_option("--family", family,
                    "random_gnp | chained_triangles | two_cliques | unit_from_graph")
        ->required();
    gen->add_option("--n", gen_n, "number of jobs");
    gen->add_option("--p", gen_p, "conflict probability for random_gnp");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--k", gen_k, "number of triangles for chained_triangles");
    gen->add_option("--l", gen_l, "size of the first clique for two_cliques");
    gen->add_option("--pmax", gen_pmax, "maximum processing time for two_cliques");
    gen->add_option("--graph", graph_path, "input file for unit_from_graph");
    gen->add_option("--out", out_path, "output path, '-' for stdout");

    // matching
    auto* matching = app.add_subcommand(
        "matching", "maximum 2-matching of the instance's agreement graph");
    std::string matching_path;
    matching->add_option("path", matching_path, "instance file")->required();

    // pathcover
    auto* pathcover = app.add_subcommand("pathcover", "path cover of the agreement graph");
    std::string pathcover_path, pathcover_mode = "B";
    pathcover->add_option("path", pathcover_path, "instance file")->required();
    pathcover->add_option("--mode", pathcover_mode, "A | B | B-refined");

    // solve-unit
    auto* solve_unit = app.add_subcommand("solve-unit", "schedule a unit-job instance");
    std::string su_path, su_mode = "B";
    bool su_gantt = false, su_json = false;
    solve_unit->add_option("path", su_path, "instance file")->required();
    solve_unit->add_option("--mode", su_mode, "A | B | B-refined");
    solve_unit->add_flag("--gantt", su_gantt, "render a per-unit-time chart");
    solve_unit->add_flag("--json", su_json, "emit the schedule and report as JSON");

    // solve-cliques
    auto* solve_cliques =
        app.add_subcommand("solve-cliques", "schedule a two-clique conflict instance");
    std::string sc_path;
    bool sc_json = false;
    solve_cliques->add_option("path", sc_path, "instance file")->required();
    solve_cliques->add_flag("--json", sc_json, "emit the schedule and report as JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "run oracle certification suites");
    std::string suite;
    std::uint64_t verify_seed = 12345;
    verify->add_option("--suite", suite, "small-exhaustive | random | ratios")->required();
    verify->add_option("--seed", verify_seed, "seed for the randomized suites");

    // bench
    auto* bench = app.add_subcommand("bench", "timed solver batches");
    std::string bench_family = "random_gnp", bench_mode = "B";
    std::vector<int> bench_sizes;
    int bench_repeat = 3;
    double bench_p = 0.1;
    std::uint64_t bench_seed = 1;
    bench->add_option("--family", bench_family, "random_gnp | chained_triangles | two_cliques");
    bench->add_option("--sizes", bench_sizes, "instance sizes")->required()->delimiter(',');
    bench->add_option("--repeat", bench_repeat, "runs per size");
    bench->add_option("--p", bench_p, "conflict probability for random_gnp");
    bench->add_option("--seed", bench_seed, "base seed");
    bench->add_option("--mode", bench_mode, "cover mode for unit families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed())
            return run_gen(family, gen_n, gen_p, gen_seed, gen_k, gen_l, gen_pmax, graph_path,
                           out_path);
        if (matching->parsed()) return run_matching(matching_path);
        if (pathcover->parsed()) return run_pathcover(pathcover_path, pathcover_mode);
        if (solve_unit->parsed()) return run_solve_unit(su_path, su_mode, su_gantt, su_json);
        if (solve_cliques->parsed()) return run_solve_cliques(sc_path, sc_json);
        if (verify->parsed()) return run_verify(suite, verify_seed);
        if (bench->parsed())
            return run_bench(bench_family, bench_sizes, bench_repeat, bench_p, bench_seed,
                             bench_mode);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
