#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwcut/cut_stats.hpp"
#include "gwcut/cut_tree.hpp"
#include "gwcut/errors.hpp"
#include "gwcut/fragmentation.hpp"
#include "gwcut/gw_sampler.hpp"
#include "gwcut/line_breaking.hpp"
#include "gwcut/mu_bound.hpp"
#include "gwcut/parallel.hpp"
#include "gwcut/permutation_oracle.hpp"
#include "gwcut/reference_laws.hpp"
#include "gwcut/replant.hpp"
#include "gwcut/schedule.hpp"

using nlohmann::json;
using namespace gwcut;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json make_report(const std::string& test, double statistic, double threshold, bool pass,
                 long long n, long long reps, std::uint64_t seed, long long runtime_ms) {
    return json{{"test", test},       {"statistic", statistic}, {"threshold", threshold},
                {"pass", pass},       {"n", n},                 {"reps", reps},
                {"seed", seed},       {"runtime_ms", runtime_ms}};
}

void write_text(const std::string& path, const std::string& payload) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << payload;
}

// rows produced by parallel replicates, kept in completion order unless the
// caller asks for canonical (replicate-index) order
struct RowSink {
    std::mutex mu;
    std::vector<std::pair<long long, std::string>> rows;

    void push(long long rep, std::string row) {
        std::lock_guard<std::mutex> lock(mu);
        rows.emplace_back(rep, std::move(row));
    }
    std::string drain(bool sorted) {
        if (sorted)
            std::sort(rows.begin(), rows.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        std::string out;
        for (auto& [rep, row] : rows) out += row;
        return out;
    }
};

struct CommonOpts {
    std::string law = "poisson1";
    int n = 100;
    std::uint64_t seed = 0;
    long long reps = 1;
    int threads = 0;
    std::string out;
    std::string format = "json";
    bool sorted = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_law = true) {
    if (with_law)
        cmd->add_option("--law", o.law, "offspring law: poisson1|geometric_half|binary")
            ->check(CLI::IsMember({"poisson1", "geometric_half", "binary"}));
    cmd->add_option("--seed", o.seed, "master seed (mandatory, replicates derive from it)")
        ->required();
    cmd->add_option("--reps", o.reps, "replicate count")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "worker threads (default: GWCUT_THREADS or cores)");
    cmd->add_option("--out", o.out, "output path or prefix (default: stdout)");
    cmd->add_option("--format", o.format, "stdout payload when --out is absent: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--sorted", o.sorted, "emit rows in canonical replicate order");
}

int resolve_threads(int cli_threads) {
    return cli_threads >= 1 ? cli_threads : default_thread_count();
}

// ---------------------------------------------------------------- sample --

int cmd_sample(const CommonOpts& o) {
    const OffspringLaw law = OffspringLaw::by_name(o.law);
    std::ostringstream payload;
    for (long long rep = 0; rep < o.reps; ++rep) {
        Rng rng = make_rng(o.seed, rep);
        write_tree_text(payload, sample_conditioned_tree(law, o.n, rng));
    }
    if (o.out.empty())
        std::cout << payload.str();
    else
        write_text(o.out, payload.str());
    return 0;
}

// -------------------------------------------------------------- cutstats --

int cmd_cutstats(const CommonOpts& o, int k, double ks_threshold) {
    const OffspringLaw law = OffspringLaw::by_name(o.law);
    const double scale = 1.0 / (law.sigma() * std::sqrt(static_cast<double>(o.n)));
    Timer timer;

    std::vector<double> normalized(o.reps, 0.0);
    RowSink sink;
    for_each_replicate(o.reps, resolve_threads(o.threads), [&](long long rep) {
        Rng rng = make_rng(o.seed, rep);
        PlantedTree pt = plant(sample_conditioned_tree(law, o.n, rng));
        RemovalSchedule sched = sample_schedule(o.n, rng, ScheduleMode::discrete);
        std::uniform_int_distribution<int> pick(1, o.n);
        std::vector<int> marked(k);
        for (int& x : marked) x = pick(rng);
        const long long cuts = count_cuts(pt, sched, marked);
        normalized[rep] = static_cast<double>(cuts) * scale;
        std::ostringstream row;
        row << rep << ',' << cuts << ',' << normalized[rep] << '\n';
        sink.push(rep, row.str());
    });

    const double ks = ks_statistic(normalized, ReferenceLaw::chi2k(k));
    const bool low_power = o.reps < 100;
    const bool pass = low_power || ks < ks_threshold;
    json report = make_report("cutstats_ks_vs_chi2k", ks, ks_threshold, pass, o.n, o.reps,
                              o.seed, timer.ms());
    report["k"] = k;
    report["law"] = o.law;
    report["low_power"] = low_power;

    const std::string csv = "replicate,n_cuts,normalized\n" + sink.drain(o.sorted);
    if (!o.out.empty()) {
        write_text(o.out + ".samples.csv", csv);
        write_text(o.out + ".report.json", report.dump(2) + "\n");
        std::cout << report.dump(2) << std::endl;
    } else if (o.format == "csv") {
        std::cout << csv;
    } else {
        std::cout << report.dump(2) << std::endl;
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- matrix --

int cmd_matrix(const CommonOpts& o, int m, int cont_k, long long cont_reps,
               double ks_threshold, double cont_ks_threshold) {
    const OffspringLaw law = OffspringLaw::by_name(o.law);
    const double scale = 1.0 / (law.sigma() * std::sqrt(static_cast<double>(o.n)));
    const int threads = resolve_threads(o.threads);
    Timer timer;

    const int entries = (m + 1) * m / 2 + m;  // flattened upper triangle incl. root row
    auto header = [&]() {
        std::string h = "replicate";
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) h += ",d" + std::to_string(i) + "_" + std::to_string(j);
        return h + "\n";
    };
    (void)entries;

    // discrete side
    std::vector<std::vector<double>> discrete(o.reps);
    RowSink d_sink;
    for_each_replicate(o.reps, threads, [&](long long rep) {
        Rng rng = make_rng(o.seed, rep);
        PlantedTree pt = plant(sample_conditioned_tree(law, o.n, rng));
        RemovalSchedule sched = sample_schedule(o.n, rng, ScheduleMode::discrete);
        CutTree ct = build_cut_tree(pt, sched);
        std::uniform_int_distribution<int> pick(1, o.n);
        std::vector<int> points(m);
        for (int& x : points) x = pick(rng);
        auto mat = ct.distance_matrix(points);
        std::vector<double> flat;
        std::ostringstream row;
        row << rep;
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                flat.push_back(static_cast<double>(mat[i][j]) * scale);
                row << ',' << flat.back();
            }
        row << '\n';
        discrete[rep] = std::move(flat);
        d_sink.push(rep, row.str());
    });

    // continuum side
    std::vector<std::vector<double>> continuum(cont_reps);
    RowSink c_sink;
    for_each_replicate(cont_reps, threads, [&](long long rep) {
        Rng rng = make_rng(mix_seed(o.seed ^ 0xC0117137u), rep);
        auto mat = delta_matrix_estimate(cont_k, m, rng);
        std::vector<double> flat;
        std::ostringstream row;
        row << rep;
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                flat.push_back(mat[i][j]);
                row << ',' << flat.back();
            }
        row << '\n';
        continuum[rep] = std::move(flat);
        c_sink.push(rep, row.str());
    });

    json report;
    report["law"] = o.law;
    report["n"] = o.n;
    report["m"] = m;
    report["reps"] = o.reps;
    report["cont_k"] = cont_k;
    report["cont_reps"] = cont_reps;
    report["seed"] = o.seed;
    bool pass = true;
    json entries_json = json::array();
    int col = 0;
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j, ++col) {
            std::vector<double> ds(o.reps), cs(cont_reps);
            double dmean = 0, cmean = 0;
            for (long long r = 0; r < o.reps; ++r) { ds[r] = discrete[r][col]; dmean += ds[r]; }
            for (long long r = 0; r < cont_reps; ++r) { cs[r] = continuum[r][col]; cmean += cs[r]; }
            dmean /= static_cast<double>(o.reps);
            cmean /= static_cast<double>(cont_reps);
            const double dks = ks_statistic(ds, ReferenceLaw::rayleigh());
            const double cks = ks_statistic(cs, ReferenceLaw::rayleigh());
            const bool entry_pass = dks < ks_threshold && cks < cont_ks_threshold;
            pass = pass && entry_pass;
            entries_json.push_back(json{{"entry", "d" + std::to_string(i) + "_" + std::to_string(j)},
                                        {"discrete_ks", dks},
                                        {"continuum_ks", cks},
                                        {"discrete_mean", dmean},
                                        {"continuum_mean", cmean},
                                        {"mean_gap", std::abs(dmean - cmean)},
                                        {"pass", entry_pass}});
        }
    report["entries"] = entries_json;
    report["ks_threshold"] = ks_threshold;
    report["cont_ks_threshold"] = cont_ks_threshold;
    report["pass"] = pass;
    report["runtime_ms"] = timer.ms();

    const std::string d_csv = header() + d_sink.drain(o.sorted);
    const std::string c_csv = header() + c_sink.drain(o.sorted);
    if (!o.out.empty()) {
        write_text(o.out + ".discrete.csv", d_csv);
        write_text(o.out + ".continuum.csv", c_csv);
        write_text(o.out + ".report.json", report.dump(2) + "\n");
        std::cout << report.dump(2) << std::endl;
    } else if (o.format == "csv") {
        std::cout << d_csv;
    } else {
        std::cout << report.dump(2) << std::endl;
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- verify --

PlantedTree fixed_tree_path(int n) {
    std::vector<int> parent(n);
    for (int v = 1; v <= n; ++v) parent[v - 1] = v - 1;
    return plant(RootedTree::from_parent_table(n, std::move(parent)));
}

PlantedTree fixed_tree_star(int n) {
    std::vector<int> parent(n, 1);
    parent[0] = 0;
    return plant(RootedTree::from_parent_table(n, std::move(parent)));
}

PlantedTree fixed_tree_complete_binary(int n) {
    std::vector<int> parent(n);
    for (int v = 1; v <= n; ++v) parent[v - 1] = v / 2;
    return plant(RootedTree::from_parent_table(n, std::move(parent)));
}

int cmd_verify(bool fast, const std::string& out, std::uint64_t seed) {
    const bool mutate = std::getenv("GWCUT_MUTATE") != nullptr;
    json reports = json::array();

    // exact oracle suite: permutation average vs record formula, and
    // reverse-built cut-tree depths vs the forward counter, all orders
    {
        Timer timer;
        const int max_n = fast ? 5 : 6;
        long long mismatches = 0, checks = 0;
        for (int n = 1; n <= max_n; ++n) {
            for (const PlanarTree& shape : enumerate_planar_trees(n)) {
                PlantedTree pt = plant(rooted_from_planar(shape));
                auto oracle = permutation_oracle_all(pt);
                for (int i = 1; i <= n; ++i, ++checks)
                    if (!(oracle[i - 1] == expected_cut_distance_exact(pt, i))) ++mismatches;

                RemovalSchedule sched;
                sched.order.resize(n);
                std::iota(sched.order.begin(), sched.order.end(), 1);
                do {
                    CutTree ct = build_cut_tree(pt, sched);
                    std::vector<std::int32_t> depth(ct.depth);
                    if (mutate) ++depth[ct.leaf_node(1)];  // sensitivity hook
                    auto fwd = forward_cut_depths(pt, sched);
                    for (int i = 1; i <= n; ++i, ++checks)
                        if (depth[ct.leaf_node(i)] != fwd[i - 1]) ++mismatches;
                } while (std::next_permutation(sched.order.begin(), sched.order.end()));
            }
        }
        reports.push_back(make_report("exact_oracle_n_le_" + std::to_string(max_n),
                                      static_cast<double>(mismatches), 0.5, mismatches == 0,
                                      max_n, checks, seed, timer.ms()));
    }

    // martingale identity on five fixed trees
    {
        Timer timer;
        const int n = 100;
        const long long reps = fast ? 20000 : 100000;
        Rng seed_rng = make_rng(seed, 777);
        std::vector<std::pair<std::string, PlantedTree>> trees;
        trees.emplace_back("path", fixed_tree_path(n));
        trees.emplace_back("star", fixed_tree_star(n));
        trees.emplace_back("complete_binary", fixed_tree_complete_binary(n));
        trees.emplace_back("gw_poisson1",
                           plant(sample_conditioned_tree(OffspringLaw::poisson1(), n, seed_rng)));
        trees.emplace_back("gw_geometric",
                           plant(sample_conditioned_tree(OffspringLaw::geometric_half(), n, seed_rng)));
        const int edges[] = {1, 50, 100, 25, 75};

        double worst_z = 0.0;
        int idx = 0;
        for (auto& [name, pt] : trees) {
            const int i = edges[idx++];
            const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
            std::vector<double> diffs(reps);
            for_each_replicate(reps, 1, [&](long long rep) {
                Rng rng = make_rng(seed ^ (0xABCD + idx), rep);
                RemovalSchedule sched = sample_schedule(n, rng, ScheduleMode::continuous);
                CutTree ct = build_cut_tree(pt, sched);
                ContinuousCutStats stats(pt, sched, {i});
                const double diff = inv_sqrt_n * ct.cut_distance(0, i) - stats.root_distance(i);
                diffs[rep] = diff * diff - inv_sqrt_n * stats.root_distance(i);
            });
            double mean = 0, sq = 0;
            for (double d : diffs) { mean += d; sq += d * d; }
            mean /= static_cast<double>(reps);
            const double var = sq / static_cast<double>(reps) - mean * mean;
            const double se = std::sqrt(var / static_cast<double>(reps));
            worst_z = std::max(worst_z, std::abs(mean) / se);
        }
        reports.push_back(make_report("lemma1_martingale_identity_z", worst_z, 3.0, worst_z <= 3.0,
                                      n, reps, seed, timer.ms()));
    }

    // replant involution on random pointed trees
    {
        Timer timer;
        const long long reps = fast ? 2000 : 10000;
        long long failures = 0;
        for_each_replicate(reps, 1, [&](long long rep) {
            Rng rng = make_rng(seed ^ 0xBEEF, rep);
            const int n = 1 + static_cast<int>(rng() % 200);
            PlanarTree t =
                planar_from_rooted(sample_conditioned_tree(OffspringLaw::poisson1(), n, rng));
            std::uniform_int_distribution<int> pick(0, n - 1);
            PointedPlantedTree p{t, pick(rng)};
            if (!(replant_transform(replant_transform(p)) == p)) ++failures;
        });
        reports.push_back(make_report("replant_involution", static_cast<double>(failures), 0.5,
                                      failures == 0, 200, reps, seed, timer.ms()));
    }

    // exact pushforward invariance
    {
        Timer timer;
        long long mismatches = 0;
        auto run_cell = [&](const OffspringLaw& law, int n) {
            std::map<std::pair<std::vector<int>, int>, Rational> original, pushed;
            for (const auto& atom : enumerate_gw_star(law, n)) {
                PointedPlantedTree p{atom.tree, atom.point};
                auto key = std::make_pair(preorder_code(p.tree), preorder_rank(p.tree, p.point));
                auto q = replant_transform(p);
                auto qkey = std::make_pair(preorder_code(q.tree), preorder_rank(q.tree, q.point));
                original[key] += atom.weight;
                pushed[qkey] += atom.weight;
            }
            if (original != pushed) ++mismatches;
        };
        for (int n : {1, 3, 5}) run_cell(OffspringLaw::binary(), n);
        for (int n : {1, 2, 3, 4}) run_cell(OffspringLaw::geometric_half(), n);
        reports.push_back(make_report("replant_gwstar_invariance", static_cast<double>(mismatches),
                                      0.5, mismatches == 0, 5, 7, seed, timer.ms()));
    }

    // chi(2k) cdf vs quadrature of the density
    {
        Timer timer;
        double worst = 0.0;
        for (int k = 1; k <= 6; ++k) {
            for (double x = 0.5; x <= 10.0; x += 0.5) {
                // Simpson on a fine fixed grid is plenty at these scales
                const int steps = 4000;
                const double h = x / steps;
                double acc = chi2k_pdf(k, 0.0) + chi2k_pdf(k, x);
                for (int s = 1; s < steps; ++s)
                    acc += chi2k_pdf(k, s * h) * ((s & 1) ? 4.0 : 2.0);
                const double quad = acc * h / 3.0;
                worst = std::max(worst, std::abs(quad - chi2k_cdf(k, x)));
            }
        }
        reports.push_back(
            make_report("chi2k_cdf_quadrature", worst, 1e-10, worst < 1e-10, 6, 120, seed, timer.ms()));
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r["pass"].get<bool>();
    json top{{"suite", "verify"}, {"pass", all_pass}, {"reports", reports}};
    const std::string payload = top.dump(2) + "\n";
    if (!out.empty()) write_text(out, payload);
    std::cout << payload;
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-tree simulation and verification toolkit for conditioned Galton-Watson trees"};
    app.require_subcommand(1);

    CommonOpts sample_o, cut_o, mat_o;
    int cut_k = 1, mat_m = 1, cont_k = 2000;
    long long cont_reps = 500;
    double ks_threshold = 0.03, cont_ks_threshold = 0.06;
    bool verify_fast = false;
    std::string verify_out;
    std::uint64_t verify_seed = 1;

    auto* sample = app.add_subcommand("sample", "write conditioned Galton-Watson trees");
    add_common(sample, sample_o);
    sample->add_option("--n", sample_o.n, "vertex count")->required()->check(CLI::PositiveNumber);

    auto* cutstats = app.add_subcommand(
        "cutstats", "sample N(tree, k) and test N/(sigma sqrt n) against Chi(2k)");
    add_common(cutstats, cut_o);
    cutstats->add_option("--n", cut_o.n, "vertex count")->required()->check(CLI::PositiveNumber);
    cutstats->add_option("--k", cut_k, "number of marked edges")->check(CLI::PositiveNumber);
    cutstats->add_option("--ks-threshold", ks_threshold, "KS pass threshold");

    auto* matrix = app.add_subcommand(
        "matrix", "paired discrete/continuum cut-distance matrices with marginal KS reports");
    add_common(matrix, mat_o);
    matrix->add_option("--n", mat_o.n, "vertex count")->required()->check(CLI::PositiveNumber);
    matrix->add_option("--m", mat_m, "sampled points per matrix")->check(CLI::PositiveNumber);
    matrix->add_option("--cont-k", cont_k, "continuum leaf count")->check(CLI::PositiveNumber);
    matrix->add_option("--cont-reps", cont_reps, "continuum replicates")->check(CLI::PositiveNumber);
    matrix->add_option("--ks-threshold", ks_threshold, "discrete KS pass threshold");
    matrix->add_option("--cont-ks-threshold", cont_ks_threshold, "continuum KS pass threshold");

    auto* verify = app.add_subcommand("verify", "run the exact-oracle and invariance suites");
    verify->add_flag("--fast", verify_fast, "reduced replicate counts");
    verify->add_option("--out", verify_out, "write the JSON report here as well");
    verify->add_option("--seed", verify_seed, "seed for the Monte Carlo suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sample->parsed()) return cmd_sample(sample_o);
        if (cutstats->parsed()) return cmd_cutstats(cut_o, cut_k, ks_threshold);
        if (matrix->parsed())
            return cmd_matrix(mat_o, mat_m, cont_k, cont_reps, ks_threshold, cont_ks_threshold);
        if (verify->parsed()) return cmd_verify(verify_fast, verify_out, verify_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}
