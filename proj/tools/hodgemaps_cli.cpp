// Command-line front end: dataset generation, pipeline runs, artifact export
// and the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "hodgemaps/datasets.hpp"
#include "hodgemaps/eval.hpp"
#include "hodgemaps/io.hpp"
#include "hodgemaps/pipeline.hpp"
#include "hodgemaps/diffusion_map.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOptions {
    hodgemaps::FitConfig fit;
    double epsilon = 0.0;  // baseline bandwidth, 0 -> 2 t^2
    unsigned seed = 12345;
    std::string out_dir = ".";
};

// Config-file keys are spliced in as repeated flags, so every pipeline option
// takes the last occurrence.
CLI::Option* last_wins(CLI::Option* option) {
    return option->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void add_pipeline_flags(CLI::App* cmd, CommonOptions& opt) {
    last_wins(cmd->add_option("--k-order", opt.fit.k_order, "Form order k")->capture_default_str());
    last_wins(cmd->add_option("--knn", opt.fit.knn_count, "Neighborhood size K")->capture_default_str());
    last_wins(
        cmd->add_option("--gamma", opt.fit.gamma, "Local PCA energy threshold")->capture_default_str());
    last_wins(cmd->add_option("--m", opt.fit.m, "Embedding truncation level")->capture_default_str());
    last_wins(
        cmd->add_option("--tm", opt.fit.tm, "Diffusion time (positive integer)")->capture_default_str());
    last_wins(
        cmd->add_option("--t", opt.fit.t, "Kernel bandwidth (default: mean nearest-neighbor distance)")
            ->check(CLI::PositiveNumber));
    last_wins(cmd->add_option("--threads", opt.fit.threads, "Worker threads")->capture_default_str());
    last_wins(cmd->add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str());
    last_wins(cmd->add_option("--out-dir", opt.out_dir, "Artifact directory")->capture_default_str());
    static std::string config_doc;
    last_wins(cmd->add_option("--config", config_doc, "key=value config file (flags override it)"));
}

// Splices "--config FILE" into "--key value" pairs placed before the explicit
// flags, so command-line flags take precedence through the take-last policy.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> out;
    std::vector<std::string> from_file;
    bool expanded = false;
    for (std::size_t a = 0; a < args.size(); ++a) {
        std::string file;
        if (args[a] == "--config" && a + 1 < args.size()) {
            file = args[++a];
        } else if (args[a].rfind("--config=", 0) == 0) {
            file = args[a].substr(9);
        } else {
            out.push_back(args[a]);
            continue;
        }
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open config file '" + file + "'");
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("config line is not key=value: '" + line + "'");
            auto trim = [](std::string s) {
                const auto b = s.find_first_not_of(" \t\r");
                const auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            from_file.push_back("--" + trim(line.substr(0, eq)));
            from_file.push_back(trim(line.substr(eq + 1)));
        }
        expanded = true;
    }
    if (expanded && !out.empty()) {
        // keep the subcommand name first, then config-derived pairs
        out.insert(out.begin() + 1, from_file.begin(), from_file.end());
    }
    return out;
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

int cmd_generate(const std::string& name, int steps, const std::string& out_path) {
    hodgemaps::PointCloud cloud;
    if (name == "torus")
        cloud = hodgemaps::torus_grid(steps);
    else if (name == "sphere")
        cloud = hodgemaps::sphere_grid(steps);
    else if (name == "circle")
        cloud = hodgemaps::circle(steps);
    else
        throw CLI::ValidationError("unknown dataset '" + name + "' (expected torus|sphere|circle)");
    hodgemaps::write_points_csv(out_path, cloud);
    std::cout << cloud.rows() << " points -> " << out_path << "\n";
    return 0;
}

int cmd_fit(const std::string& points_path, const CommonOptions& opt, bool dump_operators, bool svg) {
    const hodgemaps::PointCloud cloud = hodgemaps::read_points_csv(points_path);
    const hodgemaps::FitResult fit = hodgemaps::run_fit(cloud, opt.fit);

    fs::create_directories(opt.out_dir);
    hodgemaps::write_frames(join(opt.out_dir, "frames.txt"), fit.frames);
    hodgemaps::write_eigenvalues_csv(join(opt.out_dir, "eigenvalues.csv"), fit.spec.eigenvalues);
    hodgemaps::write_embedding_csv(join(opt.out_dir, "embedding.csv"), fit.embedding);
    hodgemaps::write_diagonal_csv(join(opt.out_dir, "embedding_diag.csv"), fit.embedding);
    const int keep = std::min(fit.spec.count(), std::max(32, opt.fit.m + 1));
    hodgemaps::write_spectrum_cache(join(opt.out_dir, "spectrum.txt"), fit.spec, keep);
    if (dump_operators) {
        hodgemaps::write_operator(join(opt.out_dir, "ed_k.txt"), fit.ed_k);
        if (fit.ed_km1) hodgemaps::write_operator(join(opt.out_dir, "ed_km1.txt"), *fit.ed_km1);
    }
    if (svg) {
        std::vector<double> xs, ys;
        for (const auto& eta : fit.embedding.eta) {
            xs.push_back(eta(0, 0));
            ys.push_back(eta.rows() > 1 ? eta(1, 1) : 0.0);
        }
        hodgemaps::write_svg_scatter(join(opt.out_dir, "embedding.svg"), xs, ys,
                                     "normalized diagonal embedding");
    }

    json summary;
    summary["input"] = points_path;
    summary["points"] = cloud.rows();
    summary["ambient_dim"] = cloud.cols();
    summary["intrinsic_dim"] = fit.frames.d;
    summary["k_order"] = opt.fit.k_order;
    summary["knn"] = opt.fit.knn_count;
    summary["gamma"] = opt.fit.gamma;
    summary["t"] = fit.t_used;
    summary["m"] = fit.embedding.m;
    summary["tm"] = opt.fit.tm;
    const int head = std::min(fit.spec.count(), fit.embedding.m + 1);
    summary["eigenvalues_head"] = std::vector<double>(
        fit.spec.eigenvalues.data(), fit.spec.eigenvalues.data() + head);
    summary["truncation_bound"] = fit.bound;
    summary["wall_seconds"] = fit.seconds;
    std::ofstream(join(opt.out_dir, "summary.json")) << summary.dump(2) << "\n";

    std::cout << "d=" << fit.frames.d << " t=" << hodgemaps::format_double(fit.t_used)
              << " lambda_1=" << hodgemaps::format_double(fit.spec.eigenvalues(0))
              << " bound=" << hodgemaps::format_double(fit.bound) << " ("
              << hodgemaps::format_double(fit.seconds) << "s)\n";
    std::cout << "artifacts in " << opt.out_dir << "\n";
    return 0;
}

hodgemaps::HodgeSpectrum load_spectrum(const std::string& path, int tm) {
    hodgemaps::HodgeSpectrum spec = hodgemaps::read_spectrum_cache(path);
    if (tm > 0) spec.tm = tm;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge diffusion maps: spectral embeddings from Hodge-Laplacian matrices"};
    app.require_subcommand(1);

    CommonOptions opt;

    // generate
    std::string gen_name, gen_out = "points.csv";
    int gen_steps = 50;
    auto* gen = app.add_subcommand("generate", "Write a synthetic dataset as points CSV");
    gen->add_option("name", gen_name, "torus|sphere|circle")->required();
    gen->add_option("--steps,--n", gen_steps, "Grid steps per axis (point count for circle)")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "Output CSV path")->capture_default_str();

    // fit
    std::string fit_points;
    bool fit_dump = false, fit_svg = false;
    auto* fit = app.add_subcommand("fit", "Run the full pipeline and export artifacts");
    fit->add_option("points", fit_points, "Input points CSV")->required();
    add_pipeline_flags(fit, opt);
    fit->add_flag("--dump-operators", fit_dump, "Also serialize the ED block matrices");
    fit->add_flag("--svg", fit_svg, "Emit a quick-look SVG scatter of the diagonal embedding");

    // embed
    std::string emb_spectrum, emb_out = "embedding.csv";
    int emb_m = 3, emb_tm = 0;
    bool emb_diag = false;
    auto* emb = app.add_subcommand("embed", "Re-embed from a cached spectrum with new m/tm");
    emb->add_option("--spectrum", emb_spectrum, "spectrum.txt from a fit run")->required();
    emb->add_option("--m", emb_m, "Truncation level")->capture_default_str();
    emb->add_option("--tm", emb_tm, "Diffusion time override (0 keeps the cached value)");
    emb->add_option("--out", emb_out, "Output CSV path")->capture_default_str();
    emb->add_flag("--diagonal", emb_diag, "Write the diagonal CSV instead of the upper triangle");

    // affinity
    std::string aff_spectrum;
    int aff_i = 0, aff_j = 0, aff_tm = 0;
    auto* aff = app.add_subcommand("affinity", "Pairwise affinity query from a cached spectrum");
    aff->add_option("--spectrum", aff_spectrum)->required();
    aff->add_option("-i", aff_i, "First point index")->required();
    aff->add_option("-j", aff_j, "Second point index")->required();
    aff->add_option("--tm", aff_tm, "Diffusion time override");

    // distance
    std::string dist_spectrum;
    int dist_i = 0, dist_j = 0, dist_tm = 0, dist_m = 3;
    auto* dist = app.add_subcommand("distance", "Pairwise Hodge diffusion distance (squared)");
    dist->add_option("--spectrum", dist_spectrum)->required();
    dist->add_option("-i", dist_i)->required();
    dist->add_option("-j", dist_j)->required();
    dist->add_option("--m", dist_m, "Truncation level")->capture_default_str();
    dist->add_option("--tm", dist_tm, "Diffusion time override");

    // baseline
    std::string base_points;
    auto* base = app.add_subcommand("baseline", "Classical diffusion map embedding");
    base->add_option("points", base_points, "Input points CSV")->required();
    add_pipeline_flags(base, opt);
    last_wins(base->add_option("--epsilon", opt.epsilon, "Gaussian kernel scale (default 2 t^2)"));

    // eval
    std::string eval_suite;
    auto* ev = app.add_subcommand("eval", "Run a verification suite");
    ev->add_option("suite", eval_suite, "invariants|convergence|paper|all")->required();
    ev->add_option("--threads", opt.fit.threads, "Worker threads")->capture_default_str();
    ev->add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11's vector overload pops from the back
        app.parse(args);

        if (gen->parsed()) return cmd_generate(gen_name, gen_steps, gen_out);
        if (fit->parsed()) return cmd_fit(fit_points, opt, fit_dump, fit_svg);

        if (emb->parsed()) {
            const auto spec = load_spectrum(emb_spectrum, emb_tm);
            if (emb_m > spec.count())
                throw std::invalid_argument("embed: cached spectrum holds only " +
                                            std::to_string(spec.count()) + " eigenpairs");
            const auto embedding = hodgemaps::normalized_embed(spec, emb_m);
            if (emb_diag)
                hodgemaps::write_diagonal_csv(emb_out, embedding);
            else
                hodgemaps::write_embedding_csv(emb_out, embedding);
            std::cout << embedding.size() << " points, m=" << emb_m << ", tm=" << spec.tm << " -> "
                      << emb_out << "\n";
            return 0;
        }
        if (aff->parsed()) {
            const auto spec = load_spectrum(aff_spectrum, aff_tm);
            std::cout << "affinity=" << hodgemaps::format_double(hodgemaps::affinity(spec, aff_i, aff_j))
                      << " normalized="
                      << hodgemaps::format_double(hodgemaps::normalized_affinity(spec, aff_i, aff_j))
                      << "\n";
            return 0;
        }
        if (dist->parsed()) {
            const auto spec = load_spectrum(dist_spectrum, dist_tm);
            const auto embedding = hodgemaps::normalized_embed(spec, dist_m);
            std::cout << "distance2="
                      << hodgemaps::format_double(hodgemaps::hodge_distance(embedding, dist_i, dist_j))
                      << "\n";
            return 0;
        }
        if (base->parsed()) {
            const auto cloud = hodgemaps::read_points_csv(base_points);
            double epsilon = opt.epsilon;
            if (epsilon <= 0.0) {
                const double t = opt.fit.t > 0.0 ? opt.fit.t : hodgemaps::default_bandwidth(cloud);
                epsilon = 2.0 * t * t;
            }
            const auto dm = hodgemaps::diffusion_map(cloud, epsilon, opt.fit.m);
            fs::create_directories(opt.out_dir);
            const std::string out_path = join(opt.out_dir, "baseline_embedding.csv");
            std::ofstream out(out_path);
            out << "index";
            for (int l = 1; l <= opt.fit.m; ++l) out << ",psi" << l;
            out << "\n";
            for (Eigen::Index i = 0; i < dm.coordinates.rows(); ++i) {
                out << i;
                for (Eigen::Index l = 0; l < dm.coordinates.cols(); ++l)
                    out << ',' << hodgemaps::format_double(dm.coordinates(i, l));
                out << "\n";
            }
            std::cout << "epsilon=" << hodgemaps::format_double(epsilon) << " -> " << out_path << "\n";
            return 0;
        }
        if (ev->parsed()) {
            const auto results = hodgemaps::eval::run_suite(eval_suite, opt.fit.threads, opt.seed);
            hodgemaps::eval::print_results(results, std::cout);
            return hodgemaps::eval::all_passed(results) ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
