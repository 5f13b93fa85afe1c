// Copyright 2026 The qecnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 runtime or
// data error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qecnn/benchmark.h"
#include "qecnn/latency.h"
#include "qecnn/model_io.h"
#include "qecnn/sweep.h"
#include "qecnn/train.h"

namespace {

using namespace qecnn;

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GlobalFlags {
    int distance = 3;
    std::string model = "depol";
    std::vector<double> p;
    uint64_t trials = 100'000;
    uint64_t seed = 1;
    std::string out;
    bool exhaustive = false;
};

Scenario scenario_of(const GlobalFlags &g) {
    Scenario s{parse_model(g.model), g.distance};
    build_layout(g.distance);  // rejects bad distances early
    return s;
}

double single_p(const GlobalFlags &g) {
    if (g.p.size() != 1) {
        throw UsageError("this subcommand needs exactly one --p value");
    }
    return g.p.front();
}

std::ostream &open_out(const GlobalFlags &g, std::ofstream &file) {
    if (g.out.empty() || g.out == "-") {
        return std::cout;
    }
    file.open(g.out);
    if (!file) {
        throw std::runtime_error("cannot write " + g.out);
    }
    return file;
}

int cmd_layout(const GlobalFlags &g) {
    CodeLayout layout = build_layout(g.distance);
    std::ofstream file;
    std::ostream &out = open_out(g, file);
    out << "distance " << layout.distance << ", " << layout.n_data << " data qubits, " << layout.checks_per_type()
        << " Z checks, " << layout.checks_per_type() << " X checks\n";
    out << layout.diagram();
    auto dump = [&](const char *label, const std::vector<Stabiliser> &list) {
        for (size_t k = 0; k < list.size(); k++) {
            out << label << k << " (" << list[k].row << "," << list[k].col << "):";
            for (size_t q : list[k].support) {
                out << ' ' << q;
            }
            out << '\n';
        }
    };
    dump("Z", layout.z_stabilisers);
    dump("X", layout.x_stabilisers);
    out << "logical X: " << layout.logical_x.str() << "\nlogical Z: " << layout.logical_z.str() << '\n';
    return 0;
}

int cmd_calibrate(const GlobalFlags &g, CalibrationOptions options) {
    Scenario s = scenario_of(g);
    options.trials = g.trials;
    options.seed = g.seed;
    ExperimentSampler sampler(s.distance);
    CalibrationResult r = calibrate_training_rate(sampler, s.model, options);
    std::ofstream file;
    std::ostream &out = open_out(g, file);
    out << std::setprecision(10);
    for (const auto &probe : r.probes) {
        out << "probe p=" << probe.p << " mwpm_rate=" << probe.rate << '\n';
    }
    out << "p*=" << r.p << " mwpm_rate=" << r.rate << '\n';
    return 0;
}

int cmd_generate(const GlobalFlags &g, bool auto_calibrate) {
    Scenario s = scenario_of(g);
    if (g.out.empty()) {
        throw UsageError("generate needs --out");
    }
    ExperimentSampler sampler(s.distance);
    double p;
    if (g.p.empty() && auto_calibrate) {
        CalibrationOptions options;
        options.seed = g.seed;
        p = calibrate_training_rate(sampler, s.model, options).p;
        std::cerr << "calibrated p*=" << p << '\n';
    } else {
        p = single_p(g);
    }
    Dataset dataset = g.exhaustive ? exhaustive_dataset(sampler, s.model, p, g.trials)
                                   : generate_dataset(sampler, s.model, p, g.trials, g.seed);
    save_dataset(g.out, dataset);
    std::cout << "wrote " << dataset.unique_inputs() << " unique inputs (" << dataset.histogram_total()
              << " samples) to " << g.out << '\n';
    return 0;
}

struct TrainFlags {
    std::string dataset;
    size_t hidden = 0;
    TrainConfig config;
    std::string objective = "binary-cross-entropy";
    std::string weighting = "uniform";
};

int cmd_train(const GlobalFlags &g, TrainFlags t) {
    if (t.dataset.empty() || g.out.empty()) {
        throw UsageError("train needs --dataset and --out");
    }
    t.config.seed = g.seed;
    t.config.objective = parse_objective(t.objective);
    t.config.weighting = parse_weighting(t.weighting);
    t.config.validate();
    Dataset dataset = load_dataset(t.dataset);
    size_t hidden = t.hidden ? t.hidden : dataset.scenario.default_hidden_size();
    auto rows = training_rows(dataset, t.config.weighting);
    TrainResult result = train_sgd(initial_network(dataset.scenario, hidden, t.config), rows, t.config);

    ModelFile model;
    model.scenario = dataset.scenario;
    model.net = std::move(result.net);
    model.config = t.config;
    model.epochs_run = result.epochs;
    model.final_loss = result.loss_trace.back();
    model.dataset_p = dataset.sampling_p;
    model.dataset_samples = dataset.total_samples;
    save_model(g.out, model);

    PlutDecoder plut = plut_build(dataset);
    size_t agree = 0;
    for (const auto &[input, hist] : dataset.rows) {
        agree += classify(model.net, input) == plut.decode(input);
    }
    std::cout << "trained " << model.scenario.name() << " " << model.net.input_size << "-" << hidden << "-"
              << model.net.output_size << " for " << result.epochs << " epochs, loss " << model.final_loss
              << (result.plateaued ? " (plateau)" : "") << ", matches table on " << agree << "/"
              << dataset.unique_inputs() << " inputs\n";
    return 0;
}

struct SweepFlags {
    std::vector<std::string> decoders;
    std::optional<std::string> model_file;
    std::optional<std::string> dataset;
    size_t threads = 0;
};

int cmd_sweep(const GlobalFlags &g, const SweepFlags &f, bool single_decoder) {
    RunConfig config;
    config.scenario = scenario_of(g);
    if (single_decoder && f.decoders.size() != 1) {
        throw UsageError("bench takes exactly one --decoder");
    }
    for (const auto &name : f.decoders) {
        config.decoders.push_back(parse_decoder_kind(name));
    }
    config.sweep = g.p;
    config.trials = g.trials;
    config.seed = g.seed;
    config.threads = f.threads;
    if (f.model_file) config.model_path = *f.model_file;
    if (f.dataset) config.dataset_path = *f.dataset;
    if (g.out.empty()) {
        throw UsageError("needs --out for the results file");
    }
    config.out = g.out;
    try {
        config.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    auto rows = sweep_and_compare(config);
    std::cout << std::setprecision(6);
    for (const auto &r : rows) {
        std::cout << std::setw(12) << r.decoder << "  p=" << r.p << "  rate=" << r.rate << "  [" << r.ci_low << ", "
                  << r.ci_high << "]  " << r.failures << "/" << r.trials << '\n';
    }
    return 0;
}

int cmd_coverage(const GlobalFlags &g, const std::string &path) {
    if (path.empty()) {
        throw UsageError("coverage needs --dataset");
    }
    Dataset dataset = load_dataset(path);
    Coverage c = coverage_stats(dataset);
    std::cout << "scenario " << dataset.scenario.name() << ": " << c.unique_inputs << " unique inputs of 2^"
              << c.input_bits;
    if (c.fraction) {
        std::cout << " (" << std::setprecision(6) << 100 * *c.fraction << "%)";
    }
    std::cout << '\n';
    (void)g;
    return 0;
}

int cmd_latency(const GlobalFlags &g, size_t inputs, size_t hidden) {
    Scenario s = scenario_of(g);
    if (!inputs) inputs = s.input_size();
    if (!hidden) hidden = s.default_hidden_size();
    std::cout << "inputs " << inputs << ", hidden " << hidden << ": " << latency_steps({inputs, hidden})
              << " serial steps\n";
    return 0;
}

int cmd_plot(const GlobalFlags &g, const std::string &results, std::string title) {
    if (results.empty() || g.out.empty()) {
        throw UsageError("plot needs --results and --out");
    }
    auto rows = load_results(results);
    std::ofstream out(g.out);
    if (!out) {
        throw std::runtime_error("cannot write " + g.out);
    }
    if (title.empty()) {
        title = results;
    }
    write_svg_plot(out, rows, title);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Neural-network and matching decoders for the rotated surface code"};
    app.require_subcommand(1);
    GlobalFlags g;
    auto add_globals = [&](CLI::App *cmd) {
        cmd->add_option("--distance,-d", g.distance, "Code distance (odd, >= 3)")->capture_default_str();
        cmd->add_option("--model", g.model, "Noise model: cc, depol, cc-meas, depol-meas, circuit")
            ->capture_default_str();
        cmd->add_option("--p", g.p, "Physical error rate(s)")->delimiter(',');
        cmd->add_option("--trials", g.trials, "Trials per point, or samples for generate")->capture_default_str();
        cmd->add_option("--seed", g.seed, "Base RNG seed")->capture_default_str();
        cmd->add_option("--out,-o", g.out, "Output path");
        cmd->add_flag("--exhaustive", g.exhaustive, "Enumerate every error instead of sampling");
    };

    auto *layout = app.add_subcommand("layout", "Print the code geometry");
    add_globals(layout);

    CalibrationOptions calib;
    auto *calibrate = app.add_subcommand("calibrate", "Find p where MWPM fails about 25% of the time");
    add_globals(calibrate);
    calibrate->add_option("--p-low", calib.p_low)->capture_default_str();
    calibrate->add_option("--p-high", calib.p_high)->capture_default_str();
    calibrate->add_option("--target", calib.target)->capture_default_str();
    calibrate->add_option("--tolerance", calib.tolerance)->capture_default_str();

    bool auto_calibrate = false;
    auto *generate = app.add_subcommand("generate", "Build a training dataset");
    add_globals(generate);
    generate->add_flag("--calibrate", auto_calibrate, "Calibrate p first when --p is absent");

    TrainFlags tf;
    auto *train = app.add_subcommand("train", "Train a network on a dataset");
    add_globals(train);
    train->add_option("--dataset", tf.dataset, "Dataset file");
    train->add_option("--hidden", tf.hidden, "Hidden layer width (default: per-scenario)");
    train->add_option("--lr", tf.config.learning_rate)->capture_default_str();
    train->add_option("--epochs", tf.config.max_epochs)->capture_default_str();
    train->add_option("--batch", tf.config.batch_size)->capture_default_str();
    train->add_option("--plateau-window", tf.config.plateau_window)->capture_default_str();
    train->add_option("--plateau-tolerance", tf.config.plateau_tolerance)->capture_default_str();
    train->add_option("--init-scale", tf.config.init_scale)->capture_default_str();
    train->add_option("--objective", tf.objective, "binary-cross-entropy or cross-entropy")->capture_default_str();
    train->add_option("--weighting", tf.weighting, "uniform or count")->capture_default_str();
    train->add_flag("--full-batch", tf.config.full_batch);

    SweepFlags bench_flags;
    auto *bench = app.add_subcommand("bench", "Benchmark one decoder over a p sweep");
    add_globals(bench);
    bench->add_option("--decoder", bench_flags.decoders, "nn, mwpm, plut or simple-only")->required();
    bench->add_option("--model-file", bench_flags.model_file);
    bench->add_option("--dataset", bench_flags.dataset);
    bench->add_option("--threads", bench_flags.threads);

    SweepFlags compare_flags;
    compare_flags.decoders = {"nn", "mwpm", "plut"};
    auto *compare = app.add_subcommand("compare", "Benchmark several decoders on shared experiments");
    add_globals(compare);
    compare->add_option("--decoders", compare_flags.decoders)->delimiter(',')->capture_default_str();
    compare->add_option("--model-file", compare_flags.model_file);
    compare->add_option("--dataset", compare_flags.dataset);
    compare->add_option("--threads", compare_flags.threads);

    std::string coverage_path;
    auto *coverage = app.add_subcommand("coverage", "Fraction of the input space present in a dataset");
    add_globals(coverage);
    coverage->add_option("--dataset", coverage_path);

    size_t lat_inputs = 0, lat_hidden = 0;
    auto *latency = app.add_subcommand("latency", "Serial step count of the hardware inference model");
    add_globals(latency);
    latency->add_option("--inputs", lat_inputs);
    latency->add_option("--hidden", lat_hidden);

    std::string plot_results, plot_title;
    auto *plot = app.add_subcommand("plot", "Render a results file as SVG");
    add_globals(plot);
    plot->add_option("--results", plot_results);
    plot->add_option("--title", plot_title);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        scenario_of(g);  // every subcommand rejects a bad --model or --distance
        if (*layout) return cmd_layout(g);
        if (*calibrate) return cmd_calibrate(g, calib);
        if (*generate) return cmd_generate(g, auto_calibrate);
        if (*train) return cmd_train(g, tf);
        if (*bench) return cmd_sweep(g, bench_flags, true);
        if (*compare) return cmd_sweep(g, compare_flags, false);
        if (*coverage) return cmd_coverage(g, coverage_path);
        if (*latency) return cmd_latency(g, lat_inputs, lat_hidden);
        if (*plot) return cmd_plot(g, plot_results, plot_title);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
