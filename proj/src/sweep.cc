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

#include "qecnn/sweep.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qecnn/model_io.h"

namespace qecnn {

std::string_view decoder_kind_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::kNeural:
            return "nn";
        case DecoderKind::kMwpm:
            return "mwpm";
        case DecoderKind::kPlut:
            return "plut";
        case DecoderKind::kSimpleOnly:
            return "simple-only";
    }
    throw std::logic_error("unknown decoder kind");
}

DecoderKind parse_decoder_kind(std::string_view name) {
    for (auto kind : {DecoderKind::kNeural, DecoderKind::kMwpm, DecoderKind::kPlut, DecoderKind::kSimpleOnly}) {
        if (decoder_kind_name(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown decoder '" + std::string(name) + "' (expected nn, mwpm, plut or simple-only)");
}

void RunConfig::validate() const {
    if (decoders.empty()) {
        throw std::invalid_argument("no decoders selected");
    }
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    for (double p : sweep) {
        if (!(p > 0 && p < 1)) {
            throw std::invalid_argument("sweep values must lie strictly between 0 and 1");
        }
    }
}

std::vector<std::unique_ptr<Decoder>> make_decoders(const RunConfig &config, const ExperimentSampler &sampler) {
    std::vector<std::unique_ptr<Decoder>> out;
    for (DecoderKind kind : config.decoders) {
        switch (kind) {
            case DecoderKind::kMwpm:
                out.push_back(std::make_unique<MwpmClassDecoder>(sampler.layout()));
                break;
            case DecoderKind::kSimpleOnly:
                out.push_back(std::make_unique<SimpleOnlyDecoder>());
                break;
            case DecoderKind::kNeural: {
                if (!config.model_path) {
                    throw std::runtime_error("decoder 'nn' needs a model file (--model-file)");
                }
                ModelFile model = load_model(*config.model_path);
                if (!(model.scenario == config.scenario)) {
                    throw std::runtime_error(
                        "model file is for scenario " + model.scenario.name() + ", not " + config.scenario.name());
                }
                out.push_back(std::make_unique<NeuralDecoder>(model.scenario, std::move(model.net)));
                break;
            }
            case DecoderKind::kPlut: {
                if (!config.dataset_path) {
                    throw std::runtime_error("decoder 'plut' needs a dataset file (--dataset)");
                }
                Dataset dataset = load_dataset(*config.dataset_path);
                if (!(dataset.scenario == config.scenario)) {
                    throw std::runtime_error(
                        "dataset is for scenario " + dataset.scenario.name() + ", not " + config.scenario.name());
                }
                out.push_back(std::make_unique<PlutRecordDecoder>(plut_build(dataset)));
                break;
            }
        }
    }
    return out;
}

void write_results(
    std::ostream &out, const RunConfig &config, const std::vector<BenchmarkPoint> &rows, const std::string &timestamp) {
    out << "# qecnn-results 1\n";
    out << "# scenario=" << config.scenario.name() << " model=" << model_name(config.scenario.model)
        << " distance=" << config.scenario.distance << " trials=" << config.trials << " seed=" << config.seed
        << " decoders=";
    for (size_t k = 0; k < config.decoders.size(); k++) {
        out << (k ? "," : "") << decoder_kind_name(config.decoders[k]);
    }
    out << "\n# generated=" << timestamp << "\n";
    out << "decoder,p,trials,failures,rate,ci_low,ci_high\n";
    out << std::setprecision(12);
    for (const auto &r : rows) {
        out << r.decoder << ',' << r.p << ',' << r.trials << ',' << r.failures << ',' << r.rate << ',' << r.ci_low
            << ',' << r.ci_high << '\n';
    }
}

std::vector<BenchmarkPoint> read_results(std::istream &in) {
    std::vector<BenchmarkPoint> rows;
    std::string line;
    bool header_seen = false;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != "decoder,p,trials,failures,rate,ci_low,ci_high") {
                throw std::runtime_error("results file has an unexpected column header");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 7) {
            throw std::runtime_error("malformed results row at line " + std::to_string(line_no));
        }
        BenchmarkPoint r;
        try {
            r.decoder = cells[0];
            r.p = std::stod(cells[1]);
            r.trials = std::stoull(cells[2]);
            r.failures = std::stoull(cells[3]);
            r.rate = std::stod(cells[4]);
            r.ci_low = std::stod(cells[5]);
            r.ci_high = std::stod(cells[6]);
        } catch (const std::exception &) {
            throw std::runtime_error("malformed number in results row at line " + std::to_string(line_no));
        }
        rows.push_back(std::move(r));
    }
    if (!header_seen) {
        throw std::runtime_error("results file has no column header");
    }
    return rows;
}

std::vector<BenchmarkPoint> load_results(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open results file " + path.string());
    }
    return read_results(in);
}

std::vector<BenchmarkPoint> sweep_and_compare(const RunConfig &config) {
    config.validate();
    ExperimentSampler sampler(config.scenario.distance);
    auto decoders = make_decoders(config, sampler);
    std::vector<const Decoder *> views;
    for (const auto &d : decoders) {
        views.push_back(d.get());
    }
    std::vector<BenchmarkPoint> rows;
    for (size_t k = 0; k < config.sweep.size(); k++) {
        EvaluationOptions options;
        options.trials = config.trials;
        options.seed = splitmix64(config.seed + k);
        options.threads = config.threads;
        Evaluation eval = evaluate_decoders(sampler, views, NoiseModel(config.scenario.model, config.sweep[k]), options);
        rows.insert(rows.end(), eval.points.begin(), eval.points.end());
    }
    if (!config.out.empty()) {
        std::ofstream out(config.out);
        if (!out) {
            throw std::runtime_error("cannot write results file " + config.out.string());
        }
        write_results(out, config, rows, utc_timestamp());
    }
    return rows;
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

void write_svg_plot(std::ostream &out, const std::vector<BenchmarkPoint> &rows, const std::string &title) {
    static constexpr const char *colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"};
    constexpr double width = 640, height = 480;
    constexpr double left = 80, right = 150, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    std::map<std::string, std::vector<const BenchmarkPoint *>> series;
    std::vector<std::string> order;
    double px_min = 1, px_max = 0, py_min = 1, py_max = 0;
    for (const auto &r : rows) {
        if (!series.contains(r.decoder)) {
            order.push_back(r.decoder);
        }
        series[r.decoder].push_back(&r);
        px_min = std::min(px_min, r.p);
        px_max = std::max(px_max, r.p);
        if (r.rate > 0) {
            py_min = std::min(py_min, r.ci_low > 0 ? r.ci_low : r.rate);
            py_max = std::max(py_max, r.ci_high);
        }
    }
    if (px_max <= 0) {
        px_min = 1e-3;
        px_max = 1;
    }
    if (py_max <= 0) {
        py_min = 1e-6;
        py_max = 1;
    }
    double lx0 = std::floor(std::log10(px_min)), lx1 = std::ceil(std::log10(px_max));
    double ly0 = std::floor(std::log10(py_min)), ly1 = std::ceil(std::log10(py_max));
    if (lx1 <= lx0) lx1 = lx0 + 1;
    if (ly1 <= ly0) ly1 = ly0 + 1;
    auto sx = [&](double p) { return left + (std::log10(p) - lx0) / (lx1 - lx0) * plot_w; };
    auto sy = [&](double v) {
        double lv = std::log10(std::max(v, std::pow(10.0, ly0)));
        return top + (ly1 - lv) / (ly1 - ly0) * plot_h;
    };

    out << std::setprecision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << title << "</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double e = lx0; e <= lx1; e++) {
        double x = sx(std::pow(10.0, e));
        out << "<line x1=\"" << x << "\" y1=\"" << top << "\" x2=\"" << x << "\" y2=\"" << top + plot_h
            << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"12\">1e" << e << "</text>\n";
    }
    for (double e = ly0; e <= ly1; e++) {
        double y = sy(std::pow(10.0, e));
        out << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + plot_w << "\" y2=\"" << y
            << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << left - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\" "
            << "font-family=\"sans-serif\" font-size=\"12\">1e" << e << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 16 << "\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">physical error rate p</text>\n";
    out << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"14\" transform=\"rotate(-90 20 " << top + plot_h / 2 << ")\">logical error rate</text>\n";

    for (size_t s = 0; s < order.size(); s++) {
        const char *color = colors[s % 5];
        auto points = series[order[s]];
        std::sort(points.begin(), points.end(), [](auto *a, auto *b) { return a->p < b->p; });
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto *r : points) {
            if (r->rate > 0) {
                out << sx(r->p) << ',' << sy(r->rate) << ' ';
            }
        }
        out << "\"/>\n";
        for (const auto *r : points) {
            double x = sx(r->p);
            out << "<line x1=\"" << x << "\" y1=\"" << sy(r->ci_low) << "\" x2=\"" << x << "\" y2=\""
                << sy(r->ci_high) << "\" stroke=\"" << color << "\"/>\n";
            if (r->rate > 0) {
                out << "<circle cx=\"" << x << "\" cy=\"" << sy(r->rate) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            }
        }
        double ly = top + 20 + 20 * s;
        out << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 36
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + plot_w + 42 << "\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" "
            << "font-size=\"12\">" << order[s] << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace qecnn
