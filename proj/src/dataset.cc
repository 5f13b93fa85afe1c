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

#include "qecnn/dataset.h"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qecnn {

void Dataset::add(const BitVector &input, LogicalClass label, double weight) {
    if (input.size() != scenario.input_size()) {
        throw std::invalid_argument(
            "dataset input has " + std::to_string(input.size()) + " bits, scenario " + scenario.name() + " expects " +
            std::to_string(scenario.input_size()));
    }
    rows[input][class_index(label)] += weight;
}

double Dataset::histogram_total() const {
    double total = 0;
    for (const auto &[key, hist] : rows) {
        for (double v : hist) {
            total += v;
        }
    }
    return total;
}

void write_dataset(std::ostream &out, const Dataset &dataset) {
    out << "# qecnn-dataset 1\n";
    out << "# scenario=" << dataset.scenario.name() << " model=" << model_name(dataset.scenario.model)
        << " distance=" << dataset.scenario.distance << " p=" << std::setprecision(17) << dataset.sampling_p
        << " samples=" << dataset.total_samples << " seed=" << dataset.seed
        << " mode=" << (dataset.exhaustive ? "exhaustive" : "sampled") << " inputs=" << dataset.scenario.input_size()
        << "\n";
    for (const auto &[key, hist] : dataset.rows) {
        out << key.to_hex();
        for (double v : hist) {
            out << ' ' << v;
        }
        out << '\n';
    }
}

namespace {

std::unordered_map<std::string, std::string> parse_fields(const std::string &line) {
    std::unordered_map<std::string, std::string> fields;
    std::istringstream ss(line.substr(1));
    std::string token;
    while (ss >> token) {
        auto eq = token.find('=');
        if (eq != std::string::npos) {
            fields[token.substr(0, eq)] = token.substr(eq + 1);
        }
    }
    return fields;
}

const std::string &require(const std::unordered_map<std::string, std::string> &fields, const std::string &key) {
    auto it = fields.find(key);
    if (it == fields.end()) {
        throw std::runtime_error("dataset header is missing field '" + key + "'");
    }
    return it->second;
}

}  // namespace

Dataset read_dataset(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("# qecnn-dataset", 0) != 0) {
        throw std::runtime_error("not a qecnn dataset (missing '# qecnn-dataset' header)");
    }
    if (!std::getline(in, line) || line.empty() || line[0] != '#') {
        throw std::runtime_error("dataset is missing its metadata line");
    }
    auto fields = parse_fields(line);
    Dataset dataset;
    try {
        dataset.scenario.model = parse_model(require(fields, "model"));
        dataset.scenario.distance = std::stoi(require(fields, "distance"));
        dataset.sampling_p = std::stod(require(fields, "p"));
        dataset.total_samples = std::stoull(require(fields, "samples"));
        dataset.seed = std::stoull(require(fields, "seed"));
        dataset.exhaustive = require(fields, "mode") == "exhaustive";
        build_layout(dataset.scenario.distance);
        if (std::stoull(require(fields, "inputs")) != dataset.scenario.input_size()) {
            throw std::runtime_error("dataset input width does not match its scenario");
        }
    } catch (const std::logic_error &e) {
        // std::stoi and friends, parse_model and build_layout report bad
        // values as logic errors; a bad file is a data error.
        throw std::runtime_error(std::string("malformed dataset header: ") + e.what());
    }
    size_t bits = dataset.scenario.input_size();
    size_t line_no = 2;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ss(line);
        std::string hex;
        ClassHistogram hist{};
        if (!(ss >> hex >> hist[0] >> hist[1] >> hist[2] >> hist[3])) {
            throw std::runtime_error("malformed dataset row at line " + std::to_string(line_no));
        }
        BitVector key;
        try {
            key = BitVector::from_hex(hex, bits);
        } catch (const std::invalid_argument &e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
        auto &row = dataset.rows[key];
        for (size_t c = 0; c < 4; c++) {
            row[c] += hist[c];
        }
    }
    return dataset;
}

void save_dataset(const std::filesystem::path &path, const Dataset &dataset) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write dataset file " + path.string());
    }
    write_dataset(out, dataset);
}

Dataset load_dataset(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file " + path.string());
    }
    return read_dataset(in);
}

}  // namespace qecnn
