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

#include "qecnn/model_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qecnn {

using nlohmann::json;

namespace {

json class_order(size_t output_size) {
    if (output_size == 2) {
        return json::array({"no-flip", "flip"});
    }
    return json::array({"I", "X", "Z", "Y"});
}

}  // namespace

std::string model_to_json(const ModelFile &model) {
    const Network &net = model.net;
    const TrainConfig &c = model.config;
    json j;
    j["format"] = "qecnn-model";
    j["version"] = 1;
    j["scenario"] = {
        {"name", model.scenario.name()},
        {"model", std::string(model_name(model.scenario.model))},
        {"distance", model.scenario.distance},
    };
    j["layers"] = {{"input", net.input_size}, {"hidden", net.hidden_size}, {"output", net.output_size}};
    j["class_order"] = class_order(net.output_size);
    j["activation"] = "1/(1+exp(x))";
    j["training"] = {
        {"learning_rate", c.learning_rate},
        {"batch_size", c.batch_size},
        {"max_epochs", c.max_epochs},
        {"plateau_window", c.plateau_window},
        {"plateau_tolerance", c.plateau_tolerance},
        {"init_scale", c.init_scale},
        {"seed", c.seed},
        {"objective", std::string(objective_name(c.objective))},
        {"weighting", std::string(weighting_name(c.weighting))},
        {"full_batch", c.full_batch},
        {"epochs_run", model.epochs_run},
        {"final_loss", model.final_loss},
        {"dataset_p", model.dataset_p},
        {"dataset_samples", model.dataset_samples},
    };
    j["w_hidden"] = net.w_hidden;
    j["b_hidden"] = net.b_hidden;
    j["w_out"] = net.w_out;
    j["b_out"] = net.b_out;
    return j.dump(1);
}

ModelFile model_from_json(const std::string &text) {
    ModelFile model;
    try {
        json j = json::parse(text);
        if (j.at("format") != "qecnn-model" || j.at("version") != 1) {
            throw std::runtime_error("not a qecnn model file (format/version)");
        }
        model.scenario.model = parse_model(j.at("scenario").at("model").get<std::string>());
        model.scenario.distance = j.at("scenario").at("distance").get<int>();

        Network &net = model.net;
        net.input_size = j.at("layers").at("input").get<size_t>();
        net.hidden_size = j.at("layers").at("hidden").get<size_t>();
        net.output_size = j.at("layers").at("output").get<size_t>();
        net.w_hidden = j.at("w_hidden").get<std::vector<double>>();
        net.b_hidden = j.at("b_hidden").get<std::vector<double>>();
        net.w_out = j.at("w_out").get<std::vector<double>>();
        net.b_out = j.at("b_out").get<std::vector<double>>();
        net.validate();
        if (j.at("class_order") != class_order(net.output_size)) {
            throw std::runtime_error("model class order does not match its output layer");
        }

        const json &t = j.at("training");
        TrainConfig &c = model.config;
        c.learning_rate = t.at("learning_rate").get<double>();
        c.batch_size = t.at("batch_size").get<size_t>();
        c.max_epochs = t.at("max_epochs").get<size_t>();
        c.plateau_window = t.at("plateau_window").get<size_t>();
        c.plateau_tolerance = t.at("plateau_tolerance").get<double>();
        c.init_scale = t.at("init_scale").get<double>();
        c.seed = t.at("seed").get<uint64_t>();
        c.objective = parse_objective(t.at("objective").get<std::string>());
        c.weighting = parse_weighting(t.at("weighting").get<std::string>());
        c.full_batch = t.at("full_batch").get<bool>();
        model.epochs_run = t.at("epochs_run").get<size_t>();
        model.final_loss = t.at("final_loss").get<double>();
        model.dataset_p = t.at("dataset_p").get<double>();
        model.dataset_samples = t.at("dataset_samples").get<uint64_t>();
    } catch (const json::exception &e) {
        throw std::runtime_error(std::string("malformed model file: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(std::string("invalid model file: ") + e.what());
    }
    if (model.net.input_size != model.scenario.input_size() || model.net.output_size != model.scenario.output_size()) {
        throw std::runtime_error("model layer sizes do not match scenario " + model.scenario.name());
    }
    return model;
}

void save_model(const std::filesystem::path &path, const ModelFile &model) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write model file " + path.string());
    }
    out << model_to_json(model) << "\n";
}

ModelFile load_model(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open model file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return model_from_json(ss.str());
}

}  // namespace qecnn
