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

#include "qecnn/train.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qecnn {

std::string_view objective_name(Objective objective) {
    return objective == Objective::kCrossEntropy ? "cross-entropy" : "binary-cross-entropy";
}

Objective parse_objective(std::string_view name) {
    if (name == "cross-entropy") {
        return Objective::kCrossEntropy;
    }
    if (name == "binary-cross-entropy") {
        return Objective::kBinaryCrossEntropy;
    }
    throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
}

std::string_view weighting_name(RowWeighting weighting) {
    return weighting == RowWeighting::kUniform ? "uniform" : "count";
}

RowWeighting parse_weighting(std::string_view name) {
    if (name == "uniform") {
        return RowWeighting::kUniform;
    }
    if (name == "count") {
        return RowWeighting::kCount;
    }
    throw std::invalid_argument("unknown row weighting '" + std::string(name) + "'");
}

void TrainConfig::validate() const {
    if (!(learning_rate > 0) || batch_size == 0 || max_epochs == 0 || plateau_window == 0 ||
        !(plateau_tolerance >= 0) || !(init_scale > 0)) {
        throw std::invalid_argument("training configuration values must be positive");
    }
}

namespace {

double safe_log(double y) {
    return std::log(std::max(y, kLogFloor));
}

/// Forward pass keeping the hidden activations.
struct Activations {
    std::vector<double> hidden;
    std::vector<double> out;
};

void run_forward(const Network &net, const std::vector<double> &x, Activations &a) {
    a.hidden.resize(net.hidden_size);
    a.out.resize(net.output_size);
    for (size_t h = 0; h < net.hidden_size; h++) {
        const double *row = &net.w_hidden[h * net.input_size];
        double acc = net.b_hidden[h];
        for (size_t i = 0; i < net.input_size; i++) {
            acc += row[i] * x[i];
        }
        a.hidden[h] = activation(acc);
    }
    for (size_t o = 0; o < net.output_size; o++) {
        const double *row = &net.w_out[o * net.hidden_size];
        double acc = net.b_out[o];
        for (size_t h = 0; h < net.hidden_size; h++) {
            acc += row[h] * a.hidden[h];
        }
        a.out[o] = activation(acc);
    }
}

double row_loss(const std::vector<double> &y, const std::vector<double> &p, Objective objective) {
    double loss = 0;
    for (size_t k = 0; k < y.size(); k++) {
        loss -= p[k] * safe_log(y[k]);
        if (objective == Objective::kBinaryCrossEntropy) {
            loss -= (1 - p[k]) * safe_log(1 - y[k]);
        }
    }
    return loss;
}

void check_row(const Network &net, const TrainingRow &row) {
    if (row.input.size() != net.input_size || row.target.size() != net.output_size) {
        throw std::invalid_argument("training row shape does not match the network");
    }
}

/// Adds scale * d(row loss)/d(params) into grad; returns the row loss.
double accumulate_row(
    const Network &net, const TrainingRow &row, Objective objective, double scale, Activations &a,
    std::vector<double> &delta_hidden, Network &grad) {
    run_forward(net, row.input, a);
    double loss = row_loss(a.out, row.target, objective);

    // With act(z) = 1/(1+e^z), act'(z) = -act(z)(1-act(z)).
    std::fill(delta_hidden.begin(), delta_hidden.end(), 0.0);
    for (size_t o = 0; o < net.output_size; o++) {
        double y = a.out[o];
        double p = row.target[o];
        // Clamped logarithms contribute no gradient.
        double dz = y < kLogFloor ? 0.0 : p * (1 - y);
        if (objective == Objective::kBinaryCrossEntropy && 1 - y >= kLogFloor) {
            dz -= (1 - p) * y;
        }
        dz *= scale;
        grad.b_out[o] += dz;
        double *g_row = &grad.w_out[o * net.hidden_size];
        const double *w_row = &net.w_out[o * net.hidden_size];
        for (size_t h = 0; h < net.hidden_size; h++) {
            g_row[h] += dz * a.hidden[h];
            delta_hidden[h] += dz * w_row[h];
        }
    }
    for (size_t h = 0; h < net.hidden_size; h++) {
        double act = a.hidden[h];
        double dz = -delta_hidden[h] * act * (1 - act);
        if (dz == 0) {
            continue;
        }
        grad.b_hidden[h] += dz;
        double *g_row = &grad.w_hidden[h * net.input_size];
        for (size_t i = 0; i < net.input_size; i++) {
            g_row[i] += dz * row.input[i];
        }
    }
    return loss;
}

void zero(Network &grad, const Network &shape) {
    if (grad.input_size != shape.input_size || grad.hidden_size != shape.hidden_size ||
        grad.output_size != shape.output_size) {
        grad = Network(shape.input_size, shape.hidden_size, shape.output_size);
        return;
    }
    for (auto *v : {&grad.w_hidden, &grad.b_hidden, &grad.w_out, &grad.b_out}) {
        std::fill(v->begin(), v->end(), 0.0);
    }
}

double batch_gradient(
    const Network &net, std::span<const TrainingRow> rows, std::span<const size_t> order, Objective objective,
    Network &grad) {
    zero(grad, net);
    double total_weight = 0;
    for (size_t idx : order) {
        total_weight += rows[idx].weight;
    }
    if (!(total_weight > 0)) {
        return 0;
    }
    Activations a;
    std::vector<double> delta_hidden(net.hidden_size);
    double loss = 0;
    for (size_t idx : order) {
        const TrainingRow &row = rows[idx];
        check_row(net, row);
        double w = row.weight / total_weight;
        loss += w * accumulate_row(net, row, objective, w, a, delta_hidden, grad);
    }
    return loss;
}

}  // namespace

double cross_entropy(
    std::span<const std::vector<double>> targets, std::span<const std::vector<double>> inputs, const Network &net) {
    if (targets.size() != inputs.size()) {
        throw std::invalid_argument("cross_entropy needs one target per input");
    }
    if (targets.empty()) {
        return 0;
    }
    double total = 0;
    for (size_t r = 0; r < targets.size(); r++) {
        if (targets[r].size() != net.output_size) {
            throw std::invalid_argument("target distribution size does not match the network output");
        }
        std::vector<double> y = forward(net, inputs[r]);
        total += row_loss(y, targets[r], Objective::kCrossEntropy);
    }
    return total / static_cast<double>(targets.size());
}

double objective_loss(const Network &net, std::span<const TrainingRow> rows, Objective objective) {
    double total = 0;
    double total_weight = 0;
    Activations a;
    for (const auto &row : rows) {
        check_row(net, row);
        run_forward(net, row.input, a);
        total += row.weight * row_loss(a.out, row.target, objective);
        total_weight += row.weight;
    }
    return total_weight > 0 ? total / total_weight : 0.0;
}

double loss_and_gradient(
    const Network &net, std::span<const TrainingRow> rows, Objective objective, Network &grad) {
    std::vector<size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    return batch_gradient(net, rows, order, objective, grad);
}

TrainResult train_sgd(Network initial, std::span<const TrainingRow> rows, const TrainConfig &config) {
    config.validate();
    initial.validate();
    if (rows.empty()) {
        throw std::invalid_argument("cannot train on an empty training set");
    }
    TrainResult result;
    result.net = std::move(initial);
    Network &net = result.net;

    auto checked_loss = [&](size_t epoch) {
        double loss = objective_loss(net, rows, config.objective);
        if (!std::isfinite(loss)) {
            std::ostringstream msg;
            msg << "training diverged: loss is " << loss << " after epoch " << epoch << " (learning rate "
                << config.learning_rate << ", batch " << config.batch_size << ")";
            throw std::runtime_error(msg.str());
        }
        return loss;
    };
    result.loss_trace.push_back(checked_loss(0));
    // best[e] is the lowest loss seen up to epoch e; the network that reached
    // it is what gets returned, so minibatch noise cannot undo progress.
    std::vector<double> best{result.loss_trace[0]};
    Network best_net = net;

    Rng rng(config.seed, 0x5eed);
    std::vector<size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    Network grad(net.input_size, net.hidden_size, net.output_size);
    size_t batch = config.full_batch ? rows.size() : config.batch_size;

    for (size_t epoch = 1; epoch <= config.max_epochs; epoch++) {
        if (!config.full_batch) {
            for (size_t k = order.size(); k > 1; k--) {
                std::swap(order[k - 1], order[rng.below(k)]);
            }
        }
        for (size_t start = 0; start < order.size(); start += batch) {
            size_t end = std::min(order.size(), start + batch);
            batch_gradient(net, rows, std::span<const size_t>(order).subspan(start, end - start), config.objective,
                           grad);
            for (size_t k = 0; k < net.num_parameters(); k++) {
                net.parameter(k) -= config.learning_rate * grad.parameter(k);
            }
        }
        double loss = checked_loss(epoch);
        result.loss_trace.push_back(loss);
        result.epochs = epoch;
        if (loss < best.back()) {
            best.push_back(loss);
            best_net = net;
        } else {
            best.push_back(best.back());
        }
        if (epoch >= config.plateau_window) {
            double before = best[epoch - config.plateau_window];
            double now = best[epoch];
            if (before <= 0 || (before - now) / before < config.plateau_tolerance) {
                result.plateaued = true;
                break;
            }
        }
    }
    net = std::move(best_net);
    return result;
}

std::vector<TrainingRow> training_rows(const Dataset &dataset, RowWeighting weighting) {
    std::vector<TrainingRow> rows;
    rows.reserve(dataset.rows.size());
    for (const auto &[key, hist] : dataset.rows) {
        TrainingRow row;
        row.input = to_reals(key);
        row.target = target_distribution(dataset.scenario, hist);
        double total = hist[0] + hist[1] + hist[2] + hist[3];
        if (!(total > 0)) {
            continue;
        }
        row.weight = weighting == RowWeighting::kCount ? total : 1.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

Network initial_network(const Scenario &scenario, size_t hidden_size, const TrainConfig &config) {
    Rng rng(config.seed, 0x1417);
    return Network::random(scenario.input_size(), hidden_size, scenario.output_size(), rng, config.init_scale);
}

}  // namespace qecnn
