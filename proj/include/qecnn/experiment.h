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

#ifndef QECNN_EXPERIMENT_H
#define QECNN_EXPERIMENT_H

#include <memory>
#include <string>

#include "qecnn/matching.h"
#include "qecnn/network.h"
#include "qecnn/noise.h"
#include "qecnn/plut.h"
#include "qecnn/pure_error.h"
#include "qecnn/scenario.h"

namespace qecnn {

/// Everything needed to sample and label experiments at one distance.
class ExperimentSampler {
   public:
    explicit ExperimentSampler(int distance);

    /// One experiment under any of the five models.
    Experiment sample(const NoiseModel &model, Rng &rng) const;
    /// Ground-truth class of the experiment's cumulative error.
    LogicalClass label(const Experiment &experiment) const {
        return label_of_error(layout_, table_, experiment.cumulative_error);
    }

    const CodeLayout &layout() const {
        return layout_;
    }
    const PureErrorTable &table() const {
        return table_;
    }
    const CircuitSchedule &schedule() const {
        return schedule_;
    }

   private:
    CodeLayout layout_;
    PureErrorTable table_;
    CircuitSchedule schedule_;
};

/// A decoder maps a syndrome record to the class it believes the residual of
/// the pure-error correction has. decode() must be safe to call concurrently.
class Decoder {
   public:
    virtual ~Decoder() = default;
    virtual std::string name() const = 0;
    virtual LogicalClass decode(const SyndromeRecord &record) const = 0;
};

class MwpmClassDecoder final : public Decoder {
   public:
    explicit MwpmClassDecoder(const CodeLayout &layout) : mwpm_(layout) {
    }
    std::string name() const override {
        return "mwpm";
    }
    LogicalClass decode(const SyndromeRecord &record) const override {
        return mwpm_.decode(record).logical;
    }

   private:
    MwpmDecoder mwpm_;
};

class PlutRecordDecoder final : public Decoder {
   public:
    explicit PlutRecordDecoder(PlutDecoder plut) : plut_(std::move(plut)) {
    }
    std::string name() const override {
        return "plut";
    }
    LogicalClass decode(const SyndromeRecord &record) const override {
        return plut_.decode(flatten(plut_.scenario(), record));
    }
    const PlutDecoder &table() const {
        return plut_;
    }

   private:
    PlutDecoder plut_;
};

class NeuralDecoder final : public Decoder {
   public:
    /// Throws std::invalid_argument if the network shape does not fit the scenario.
    NeuralDecoder(Scenario scenario, Network net);
    std::string name() const override {
        return "nn";
    }
    LogicalClass decode(const SyndromeRecord &record) const override {
        return classify(net_, flatten(scenario_, record));
    }
    const Network &network() const {
        return net_;
    }

   private:
    Scenario scenario_;
    Network net_;
};

/// The pure-error correction alone, i.e. always class I.
class SimpleOnlyDecoder final : public Decoder {
   public:
    std::string name() const override {
        return "simple-only";
    }
    LogicalClass decode(const SyndromeRecord &) const override {
        return LogicalClass::I;
    }
};

}  // namespace qecnn

#endif
