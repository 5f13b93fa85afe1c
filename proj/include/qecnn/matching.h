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

#ifndef QECNN_MATCHING_H
#define QECNN_MATCHING_H

#include <vector>

#include "qecnn/layout.h"
#include "qecnn/noise.h"
#include "qecnn/pure_error.h"

namespace qecnn {

/// Shortest data-qubit chains between checks of one type, and from each
/// check to that type's boundary. Nodes are checks; each data qubit is an
/// edge between the (one or two) checks of this type that contain it.
struct MatchingGraph {
    CheckType type = CheckType::Z;
    size_t num_checks = 0;
    std::vector<int> distance;           // num_checks x num_checks, row-major
    std::vector<int> boundary_distance;  // per check
    std::vector<BitVector> path;         // data qubits of a shortest chain, row-major
    std::vector<BitVector> boundary_path;

    int dist(size_t a, size_t b) const {
        return distance[a * num_checks + b];
    }
    const BitVector &chain(size_t a, size_t b) const {
        return path[a * num_checks + b];
    }
};

MatchingGraph build_matching_graph(const CodeLayout &layout, CheckType type);

struct Defect {
    size_t check;
    int round;
};

/// Defects of one check type: set bits of the single QEC round, or set bits
/// of consecutive-round differences for FT records (round 0 against zero).
/// Pair weight is chain length plus round separation; boundary weight is
/// the spatial chain length only.
struct DefectGraph {
    CheckType type = CheckType::Z;
    std::vector<Defect> defects;
    std::vector<int> pair_weights;  // k x k, row-major, symmetric
    std::vector<int> boundary_weights;

    size_t size() const {
        return defects.size();
    }
    int pair_weight(size_t a, size_t b) const {
        return pair_weights[a * defects.size() + b];
    }
};

DefectGraph build_defect_graph(const MatchingGraph &graph, const SyndromeRecord &record);
DefectGraph build_defect_graph(const CodeLayout &layout, const SyndromeRecord &record, CheckType type);

inline constexpr int kBoundary = -1;

struct Matching {
    std::vector<int> partner;  // defect index, or kBoundary
    int weight = 0;
    bool exact = true;
};

inline constexpr size_t kDefaultExactDefectCap = 20;

/// Minimum total weight pairing where each defect pairs with another defect
/// or with the boundary. Exact via memoised search over defect subsets (the
/// lowest live defect is paired first) when there are at most `exact_cap`
/// defects; otherwise greedy nearest partner, flagged `exact = false`.
Matching min_weight_matching(const DefectGraph &graph, size_t exact_cap = kDefaultExactDefectCap);

struct MwpmResult {
    PauliString correction;
    LogicalClass logical = LogicalClass::I;
    int weight = 0;
    bool exact = true;
};

/// Independent X and Z matchings (a Y counts as one error of each kind).
class MwpmDecoder {
   public:
    explicit MwpmDecoder(const CodeLayout &layout, size_t exact_cap = kDefaultExactDefectCap);

    /// The data correction and its class relative to the pure error of the
    /// final round.
    MwpmResult decode(const SyndromeRecord &record) const;

    const CodeLayout &layout() const {
        return layout_;
    }

   private:
    CodeLayout layout_;
    PureErrorTable table_;
    MatchingGraph z_graph_;
    MatchingGraph x_graph_;
    size_t exact_cap_;
};

MwpmResult mwpm_decode(const CodeLayout &layout, const SyndromeRecord &record);

}  // namespace qecnn

#endif
