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

#include "qecnn/matching.h"

#include <bit>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>

namespace qecnn {

namespace {

struct Edge {
    int to;  // check index, or kBoundary
    size_t qubit;
};

std::vector<std::vector<Edge>> check_adjacency(const CodeLayout &layout, CheckType type) {
    const auto &stabs = layout.stabilisers(type);
    std::vector<std::vector<int>> checks_of_qubit(layout.n_data);
    for (size_t k = 0; k < stabs.size(); k++) {
        for (size_t q : stabs[k].support) {
            checks_of_qubit[q].push_back(static_cast<int>(k));
        }
    }
    std::vector<std::vector<Edge>> adj(stabs.size());
    for (size_t q = 0; q < layout.n_data; q++) {
        const auto &cs = checks_of_qubit[q];
        if (cs.size() == 2) {
            adj[cs[0]].push_back({cs[1], q});
            adj[cs[1]].push_back({cs[0], q});
        } else if (cs.size() == 1) {
            adj[cs[0]].push_back({kBoundary, q});
        }
    }
    return adj;
}

}  // namespace

MatchingGraph build_matching_graph(const CodeLayout &layout, CheckType type) {
    auto adj = check_adjacency(layout, type);
    size_t m = adj.size();
    MatchingGraph g;
    g.type = type;
    g.num_checks = m;
    g.distance.assign(m * m, -1);
    g.path.assign(m * m, BitVector(layout.n_data));
    g.boundary_distance.assign(m, -1);
    g.boundary_path.assign(m, BitVector(layout.n_data));

    for (size_t src = 0; src < m; src++) {
        // BFS over checks; the boundary is a sink that is never expanded.
        std::vector<int> dist(m, -1);
        std::vector<int> parent(m, -1);
        std::vector<size_t> parent_qubit(m, 0);
        std::deque<size_t> queue{src};
        dist[src] = 0;
        int boundary_from = -1;
        size_t boundary_qubit = 0;
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (const Edge &e : adj[u]) {
                if (e.to == kBoundary) {
                    if (boundary_from < 0) {
                        boundary_from = static_cast<int>(u);
                        boundary_qubit = e.qubit;
                    }
                    continue;
                }
                if (dist[e.to] < 0) {
                    dist[e.to] = dist[u] + 1;
                    parent[e.to] = static_cast<int>(u);
                    parent_qubit[e.to] = e.qubit;
                    queue.push_back(e.to);
                }
            }
        }
        auto trace = [&](size_t v, BitVector &out) {
            while (static_cast<int>(v) != static_cast<int>(src)) {
                out.flip(parent_qubit[v]);
                v = static_cast<size_t>(parent[v]);
            }
        };
        for (size_t dst = 0; dst < m; dst++) {
            if (dist[dst] < 0) {
                throw std::logic_error("matching graph is disconnected");
            }
            g.distance[src * m + dst] = dist[dst];
            trace(dst, g.path[src * m + dst]);
        }
        if (boundary_from < 0) {
            throw std::logic_error("check has no route to the boundary");
        }
        g.boundary_distance[src] = dist[boundary_from] + 1;
        trace(static_cast<size_t>(boundary_from), g.boundary_path[src]);
        g.boundary_path[src].flip(boundary_qubit);
    }
    return g;
}

DefectGraph build_defect_graph(const MatchingGraph &graph, const SyndromeRecord &record) {
    DefectGraph out;
    out.type = graph.type;
    BitVector previous(graph.num_checks);
    for (size_t t = 0; t < record.rounds.size(); t++) {
        const BitVector &bits = record.rounds[t].bits(graph.type);
        if (bits.size() != graph.num_checks) {
            throw std::invalid_argument("syndrome record does not match the matching graph");
        }
        BitVector change = bits ^ previous;
        for (size_t c : change.set_indices()) {
            out.defects.push_back({c, static_cast<int>(t)});
        }
        previous = bits;
    }
    size_t k = out.defects.size();
    out.pair_weights.assign(k * k, 0);
    out.boundary_weights.resize(k);
    for (size_t a = 0; a < k; a++) {
        out.boundary_weights[a] = graph.boundary_distance[out.defects[a].check];
        for (size_t b = 0; b < k; b++) {
            out.pair_weights[a * k + b] = graph.dist(out.defects[a].check, out.defects[b].check) +
                                          std::abs(out.defects[a].round - out.defects[b].round);
        }
    }
    return out;
}

DefectGraph build_defect_graph(const CodeLayout &layout, const SyndromeRecord &record, CheckType type) {
    return build_defect_graph(build_matching_graph(layout, type), record);
}

namespace {

// Memo tables are 5 bytes per subset.
constexpr size_t kMaxExactDefects = 24;

struct SubsetSearch {
    const DefectGraph &graph;
    std::vector<int> best;     // per live-defect mask, -1 until solved
    std::vector<int8_t> pick;  // partner of the lowest live defect, kBoundary for the boundary

    int solve(uint32_t mask) {
        if (mask == 0) {
            return 0;
        }
        if (best[mask] >= 0) {
            return best[mask];
        }
        size_t i = std::countr_zero(mask);
        uint32_t rest = mask & (mask - 1);
        int choice = kBoundary;
        int value = graph.boundary_weights[i] + solve(rest);
        for (uint32_t others = rest; others; others &= others - 1) {
            size_t j = std::countr_zero(others);
            int w = graph.pair_weight(i, j);
            if (w >= value) {
                continue;
            }
            int candidate = w + solve(rest & ~(uint32_t{1} << j));
            if (candidate < value) {
                value = candidate;
                choice = static_cast<int>(j);
            }
        }
        best[mask] = value;
        pick[mask] = static_cast<int8_t>(choice);
        return value;
    }
};

Matching greedy_matching(const DefectGraph &graph) {
    size_t k = graph.size();
    Matching m;
    m.exact = false;
    m.partner.assign(k, kBoundary);
    std::vector<bool> done(k, false);
    for (size_t i = 0; i < k; i++) {
        if (done[i]) {
            continue;
        }
        done[i] = true;
        int partner = kBoundary;
        int w = graph.boundary_weights[i];
        for (size_t j = i + 1; j < k; j++) {
            if (!done[j] && graph.pair_weight(i, j) < w) {
                w = graph.pair_weight(i, j);
                partner = static_cast<int>(j);
            }
        }
        m.partner[i] = partner;
        if (partner != kBoundary) {
            done[partner] = true;
            m.partner[partner] = static_cast<int>(i);
        }
        m.weight += w;
    }
    return m;
}

}  // namespace

Matching min_weight_matching(const DefectGraph &graph, size_t exact_cap) {
    size_t k = graph.size();
    if (k > exact_cap || k > kMaxExactDefects) {
        return greedy_matching(graph);
    }
    SubsetSearch search{graph, std::vector<int>(size_t{1} << k, -1), std::vector<int8_t>(size_t{1} << k, 0)};
    uint32_t full = (uint32_t{1} << k) - 1;
    Matching m;
    m.weight = search.solve(full);
    m.partner.assign(k, kBoundary);
    for (uint32_t mask = full; mask;) {
        size_t i = std::countr_zero(mask);
        int j = search.pick[mask];
        mask &= mask - 1;
        m.partner[i] = j;
        if (j != kBoundary) {
            m.partner[j] = static_cast<int>(i);
            mask &= ~(uint32_t{1} << j);
        }
    }
    return m;
}

MwpmDecoder::MwpmDecoder(const CodeLayout &layout, size_t exact_cap)
    : layout_(layout),
      table_(build_pure_error_table(layout)),
      z_graph_(build_matching_graph(layout, CheckType::Z)),
      x_graph_(build_matching_graph(layout, CheckType::X)),
      exact_cap_(exact_cap) {
}

MwpmResult MwpmDecoder::decode(const SyndromeRecord &record) const {
    if (record.rounds.empty()) {
        throw std::invalid_argument("cannot decode an empty syndrome record");
    }
    MwpmResult result;
    result.correction = PauliString(layout_.n_data);
    for (const MatchingGraph *graph : {&z_graph_, &x_graph_}) {
        DefectGraph defects = build_defect_graph(*graph, record);
        Matching m = min_weight_matching(defects, exact_cap_);
        result.weight += m.weight;
        result.exact = result.exact && m.exact;
        BitVector &target = graph->type == CheckType::Z ? result.correction.xs : result.correction.zs;
        for (size_t i = 0; i < defects.size(); i++) {
            size_t c = defects.defects[i].check;
            if (m.partner[i] == kBoundary) {
                target ^= graph->boundary_path[c];
            } else if (static_cast<size_t>(m.partner[i]) > i) {
                target ^= graph->chain(c, defects.defects[m.partner[i]].check);
            }
        }
    }
    PauliString residual = multiply(result.correction, simple_decode(table_, record.final_round()));
    result.logical = logical_class(layout_, residual);
    return result;
}

MwpmResult mwpm_decode(const CodeLayout &layout, const SyndromeRecord &record) {
    return MwpmDecoder(layout).decode(record);
}

}  // namespace qecnn
