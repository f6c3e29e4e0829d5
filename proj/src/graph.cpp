// Copyright 2026 The qsw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsw/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qsw {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw std::invalid_argument("Digraph: negative vertex count");
    for (const auto& [src, dst] : arcs_) {
        if (src < 0 || src >= n_ || dst < 0 || dst >= n_)
            throw std::invalid_argument("Digraph: arc endpoint out of range");
        if (src == dst) throw std::invalid_argument("Digraph: self-loops are not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool Digraph::has_arc(int src, int dst) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{src, dst});
}

int Digraph::indegree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("indegree: vertex out of range");
    int d = 0;
    for (const auto& [src, dst] : arcs_)
        if (dst == v) ++d;
    return d;
}

int Digraph::outdegree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("outdegree: vertex out of range");
    int d = 0;
    for (const auto& [src, dst] : arcs_)
        if (src == v) ++d;
    return d;
}

bool Digraph::is_symmetric() const {
    for (const auto& [src, dst] : arcs_)
        if (!has_arc(dst, src)) return false;
    return true;
}

bool Digraph::is_path() const {
    std::size_t expected = n_ >= 2 ? 2 * (static_cast<std::size_t>(n_) - 1) : 0;
    if (arcs_.size() != expected) return false;
    for (int i = 0; i + 1 < n_; ++i)
        if (!has_arc(i, i + 1) || !has_arc(i + 1, i)) return false;
    return true;
}

Digraph Digraph::path(int n) {
    if (n < 1) throw std::invalid_argument("path: need at least one vertex");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) {
        arcs.emplace_back(i, i + 1);
        arcs.emplace_back(i + 1, i);
    }
    return Digraph(n, std::move(arcs));
}

Digraph Digraph::parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                std::string rest;
                if (ls >> rest) throw std::invalid_argument("edge list: malformed header line");
            }
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw std::invalid_argument("edge list: arc line needs two vertices");
        std::string tag;
        if (ls >> tag) {
            if (tag != "undirected")
                throw std::invalid_argument("edge list: unknown arc tag '" + tag + "'");
            arcs.emplace_back(v, u);
        }
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("edge list: missing vertex count");
    return Digraph(n, std::move(arcs));
}

Digraph Digraph::parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Digraph Digraph::parse_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph json: missing integer field 'n'");
    std::vector<Arc> arcs;
    for (const auto& a : j.value("arcs", nlohmann::json::array())) {
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument("graph json: arcs must be [src,dst] pairs");
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return Digraph(j["n"].get<int>(), std::move(arcs));
}

std::string Digraph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto arr = nlohmann::json::array();
    for (const auto& [src, dst] : arcs_) arr.push_back({src, dst});
    j["arcs"] = std::move(arr);
    return j.dump();
}

Digraph moral_graph(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<Arc> arcs;
    for (const auto& [src, dst] : g.arcs()) {
        arcs.emplace_back(src, dst);
        arcs.emplace_back(dst, src);  // symmetric closure
    }
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (!g.non_adjacent(u, w)) continue;
            for (int c = 0; c < n; ++c) {
                if (g.has_arc(u, c) && g.has_arc(w, c)) {
                    arcs.emplace_back(u, w);
                    arcs.emplace_back(w, u);
                    break;
                }
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

EnlargedGraph::EnlargedGraph(Digraph base) : base_(std::move(base)) {
    const int n = base_.vertex_count();
    parents_.resize(n);
    for (const auto& [src, dst] : base_.arcs()) parents_[dst].push_back(src);
    for (auto& p : parents_) std::sort(p.begin(), p.end());  // rank = ascending order

    block_start_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        const std::size_t block = std::max<std::size_t>(parents_[v].size(), 1);
        block_start_[v + 1] = block_start_[v] + block;
    }
    total_dim_ = block_start_[n];
    representative_.resize(total_dim_);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = block_start_[v]; i < block_start_[v + 1]; ++i)
            representative_[i] = v;
}

std::size_t EnlargedGraph::block_start(int v) const {
    if (v < 0 || v >= base_.vertex_count())
        throw std::invalid_argument("block_start: vertex out of range");
    return block_start_[v];
}

std::size_t EnlargedGraph::block_size(int v) const {
    if (v < 0 || v >= base_.vertex_count())
        throw std::invalid_argument("block_size: vertex out of range");
    return block_start_[v + 1] - block_start_[v];
}

const std::vector<int>& EnlargedGraph::parents(int v) const {
    if (v < 0 || v >= base_.vertex_count())
        throw std::invalid_argument("parents: vertex out of range");
    return parents_[v];
}

int EnlargedGraph::parent_rank(int v, int parent) const {
    const auto& p = parents(v);
    const auto it = std::lower_bound(p.begin(), p.end(), parent);
    if (it == p.end() || *it != parent)
        throw std::invalid_argument("parent_rank: not a parent of the vertex");
    return static_cast<int>(it - p.begin());
}

int EnlargedGraph::representative(std::size_t enlarged_index) const {
    if (enlarged_index >= total_dim_)
        throw std::invalid_argument("representative: index out of range");
    return representative_[enlarged_index];
}

std::size_t EnlargedGraph::enlarged_index(int v, std::size_t copy) const {
    if (copy >= block_size(v)) throw std::invalid_argument("enlarged_index: copy out of range");
    return block_start_[v] + copy;
}

bool EnlargedGraph::has_enlarged_arc(std::size_t from, std::size_t to) const {
    return base_.has_arc(representative(from), representative(to));
}

EnlargedGraph enlarge(const Digraph& g) { return EnlargedGraph(g); }

}  // namespace qsw
