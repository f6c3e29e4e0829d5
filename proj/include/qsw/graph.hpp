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

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qsw {

using Arc = std::pair<int, int>;  // (src, dst)

/// Directed graph on vertices 0..n-1. Arcs are stored sorted and
/// deduplicated; self-loops are rejected. An undirected edge is the pair of
/// arcs (u,v) and (v,u).
class Digraph {
public:
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(int src, int dst) const;
    /// True when neither (a,b) nor (b,a) is an arc.
    bool non_adjacent(int a, int b) const { return !has_arc(a, b) && !has_arc(b, a); }

    int indegree(int v) const;
    int outdegree(int v) const;
    bool is_symmetric() const;
    /// True for the undirected path 0-1-...-(n-1) and nothing else.
    bool is_path() const;

    /// Undirected path on n vertices (the paper's line segment).
    static Digraph path(int n);

    /// Plain-text edge list: first line `n`, then `src dst` per line;
    /// `u v undirected` expands to both arcs. '#' starts a comment.
    static Digraph parse_edge_list(std::istream& in);
    static Digraph parse_edge_list(const std::string& text);
    /// JSON form { "n": int, "arcs": [[src,dst],...] }.
    static Digraph parse_json(const std::string& text);
    std::string to_json() const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// Symmetric closure plus both arcs between every pair of distinct
/// non-adjacent vertices that share at least one common child.
Digraph moral_graph(const Digraph& g);

/// The enlarged graph: each base vertex v owns a contiguous block of
/// max(indeg(v), 1) copies; an enlarged arc between copies exists iff the
/// base arc does.
class EnlargedGraph {
public:
    explicit EnlargedGraph(Digraph base);

    const Digraph& base() const { return base_; }
    std::size_t total_dim() const { return total_dim_; }
    std::size_t block_start(int v) const;
    std::size_t block_size(int v) const;
    /// Parents of v in ascending vertex order; the rank of a parent is its
    /// position in this list.
    const std::vector<int>& parents(int v) const;
    int parent_rank(int v, int parent) const;
    /// Base vertex owning the given enlarged index.
    int representative(std::size_t enlarged_index) const;
    std::size_t enlarged_index(int v, std::size_t copy) const;
    bool has_enlarged_arc(std::size_t from, std::size_t to) const;

private:
    Digraph base_;
    std::vector<std::size_t> block_start_;  // n + 1 entries
    std::vector<std::vector<int>> parents_;
    std::vector<int> representative_;
    std::size_t total_dim_ = 0;
};

EnlargedGraph enlarge(const Digraph& g);

}  // namespace qsw
