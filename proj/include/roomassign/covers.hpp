#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "roomassign/budget.hpp"

namespace roomassign {

/// Simple undirected graph on vertices [0, m).
class graph {
public:
    explicit graph(int vertex_count = 0);

    /// Throws std::invalid_argument on loops, repeated edges, or bad vertices.
    void add_edge(int u, int v);

    int vertex_count() const noexcept { return m_; }
    bool adjacent(int u, int v) const noexcept;
    int degree(int v) const;
    int min_degree() const;
    /// Edges as (smaller, larger), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool operator==(const graph&) const = default;

private:
    int m_;
    std::vector<char> adj_;
    std::size_t edge_count_ = 0;
};

/// Directed graph on [0, m) without loops or repeated arcs. Antiparallel
/// pairs u->v, v->u are allowed.
class digraph {
public:
    explicit digraph(int vertex_count = 0);

    void add_arc(int tail, int head);

    int vertex_count() const noexcept { return m_; }
    bool has_arc(int tail, int head) const noexcept;
    int out_degree(int v) const;
    int in_degree(int v) const;
    bool has_antiparallel_arcs() const;
    /// Arcs sorted lexicographically by (tail, head).
    std::vector<std::pair<int, int>> arcs() const;
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool operator==(const digraph&) const = default;

private:
    int m_;
    std::vector<char> adj_;
    std::size_t arc_count_ = 0;
};

/// Arcs u->v and v->u for every edge {u, v}.
digraph symmetric_closure(const graph& g);

/// Tripartite 3-uniform hypergraph. Vertices are indexed per class.
struct hypergraph3 {
    int u_count = 0;
    int v_count = 0;
    int w_count = 0;
    std::vector<std::array<int, 3>> edges;

    /// Throws std::invalid_argument if the triple leaves the tripartition.
    void add_edge(int u, int v, int w);

    bool operator==(const hypergraph3&) const = default;
};

struct bin_packing_input {
    std::vector<int> items;
    int bin = 0;

    bool operator==(const bin_packing_input&) const = default;
};

using triple = std::array<int, 3>;

/// Triangles of a cover. For directed covers each triple is oriented
/// t[0] -> t[1] -> t[2] -> t[0].
using triangle_certificate = std::vector<triple>;
/// Indices into hypergraph3::edges.
using matching_certificate = std::vector<int>;
/// Item indices per bin.
using packing_certificate = std::vector<std::vector<int>>;

/// Default cap on bin size and total item size so the oracle stays
/// polynomial in the unary input length.
inline constexpr long default_unary_limit = 10'000;

std::optional<triangle_certificate> triangle_cover(const graph& g, const search_budget& budget = {});
std::optional<triangle_certificate> directed_triangle_cover(const digraph& d,
                                                            const search_budget& budget = {});
std::optional<matching_certificate> perfect_3dm(const hypergraph3& h, const search_budget& budget = {});
/// Throws std::invalid_argument on non-positive sizes or inputs beyond unary_limit.
std::optional<packing_certificate> unary_bin_pack(const bin_packing_input& input,
                                                  const search_budget& budget = {},
                                                  long unary_limit = default_unary_limit);

// Certificate checkers, independent of the searches above.
bool is_triangle_cover(const graph& g, const triangle_certificate& cert);
bool is_directed_triangle_cover(const digraph& d, const triangle_certificate& cert);
bool is_perfect_matching(const hypergraph3& h, const matching_certificate& cert);
bool is_bin_packing(const bin_packing_input& input, const packing_certificate& cert);

}  // namespace roomassign
