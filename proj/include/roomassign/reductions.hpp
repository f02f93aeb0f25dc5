#pragma once

#include <optional>
#include <vector>

#include "roomassign/core.hpp"
#include "roomassign/covers.hpp"

namespace roomassign {

/// Where a constructed player comes from: a source vertex (or item) and
/// the layer it lives in. Layer 0 holds the originals; the verification
/// constructions put copies in layers 1 and 2; the bin-packing
/// construction uses the position on the item's preference cycle.
struct player_origin {
    int source = 0;
    int layer = 0;

    bool operator==(const player_origin&) const = default;
};

struct reduction_output {
    instance inst;
    std::optional<assignment> distinguished;
    std::vector<player_origin> provenance;
};

enum class gadget_role { original, a, b, c, u1, u2, v1, v2, w1, w2 };

struct vertex_origin {
    /// -1 for vertices of the hypergraph itself.
    int hyperedge = -1;
    gadget_role role = gadget_role::original;
    /// Index of an original vertex in the concatenated U, V, W numbering.
    int vertex = -1;
};

struct gadget_digraph {
    digraph graph;
    std::vector<vertex_origin> origin;
};

/// Vertex numbering of dtc_from_3dm: U first, then V, then W, then nine
/// gadget vertices per hyperedge in gadget_role order a, b, c, u1, ..., w2.
int hypergraph_vertex(const hypergraph3& h, int cls, int index);
int gadget_vertex(const hypergraph3& h, int hyperedge, gadget_role role);

/// Replaces each hyperedge with the 9-vertex, 21-arc triangle gadget.
gadget_digraph dtc_from_3dm(const hypergraph3& h);

/// The four black triangles of hyperedge e's gadget (cover all 12 vertices).
std::vector<triple> gadget_black_triangles(const hypergraph3& h, int hyperedge);
/// The three gray triangles (cover the nine gadget vertices only).
std::vector<triple> gadget_gray_triangles(const hypergraph3& h, int hyperedge);

/// Player ids of the 2m/3 blue triangles over the copy layers, each
/// listed in its preference-cycle order (t[0] ranks t[1] first, ...).
/// Consecutive origin blocks are chained so that no proper subset of
/// origins is closed under the blue triangles.
std::vector<triple> blue_triangle_layout(int m);

/// 3m players, worst-roommate comparison; distinguished is the gray
/// assignment {v, copy1(v), copy2(v)}. Requires 3 | m and min degree >= 2.
reduction_output verification_instance_worst(const graph& g);

/// 3m players, best-roommate comparison with cyclic gray and blue
/// preferences. Requires 3 | m, every vertex with in- and out-arcs, and
/// no antiparallel arcs.
reduction_output verification_instance_best(const digraph& d);

/// Players are vertices, acceptable pairs are edges. Rooms of three when
/// 3 | m; otherwise a single room of capacity m with empty lists.
instance feasibility_instance(const graph& g);

/// Each item of size s becomes s players on a first-choice cycle; rooms
/// all have capacity b. Requires items >= 2 and b | sum.
instance poa_instance_binpack(const bin_packing_input& input);

/// Rank 1 for out-neighbours, 2 for everyone else; best-roommate comparison.
instance poa_instance_ties_best(const digraph& d);

/// Rank 1 for neighbours, 2 for everyone else; worst-roommate comparison.
instance poa_instance_ties_worst(const graph& g);

}  // namespace roomassign
