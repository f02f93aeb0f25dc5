#include "roomassign/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "roomassign/errors.hpp"

namespace roomassign {

namespace {

constexpr int gadget_size = 9;

int role_offset(gadget_role role) { return static_cast<int>(role) - 1; }

// Appends every player not yet on the list, ascending.
void append_rest(preference_list& list, int n, player_id owner) {
    std::vector<char> listed(static_cast<std::size_t>(n), 0);
    listed[static_cast<std::size_t>(owner)] = 1;
    for (const auto& g : list) {
        for (player_id p : g) listed[static_cast<std::size_t>(p)] = 1;
    }
    for (player_id p = 0; p < n; ++p) {
        if (!listed[static_cast<std::size_t>(p)]) list.push_back({p});
    }
}

void append_if_new(preference_list& list, player_id p) {
    for (const auto& g : list) {
        if (std::find(g.begin(), g.end(), p) != g.end()) return;
    }
    list.push_back({p});
}

assignment gray_assignment(const instance& inst, int m) {
    assignment a;
    for (int v = 0; v < m; ++v) a.rooms.push_back({v, m + v, 2 * m + v});
    return canonicalize(inst, std::move(a));
}

std::vector<player_origin> layered_provenance(int m) {
    std::vector<player_origin> out;
    for (int layer = 0; layer < 3; ++layer) {
        for (int v = 0; v < m; ++v) out.push_back({v, layer});
    }
    return out;
}

// Blue partners of every copy player, in cycle order: successor, predecessor.
std::vector<std::pair<player_id, player_id>> blue_neighbours(int m) {
    std::vector<std::pair<player_id, player_id>> out(static_cast<std::size_t>(3 * m), {-1, -1});
    for (const auto& t : blue_triangle_layout(m)) {
        for (int k = 0; k < 3; ++k) {
            out[static_cast<std::size_t>(t[k])] = {t[(k + 1) % 3], t[(k + 2) % 3]};
        }
    }
    return out;
}

void require(bool condition, const std::string& what) {
    if (!condition) throw precondition_error(what);
}

}  // namespace

int hypergraph_vertex(const hypergraph3& h, int cls, int index) {
    switch (cls) {
        case 0: return index;
        case 1: return h.u_count + index;
        case 2: return h.u_count + h.v_count + index;
        default: throw std::invalid_argument("hypergraph class must be 0, 1 or 2");
    }
}

int gadget_vertex(const hypergraph3& h, int hyperedge, gadget_role role) {
    if (role == gadget_role::original) throw std::invalid_argument("original vertices have no gadget slot");
    return h.u_count + h.v_count + h.w_count + gadget_size * hyperedge + role_offset(role);
}

std::vector<triple> gadget_black_triangles(const hypergraph3& h, int e) {
    const auto& [u_, v_, w_] = h.edges.at(static_cast<std::size_t>(e));
    const int u = hypergraph_vertex(h, 0, u_);
    const int v = hypergraph_vertex(h, 1, v_);
    const int w = hypergraph_vertex(h, 2, w_);
    auto g = [&](gadget_role r) { return gadget_vertex(h, e, r); };
    using enum gadget_role;
    return {{v, g(v1), g(u2)}, {g(a), g(b), g(c)}, {u, g(u1), g(w2)}, {g(v2), w, g(w1)}};
}

std::vector<triple> gadget_gray_triangles(const hypergraph3& h, int e) {
    auto g = [&](gadget_role r) { return gadget_vertex(h, e, r); };
    using enum gadget_role;
    return {{g(u1), g(u2), g(c)}, {g(w1), g(w2), g(b)}, {g(v1), g(v2), g(a)}};
}

gadget_digraph dtc_from_3dm(const hypergraph3& h) {
    const int originals = h.u_count + h.v_count + h.w_count;
    const int total = originals + gadget_size * static_cast<int>(h.edges.size());
    gadget_digraph out{digraph(total), {}};
    out.origin.resize(static_cast<std::size_t>(total));
    for (int x = 0; x < originals; ++x) out.origin[static_cast<std::size_t>(x)] = {-1, gadget_role::original, x};
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        for (int r = 1; r <= gadget_size; ++r) {
            auto role = static_cast<gadget_role>(r);
            out.origin[static_cast<std::size_t>(gadget_vertex(h, e, role))] = {e, role, -1};
        }
        for (const auto& tris : {gadget_black_triangles(h, e), gadget_gray_triangles(h, e)}) {
            for (const auto& t : tris) {
                for (int k = 0; k < 3; ++k) out.graph.add_arc(t[k], t[(k + 1) % 3]);
            }
        }
    }
    return out;
}

std::vector<triple> blue_triangle_layout(int m) {
    if (m < 3 || m % 3 != 0) throw std::invalid_argument("blue triangles need a positive multiple of 3");
    std::vector<triple> out;
    const int copy1 = m;
    const int copy2 = 2 * m;
    for (int k = 0; 3 * k < m; ++k) {
        out.push_back({copy1 + 3 * k, copy1 + 3 * k + 1, copy1 + 3 * k + 2});
    }
    // Shifted by one origin, so block k is tied to block k + 1.
    for (int k = 0; 3 * k < m; ++k) {
        out.push_back({copy2 + 3 * k + 1, copy2 + 3 * k + 2, copy2 + (3 * k + 3) % m});
    }
    return out;
}

reduction_output verification_instance_worst(const graph& g) {
    const int m = g.vertex_count();
    require(m >= 3 && m % 3 == 0, "vertex count must be a positive multiple of 3");
    require(g.min_degree() >= 2, "every vertex needs degree at least 2");
    const int n = 3 * m;
    const auto blue = blue_neighbours(m);
    std::vector<preference_list> lists(static_cast<std::size_t>(n));
    for (int v = 0; v < m; ++v) {
        auto& list = lists[static_cast<std::size_t>(v)];
        for (int w = 0; w < m; ++w) {
            if (g.adjacent(v, w)) list.push_back({w});
        }
        list.push_back({m + v});
        list.push_back({2 * m + v});
        append_rest(list, n, v);
    }
    for (player_id x = m; x < n; ++x) {
        const int v = x % m;
        auto& list = lists[static_cast<std::size_t>(x)];
        auto [s, p] = blue[static_cast<std::size_t>(x)];
        list.push_back({std::min(s, p)});
        list.push_back({std::max(s, p)});
        const player_id other_copy = x < 2 * m ? 2 * m + v : m + v;
        list.push_back({std::min(v, other_copy)});
        list.push_back({std::max(v, other_copy)});
        append_rest(list, n, x);
    }
    reduction_output out;
    out.inst = instance{n, room_spec(std::vector<int>(static_cast<std::size_t>(m), 3)), comparison_mode::worst,
                        preference_profile::from_lists(n, lists, true, true)};
    out.distinguished = gray_assignment(out.inst, m);
    out.provenance = layered_provenance(m);
    return out;
}

reduction_output verification_instance_best(const digraph& d) {
    const int m = d.vertex_count();
    require(m >= 3 && m % 3 == 0, "vertex count must be a positive multiple of 3");
    for (int v = 0; v < m; ++v) {
        require(d.out_degree(v) >= 1 && d.in_degree(v) >= 1,
                "vertex " + std::to_string(v) + " needs an outgoing and an incoming arc");
    }
    require(!d.has_antiparallel_arcs(), "antiparallel arcs are not supported");
    const int n = 3 * m;
    const auto blue = blue_neighbours(m);
    std::vector<preference_list> lists(static_cast<std::size_t>(n));
    for (int v = 0; v < m; ++v) {
        auto& list = lists[static_cast<std::size_t>(v)];
        for (int w = 0; w < m; ++w) {
            if (d.has_arc(v, w)) list.push_back({w});
        }
        list.push_back({m + v});
        list.push_back({2 * m + v});
        for (int w = 0; w < m; ++w) {
            if (d.has_arc(w, v)) append_if_new(list, w);
        }
        append_rest(list, n, v);
    }
    for (player_id x = m; x < n; ++x) {
        const int v = x % m;
        auto& list = lists[static_cast<std::size_t>(x)];
        auto [succ, pred] = blue[static_cast<std::size_t>(x)];
        list.push_back({succ});
        // Gray cycle: original -> copy1 -> copy2 -> original.
        if (x < 2 * m) {
            list.push_back({2 * m + v});
            list.push_back({v});
        } else {
            list.push_back({v});
            list.push_back({m + v});
        }
        list.push_back({pred});
        append_rest(list, n, x);
    }
    reduction_output out;
    out.inst = instance{n, room_spec(std::vector<int>(static_cast<std::size_t>(m), 3)), comparison_mode::best,
                        preference_profile::from_lists(n, lists, true, true)};
    out.distinguished = gray_assignment(out.inst, m);
    out.provenance = layered_provenance(m);
    return out;
}

instance feasibility_instance(const graph& g) {
    const int m = g.vertex_count();
    require(m != 1, "a single vertex cannot fill a room");
    std::vector<preference_list> lists(static_cast<std::size_t>(m));
    if (m % 3 != 0) {
        // No triangle cover can exist; encode a trivial no-instance.
        return instance{m, room_spec({m}), comparison_mode::best,
                        preference_profile::from_lists(m, lists, true, false)};
    }
    for (int v = 0; v < m; ++v) {
        for (int w = 0; w < m; ++w) {
            if (g.adjacent(v, w)) lists[static_cast<std::size_t>(v)].push_back({w});
        }
    }
    const bool complete = g.edge_count() == static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
    return instance{m, room_spec(std::vector<int>(static_cast<std::size_t>(m / 3), 3)), comparison_mode::best,
                    preference_profile::from_lists(m, lists, true, complete)};
}

instance poa_instance_binpack(const bin_packing_input& input) {
    require(input.bin >= 2, "bin size must be at least 2");
    long total = 0;
    for (int s : input.items) {
        require(s >= 2, "item sizes must be at least 2");
        total += s;
    }
    require(total % input.bin == 0, "total item size must be a multiple of the bin size");
    require(total <= default_unary_limit, "unary input exceeds the size limit");
    const int n = static_cast<int>(total);
    std::vector<preference_list> lists(static_cast<std::size_t>(n));
    int base = 0;
    for (int s : input.items) {
        for (int k = 0; k < s; ++k) {
            auto& list = lists[static_cast<std::size_t>(base + k)];
            list.push_back({base + (k + 1) % s});
            append_rest(list, n, base + k);
        }
        base += s;
    }
    return instance{n, room_spec(std::vector<int>(static_cast<std::size_t>(total / input.bin), input.bin)),
                    comparison_mode::best, preference_profile::from_lists(n, lists, true, true)};
}

namespace {

instance two_level_instance(int m, comparison_mode mode, const std::function<bool(int, int)>& first) {
    std::vector<preference_list> lists(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
        tie_group top;
        tie_group rest;
        for (int w = 0; w < m; ++w) {
            if (w == v) continue;
            (first(v, w) ? top : rest).push_back(w);
        }
        lists[static_cast<std::size_t>(v)].push_back(std::move(top));
        if (!rest.empty()) lists[static_cast<std::size_t>(v)].push_back(std::move(rest));
    }
    return instance{m, room_spec(std::vector<int>(static_cast<std::size_t>(m / 3), 3)), mode,
                    preference_profile::from_lists(m, lists, false, true)};
}

}  // namespace

instance poa_instance_ties_best(const digraph& d) {
    const int m = d.vertex_count();
    require(m >= 3 && m % 3 == 0, "vertex count must be a positive multiple of 3");
    for (int v = 0; v < m; ++v) {
        require(d.out_degree(v) >= 1 && d.in_degree(v) >= 1,
                "vertex " + std::to_string(v) + " needs an outgoing and an incoming arc");
    }
    require(!d.has_antiparallel_arcs(), "antiparallel arcs are not supported");
    return two_level_instance(m, comparison_mode::best, [&](int v, int w) { return d.has_arc(v, w); });
}

instance poa_instance_ties_worst(const graph& g) {
    const int m = g.vertex_count();
    require(m >= 3 && m % 3 == 0, "vertex count must be a positive multiple of 3");
    require(g.min_degree() >= 2, "every vertex needs degree at least 2");
    return two_level_instance(m, comparison_mode::worst, [&](int v, int w) { return g.adjacent(v, w); });
}

}  // namespace roomassign
