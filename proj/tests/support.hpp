#pragma once

// Test helpers: fixtures, random inputs, and brute-force oracles that do
// not go through the library's search code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "roomassign/core.hpp"
#include "roomassign/covers.hpp"
#include "roomassign/generate.hpp"

namespace testing_support {

using namespace roomassign;

// The nine-player example, 1-based as printed.
inline const std::vector<std::vector<int>> example_lists = {
    {5, 4, 7, 3, 9, 6, 8, 2}, {1, 4, 5, 9, 8, 6, 3, 7}, {2, 5, 4, 9, 1, 6, 7, 8},
    {3, 6, 7, 2, 9, 5, 8, 1}, {3, 6, 2, 7, 8, 4, 1, 9}, {7, 2, 8, 5, 4, 9, 1, 3},
    {1, 2, 9, 3, 4, 6, 8, 5}, {6, 3, 7, 1, 9, 5, 4, 2}, {2, 4, 1, 6, 7, 3, 8, 5},
};

inline instance example_instance(comparison_mode mode, std::vector<int> caps = {3, 3, 3}) {
    std::vector<preference_list> lists;
    for (const auto& row : example_lists) {
        preference_list l;
        for (int p : row) l.push_back({p - 1});
        lists.push_back(l);
    }
    return instance{9, room_spec(std::move(caps)), mode, preference_profile::from_lists(9, lists, true, true)};
}

// 1-based rooms -> 0-based assignment
inline assignment rooms1(std::vector<std::vector<int>> rooms) {
    assignment a;
    for (auto& r : rooms) {
        for (int& p : r) --p;
        a.rooms.push_back(r);
    }
    return a;
}

// Rank of j for i read off the tie-group positions of i's list, 0 if absent.
inline int list_rank(const instance& inst, player_id i, player_id j) {
    const auto list = inst.prefs.list_of(i);
    for (std::size_t g = 0; g < list.size(); ++g) {
        if (std::find(list[g].begin(), list[g].end(), j) != list[g].end()) return static_cast<int>(g) + 1;
    }
    return 0;
}

// Per-player value (0 = infeasible room) computed from the lists.
inline std::vector<int> oracle_values(const instance& inst, const std::vector<std::vector<int>>& rooms) {
    std::vector<int> out(static_cast<std::size_t>(inst.n), 0);
    for (const auto& room : rooms) {
        for (int p : room) {
            int v = inst.mode == comparison_mode::best ? 1 << 30 : 0;
            bool ok = true;
            for (int q : room) {
                if (q == p) continue;
                int r = list_rank(inst, p, q);
                if (r == 0) ok = false;
                v = inst.mode == comparison_mode::best ? std::min(v, r) : std::max(v, r);
            }
            out[static_cast<std::size_t>(p)] = ok ? v : 0;
        }
    }
    return out;
}

inline bool all_positive(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

inline bool oracle_dominates(const std::vector<int>& better, const std::vector<int>& base) {
    bool strict = false;
    for (std::size_t k = 0; k < base.size(); ++k) {
        if (better[k] > base[k]) return false;
        if (better[k] < base[k]) strict = true;
    }
    return strict;
}

using room_list = std::vector<std::vector<int>>;

// Sorted members, rooms sorted by (size, members).
inline room_list normal_form(room_list rooms) {
    for (auto& r : rooms) std::sort(r.begin(), r.end());
    std::sort(rooms.begin(), rooms.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return rooms;
}

// Every partition of [0, n) into rooms of the given sizes, each exactly once
// (built naively by slot assignment, then deduplicated).
inline std::vector<room_list> oracle_partitions(int n, const std::vector<int>& caps) {
    std::set<room_list> seen;
    room_list rooms(caps.size());
    std::function<void(int)> go = [&](int p) {
        if (p == n) {
            seen.insert(normal_form(rooms));
            return;
        }
        for (std::size_t s = 0; s < caps.size(); ++s) {
            if (static_cast<int>(rooms[s].size()) < caps[s]) {
                rooms[s].push_back(p);
                go(p + 1);
                rooms[s].pop_back();
            }
        }
    };
    go(0);
    return {seen.begin(), seen.end()};
}

inline std::vector<room_list> oracle_feasible(const instance& inst) {
    std::vector<int> caps(inst.rooms.capacities().begin(), inst.rooms.capacities().end());
    std::vector<room_list> out;
    for (auto& r : oracle_partitions(inst.n, caps)) {
        if (all_positive(oracle_values(inst, r))) out.push_back(std::move(r));
    }
    return out;
}

inline bool oracle_is_poa(const instance& inst, const room_list& a) {
    const auto base = oracle_values(inst, a);
    for (const auto& r : oracle_feasible(inst)) {
        if (oracle_dominates(oracle_values(inst, r), base)) return false;
    }
    return true;
}

inline room_list as_rooms(const assignment& a) { return normal_form(a.rooms); }

// ---- random inputs ----

inline std::vector<std::vector<int>> capacity_choices(int n) {
    std::vector<std::vector<int>> out;
    std::function<void(std::vector<int>, int, int)> go = [&](std::vector<int> cur, int left, int min) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int c = min; c <= left; ++c) {
            cur.push_back(c);
            go(cur, left - c, c);
            cur.pop_back();
        }
    };
    go({}, n, 2);
    return out;
}

inline instance random_instance(std::mt19937_64& rng, int n, comparison_mode mode, bool strict, bool complete) {
    const auto choices = capacity_choices(n);
    generator_params p;
    p.n = n;
    p.capacities = choices[draw_below(rng, choices.size())];
    p.mode = mode;
    p.strict = strict;
    p.complete = complete;
    p.acceptability = complete ? 1.0 : 0.6 + 0.4 * draw_unit(rng);
    p.ties = strict ? 0.0 : 0.4 * draw_unit(rng);
    p.seed = rng();
    return gen_random_instance(p);
}

inline graph graph_from_mask(int m, std::uint32_t mask) {
    graph g(m);
    int bit = 0;
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v, ++bit) {
            if (mask >> bit & 1U) g.add_edge(u, v);
        }
    }
    return g;
}

// Random orientation of a random graph; no antiparallel pairs.
inline digraph random_oriented(std::mt19937_64& rng, int m, double density) {
    digraph d(m);
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
            if (draw_unit(rng) < density) {
                if (rng() & 1U) {
                    d.add_arc(u, v);
                } else {
                    d.add_arc(v, u);
                }
            }
        }
    }
    return d;
}

inline bool degree_ok(const digraph& d) {
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (d.out_degree(v) == 0 || d.in_degree(v) == 0) return false;
    }
    return true;
}

// Random oriented graph meeting the in/out precondition; with `planted`,
// the vertices are first split into directed triangles.
inline digraph random_precondition_digraph(std::mt19937_64& rng, int m, bool planted) {
    for (;;) {
        digraph d(m);
        std::vector<int> perm(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) perm[static_cast<std::size_t>(k)] = k;
        if (planted) {
            shuffle_with(perm, rng);
            for (int k = 0; k + 2 < m; k += 3) {
                d.add_arc(perm[k], perm[k + 1]);
                d.add_arc(perm[k + 1], perm[k + 2]);
                d.add_arc(perm[k + 2], perm[k]);
            }
        }
        const double density = 0.2 + 0.4 * draw_unit(rng);
        for (int u = 0; u < m; ++u) {
            for (int v = u + 1; v < m; ++v) {
                if (d.has_arc(u, v) || d.has_arc(v, u) || draw_unit(rng) >= density) continue;
                if (rng() & 1U) {
                    d.add_arc(u, v);
                } else {
                    d.add_arc(v, u);
                }
            }
        }
        if (degree_ok(d)) return d;
    }
}

// ---- brute-force oracles for the covering problems ----

inline bool oracle_triangle_cover(const graph& g) {
    const int m = g.vertex_count();
    if (m % 3 != 0) return false;
    for (const auto& part : oracle_partitions(m, std::vector<int>(static_cast<std::size_t>(m / 3), 3))) {
        bool ok = true;
        for (const auto& t : part) {
            ok = ok && g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) && g.adjacent(t[0], t[2]);
        }
        if (ok) return true;
    }
    return false;
}

inline bool directed_triangle(const digraph& d, int a, int b, int c) {
    return (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a)) ||
           (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a));
}

inline bool oracle_directed_cover(const digraph& d) {
    const int m = d.vertex_count();
    if (m % 3 != 0) return false;
    for (const auto& part : oracle_partitions(m, std::vector<int>(static_cast<std::size_t>(m / 3), 3))) {
        bool ok = true;
        for (const auto& t : part) ok = ok && directed_triangle(d, t[0], t[1], t[2]);
        if (ok) return true;
    }
    return false;
}

inline bool oracle_3dm(const hypergraph3& h) {
    if (h.u_count != h.v_count || h.v_count != h.w_count) return false;
    const std::size_t e = h.edges.size();
    for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) != h.u_count) continue;
        std::set<int> u, v, w;
        for (std::size_t k = 0; k < e; ++k) {
            if (mask >> k & 1U) {
                u.insert(h.edges[k][0]);
                v.insert(h.edges[k][1]);
                w.insert(h.edges[k][2]);
            }
        }
        if (static_cast<int>(u.size()) == h.u_count && static_cast<int>(v.size()) == h.v_count &&
            static_cast<int>(w.size()) == h.w_count) {
            return true;
        }
    }
    return false;
}

inline bool oracle_bin_pack(const bin_packing_input& in) {
    long total = 0;
    for (int s : in.items) total += s;
    if (in.bin <= 0 || total % in.bin != 0) return false;
    const auto bins = static_cast<std::size_t>(total / in.bin);
    std::vector<long> load(bins, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == in.items.size()) return true;
        for (std::size_t b = 0; b < bins; ++b) {
            if (load[b] + in.items[k] > in.bin) continue;
            load[b] += in.items[k];
            if (go(k + 1)) return true;
            load[b] -= in.items[k];
        }
        return false;
    };
    return go(0);
}

inline hypergraph3 random_hypergraph(std::mt19937_64& rng) {
    hypergraph3 h;
    const int q = 1 + static_cast<int>(draw_below(rng, 3));
    h.u_count = q;
    h.v_count = q;
    h.w_count = q;
    if (draw_below(rng, 5) == 0) h.w_count = 1 + static_cast<int>(draw_below(rng, 3));
    const int edges = static_cast<int>(draw_below(rng, 4));
    // Plant a matching half of the time when it fits.
    if (edges >= q && h.w_count == q && (rng() & 1U)) {
        std::vector<int> pv(static_cast<std::size_t>(q)), pw(static_cast<std::size_t>(q));
        for (int k = 0; k < q; ++k) pv[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k)] = k;
        shuffle_with(pv, rng);
        shuffle_with(pw, rng);
        for (int k = 0; k < q; ++k) h.add_edge(k, pv[static_cast<std::size_t>(k)], pw[static_cast<std::size_t>(k)]);
    }
    while (static_cast<int>(h.edges.size()) < edges) {
        h.add_edge(static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(h.u_count))),
                   static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(h.v_count))),
                   static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(h.w_count))));
    }
    shuffle_with(h.edges, rng);
    return h;
}

inline bin_packing_input random_packing(std::mt19937_64& rng, int max_total) {
    for (;;) {
        bin_packing_input in;
        int total = 0;
        const int count = 1 + static_cast<int>(draw_below(rng, 4));
        for (int k = 0; k < count; ++k) {
            int s = 2 + static_cast<int>(draw_below(rng, 4));
            if (total + s > max_total) break;
            in.items.push_back(s);
            total += s;
        }
        if (in.items.empty()) continue;
        std::vector<int> divisors;
        for (int b = 2; b <= total; ++b) {
            if (total % b == 0) divisors.push_back(b);
        }
        in.bin = divisors[draw_below(rng, divisors.size())];
        return in;
    }
}

// Canonical form of a graph on 6 or fewer vertices under relabelling.
inline std::uint32_t canonical_mask(int m, std::uint32_t mask) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) perm[static_cast<std::size_t>(k)] = k;
    std::vector<std::array<int, 2>> pairs;
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) pairs.push_back({u, v});
    }
    std::vector<std::vector<int>> index(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        index[static_cast<std::size_t>(pairs[k][0])][static_cast<std::size_t>(pairs[k][1])] = static_cast<int>(k);
        index[static_cast<std::size_t>(pairs[k][1])][static_cast<std::size_t>(pairs[k][0])] = static_cast<int>(k);
    }
    std::uint32_t best = ~0U;
    do {
        std::uint32_t image = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask >> k & 1U) {
                image |= 1U << index[static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[k][0])])]
                                    [static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[k][1])])];
            }
        }
        best = std::min(best, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace testing_support
