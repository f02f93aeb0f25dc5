#include "roomassign/covers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace roomassign {

namespace {

void check_vertex(int m, int v) {
    if (v < 0 || v >= m) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, " + std::to_string(m) + ")");
    }
}

std::size_t cell(int m, int u, int v) {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
}

}  // namespace

graph::graph(int vertex_count) : m_(vertex_count) {
    if (m_ < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0);
}

void graph::add_edge(int u, int v) {
    check_vertex(m_, u);
    check_vertex(m_, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adj_[cell(m_, u, v)]) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adj_[cell(m_, u, v)] = adj_[cell(m_, v, u)] = 1;
    ++edge_count_;
}

bool graph::adjacent(int u, int v) const noexcept {
    if (u < 0 || v < 0 || u >= m_ || v >= m_) return false;
    return adj_[cell(m_, u, v)] != 0;
}

int graph::degree(int v) const {
    check_vertex(m_, v);
    int d = 0;
    for (int w = 0; w < m_; ++w) d += adj_[cell(m_, v, w)];
    return d;
}

int graph::min_degree() const {
    int d = m_ == 0 ? 0 : m_;
    for (int v = 0; v < m_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < m_; ++u) {
        for (int v = u + 1; v < m_; ++v) {
            if (adj_[cell(m_, u, v)]) out.emplace_back(u, v);
        }
    }
    return out;
}

digraph::digraph(int vertex_count) : m_(vertex_count) {
    if (m_ < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0);
}

void digraph::add_arc(int tail, int head) {
    check_vertex(m_, tail);
    check_vertex(m_, head);
    if (tail == head) throw std::invalid_argument("loop at vertex " + std::to_string(tail));
    if (adj_[cell(m_, tail, head)]) {
        throw std::invalid_argument("duplicate arc " + std::to_string(tail) + " " + std::to_string(head));
    }
    adj_[cell(m_, tail, head)] = 1;
    ++arc_count_;
}

bool digraph::has_arc(int tail, int head) const noexcept {
    if (tail < 0 || head < 0 || tail >= m_ || head >= m_) return false;
    return adj_[cell(m_, tail, head)] != 0;
}

int digraph::out_degree(int v) const {
    check_vertex(m_, v);
    int d = 0;
    for (int w = 0; w < m_; ++w) d += adj_[cell(m_, v, w)];
    return d;
}

int digraph::in_degree(int v) const {
    check_vertex(m_, v);
    int d = 0;
    for (int w = 0; w < m_; ++w) d += adj_[cell(m_, w, v)];
    return d;
}

bool digraph::has_antiparallel_arcs() const {
    for (int u = 0; u < m_; ++u) {
        for (int v = u + 1; v < m_; ++v) {
            if (adj_[cell(m_, u, v)] && adj_[cell(m_, v, u)]) return true;
        }
    }
    return false;
}

std::vector<std::pair<int, int>> digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < m_; ++u) {
        for (int v = 0; v < m_; ++v) {
            if (adj_[cell(m_, u, v)]) out.emplace_back(u, v);
        }
    }
    return out;
}

digraph symmetric_closure(const graph& g) {
    digraph d(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        d.add_arc(u, v);
        d.add_arc(v, u);
    }
    return d;
}

void hypergraph3::add_edge(int u, int v, int w) {
    if (u < 0 || u >= u_count || v < 0 || v >= v_count || w < 0 || w >= w_count) {
        throw std::invalid_argument("hyperedge (" + std::to_string(u) + ", " + std::to_string(v) + ", " +
                                    std::to_string(w) + ") leaves the tripartition");
    }
    edges.push_back({u, v, w});
}

namespace {

// Partition of the uncovered vertices into triangles v -> a -> b -> v,
// v always the lowest uncovered vertex.
template <class Adjacent>
bool cover_from(int m, std::vector<char>& covered, triangle_certificate& out, budget_meter& meter,
                const Adjacent& adjacent, bool directed) {
    int v = 0;
    while (v < m && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == m) return true;
    covered[static_cast<std::size_t>(v)] = 1;
    for (int a = v + 1; a < m; ++a) {
        if (covered[static_cast<std::size_t>(a)] || !adjacent(v, a)) continue;
        covered[static_cast<std::size_t>(a)] = 1;
        // Undirected: a < b avoids revisiting the same triangle.
        for (int b = directed ? v + 1 : a + 1; b < m; ++b) {
            if (covered[static_cast<std::size_t>(b)] || !adjacent(a, b) || !adjacent(b, v)) continue;
            meter.tick();
            covered[static_cast<std::size_t>(b)] = 1;
            out.push_back({v, a, b});
            if (cover_from(m, covered, out, meter, adjacent, directed)) return true;
            out.pop_back();
            covered[static_cast<std::size_t>(b)] = 0;
        }
        covered[static_cast<std::size_t>(a)] = 0;
    }
    covered[static_cast<std::size_t>(v)] = 0;
    return false;
}

}  // namespace

std::optional<triangle_certificate> triangle_cover(const graph& g, const search_budget& budget) {
    const int m = g.vertex_count();
    if (m % 3 != 0) return std::nullopt;
    budget_meter meter(budget);
    std::vector<char> covered(static_cast<std::size_t>(m), 0);
    triangle_certificate out;
    auto adjacent = [&](int u, int v) { return g.adjacent(u, v); };
    if (!cover_from(m, covered, out, meter, adjacent, false)) return std::nullopt;
    return out;
}

std::optional<triangle_certificate> directed_triangle_cover(const digraph& d, const search_budget& budget) {
    const int m = d.vertex_count();
    if (m % 3 != 0) return std::nullopt;
    budget_meter meter(budget);
    std::vector<char> covered(static_cast<std::size_t>(m), 0);
    triangle_certificate out;
    auto arc = [&](int u, int v) { return d.has_arc(u, v); };
    if (!cover_from(m, covered, out, meter, arc, true)) return std::nullopt;
    return out;
}

namespace {

bool match_from(const hypergraph3& h, std::vector<char>& used_u, std::vector<char>& used_v,
                std::vector<char>& used_w, matching_certificate& out, budget_meter& meter) {
    int u = 0;
    while (u < h.u_count && used_u[static_cast<std::size_t>(u)]) ++u;
    if (u == h.u_count) return true;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const auto [eu, ev, ew] = h.edges[e];
        if (eu != u || used_v[static_cast<std::size_t>(ev)] || used_w[static_cast<std::size_t>(ew)]) continue;
        meter.tick();
        used_u[static_cast<std::size_t>(eu)] = used_v[static_cast<std::size_t>(ev)] =
            used_w[static_cast<std::size_t>(ew)] = 1;
        out.push_back(static_cast<int>(e));
        if (match_from(h, used_u, used_v, used_w, out, meter)) return true;
        out.pop_back();
        used_u[static_cast<std::size_t>(eu)] = used_v[static_cast<std::size_t>(ev)] =
            used_w[static_cast<std::size_t>(ew)] = 0;
    }
    return false;
}

}  // namespace

std::optional<matching_certificate> perfect_3dm(const hypergraph3& h, const search_budget& budget) {
    if (h.u_count != h.v_count || h.v_count != h.w_count) return std::nullopt;
    budget_meter meter(budget);
    std::vector<char> used_u(static_cast<std::size_t>(h.u_count), 0);
    std::vector<char> used_v(static_cast<std::size_t>(h.v_count), 0);
    std::vector<char> used_w(static_cast<std::size_t>(h.w_count), 0);
    matching_certificate out;
    if (!match_from(h, used_u, used_v, used_w, out, meter)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct packer {
    const std::vector<int>& sizes;        // descending
    const std::vector<int>& original;     // index into input items
    int bin;
    std::vector<int> load;
    std::vector<std::vector<int>> content;
    budget_meter& meter;

    bool place(std::size_t k) {
        if (k == sizes.size()) return true;
        for (std::size_t b = 0; b < load.size(); ++b) {
            if (load[b] + sizes[k] > bin) continue;
            // Bins with equal load are interchangeable.
            bool repeat = false;
            for (std::size_t e = 0; e < b; ++e) {
                if (load[e] == load[b]) {
                    repeat = true;
                    break;
                }
            }
            if (repeat) continue;
            meter.tick();
            load[b] += sizes[k];
            content[b].push_back(original[k]);
            if (place(k + 1)) return true;
            content[b].pop_back();
            load[b] -= sizes[k];
        }
        return false;
    }
};

}  // namespace

std::optional<packing_certificate> unary_bin_pack(const bin_packing_input& input, const search_budget& budget,
                                                  long unary_limit) {
    if (input.bin <= 0) throw std::invalid_argument("bin size must be positive");
    long total = 0;
    for (int s : input.items) {
        if (s <= 0) throw std::invalid_argument("item sizes must be positive");
        total += s;
    }
    if (input.bin > unary_limit || total > unary_limit) {
        throw std::invalid_argument("unary input exceeds the size limit of " + std::to_string(unary_limit));
    }
    if (total % input.bin != 0) return std::nullopt;
    if (std::any_of(input.items.begin(), input.items.end(), [&](int s) { return s > input.bin; })) {
        return std::nullopt;
    }
    std::vector<int> original(input.items.size());
    std::iota(original.begin(), original.end(), 0);
    std::stable_sort(original.begin(), original.end(),
                     [&](int a, int b) { return input.items[static_cast<std::size_t>(a)] > input.items[static_cast<std::size_t>(b)]; });
    std::vector<int> sizes;
    for (int idx : original) sizes.push_back(input.items[static_cast<std::size_t>(idx)]);
    const auto bins = static_cast<std::size_t>(total / input.bin);
    budget_meter meter(budget);
    packer p{sizes, original, input.bin, std::vector<int>(bins, 0), std::vector<std::vector<int>>(bins), meter};
    if (!p.place(0)) return std::nullopt;
    for (auto& c : p.content) std::sort(c.begin(), c.end());
    std::sort(p.content.begin(), p.content.end());
    return p.content;
}

bool is_triangle_cover(const graph& g, const triangle_certificate& cert) {
    std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& t : cert) {
        for (int k = 0; k < 3; ++k) {
            if (t[k] < 0 || t[k] >= g.vertex_count()) return false;
            ++hits[static_cast<std::size_t>(t[k])];
            if (!g.adjacent(t[k], t[(k + 1) % 3])) return false;
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool is_directed_triangle_cover(const digraph& d, const triangle_certificate& cert) {
    std::vector<int> hits(static_cast<std::size_t>(d.vertex_count()), 0);
    for (const auto& t : cert) {
        for (int k = 0; k < 3; ++k) {
            if (t[k] < 0 || t[k] >= d.vertex_count()) return false;
            ++hits[static_cast<std::size_t>(t[k])];
            if (!d.has_arc(t[k], t[(k + 1) % 3])) return false;
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool is_perfect_matching(const hypergraph3& h, const matching_certificate& cert) {
    std::vector<int> hu(static_cast<std::size_t>(h.u_count), 0);
    std::vector<int> hv(static_cast<std::size_t>(h.v_count), 0);
    std::vector<int> hw(static_cast<std::size_t>(h.w_count), 0);
    for (int e : cert) {
        if (e < 0 || static_cast<std::size_t>(e) >= h.edges.size()) return false;
        const auto& t = h.edges[static_cast<std::size_t>(e)];
        ++hu[static_cast<std::size_t>(t[0])];
        ++hv[static_cast<std::size_t>(t[1])];
        ++hw[static_cast<std::size_t>(t[2])];
    }
    auto once = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; }); };
    return once(hu) && once(hv) && once(hw);
}

bool is_bin_packing(const bin_packing_input& input, const packing_certificate& cert) {
    std::vector<int> hits(input.items.size(), 0);
    for (const auto& bin : cert) {
        long sum = 0;
        for (int idx : bin) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= input.items.size()) return false;
            ++hits[static_cast<std::size_t>(idx)];
            sum += input.items[static_cast<std::size_t>(idx)];
        }
        if (sum != input.bin) return false;
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace roomassign
