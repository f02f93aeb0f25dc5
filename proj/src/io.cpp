#include "roomassign/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "roomassign/errors.hpp"

namespace roomassign {

namespace {

struct token {
    std::string_view text;
    std::size_t column;
};

struct text_line {
    std::size_t number;
    std::vector<token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
bool is_punct(char c) { return c == '(' || c == ')' || c == ':'; }

// Non-empty lines, comments stripped. '(' ')' ':' are tokens of their own.
std::vector<text_line> lex(std::string_view text) {
    std::vector<text_line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view body = text.substr(start, end - start);
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        text_line line{number, {}};
        std::size_t i = 0;
        while (i < body.size()) {
            if (is_space(body[i])) {
                ++i;
            } else if (is_punct(body[i])) {
                line.tokens.push_back({body.substr(i, 1), i + 1});
                ++i;
            } else {
                std::size_t j = i;
                while (j < body.size() && !is_space(body[j]) && !is_punct(body[j])) ++j;
                line.tokens.push_back({body.substr(i, j - i), i + 1});
                i = j;
            }
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        start = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const std::string& what, const text_line& line, const token& at) {
    throw parse_error(what, line.number, at.column);
}

[[noreturn]] void fail_line(const std::string& what, const text_line& line) {
    throw parse_error(what, line.number, line.tokens.front().column);
}

long parse_long(const token& t, const text_line& line, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        fail("expected " + std::string(what) + ", got '" + std::string(t.text) + "'", line, t);
    }
    return value;
}

int parse_int(const token& t, const text_line& line, const char* what, long lo, long hi) {
    long v = parse_long(t, line, what);
    if (v < lo || v > hi) {
        fail(std::string(what) + " " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]",
             line, t);
    }
    return static_cast<int>(v);
}

void expect_count(const text_line& line, std::size_t count) {
    if (line.tokens.size() != count) {
        const token& at = line.tokens.size() > count ? line.tokens[count] : line.tokens.back();
        fail("'" + std::string(line.tokens.front().text) + "' takes " + std::to_string(count - 1) +
                 " argument(s)",
             line, at);
    }
}

void expect_colon(const text_line& line, std::size_t index) {
    if (line.tokens.size() <= index || line.tokens[index].text != ":") {
        const token& at = line.tokens.size() > index ? line.tokens[index] : line.tokens.back();
        fail("expected ':'", line, at);
    }
}

constexpr long id_limit = 1'000'000;

template <class T>
void set_once(std::optional<T>& slot, T value, const text_line& line) {
    if (slot) fail_line("repeated '" + std::string(line.tokens.front().text) + "' header", line);
    slot = std::move(value);
}

// Header line of a graph-like file: keyword followed by integer arguments.
std::vector<int> header(const std::vector<text_line>& lines, std::string_view keyword, std::size_t args) {
    if (lines.empty()) throw parse_error("empty input, expected '" + std::string(keyword) + "'", 0);
    const auto& line = lines.front();
    if (line.tokens.front().text != keyword) fail_line("expected '" + std::string(keyword) + "'", line);
    expect_count(line, args + 1);
    std::vector<int> out;
    for (std::size_t k = 1; k <= args; ++k) out.push_back(parse_int(line.tokens[k], line, "size", 0, id_limit));
    return out;
}

std::string join_ints(const std::vector<int>& values, int offset = 0) {
    std::string out;
    for (int v : values) {
        out += ' ';
        out += std::to_string(v + offset);
    }
    return out;
}

}  // namespace

instance parse_instance(std::string_view text) {
    const auto lines = lex(text);
    std::optional<int> n;
    std::optional<std::vector<int>> caps;
    std::optional<comparison_mode> mode;
    std::optional<std::pair<bool, bool>> flags;
    const text_line* rooms_line = nullptr;
    std::vector<std::optional<preference_list>> lists;
    std::vector<const text_line*> list_line;

    for (const auto& line : lines) {
        const auto kw = line.tokens.front().text;
        if (kw == "nplayers") {
            expect_count(line, 2);
            set_once(n, parse_int(line.tokens[1], line, "player count", 0, id_limit), line);
            lists.assign(static_cast<std::size_t>(*n), std::nullopt);
            list_line.assign(static_cast<std::size_t>(*n), nullptr);
        } else if (kw == "rooms") {
            std::vector<int> c;
            for (std::size_t k = 1; k < line.tokens.size(); ++k) {
                int cap = parse_int(line.tokens[k], line, "room capacity", 0, id_limit);
                if (cap < 2) fail("room capacity " + std::to_string(cap) + " < 2", line, line.tokens[k]);
                c.push_back(cap);
            }
            set_once(caps, std::move(c), line);
            rooms_line = &line;
        } else if (kw == "mode") {
            expect_count(line, 2);
            const auto v = line.tokens[1].text;
            if (v != "best" && v != "worst") fail("mode must be 'best' or 'worst'", line, line.tokens[1]);
            set_once(mode, v == "best" ? comparison_mode::best : comparison_mode::worst, line);
        } else if (kw == "prefs") {
            expect_count(line, 3);
            const auto s = line.tokens[1].text;
            const auto c = line.tokens[2].text;
            if (s != "strict" && s != "weak") fail("expected 'strict' or 'weak'", line, line.tokens[1]);
            if (c != "complete" && c != "incomplete") {
                fail("expected 'complete' or 'incomplete'", line, line.tokens[2]);
            }
            set_once(flags, std::pair{s == "strict", c == "complete"}, line);
        } else if (kw == "p") {
            if (!n) fail_line("'nplayers' must come before preference lines", line);
            if (!flags) fail_line("'prefs' must come before preference lines", line);
            if (line.tokens.size() < 2) fail_line("missing player id", line);
            const int owner = parse_int(line.tokens[1], line, "player id", 1, *n) - 1;
            if (lists[static_cast<std::size_t>(owner)]) {
                fail("second preference line for player " + std::to_string(owner + 1), line, line.tokens[1]);
            }
            expect_colon(line, 2);
            preference_list list;
            std::vector<char> seen(static_cast<std::size_t>(*n), 0);
            std::optional<std::size_t> open;  // index of '(' token while inside a group
            for (std::size_t k = 3; k < line.tokens.size(); ++k) {
                const auto& t = line.tokens[k];
                if (t.text == "(") {
                    if (open) fail("nested '('", line, t);
                    open = k;
                    list.emplace_back();
                } else if (t.text == ")") {
                    if (!open) fail("unmatched ')'", line, t);
                    if (list.back().empty()) fail("empty tie group", line, t);
                    if (list.back().size() > 1 && flags->first) {
                        fail("tie group in a strict profile", line, line.tokens[*open]);
                    }
                    open.reset();
                } else if (t.text == ":") {
                    fail("unexpected ':'", line, t);
                } else {
                    const int who = parse_int(t, line, "player id", 1, *n) - 1;
                    if (who == owner) fail("player " + std::to_string(owner + 1) + " ranks herself", line, t);
                    if (seen[static_cast<std::size_t>(who)]++) {
                        fail("player " + std::to_string(who + 1) + " listed twice", line, t);
                    }
                    if (open) {
                        list.back().push_back(who);
                    } else {
                        list.push_back({who});
                    }
                }
            }
            if (open) fail("unclosed '('", line, line.tokens[*open]);
            if (flags->second && static_cast<int>(std::count(seen.begin(), seen.end(), 1)) != *n - 1) {
                fail_line("complete profile but player " + std::to_string(owner + 1) + " leaves players unranked",
                          line);
            }
            lists[static_cast<std::size_t>(owner)] = std::move(list);
            list_line[static_cast<std::size_t>(owner)] = &line;
        } else {
            fail_line("unknown directive '" + std::string(kw) + "'", line);
        }
    }

    const std::size_t last = lines.empty() ? 0 : lines.back().number;
    if (!n) throw parse_error("missing 'nplayers' header", last);
    if (!caps) throw parse_error("missing 'rooms' header", last);
    if (!mode) throw parse_error("missing 'mode' header", last);
    if (!flags) throw parse_error("missing 'prefs' header", last);
    long total = 0;
    for (int c : *caps) total += c;
    if (total != *n) {
        throw parse_error("capacity sum " + std::to_string(total) + " does not match " + std::to_string(*n) +
                              " players",
                          rooms_line->number, rooms_line->tokens.front().column);
    }
    std::vector<preference_list> plain;
    for (int i = 0; i < *n; ++i) {
        if (!lists[static_cast<std::size_t>(i)]) {
            throw parse_error("no preference line for player " + std::to_string(i + 1), last);
        }
        plain.push_back(std::move(*lists[static_cast<std::size_t>(i)]));
    }
    instance inst{*n, room_spec(std::move(*caps)), *mode,
                  preference_profile::from_lists(*n, plain, flags->first, flags->second)};
    auto report = validate_instance(inst);
    if (!report.ok()) throw parse_error(report.violations.front(), last);
    return inst;
}

std::string write_instance(const instance& inst) {
    std::ostringstream out;
    out << "nplayers " << inst.n << '\n';
    out << "rooms" << join_ints({inst.rooms.capacities().begin(), inst.rooms.capacities().end()}) << '\n';
    out << "mode " << to_string(inst.mode) << '\n';
    out << "prefs " << (inst.prefs.strict() ? "strict" : "weak") << ' '
        << (inst.prefs.complete() ? "complete" : "incomplete") << '\n';
    for (player_id i = 0; i < inst.n; ++i) {
        out << "p " << i + 1 << " :";
        for (const auto& group : inst.prefs.list_of(i)) {
            if (group.size() == 1) {
                out << ' ' << group.front() + 1;
            } else {
                out << " (" << join_ints(group, 1).substr(1) << ')';
            }
        }
        out << '\n';
    }
    return out.str();
}

assignment parse_assignment(std::string_view text, const instance& inst) {
    const auto lines = lex(text);
    const std::size_t k = inst.rooms.size();
    std::vector<std::optional<coalition>> rooms(k);
    std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
    for (const auto& line : lines) {
        if (line.tokens.front().text != "room") fail_line("expected 'room'", line);
        if (line.tokens.size() < 2) fail_line("missing room number", line);
        const int r = parse_int(line.tokens[1], line, "room number", 1, static_cast<long>(k)) - 1;
        if (rooms[static_cast<std::size_t>(r)]) fail("room " + std::to_string(r + 1) + " given twice", line, line.tokens[1]);
        expect_colon(line, 2);
        coalition members;
        for (std::size_t t = 3; t < line.tokens.size(); ++t) {
            const int p = parse_int(line.tokens[t], line, "player id", 1, inst.n) - 1;
            if (seen[static_cast<std::size_t>(p)]++) {
                fail("player " + std::to_string(p + 1) + " assigned twice", line, line.tokens[t]);
            }
            members.push_back(p);
        }
        const int cap = inst.rooms[static_cast<std::size_t>(r)];
        if (static_cast<int>(members.size()) != cap) {
            fail_line("room " + std::to_string(r + 1) + " has capacity " + std::to_string(cap) + " but " +
                          std::to_string(members.size()) + " members",
                      line);
        }
        rooms[static_cast<std::size_t>(r)] = std::move(members);
    }
    const std::size_t last = lines.empty() ? 0 : lines.back().number;
    assignment a;
    for (std::size_t r = 0; r < k; ++r) {
        if (!rooms[r]) throw parse_error("room " + std::to_string(r + 1) + " missing", last);
        a.rooms.push_back(std::move(*rooms[r]));
    }
    for (player_id p = 0; p < inst.n; ++p) {
        if (!seen[static_cast<std::size_t>(p)]) {
            throw parse_error("player " + std::to_string(p + 1) + " not assigned", last);
        }
    }
    return canonicalize(inst, std::move(a));
}

std::string write_assignment(const instance& inst, const assignment& a) {
    const auto canon = canonicalize(inst, a);
    std::ostringstream out;
    for (std::size_t r = 0; r < canon.rooms.size(); ++r) {
        out << "room " << r + 1 << " :" << join_ints(canon.rooms[r], 1) << '\n';
    }
    return out.str();
}

namespace {

// Shared loop for "graph"/"digraph": pairs of vertex ids after a tag.
template <class Add>
void read_pairs(const std::vector<text_line>& lines, std::string_view tag, int m, Add add) {
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.tokens.front().text != tag) fail_line("expected '" + std::string(tag) + "'", line);
        expect_count(line, 3);
        const int u = parse_int(line.tokens[1], line, "vertex", 0, m - 1);
        const int v = parse_int(line.tokens[2], line, "vertex", 0, m - 1);
        try {
            add(u, v);
        } catch (const std::invalid_argument& e) {
            fail_line(e.what(), line);
        }
    }
}

}  // namespace

graph parse_graph(std::string_view text) {
    const auto lines = lex(text);
    graph g(header(lines, "graph", 1)[0]);
    read_pairs(lines, "e", g.vertex_count(), [&](int u, int v) { g.add_edge(u, v); });
    return g;
}

std::string write_graph(const graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

digraph parse_digraph(std::string_view text) {
    const auto lines = lex(text);
    digraph d(header(lines, "digraph", 1)[0]);
    read_pairs(lines, "a", d.vertex_count(), [&](int u, int v) { d.add_arc(u, v); });
    return d;
}

std::string write_digraph(const digraph& d) {
    std::ostringstream out;
    out << "digraph " << d.vertex_count() << '\n';
    for (auto [u, v] : d.arcs()) out << "a " << u << ' ' << v << '\n';
    return out.str();
}

hypergraph3 parse_hypergraph(std::string_view text) {
    const auto lines = lex(text);
    const auto sizes = header(lines, "hypergraph", 3);
    hypergraph3 h{sizes[0], sizes[1], sizes[2], {}};
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.tokens.front().text != "h") fail_line("expected 'h'", line);
        expect_count(line, 4);
        int idx[3];
        for (int c = 0; c < 3; ++c) {
            idx[c] = static_cast<int>(parse_long(line.tokens[static_cast<std::size_t>(c) + 1], line, "vertex"));
        }
        try {
            h.add_edge(idx[0], idx[1], idx[2]);
        } catch (const std::invalid_argument& e) {
            fail_line(e.what(), line);
        }
    }
    return h;
}

std::string write_hypergraph(const hypergraph3& h) {
    std::ostringstream out;
    out << "hypergraph " << h.u_count << ' ' << h.v_count << ' ' << h.w_count << '\n';
    for (const auto& e : h.edges) out << "h " << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    return out.str();
}

bin_packing_input parse_binpack(std::string_view text) {
    const auto lines = lex(text);
    if (lines.empty()) throw parse_error("empty input, expected 'binpack'", 0);
    const auto& head = lines.front();
    if (head.tokens.front().text != "binpack") fail_line("expected 'binpack'", head);
    expect_count(head, 2);
    const auto& arg = head.tokens[1];
    if (!arg.text.starts_with("b=")) fail("expected 'b=<size>'", head, arg);
    bin_packing_input input;
    input.bin = parse_int({arg.text.substr(2), arg.column + 2}, head, "bin size", 1, id_limit);
    if (lines.size() != 2) {
        if (lines.size() < 2) throw parse_error("missing 'items' line", head.number);
        fail_line("unexpected line after 'items'", lines[2]);
    }
    const auto& items = lines[1];
    if (items.tokens.front().text != "items") fail_line("expected 'items'", items);
    for (std::size_t k = 1; k < items.tokens.size(); ++k) {
        input.items.push_back(parse_int(items.tokens[k], items, "item size", 1, id_limit));
    }
    return input;
}

std::string write_binpack(const bin_packing_input& input) {
    return "binpack b=" + std::to_string(input.bin) + "\nitems" + join_ints(input.items) + '\n';
}

std::string write_triangles(const triangle_certificate& cert) {
    std::string out;
    for (const auto& t : cert) out += "t" + join_ints({t[0], t[1], t[2]}) + '\n';
    return out;
}

std::string write_matching(const hypergraph3& h, const matching_certificate& cert) {
    std::string out;
    for (int e : cert) {
        const auto& edge = h.edges.at(static_cast<std::size_t>(e));
        out += "h" + join_ints({edge[0], edge[1], edge[2]}) + '\n';
    }
    return out;
}

std::string write_packing(const packing_certificate& cert) {
    std::string out;
    for (const auto& bin : cert) out += "bin" + join_ints(bin) + '\n';
    return out;
}

std::string write_trace(const sd_trace& trace) {
    std::string out;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& s = trace.steps[k];
        out += "step " + std::to_string(k + 1) + " : " + std::to_string(s.dictator + 1) + ' ' +
               std::string(to_string(s.action));
        if (!s.chosen.empty()) out += join_ints(s.chosen, 1);
        if (s.room >= 0) out += " @ room " + std::to_string(s.room + 1);
        out += '\n';
    }
    return out;
}

}  // namespace roomassign
