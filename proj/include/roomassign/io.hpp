#pragma once

#include <string>
#include <string_view>

#include "roomassign/core.hpp"
#include "roomassign/covers.hpp"
#include "roomassign/dictatorship.hpp"

namespace roomassign {

// Line-based text formats. '#' starts a comment. Player ids are 1-based in
// instance and assignment files; graph-like inputs use 0-based vertices.
//
//   nplayers 9
//   rooms 3 3 3
//   mode best
//   prefs strict complete
//   p 1 : 5 4 7 3 9 6 8 2
//   p 2 : (1 4) 5 ...          parenthesized groups are ties
//
//   room 1 : 1 2 5
//
//   graph 3        digraph 3      hypergraph 2 2 2     binpack b=3
//   e 0 1          a 0 1          h 0 0 0              items 2 2 2

/// Parses and validates an instance; every violation is a parse_error.
instance parse_instance(std::string_view text);
std::string write_instance(const instance& inst);

/// Rooms may come in any order but each room's size must match the
/// capacity of the slot it names. The result is canonical.
assignment parse_assignment(std::string_view text, const instance& inst);
std::string write_assignment(const instance& inst, const assignment& a);

graph parse_graph(std::string_view text);
std::string write_graph(const graph& g);

digraph parse_digraph(std::string_view text);
std::string write_digraph(const digraph& d);

hypergraph3 parse_hypergraph(std::string_view text);
std::string write_hypergraph(const hypergraph3& h);

bin_packing_input parse_binpack(std::string_view text);
std::string write_binpack(const bin_packing_input& input);

/// "t a b c" per triangle (0-based vertices).
std::string write_triangles(const triangle_certificate& cert);
/// "h u v w" per chosen hyperedge.
std::string write_matching(const hypergraph3& h, const matching_certificate& cert);
/// "bin i j ..." per bin, 0-based item indices.
std::string write_packing(const packing_certificate& cert);
/// One line per round, 1-based ids.
std::string write_trace(const sd_trace& trace);

}  // namespace roomassign
