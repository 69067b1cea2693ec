#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab::io {

// Text format, 1-based vertices:
//
//   # comment
//   n r
//   v_1 v_2 ... v_r      one edge per line, strictly increasing
//
// Blank lines and lines starting with '#' are ignored anywhere.

/// Throws ParseError (with the offending line) on a malformed header, a
/// vertex outside 1..n, a wrong edge arity, a non-increasing edge or a duplicate.
UniformHypergraph parse_hypergraph(std::istream& in);
UniformHypergraph parse_hypergraph(std::string_view text);
/// Throws Error(InvalidInput) when the file cannot be opened.
UniformHypergraph read_hypergraph(const std::filesystem::path& path);

/// Header then edges in antilex order.
void serialize_hypergraph(const UniformHypergraph& h, std::ostream& out);
std::string serialize_hypergraph(const UniformHypergraph& h);
void write_hypergraph(const UniformHypergraph& h, const std::filesystem::path& path);

}  // namespace shadowlab::io
