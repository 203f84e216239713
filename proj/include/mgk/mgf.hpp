#pragma once

#include <string>
#include <string_view>

#include "mgk/graph.hpp"

namespace mgk {

// MGF text format, version 1. Line-oriented UTF-8:
//   mgf 1
//   # optional comment
//   v <index> <x> <y>     (indices 0..n-1 in order; 17 significant digits)
//   e <i> <j>             (i < j)
// Fields are single-space separated; a trailing newline is required.

// Parses MGF text. Throws FormatError (with the 1-based line number) on any
// deviation from the grammar, out-of-order vertex indices, or edge endpoints
// outside the declared vertex range.
Graph read_mgf(std::string_view text);

// Serializes a graph to canonical MGF. read_mgf(write_mgf(g)) reproduces g
// exactly: coordinates are written with 17 significant digits.
std::string write_mgf(const Graph& g);

// File helpers; read throws FormatError/Error, write throws Error on I/O
// failure.
Graph read_mgf_file(const std::string& path);
void write_mgf_file(const Graph& g, const std::string& path);

} // namespace mgk
