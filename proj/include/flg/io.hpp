// SPDX-License-Identifier: MIT
#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "flg/graph.hpp"

namespace flg {

// Text formats. Nodes are 1-indexed in files and 0-indexed in memory.
//
//   digraph:  p dgr <n> <m>, then m lines  a <tail> <head> [label]
//   ugraph:   p ugr <n> <m>, then m lines  e <u> <v>, optional  w <v> <p/q>
//
// Lines starting with `c` are comments. Blank lines are ignored.

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_text(std::string_view text);
std::string serialize(const Digraph& d);

UGraph parse_ugraph(std::istream& in);
UGraph parse_ugraph_text(std::string_view text);
std::string serialize(const UGraph& g);

std::string to_dot(const Digraph& d, std::string_view name = "D");
std::string to_dot(const UGraph& g, std::string_view name = "G");

// Whole file into a string. Throws Error when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace flg
