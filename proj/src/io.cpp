// SPDX-License-Identifier: MIT
#include "flg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "flg/error.hpp"

namespace flg {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view s, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  }
  return v;
}

// 1-based file index to 0-based node id, with range check.
int node_index(std::string_view s, long long n, int line) {
  long long v = to_int(s, line);
  if (v < 1 || v > n) {
    throw ParseError("node " + std::string(s) + " out of range 1.." + std::to_string(n), line);
  }
  return static_cast<int>(v - 1);
}

struct Header {
  long long n = -1;
  long long m = -1;
};

Header read_header(const std::vector<std::string_view>& tok, std::string_view kind, int line) {
  if (tok.size() != 4 || tok[1] != kind) {
    throw ParseError("malformed header, expected 'p " + std::string(kind) + " <n> <m>'", line);
  }
  Header h{to_int(tok[2], line), to_int(tok[3], line)};
  if (h.n < 0 || h.m < 0) throw ParseError("negative size in header", line);
  if (h.n > 100'000'000 || h.m > 1'000'000'000) throw ParseError("header size too large", line);
  return h;
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
  std::string raw;
  int line = 0;
  Header h;
  Digraph d;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = split_ws(raw);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (h.n >= 0) throw ParseError("duplicate header", line);
      h = read_header(tok, "dgr", line);
      d = Digraph(static_cast<int>(h.n));
    } else if (tok[0] == "a") {
      if (h.n < 0) throw ParseError("arc before header", line);
      if (tok.size() != 3 && tok.size() != 4) throw ParseError("expected 'a <tail> <head> [label]'", line);
      int t = node_index(tok[1], h.n, line);
      int hd = node_index(tok[2], h.n, line);
      if (t == hd) throw ParseError("self-loop at node " + std::string(tok[1]), line);
      if (d.arc_count() >= h.m) throw ParseError("more arcs than the header declares", line);
      d.add_arc(t, hd, tok.size() == 4 ? std::string(tok[3]) : std::string());
    } else {
      throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line);
    }
  }
  if (h.n < 0) throw ParseError("missing header 'p dgr <n> <m>'");
  if (d.arc_count() != h.m) {
    throw ParseError("header declares " + std::to_string(h.m) + " arcs, found " +
                     std::to_string(d.arc_count()));
  }
  return d;
}

Digraph parse_digraph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_digraph(in);
}

std::string serialize(const Digraph& d) {
  std::ostringstream out;
  out << "p dgr " << d.node_count() << ' ' << d.arc_count() << '\n';
  for (int i = 0; i < d.arc_count(); ++i) {
    out << "a " << d.arc(i).tail + 1 << ' ' << d.arc(i).head + 1;
    if (!d.label(i).empty()) out << ' ' << d.label(i);
    out << '\n';
  }
  return out.str();
}

UGraph parse_ugraph(std::istream& in) {
  std::string raw;
  int line = 0;
  Header h;
  UGraph g;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = split_ws(raw);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (h.n >= 0) throw ParseError("duplicate header", line);
      h = read_header(tok, "ugr", line);
      g = UGraph(static_cast<int>(h.n));
    } else if (tok[0] == "e") {
      if (h.n < 0) throw ParseError("edge before header", line);
      if (tok.size() != 3) throw ParseError("expected 'e <u> <v>'", line);
      int u = node_index(tok[1], h.n, line);
      int v = node_index(tok[2], h.n, line);
      if (u == v) throw ParseError("self-loop at node " + std::string(tok[1]), line);
      if (g.edge_count() >= h.m) throw ParseError("more edges than the header declares", line);
      if (!g.add_edge(u, v)) throw ParseError("duplicate edge", line);
    } else if (tok[0] == "w") {
      if (h.n < 0) throw ParseError("weight before header", line);
      if (tok.size() != 3) throw ParseError("expected 'w <v> <num>/<den>'", line);
      int v = node_index(tok[1], h.n, line);
      try {
        g.set_weight(v, parse_rational(tok[2]));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
    } else {
      throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line);
    }
  }
  if (h.n < 0) throw ParseError("missing header 'p ugr <n> <m>'");
  if (g.edge_count() != h.m) {
    throw ParseError("header declares " + std::to_string(h.m) + " edges, found " +
                     std::to_string(g.edge_count()));
  }
  return g;
}

UGraph parse_ugraph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ugraph(in);
}

std::string serialize(const UGraph& g) {
  std::ostringstream out;
  out << "p ugr " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (g.weighted()) {
    for (int v = 0; v < g.node_count(); ++v) {
      const Rational w = g.weight(v);
      out << "w " << v + 1 << ' ' << w.numerator() << '/' << w.denominator() << '\n';
    }
  }
  return out.str();
}

std::string to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.node_count(); ++v) out << "  n" << v + 1 << ";\n";
  for (int i = 0; i < d.arc_count(); ++i) {
    out << "  n" << d.arc(i).tail + 1 << " -> n" << d.arc(i).head + 1 << " [label=\"";
    if (d.label(i).empty()) {
      out << i + 1;
    } else {
      out << d.label(i);
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const UGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out << "  n" << v + 1;
    if (g.weighted()) out << " [label=\"" << v + 1 << " (" << to_string(g.weight(v)) << ")\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  n" << u + 1 << " -- n" << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace flg
