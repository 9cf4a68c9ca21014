// SPDX-License-Identifier: MIT
#include "flg/reference.hpp"

#include <map>

namespace flg {

Digraph digraph_from_named(const std::vector<NamedArc>& arcs) {
  std::map<std::string, int> ids;
  Digraph d;
  auto node = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, d.node_count());
    if (fresh) d.add_node();
    return it->second;
  };
  for (const auto& a : arcs) {
    int t = node(a.tail);
    int h = node(a.head);
    d.add_arc(t, h, a.label);
  }
  return d;
}

std::array<Digraph, 2> reference_preimages_I() {
  return {
      digraph_from_named({{"e", "y", "z"}, {"d", "y", "x"}, {"f", "z", "t"}, {"c", "x", "t"},
                          {"a", "t", "y"}, {"b", "t", "u"}, {"j", "p", "y"}, {"i", "x", "w"},
                          {"h", "q", "z"}, {"g", "u", "v"}}),
      digraph_from_named({{"d", "y", "z"}, {"c", "y", "x"}, {"e", "z", "t"}, {"b", "x", "t"},
                          {"a", "t", "y"}, {"f", "t", "u"}, {"i", "p", "y"}, {"g", "w", "x"},
                          {"j", "z", "q"}, {"h", "u", "v"}}),
  };
}

std::array<Digraph, 2> reference_preimages_Inv() {
  // Nodes of the primed half are named by position; w is shared with j.
  return {
      digraph_from_named({{"c", "t", "z"},      {"d", "x", "t"},      {"b", "z", "q"},
                          {"e", "x", "y"},      {"a", "z", "x"},      {"f", "y", "z"},
                          {"i", "t", "u"},      {"j", "w", "x"},      {"g", "q", "v"},
                          {"h", "p", "y"},      {"a'", "P.c", "P.b"}, {"d'", "P.b", "w"},
                          {"c'", "w", "P.c"},   {"g'", "P.d", "P.g"}, {"b'", "P.c", "P.d"},
                          {"e'", "P.b", "P.e"}, {"i'", "P.a", "P.b"}, {"f'", "P.e", "P.c"},
                          {"h'", "P.f", "P.e"}}),
      digraph_from_named({{"c", "y", "z"},      {"d", "y", "x"},      {"b", "z", "t"},
                          {"e", "x", "t"},      {"a", "t", "y"},      {"f", "t", "u"},
                          {"i", "p", "y"},      {"j", "x", "w"},      {"g", "q", "z"},
                          {"h", "u", "v"},      {"a'", "P.e", "w"},   {"d'", "w", "P.b"},
                          {"c'", "w", "P.c"},   {"g'", "P.d", "P.c"}, {"b'", "P.c", "P.e"},
                          {"e'", "P.b", "P.e"}, {"i'", "P.b", "P.a"}, {"f'", "P.e", "P.f"},
                          {"h'", "P.f", "P.g"}}),
  };
}

Digraph reference_cycle_example() {
  return digraph_from_named({{"a1", "A", "B"},
                             {"a2", "B", "C"},
                             {"a3", "C", "D"},
                             {"a4", "E", "D"},
                             {"a5", "F", "E"},
                             {"a6", "A", "F"},
                             {"b", "D", "C"}});
}

namespace {

std::vector<NamedArc> clause_drawing_out_in_out() {
  return {{"r'", "2", "1"},   {"r", "3", "2"},    {"a", "3", "4"},   {"f", "3", "11"},
          {"a'", "4", "5e"},  {"f'", "11", "12w"}, {"b'", "6", "5w"}, {"e'", "13", "12e"},
          {"b", "7", "6"},    {"e", "14", "13"},  {"s", "8", "7"},   {"t", "14", "15"},
          {"s'", "9", "8"},   {"t'", "15", "16"}, {"c", "7", "10"},  {"d", "10", "14"}};
}

void set_arc(std::vector<NamedArc>& arcs, const std::string& label, const std::string& tail,
             const std::string& head) {
  for (auto& a : arcs) {
    if (a.label == label) {
      a.tail = tail;
      a.head = head;
    }
  }
}

}  // namespace

std::array<Digraph, 5> reference_clause_preimages() {
  auto a = clause_drawing_out_in_out();

  auto b = a;
  set_arc(b, "s", "7", "8");
  set_arc(b, "s'", "8", "9");

  auto c = a;
  set_arc(c, "r'", "1", "2");
  set_arc(c, "r", "2", "3");

  auto d = c;
  set_arc(d, "s", "7", "8");
  set_arc(d, "s'", "8", "9");

  std::vector<NamedArc> e = {
      {"r'", "2", "1"},   {"r", "3", "2"},    {"a", "4", "3"},   {"f", "3", "11"},
      {"a'", "5e", "4"},  {"f'", "11", "12w"}, {"b'", "5w", "6"}, {"e'", "13", "12e"},
      {"b", "6", "10"},   {"e", "14", "13"},  {"s", "7", "6"},   {"t", "15", "14"},
      {"s'", "8", "7"},   {"t'", "16", "15"}, {"c", "10", "7"},  {"d", "14", "10"}};

  return {digraph_from_named(a), digraph_from_named(b), digraph_from_named(c),
          digraph_from_named(d), digraph_from_named(e)};
}

}  // namespace flg
