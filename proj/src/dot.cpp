#include "sepcert/dot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sepcert {

std::string to_dot(const LabeledGraph& g, std::string_view name) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.label != b.label) return a.label < b.label;
    return a.target < b.target;
  });

  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v + 1;
    if (v == g.base()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : edges)
    out << "  " << e.source + 1 << " -> " << e.target + 1 << " [label=\"" << to_string(e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

void export_dot(const LabeledGraph& g, std::string_view name, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << to_dot(g, name);
  if (!file) throw Error("failed writing " + path);
}

}  // namespace sepcert
