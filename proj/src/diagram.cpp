#include "gentlekit/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gentlekit {

namespace {

struct Node {
  double x = 0, y = 0;
  std::string label;
};

struct Edge {
  size_t from = 0, to = 0;  // arrow drawn from module-source to module-target
  std::string label;
};

std::string render_dot(const std::vector<Node>& nodes, const std::vector<Edge>& edges) {
  std::ostringstream out;
  out << "digraph zigzag {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << nodes[i].label << "\"];\n";
  for (const Edge& e : edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string render_svg(const std::vector<Node>& nodes, const std::vector<Edge>& edges) {
  const double sx = 80, sy = 60, margin = 40;
  double maxx = 0, maxy = 0;
  for (const Node& n : nodes) {
    maxx = std::max(maxx, n.x);
    maxy = std::max(maxy, n.y);
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << static_cast<int>(maxx * sx + 2 * margin) << "\" height=\""
      << static_cast<int>(maxy * sy + 2 * margin) << "\">\n";
  out << "<defs><marker id=\"tip\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L7,3 L0,6 z\"/></marker></defs>\n";
  auto px = [&](double x) { return margin + x * sx; };
  auto py = [&](double y) { return margin + y * sy; };
  for (const Edge& e : edges) {
    const Node& a = nodes[e.from];
    const Node& b = nodes[e.to];
    double dx = px(b.x) - px(a.x), dy = py(b.y) - py(a.y);
    double len = std::max(1.0, std::sqrt(dx * dx + dy * dy));
    double ux = dx / len, uy = dy / len;
    out << "<line class=\"arrow\" x1=\"" << px(a.x) + 14 * ux << "\" y1=\"" << py(a.y) + 14 * uy
        << "\" x2=\"" << px(b.x) - 14 * ux << "\" y2=\"" << py(b.y) - 14 * uy
        << "\" stroke=\"black\" marker-end=\"url(#tip)\"/>\n";
    out << "<text class=\"edge-label\" x=\"" << (px(a.x) + px(b.x)) / 2 + 6 << "\" y=\""
        << (py(a.y) + py(b.y)) / 2 - 6 << "\" font-size=\"11\">" << e.label << "</text>\n";
  }
  for (const Node& n : nodes) {
    out << "<circle class=\"node\" cx=\"" << px(n.x) << "\" cy=\"" << py(n.y)
        << "\" r=\"12\" fill=\"white\" stroke=\"black\"/>\n";
    out << "<text class=\"node-label\" x=\"" << px(n.x) << "\" y=\"" << py(n.y) + 4
        << "\" text-anchor=\"middle\" font-size=\"12\">" << n.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void layout_string(const GentleQuiver& q, const StringWord& w, std::vector<Node>& nodes,
                   std::vector<Edge>& edges) {
  // Peaks up, valleys down: follow the letter directions.
  double y = 0;
  for (size_t i = 0; i < w.positions(); ++i) {
    if (i > 0) y += w.letters()[i - 1].inverse ? -1 : 1;
    nodes.push_back(Node{static_cast<double>(i), y, q.vertex_name(w.vertex(i))});
  }
  double miny = 0;
  for (const Node& n : nodes) miny = std::min(miny, n.y);
  for (Node& n : nodes) n.y -= miny;
  for (size_t i = 0; i < w.length(); ++i) {
    const Letter& l = w.letters()[i];
    Edge e;
    e.from = l.inverse ? i + 1 : i;
    e.to = l.inverse ? i : i + 1;
    e.label = q.arrow(l.arrow).name;
    edges.push_back(e);
  }
}

void layout_homotopy(const GentleQuiver& q, const HomotopyString& h, std::vector<Node>& nodes,
                     std::vector<Edge>& edges) {
  int maxdeg = 0;
  for (size_t i = 0; i < h.crossings(); ++i) maxdeg = std::max(maxdeg, h.degree(i));
  for (size_t i = 0; i < h.crossings(); ++i) {
    nodes.push_back(Node{static_cast<double>(i), static_cast<double>(maxdeg - h.degree(i)),
                         q.vertex_name(h.vertex(i)) + " [" + std::to_string(h.degree(i)) + "]"});
  }
  for (size_t i = 0; i < h.letter_count(); ++i) {
    const HomotopyLetter& l = h.letters()[i];
    Edge e;
    // differentials run from the lower-degree crossing to the higher one
    e.from = l.inverse ? i : i + 1;
    e.to = l.inverse ? i + 1 : i;
    e.label = q.format_path(l.path);
    edges.push_back(e);
  }
}

}  // namespace

std::string string_to_dot(const GentleQuiver& q, const StringWord& w) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  layout_string(q, w, nodes, edges);
  return render_dot(nodes, edges);
}

std::string string_to_svg(const GentleQuiver& q, const StringWord& w) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  layout_string(q, w, nodes, edges);
  return render_svg(nodes, edges);
}

std::string homotopy_to_dot(const GentleQuiver& q, const HomotopyString& h) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  layout_homotopy(q, h, nodes, edges);
  return render_dot(nodes, edges);
}

std::string homotopy_to_svg(const GentleQuiver& q, const HomotopyString& h) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  layout_homotopy(q, h, nodes, edges);
  return render_svg(nodes, edges);
}

}  // namespace gentlekit
