#include "explab/complexes/graph.hpp"

#include <cctype>
#include <sstream>

#include "explab/complexes/union_find.hpp"
#include "explab/exactla/matrix_io.hpp"

namespace explab {

void Graph::add_edge(std::size_t tail, std::size_t head) {
  edges.push_back({tail == head ? GraphEdge::Kind::loop : GraphEdge::Kind::pair, tail, head});
}

void Graph::add_self(std::size_t vertex) {
  edges.push_back({GraphEdge::Kind::loop, vertex, vertex});
}

void Graph::add_null() { edges.push_back({GraphEdge::Kind::null, 0, 0}); }

IntMatrix graph_d0(const Graph& g) {
  IntMatrix d(g.edges.size(), g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const GraphEdge& edge = g.edges[e];
    if (edge.kind == GraphEdge::Kind::null) continue;
    for (std::size_t v : {edge.tail, edge.head}) {
      if (v < 1 || v > g.vertex_count) {
        throw DimensionError("edge " + std::to_string(e + 1) + " uses vertex " +
                             std::to_string(v) + " outside [1, " +
                             std::to_string(g.vertex_count) + "]");
      }
    }
    if (edge.kind == GraphEdge::Kind::loop) {
      d(e, edge.tail - 1) = 1;
    } else {
      d(e, edge.tail - 1) = 1;
      d(e, edge.head - 1) = -1;
    }
  }
  return d;
}

namespace {

struct LineCursor {
  std::string_view line;
  std::size_t lineno;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= line.size();
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    return line.substr(start, pos - start);
  }
  std::size_t column() const { return pos + 1; }
  std::size_t number(const char* what) {
    skip_space();
    const std::size_t col = column();
    const std::string_view w = word();
    if (w.empty()) throw ParseError(std::string("expected ") + what, lineno, col);
    std::size_t value = 0;
    for (char c : w) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(w) + "'",
                         lineno, col);
      }
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
  }
};

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<LineCursor> lines;
  std::size_t lineno = 0;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    LineCursor cur{text.substr(start, end - start), lineno};
    cur.skip_space();
    if (!cur.done() && cur.line[cur.pos] != '#') {
      cur.pos = 0;
      lines.push_back(cur);
    }
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing header 'V E'", 1, 1);
  LineCursor& header = lines[0];
  Graph g;
  g.vertex_count = header.number("vertex count");
  const std::size_t edge_count = header.number("edge count");
  if (!header.done()) throw ParseError("unexpected text after header", header.lineno, header.column());
  if (lines.size() - 1 != edge_count) {
    const std::size_t at = lines.size() > edge_count + 1 ? lines[edge_count + 1].lineno : lineno;
    throw ParseError("expected " + std::to_string(edge_count) + " edge lines, found " +
                         std::to_string(lines.size() - 1),
                     at, 1);
  }
  for (std::size_t e = 1; e < lines.size(); ++e) {
    LineCursor& cur = lines[e];
    cur.skip_space();
    const std::size_t col = cur.column();
    const std::size_t save = cur.pos;
    const std::string_view first = cur.word();
    std::size_t tail = 0, head = 0;
    if (first == "self") {
      tail = head = cur.number("vertex");
      g.add_self(tail);
    } else if (first == "null") {
      g.add_null();
    } else {
      cur.pos = save;
      tail = cur.number("tail vertex");
      head = cur.number("head vertex");
      g.add_edge(tail, head);
    }
    if (!cur.done()) throw ParseError("unexpected text after edge", cur.lineno, cur.column());
    for (std::size_t v : {tail, head}) {
      if (g.edges.back().kind != GraphEdge::Kind::null && (v < 1 || v > g.vertex_count)) {
        throw ParseError("vertex " + std::to_string(v) + " outside [1, " +
                             std::to_string(g.vertex_count) + "]",
                         cur.lineno, col);
      }
    }
  }
  return g;
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    switch (e.kind) {
      case GraphEdge::Kind::pair:
        os << e.tail << ' ' << e.head << '\n';
        break;
      case GraphEdge::Kind::loop:
        os << "self " << e.tail << '\n';
        break;
      case GraphEdge::Kind::null:
        os << "null\n";
        break;
    }
  }
  return os.str();
}

bool is_incidence_shaped(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int plus = 0, minus = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& e = a(i, j);
      if (e.is_zero()) continue;
      if (e == Integer(1)) {
        ++plus;
      } else if (e == Integer(-1)) {
        ++minus;
      } else {
        return false;
      }
    }
    if (plus > 1 || minus > 1) return false;
  }
  return true;
}

void require_incidence_shape(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!is_incidence_shaped(a.select_rows(std::vector<std::size_t>{i}))) {
      throw RowShapeError("row " + std::to_string(i + 1) + " " + format_vector(a.row(i)) +
                              " needs entries in {-1,0,1} with at most one 1 and one -1",
                          i + 1);
    }
  }
}

Graph incidence_graph(const IntMatrix& a) {
  require_incidence_shape(a);
  Graph g;
  g.vertex_count = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) support.push_back(j + 1);
    if (support.empty()) {
      g.add_null();
    } else if (support.size() == 1) {
      g.add_self(support[0]);
    } else {
      // Orientation is irrelevant for connectivity; keep +1 as the tail.
      const bool first_positive = a(i, support[0] - 1) == Integer(1);
      g.add_edge(first_positive ? support[0] : support[1], first_positive ? support[1] : support[0]);
    }
  }
  return g;
}

LatticeBasis incidence_kernel_basis(const IntMatrix& a) {
  const Graph g = incidence_graph(a);
  const std::size_t n = g.vertex_count;
  DisjointSet dsu(n);
  std::vector<bool> self(n, false);
  for (const auto& e : g.edges) {
    if (e.kind == GraphEdge::Kind::pair) dsu.unite(e.tail - 1, e.head - 1);
    if (e.kind == GraphEdge::Kind::loop) self[e.tail - 1] = true;
  }
  std::vector<bool> tainted(n, false);
  for (std::size_t v = 0; v < n; ++v)
    if (self[v]) tainted[dsu.find(v)] = true;
  std::vector<IntVector> rows;
  std::vector<std::size_t> row_of_root(n, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = dsu.find(v);
    if (tainted[root]) continue;
    if (row_of_root[root] == static_cast<std::size_t>(-1)) {
      row_of_root[root] = rows.size();
      rows.emplace_back(n, Integer(0));
    }
    rows[row_of_root[root]][v] = 1;
  }
  IntMatrix basis(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t v = 0; v < n; ++v) basis(r, v) = rows[r][v];
  return LatticeBasis(std::move(basis));
}

}  // namespace explab
