#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "explab/exactla/lattice.hpp"
#include "explab/exactla/matrix.hpp"

namespace explab {

struct GraphEdge {
  enum class Kind {
    pair,  // tail != head: +1 at tail, -1 at head
    loop,  // tail == head, or a "self v" half-edge: single +1
    null,  // zero row
  };
  Kind kind = Kind::pair;
  std::size_t tail = 0;  // 1-based
  std::size_t head = 0;
};

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<GraphEdge> edges;

  void add_edge(std::size_t tail, std::size_t head);
  void add_self(std::size_t vertex);
  void add_null();
};

// One row per edge, one column per vertex. Throws DimensionError for vertex
// ids outside [1, vertex_count].
IntMatrix graph_d0(const Graph& g);

// Text format: "V E", then E lines "tail head", "self v" or "null".
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

// Entries in {-1, 0, 1} with at most one +1 and one -1 per row.
bool is_incidence_shaped(const IntMatrix& a);
// Throws RowShapeError naming the first offending row.
void require_incidence_shape(const IntMatrix& a);

// Graph on the columns of an incidence-shaped matrix: two-entry rows become
// edges and single-entry rows mark their vertex as self-connected.
Graph incidence_graph(const IntMatrix& a);

// Indicator vectors of the connected components with no self-connected
// vertex, ordered by smallest vertex.
LatticeBasis incidence_kernel_basis(const IntMatrix& a);

}  // namespace explab
