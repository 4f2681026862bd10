#pragma once

#include <string>
#include <vector>

#include "explab/complexes/graph.hpp"
#include "explab/complexes/presentation.hpp"
#include "explab/exactla/matrix.hpp"

namespace explab {

// C^0 -d0-> C^1 -d1-> C^2 with d0: cells(1) x cells(0), d1: cells(2) x cells(1).
class CochainComplex {
 public:
  // Throws DimensionError on incompatible shapes and CochainError unless
  // d1 * d0 = 0.
  CochainComplex(IntMatrix d0, IntMatrix d1, std::string name = {});

  const IntMatrix& d0() const noexcept { return d0_; }
  const IntMatrix& d1() const noexcept { return d1_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t vertices() const noexcept { return d0_.cols(); }
  std::size_t edges() const noexcept { return d0_.rows(); }
  std::size_t faces() const noexcept { return d1_.rows(); }

 private:
  IntMatrix d0_;
  IntMatrix d1_;
  std::string name_;
};

// d0 = graph_d0(g); d1 given, or the 0 x E matrix when there are no 2-cells.
CochainComplex graph_complex(const Graph& g, std::string name = {});
CochainComplex graph_complex(const Graph& g, IntMatrix d1, std::string name = {});
// One vertex: d0 is the zero generators x 1 matrix and d1 = presentation_d1.
CochainComplex presentation_complex(const GroupPresentation& p, std::string name = {});

// rank_Q ker d1 == rank_Q im d0.
bool h1_is_trivial(const CochainComplex& c);

}  // namespace explab
