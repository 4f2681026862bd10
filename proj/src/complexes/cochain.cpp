#include "explab/complexes/cochain.hpp"

#include "explab/exactla/normal_form.hpp"

namespace explab {

CochainComplex::CochainComplex(IntMatrix d0, IntMatrix d1, std::string name)
    : d0_(std::move(d0)), d1_(std::move(d1)), name_(std::move(name)) {
  if (d1_.cols() != d0_.rows()) {
    throw DimensionError("d1 has " + std::to_string(d1_.cols()) + " columns but d0 has " +
                         std::to_string(d0_.rows()) + " rows");
  }
  if (!(d1_ * d0_).is_zero()) throw CochainError("d1 * d0 is not zero");
}

CochainComplex graph_complex(const Graph& g, std::string name) {
  return graph_complex(g, IntMatrix(0, g.edges.size()), std::move(name));
}

CochainComplex graph_complex(const Graph& g, IntMatrix d1, std::string name) {
  return CochainComplex(graph_d0(g), std::move(d1), std::move(name));
}

CochainComplex presentation_complex(const GroupPresentation& p, std::string name) {
  return CochainComplex(IntMatrix(p.generators.size(), 1), presentation_d1(p), std::move(name));
}

bool h1_is_trivial(const CochainComplex& c) {
  return c.d1().cols() - rank(c.d1()) == rank(c.d0());
}

}  // namespace explab
