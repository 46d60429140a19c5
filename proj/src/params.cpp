#include "bosesemi/params.hpp"

#include <cmath>
#include <sstream>

namespace bosesemi {

void ModelParams::validate() const {
  if (N < 1) throw DomainError("particle number must be >= 1, got " + std::to_string(N));
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be positive and finite");
  if (!std::isfinite(eps) || !std::isfinite(v) || !std::isfinite(g)) {
    throw DomainError("model parameters must be finite");
  }
}

ModelParams ModelParams::with_g_over_ns(int N, double eps, double v, double g_over_ns,
                                        double hbar) {
  ModelParams p{N, eps, v, 0.0, hbar};
  p.g = g_over_ns / p.ns_real();
  return p;
}

std::string ModelParams::describe() const {
  std::ostringstream os;
  os.precision(10);
  os << "N=" << N << " eps=" << eps << " v=" << v << " g=" << g << " hbar=" << hbar;
  return os.str();
}

}  // namespace bosesemi
