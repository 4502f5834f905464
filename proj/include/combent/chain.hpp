#pragma once

#include <cmath>

#include "combent/errors.hpp"

namespace comb {

inline constexpr double pi = 3.14159265358979323846;

/// Critical-regime parameters of the XX chain. The magnetic field is
/// h = cos k with the Fermi angle k in [0, pi].
struct ChainParams {
  double k;

  explicit ChainParams(double k_) : k(k_) {
    if (!(k >= 0.0 && k <= pi))
      throw validation_error("ChainParams: k must lie in [0, pi]");
  }

  static ChainParams from_field(double h) {
    if (!(std::abs(h) <= 1.0))
      throw validation_error("ChainParams: |h| must be <= 1");
    return ChainParams(std::acos(h));
  }

  double field() const { return std::cos(k); }
};

/// Comb geometry: L teeth at lattice positions 0, p, 2p, ..., (L-1)p.
struct CombSpec {
  int L;
  int p;

  CombSpec(int L_, int p_) : L(L_), p(p_) {
    if (L < 1) throw validation_error("CombSpec: L must be >= 1");
    if (p < 1) throw validation_error("CombSpec: p must be >= 1");
  }
};

}  // namespace comb
