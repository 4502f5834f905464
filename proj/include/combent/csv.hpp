#pragma once

#include <string>
#include <vector>

#include "combent/sweep.hpp"

namespace comb {

inline constexpr const char* version_string = "combent 1.0.0";

/// 17 significant digits; round-trip exact for doubles.
std::string format_full(double value);

enum class SweepKind { e1_vs_k, e1_vs_p, e2 };

/// CSV with '#'-prefixed metadata lines, a header row, then data rows.
/// Output is a pure function of its arguments, so identical inputs give
/// byte-identical files.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, SweepKind kind,
                         const std::vector<std::string>& metadata);

struct FitRow {
  ScalingFit fit;
  double e1_ref;
  double e2_ref;  // NaN when undefined (p = 1)
};

std::string fits_to_csv(const std::vector<FitRow>& rows,
                        const std::vector<std::string>& metadata);

}  // namespace comb
