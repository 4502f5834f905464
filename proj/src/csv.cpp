#include "combent/csv.hpp"

#include <cstdio>

namespace comb {

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

void emit_metadata(std::string& out, const std::vector<std::string>& metadata) {
  out += "# ";
  out += version_string;
  out += '\n';
  for (const std::string& line : metadata) {
    out += "# ";
    out += line;
    out += '\n';
  }
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRow>& rows, SweepKind kind,
                         const std::vector<std::string>& metadata) {
  std::string out;
  emit_metadata(out, metadata);
  switch (kind) {
    case SweepKind::e1_vs_k:
      out += "k,h,p,e1\n";
      for (const SweepRow& r : rows) {
        out += format_full(*r.k) + ',' + format_full(*r.h) + ',' +
               format_full(r.p) + ',' + format_full(*r.e1) + '\n';
      }
      break;
    case SweepKind::e1_vs_p:
      out += "p,e1,is_integer_p\n";
      for (const SweepRow& r : rows) {
        out += format_full(r.p) + ',' + format_full(*r.e1) + ',' +
               (*r.integer_p ? '1' : '0');
        out += '\n';
      }
      break;
    case SweepKind::e2:
      out += "k,p,e2,terms,tail_bound\n";
      for (const SweepRow& r : rows) {
        out += format_full(*r.k) + ',' + format_full(r.p) + ',' +
               format_full(*r.e2) + ',' + std::to_string(*r.series_terms) +
               ',' + format_full(*r.series_tail) + '\n';
      }
      break;
  }
  return out;
}

std::string fits_to_csv(const std::vector<FitRow>& rows,
                        const std::vector<std::string>& metadata) {
  std::string out;
  emit_metadata(out, metadata);
  out += "p,k,coeff_linear,coeff_log,coeff_const,residual_rms,e1_ref,e2_ref\n";
  for (const FitRow& r : rows) {
    out += std::to_string(r.fit.p) + ',' + format_full(r.fit.params.k) + ',' +
           format_full(r.fit.coeff_linear) + ',' + format_full(r.fit.coeff_log) +
           ',' + format_full(r.fit.coeff_const) + ',' +
           format_full(r.fit.residual_rms) + ',' + format_full(r.e1_ref) + ',' +
           format_full(r.e2_ref) + '\n';
  }
  return out;
}

}  // namespace comb
