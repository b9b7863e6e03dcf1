#pragma once

#include <string>

#include <json.hpp>

#include "critline/complex.hpp"
#include "critline/eval_result.hpp"
#include "critline/rootscan.hpp"

namespace critline {

using ojson = nlohmann::ordered_json;

// One function evaluation as reported by `critline eval`.
struct EvalReport {
  std::string fn;
  Complex z;
  Complex value;
  double abs_error_estimate = 0.0;
  int terms_used = 0;
};

// One verification suite run as reported by `critline verify`.
struct VerifySummary {
  std::string suite;
  long samples = 0;
  double max_residual = 0.0;
  bool pass = false;
};

ojson to_json(const Complex& z);
ojson to_json(const EvalReport& r);
ojson to_json(const VerifySummary& s);
ojson to_json(const Bracket& b);
ojson to_json(const ZeroRecord& r);
ojson to_json(const GridReport& g);
ojson to_json(const CurveSegment& s);
ojson to_json(const CurveReport& r);

Complex complex_from_json(const ojson& j);
EvalReport eval_report_from_json(const ojson& j);
VerifySummary verify_summary_from_json(const ojson& j);
Bracket bracket_from_json(const ojson& j);
ZeroRecord zero_record_from_json(const ojson& j);
GridReport grid_report_from_json(const ojson& j);
CurveSegment curve_segment_from_json(const ojson& j);
CurveReport curve_report_from_json(const ojson& j);

const char* locus_kind_name(LocusKind kind);
LocusKind locus_kind_from_name(const std::string& name);

}  // namespace critline
