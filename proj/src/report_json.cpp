#include "critline/report_json.hpp"

#include "critline/errors.hpp"

namespace critline {

ojson to_json(const Complex& z) { return ojson{{"re", z.re}, {"im", z.im}}; }

ojson to_json(const EvalReport& r) {
  return ojson{{"fn", r.fn},
               {"z", to_json(r.z)},
               {"value", to_json(r.value)},
               {"abs_error_estimate", r.abs_error_estimate},
               {"terms_used", r.terms_used}};
}

ojson to_json(const VerifySummary& s) {
  return ojson{{"suite", s.suite},
               {"samples", s.samples},
               {"max_residual", s.max_residual},
               {"pass", s.pass}};
}

ojson to_json(const Bracket& b) {
  return ojson{{"t_lo", b.t_lo}, {"t_hi", b.t_hi}, {"f_lo", b.f_lo}, {"f_hi", b.f_hi}};
}

ojson to_json(const ZeroRecord& r) {
  return ojson{{"t", r.t},
               {"residual", r.residual},
               {"iterations", r.iterations},
               {"bracket", to_json(r.bracket)}};
}

ojson to_json(const GridReport& g) {
  ojson cells = ojson::array();
  for (const Complex& c : g.candidate_cells) cells.push_back(to_json(c));
  return ojson{{"region",
                ojson{{"re_lo", g.region.re_lo},
                      {"re_hi", g.region.re_hi},
                      {"t_lo", g.region.t_lo},
                      {"t_hi", g.region.t_hi}}},
               {"step", g.step},
               {"min_abs_xi_offline", g.min_abs_xi_offline},
               {"argmin_point", to_json(g.argmin_point)},
               {"max_sym_residual", g.max_sym_residual},
               {"candidate_cells", cells}};
}

ojson to_json(const CurveSegment& s) {
  ojson pts = ojson::array();
  for (const Complex& p : s.points) pts.push_back(to_json(p));
  return ojson{{"locus", locus_kind_name(s.locus_kind)}, {"points", pts}};
}

ojson to_json(const CurveReport& r) {
  ojson segs = ojson::array();
  for (const CurveSegment& s : r.segments) segs.push_back(to_json(s));
  ojson cands = ojson::array();
  for (const Complex& c : r.candidates) cands.push_back(to_json(c));
  return ojson{{"segments", segs}, {"candidates", cands}};
}

Complex complex_from_json(const ojson& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

EvalReport eval_report_from_json(const ojson& j) {
  return {j.at("fn").get<std::string>(), complex_from_json(j.at("z")),
          complex_from_json(j.at("value")), j.at("abs_error_estimate").get<double>(),
          j.at("terms_used").get<int>()};
}

VerifySummary verify_summary_from_json(const ojson& j) {
  return {j.at("suite").get<std::string>(), j.at("samples").get<long>(),
          j.at("max_residual").get<double>(), j.at("pass").get<bool>()};
}

Bracket bracket_from_json(const ojson& j) {
  return {j.at("t_lo").get<double>(), j.at("t_hi").get<double>(), j.at("f_lo").get<double>(),
          j.at("f_hi").get<double>()};
}

ZeroRecord zero_record_from_json(const ojson& j) {
  return {j.at("t").get<double>(), j.at("residual").get<double>(),
          j.at("iterations").get<int>(), bracket_from_json(j.at("bracket"))};
}

GridReport grid_report_from_json(const ojson& j) {
  GridReport g;
  const ojson& r = j.at("region");
  g.region = {r.at("re_lo").get<double>(), r.at("re_hi").get<double>(),
              r.at("t_lo").get<double>(), r.at("t_hi").get<double>()};
  g.step = j.at("step").get<double>();
  g.min_abs_xi_offline = j.at("min_abs_xi_offline").get<double>();
  g.argmin_point = complex_from_json(j.at("argmin_point"));
  g.max_sym_residual = j.at("max_sym_residual").get<double>();
  for (const ojson& c : j.at("candidate_cells")) g.candidate_cells.push_back(complex_from_json(c));
  return g;
}

CurveSegment curve_segment_from_json(const ojson& j) {
  CurveSegment s;
  s.locus_kind = locus_kind_from_name(j.at("locus").get<std::string>());
  for (const ojson& p : j.at("points")) s.points.push_back(complex_from_json(p));
  return s;
}

CurveReport curve_report_from_json(const ojson& j) {
  CurveReport r;
  for (const ojson& s : j.at("segments")) r.segments.push_back(curve_segment_from_json(s));
  for (const ojson& c : j.at("candidates")) r.candidates.push_back(complex_from_json(c));
  return r;
}

const char* locus_kind_name(LocusKind kind) {
  switch (kind) {
    case LocusKind::V_ZERO:
      return "V_ZERO";
    case LocusKind::W_ZERO:
      return "W_ZERO";
    case LocusKind::V_EQ_W:
      return "V_EQ_W";
  }
  return "V_ZERO";
}

LocusKind locus_kind_from_name(const std::string& name) {
  if (name == "V_ZERO") return LocusKind::V_ZERO;
  if (name == "W_ZERO") return LocusKind::W_ZERO;
  if (name == "V_EQ_W") return LocusKind::V_EQ_W;
  throw DomainError("unknown locus kind: " + name);
}

}  // namespace critline
