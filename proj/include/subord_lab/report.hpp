#pragma once

// JSON records for intervals, verdicts and verification reports. Numbers are
// written with 17 significant digits; non-finite values become null.

#include <cmath>
#include <string>

#include <json.hpp>

#include "subord_lab/bounds.hpp"
#include "subord_lab/proofcheck.hpp"
#include "subord_lab/subord.hpp"
#include "subord_lab/textform.hpp"

namespace subord_lab::report {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

namespace detail {

inline void write(std::string& out, const Json& j, int indent, int level) {
  const std::string pad(std::size_t(indent * (level + 1)), ' ');
  const std::string close_pad(std::size_t(indent * level), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write(out, it.value(), indent, level + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(out, j[i], indent, level + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? text::num17(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

inline std::string dump(const Json& j, int indent = 2) {
  std::string out;
  detail::write(out, j, indent, 0);
  out += '\n';
  return out;
}

inline Json bound_value(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline Json to_json(const ParamInterval& p) {
  Json j;
  j["theorem_id"] = p.theorem_id;
  j["lo"] = bound_value(p.lo);
  j["hi"] = bound_value(p.hi);
  j["lo_strict"] = p.lo_strict;
  j["hi_strict"] = p.hi_strict;
  j["empty"] = p.empty();
  if (p.excluded) j["excluded"] = *p.excluded;
  return j;
}

inline Json to_json(const GridSpec& g) {
  Json j;
  j["t_points"] = g.t_points;
  j["k_values"] = g.k_values;
  j["refine"] = g.refine;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["passed"] = r.passed;
  j["min_value"] = bound_value(r.min_value);
  j["argmin"] = {{"t", r.argmin_t}, {"k", r.argmin_k}};
  j["tolerance"] = r.tolerance;
  j["grid"] = to_json(r.grid);
  if (r.endpoint_argmin) j["endpoint_argmin"] = *r.endpoint_argmin;
  if (r.attained) j["attained"] = *r.attained;
  if (r.extremum) j["extremum"] = *r.extremum;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(CPoint z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const SubordVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["r_used"] = v.r_used;
  j["n_used"] = v.n_used;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace subord_lab::report
