#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "condcap/arc_map.hpp"
#include "condcap/asymptotics.hpp"
#include "condcap/exact_capacity.hpp"

namespace condcap::io {

using json = nlohmann::ordered_json;

/// CSV fields carry 17 significant digits; JSON uses the shortest round-trip form.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json to_json(const CapacityResult& r) {
  return json{{"value", r.value}, {"method", to_string(r.method)}, {"residual", r.residual},
              {"iterations", r.iterations}};
}

inline json to_json(const SeriesBreakdown& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(json{{"label", t.label}, {"value", t.value}});
  json j{{"terms", terms}, {"total", s.total}, {"remainder", s.remainder}};
  if (!s.warning.empty()) j["warning"] = s.warning;
  return j;
}

inline void write_csv(std::ostream& os, const CapacityResult& r) {
  os << "value,method,residual,iterations\n"
     << num(r.value) << ',' << to_string(r.method) << ',' << num(r.residual) << ',' << r.iterations << '\n';
}

inline void write_csv(std::ostream& os, const SeriesBreakdown& s) {
  os << "label,value\n";
  for (const auto& t : s.terms) os << '"' << t.label << "\"," << num(t.value) << '\n';
  os << "\"total\"," << num(s.total) << '\n';
}

inline void write_csv(std::ostream& os, const BoundaryTrace& tr) {
  os << "u_re,u_im,z_re,z_im,side\n";
  for (const auto& s : tr.samples)
    os << num(s.u.real()) << ',' << num(s.u.imag()) << ',' << num(s.z.real()) << ',' << num(s.z.imag()) << ','
       << to_string(s.side) << '\n';
}

struct SweepRow {
  double h, cap_exact, cap_series, abs_err, slope_running;
};

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "h,cap_exact,cap_series,abs_err,slope_running\n";
  for (const auto& r : rows)
    os << num(r.h) << ',' << num(r.cap_exact) << ',' << num(r.cap_series) << ',' << num(r.abs_err) << ','
       << num(r.slope_running) << '\n';
}

}  // namespace condcap::io
