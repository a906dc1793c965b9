#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "condcap/condcap.hpp"
#include "condcap/io.hpp"
#include "condcap/verify/acceptance.hpp"

namespace {

using namespace condcap;

enum Exit { kOk = 0, kConfig = 2, kNumeric = 3, kVerify = 4 };

struct Options {
  std::optional<double> rho, arc_length, gap, L, R, gamma, cap;
  bool linear = false;
  bool log_spaced = true;
  double h_min = 1e-4, h_max = 1e-2;
  int points = 12;
  std::string grid = "256x256";
  double r_out = 0.0;
  std::string format;
  std::string output;
  std::string dump_field;
  int only = 0;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output);
  need(static_cast<bool>(f), "cannot open output file " + o.output);
  f << text;
}

template <class T>
std::string render(const Options& o, const T& v, const char* default_format) {
  const std::string fmt = o.format.empty() ? default_format : o.format;
  need(fmt == "json" || fmt == "csv", "--format must be csv or json");
  std::ostringstream os;
  if (fmt == "json")
    os << io::to_json(v).dump(2) << '\n';
  else
    io::write_csv(os, v);
  return os.str();
}

NormalizedGeometry geometry(const Options& o) {
  if (o.gamma && o.R) return normalize_gamma_R(*o.gamma, *o.R);
  need(o.rho && o.arc_length && o.gap, "give --rho, --arc-length and --gap, or --gamma and --R");
  return normalize(ArcCondenser{*o.rho, *o.arc_length, *o.gap});
}

double linear_length(const Options& o) {
  need(o.L.has_value() || o.arc_length.has_value(), "linear condenser needs --L");
  return o.L ? *o.L : *o.arc_length;
}

std::pair<int, int> parse_grid(const std::string& g) {
  int a = 0, b = 0;
  char x = 0;
  std::istringstream is(g);
  need(static_cast<bool>(is >> a >> x >> b) && (x == 'x' || x == 'X'), "--grid must look like 256x256");
  return {a, b};
}

int cmd_exact(const Options& o) {
  if (o.linear) {
    need(o.gap.has_value(), "--gap is required");
    emit(o, render(o, sc_solve(linear_length(o), *o.gap), "json"));
  } else {
    emit(o, render(o, solve_capacity(geometry(o)), "json"));
  }
  return kOk;
}

int cmd_sc(const Options& o) {
  need(o.gap.has_value(), "--gap is required");
  emit(o, render(o, sc_solve(linear_length(o), *o.gap), "json"));
  return kOk;
}

int cmd_series(const Options& o) {
  need(o.gap.has_value(), "--gap is required");
  SeriesBreakdown s;
  if (o.linear) {
    s = linear_series(linear_length(o), *o.gap);
  } else {
    need(o.rho && o.arc_length, "--rho and --arc-length are required");
    s = arc_series(*o.rho, *o.arc_length, *o.gap);
  }
  emit(o, render(o, s, "json"));
  return kOk;
}

int cmd_oracle(const Options& o) {
  const auto [nr, nt] = parse_grid(o.grid);
  FdProblem p{0.0, 0.0, o.r_out, nr, nt};
  if (o.gamma && o.R) {
    p.gamma = *o.gamma;
    p.R = *o.R;
  } else {
    const NormalizedGeometry g = geometry(o);
    p.gamma = g.gamma;
    p.R = g.R;
  }
  const CapacityResult r = fd_capacity(p);
  if (!o.dump_field.empty()) {
    std::ofstream f(o.dump_field);
    need(static_cast<bool>(f), "cannot open " + o.dump_field);
    write_field_csv(f, fd_solve(p));
  }
  emit(o, render(o, r, "json"));
  return kOk;
}

int cmd_sweep(const Options& o) {
  need(o.points >= 2, "--points must be at least 2");
  need(o.h_min > 0.0 && o.h_min < o.h_max, "need 0 < --h-min < --h-max");
  std::vector<double> hs(o.points);
  for (int i = 0; i < o.points; ++i) {
    const double t = static_cast<double>(i) / (o.points - 1);
    hs[i] = o.log_spaced ? o.h_min * std::pow(o.h_max / o.h_min, t) : o.h_min + t * (o.h_max - o.h_min);
  }
  hs.front() = o.h_min;
  hs.back() = o.h_max;
  std::vector<io::SweepRow> rows;
  std::vector<double> xs, es;
  for (double h : hs) {
    double ex, se;
    if (o.linear) {
      const double L = linear_length(o);
      ex = sc_solve(L, h).value;
      se = linear_series(L, h).total;
    } else {
      need(o.rho && o.arc_length, "--rho and --arc-length are required");
      ex = solve_capacity(ArcCondenser{*o.rho, *o.arc_length, h}).value;
      se = arc_series(*o.rho, *o.arc_length, h).total;
    }
    const double err = std::abs(ex - se);
    xs.push_back(h);
    es.push_back(err);
    const double slope = xs.size() >= 2 ? verify::loglog_slope(xs, es) : std::nan("");
    rows.push_back({h, ex, se, err, slope});
  }
  std::ostringstream os;
  io::write_csv(os, rows);
  emit(o, os.str());
  return kOk;
}

int cmd_trace(const Options& o) {
  need(o.R && o.cap, "--R and --cap are required");
  const int n = o.points >= 8 ? o.points : 8;
  const BoundaryTrace tr = trace_boundary(RectangleMapParams::from_capacity(*o.cap, *o.R), n);
  std::ostringstream os;
  io::write_csv(os, tr);
  emit(o, os.str());
  return kOk;
}

int cmd_verify(const Options& o) {
  bool all = true;
  std::ostringstream os;
  for (const auto& c : verify::criteria()) {
    if (o.only && c.id != o.only) continue;
    const verify::CriterionResult r = verify::run_criterion(c);
    all = all && r.passed;
    os << verify::format_line(r) << '\n';
    if (o.output.empty()) std::cout << verify::format_line(r) << std::endl;
  }
  if (!o.output.empty()) emit(o, os.str());
  return all ? kOk : kVerify;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--rho", o.rho, "mid-arc radius");
  sub->add_option("--arc-length", o.arc_length, "plate length measured on the mid circle");
  sub->add_option("--gap", o.gap, "distance between the plates");
  sub->add_flag("--linear", o.linear, "parallel-segment condenser");
  sub->add_option("--L", o.L, "segment length of the linear condenser");
  sub->add_option("--R", o.R, "plate radius ratio of the normalized condenser");
  sub->add_option("--gamma", o.gamma, "half angular spread of the plates");
  sub->add_option("--cap", o.cap, "capacity value (trace)");
  sub->add_option("--h-min", o.h_min, "smallest gap in a sweep");
  sub->add_option("--h-max", o.h_max, "largest gap in a sweep");
  sub->add_option("--points", o.points, "sweep points, or samples per side for trace");
  sub->add_flag("--log,!--no-log", o.log_spaced, "log-spaced sweep (default)");
  sub->add_option("--grid", o.grid, "finite-difference grid NRxNT");
  sub->add_option("--r-out", o.r_out, "outer truncation radius (default 50 R)");
  sub->add_option("--format", o.format, "csv or json");
  sub->add_option("--output", o.output, "write to this file instead of stdout");
  sub->add_option("--dump-field", o.dump_field, "write the potential r,theta,omega to this CSV");
  sub->add_option("--only", o.only, "verify: run a single criterion");
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::GeometryInvalid:
    case ErrorKind::ArgOutOfRange:
    case ErrorKind::ModulusOutOfRange:
    case ErrorKind::NomeOutOfRange:
    case ErrorKind::OutsideLemmaRange:
    case ErrorKind::CharacteristicPole:
    case ErrorKind::ImagArgTooLarge:
      return kConfig;
    default:
      return kNumeric;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity of circular-arc and parallel-segment condensers"};
  app.require_subcommand(1);
  Options o;
  struct Cmd {
    const char* name;
    const char* help;
    int (*fn)(const Options&);
  };
  const Cmd cmds[] = {
      {"exact", "solve the exact capacity equation", cmd_exact},
      {"series", "evaluate the asymptotic expansion term by term", cmd_series},
      {"sc", "exact capacity of the parallel-segment condenser", cmd_sc},
      {"oracle", "finite-difference capacity estimate", cmd_oracle},
      {"sweep", "exact vs series over a range of gaps", cmd_sweep},
      {"verify", "run the acceptance suite", cmd_verify},
      {"trace", "boundary trace of the rectangle map", cmd_trace},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> subs;
  for (const auto& c : cmds) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    add_common(s, o);
    subs.emplace_back(s, c.fn);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }
  try {
    for (auto& [s, fn] : subs)
      if (s->parsed()) return fn(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kConfig;
}
