#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in process.
//
// Exit codes: 0 ok, 1 verification failure, 2 undefined invariant,
// 3 zero linking number, 64 usage, 65 data format.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bclink/bclink.hpp"

namespace bclink::cli {

enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUndefined = 2,
  kZeroLinking = 3,
  kUsage = 64,
  kDataFormat = 65,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline long parse_long(const std::string& s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("not an integer: \"" + s + "\"");
  return v;
}

/// "p/q" means (p/q) pi. Decimals need --radians; the two forms never mix.
inline std::vector<Angle> parse_angles(const std::vector<std::string>& tokens, bool radians) {
  std::vector<Angle> out;
  for (const auto& t : tokens) {
    const auto slash = t.find('/');
    if (radians) {
      if (slash != std::string::npos) throw UsageError("rational angle \"" + t + "\" mixed with --radians");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(t, &used);
      } catch (const std::exception&) {
        throw UsageError("not a number: \"" + t + "\"");
      }
      if (used != t.size()) throw UsageError("not a number: \"" + t + "\"");
      try {
        out.push_back(Angle::from_radians(v));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      continue;
    }
    if (slash == std::string::npos) {
      throw UsageError("angle \"" + t + "\" must be a fraction p/q of pi (use --radians for decimals)");
    }
    const long p = parse_long(t.substr(0, slash));
    const long q = parse_long(t.substr(slash + 1));
    if (q == 0) throw UsageError("zero denominator in \"" + t + "\"");
    try {
      out.push_back(RationalAngle(p, q));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

inline AnglePair parse_pair(const std::vector<std::string>& tokens, bool radians) {
  if (tokens.size() != 2) throw UsageError("--alpha takes exactly two angles");
  const auto a = parse_angles(tokens, radians);
  return {a[0], a[1]};
}

/// "a..b" or a single integer.
inline std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = static_cast<int>(parse_long(s));
    return {v, v};
  }
  const auto lo = static_cast<int>(parse_long(s.substr(0, dots)));
  const auto hi = static_cast<int>(parse_long(s.substr(dots + 2)));
  if (lo > hi) throw UsageError("empty range \"" + s + "\"");
  return {lo, hi};
}

// Output goes to `path` if given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DataFormatError("cannot write " + path);
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

inline void write_regions_csv(std::ostream& os, const verify::RegionGrid& g) {
  os << "# ell=" << g.ell << " res=" << g.resolution << '\n';
  for (const auto& row : g.cells) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << '\n';
  }
}

// Heat map with alpha1 to the right and alpha2 upward; one unit per grid step.
inline void write_regions_svg(std::ostream& os, const verify::RegionGrid& g) {
  const int res = g.resolution;
  const int n = std::abs(g.ell);
  int peak = 1;
  for (const auto& row : g.cells) {
    for (int v : row) {
      if (v != verify::kExcludedCell) peak = std::max(peak, std::abs(v));
    }
  }
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 " << res << ' ' << res
     << "\">\n";
  os << "<title>h for ell=" << g.ell << " res=" << res << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << res << "\" height=\"" << res << "\" fill=\"#ffffff\"/>\n";
  for (int p = 1; p < res; ++p) {
    for (int q = 1; q < res; ++q) {
      const int v = g.cells[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
      if (v == 0) continue;
      std::string fill;
      std::string opacity = "1";
      if (v == verify::kExcludedCell) {
        fill = "#999999";
      } else {
        fill = v > 0 ? "#1f4e9c" : "#b2182b";
        opacity = g17(0.25 + 0.75 * std::abs(v) / peak);
      }
      os << "<rect x=\"" << g17(p - 0.5) << "\" y=\"" << g17(res - q - 0.5)
         << "\" width=\"1\" height=\"1\" fill=\"" << fill << "\" fill-opacity=\"" << opacity << "\"/>\n";
    }
  }
  // Root lines alpha1 + alpha2 = m pi/|ell| and alpha1 - alpha2 + pi = m pi/|ell|.
  auto line = [&](double x1, double y1, double x2, double y2) {
    os << "<line x1=\"" << g17(x1) << "\" y1=\"" << g17(res - y1) << "\" x2=\"" << g17(x2) << "\" y2=\""
       << g17(res - y2) << "\" stroke=\"#000000\" stroke-width=\"" << g17(res / 400.0) << "\"/>\n";
  };
  for (int m = 1; m < 2 * n; ++m) {
    if (m == n) continue;
    const double c = static_cast<double>(m) * res / n;
    line(std::max(0.0, c - res), std::min<double>(res, c), std::min<double>(res, c), std::max(0.0, c - res));
    const double d = c - res;
    line(std::max(0.0, d), std::max(0.0, -d), std::min<double>(res, res + d), std::min<double>(res, res - d));
  }
  os << "</svg>\n";
}

struct Options {
  int ell = 0;
  std::vector<std::string> alpha;
  bool radians = false;
  int samples = pillow::kDefaultCurveSamples;
  std::string path = "both";
  int resolution = 120;
  std::string format = "csv";
  std::string output;
  std::string json_path;
  std::string ell_range;
  bool verbose = false;
};

inline int cmd_h(const Options& o, std::ostream& out) {
  const TorusIndex ell(o.ell);
  const AnglePair alpha = parse_pair(o.alpha, o.radians);
  torus::require_defined(ell, alpha);
  const int h = torus::h_invariant(ell, alpha);
  const int s1 = sig::sigma_torus_closed(ell, alpha);
  const int s2 = sig::sigma_torus_closed(ell, alpha.with_inverted_omega2());
  out << "h=" << h << " sigma=(" << s1 << ',' << s2 << ")\n";
  return kOk;
}

inline int cmd_curve(const Options& o, std::ostream& out) {
  const TorusIndex ell(o.ell);
  const AnglePair alpha = parse_pair(o.alpha, o.radians);
  torus::require_defined(ell, alpha);
  std::vector<pillow::CurveSample> curves;
  if (o.path == "quat" || o.path == "both") {
    curves.push_back(pillow::sample_curve(ell, alpha, o.samples, pillow::Provenance::quaternion));
  }
  if (o.path == "cheb" || o.path == "both") {
    curves.push_back(pillow::sample_curve(ell, alpha, o.samples, pillow::Provenance::chebyshev));
  }
  Sink sink(o.output, out);
  pillow::write_curve_csv(sink.stream(), curves);
  return kOk;
}

inline int cmd_regions(const Options& o, std::ostream& out) {
  const TorusIndex ell(o.ell);
  const auto grid = verify::region_grid(ell, o.resolution);
  Sink sink(o.output, out);
  if (o.format == "svg") {
    write_regions_svg(sink.stream(), grid);
  } else {
    write_regions_csv(sink.stream(), grid);
  }
  return kOk;
}

inline int cmd_sigma(const Options& o, std::ostream& out, std::ostream& err) {
  const sig::SeifertSystem system = sig::load_seifert(o.json_path);
  const auto angles = parse_angles(o.alpha, o.radians);
  if (static_cast<int>(angles.size()) != system.mu()) {
    throw UsageError("system has mu=" + std::to_string(system.mu()) + " but " + std::to_string(angles.size()) +
                     " angles were given");
  }
  std::vector<sig::Complex> omega;
  for (const auto& a : angles) omega.push_back(std::polar(1.0, 2.0 * a.radians()));
  const auto r = sig::sigma_eval(system, omega);
  out << "sigma=" << r.signature << " n_pos=" << r.inertia.n_pos << " n_neg=" << r.inertia.n_neg
      << " n_zero=" << r.inertia.n_zero << '\n';
  if (r.nullity_warning) {
    err << "warning: H(omega) has nullity " << r.inertia.n_zero << "; omega lies on a root of the Alexander polynomial\n";
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto [lo, hi] = parse_range(o.ell_range);
  if (lo == 0 && hi == 0) throw ZeroLinking("linking number 0: the invariant is not defined");
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  bool ok = true;
  for (int ell = lo; ell <= hi; ++ell) {
    if (ell == 0) continue;
    const auto r = verify::sweep_main_identity(TorusIndex(ell), o.resolution);
    ok = ok && r.passed();
    reports.push_back(verify::to_json(r, o.verbose));
  }
  Sink sink(o.output, out);
  sink.stream() << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_seifert(const Options& o, std::ostream& out) {
  Sink sink(o.output, out);
  sink.stream() << sig::to_json(sig::torus_seifert(TorusIndex(o.ell))).dump() << '\n';
  return kOk;
}

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SU(2) representation counts and multivariable signatures of (2,2l) torus links"};
  app.require_subcommand(1);
  Options o;

  auto add_alpha = [&](CLI::App* sub, const char* help, int max_count) {
    sub->add_option("--alpha", o.alpha, help)->required()->expected(1, max_count)->allow_extra_args();
    sub->add_flag("--radians", o.radians, "read angles as decimal radians");
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "output file (default stdout)"); };

  auto* h = app.add_subcommand("h", "invariant h and the two signatures");
  h->add_option("--ell", o.ell, "torus index l (linking number)")->required();
  add_alpha(h, "alpha1 alpha2 as p/q (times pi)", 2);

  auto* curve = app.add_subcommand("curve", "sample the curve Gamma in the pillowcase");
  curve->add_option("--ell", o.ell, "torus index")->required();
  add_alpha(curve, "alpha1 alpha2 as p/q (times pi)", 2);
  curve->add_option("--samples", o.samples, "number of phi samples")->check(CLI::PositiveNumber);
  curve->add_option("--path", o.path, "computation path")->check(CLI::IsMember({"quat", "cheb", "both"}));
  add_output(curve);

  auto* regions = app.add_subcommand("regions", "h over the (alpha1, alpha2) square");
  regions->add_option("--ell", o.ell, "torus index")->required();
  regions->add_option("--res", o.resolution, "grid resolution")->check(CLI::Range(2, 4000));
  regions->add_option("--format", o.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  add_output(regions);

  auto* sigma = app.add_subcommand("sigma", "signature of a Seifert system from JSON");
  sigma->add_option("--json", o.json_path, "Seifert system file")->required();
  add_alpha(sigma, "one angle per color, omega_i = exp(2 i alpha_i)", 16);

  auto* ver = app.add_subcommand("verify", "sweep the identity h = -(sigma + sigma')/2");
  ver->add_option("--ell", o.ell_range, "index or range a..b")->required();
  ver->add_option("--res", o.resolution, "grid resolution")->check(CLI::Range(2, 4000));
  ver->add_flag("--verbose", o.verbose, "include every grid point in the report");
  add_output(ver);

  auto* seifert = app.add_subcommand("seifert", "print the torus Seifert system as JSON");
  seifert->add_option("--ell", o.ell, "torus index")->required();
  add_output(seifert);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*h) return cmd_h(o, out);
    if (*curve) return cmd_curve(o, out);
    if (*regions) return cmd_regions(o, out);
    if (*sigma) return cmd_sigma(o, out, err);
    if (*ver) return cmd_verify(o, out);
    if (*seifert) return cmd_seifert(o, out);
  } catch (const ZeroLinking& e) {
    err << e.what() << '\n';
    return kZeroLinking;
  } catch (const NotDefined& e) {
    err << e.what() << '\n';
    return kUndefined;
  } catch (const DataFormatError& e) {
    err << "data format error: " << e.what() << '\n';
    return kDataFormat;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace bclink::cli
