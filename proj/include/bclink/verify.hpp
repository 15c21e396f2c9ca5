#pragma once

// Grid sweeps over rational angles (p/res pi, q/res pi), 0 < p, q < res.
// The root locus is excluded by exact rational membership, never by a band.

#include <algorithm>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "json.hpp"

#include "bclink/angle.hpp"
#include "bclink/signature.hpp"
#include "bclink/torus_rep.hpp"

namespace bclink::verify {

inline constexpr int kExcludedCell = -999;

inline void require_resolution(int resolution) {
  if (resolution < 2) throw DomainError("resolution must be at least 2");
}

inline AnglePair grid_angle(int p, int q, int resolution) { return AnglePair::exact(p, resolution, q, resolution); }

/// All grid points, row-major in (p, q).
inline std::vector<AnglePair> rational_grid(int resolution) {
  require_resolution(resolution);
  std::vector<AnglePair> out;
  out.reserve(static_cast<std::size_t>((resolution - 1) * (resolution - 1)));
  for (int p = 1; p < resolution; ++p) {
    for (int q = 1; q < resolution; ++q) out.push_back(grid_angle(p, q, resolution));
  }
  return out;
}

/// Runs row(p) for p = 1..res-1 on a few threads; results are stored by
/// index so the merge order does not depend on scheduling.
template <class Row>
auto parallel_rows(int resolution, Row row) {
  using Result = decltype(row(1));
  std::vector<Result> rows(static_cast<std::size_t>(resolution - 1));
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  if (workers == 1) {
    for (int p = 1; p < resolution; ++p) rows[static_cast<std::size_t>(p - 1)] = row(p);
    return rows;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int p = 1 + static_cast<int>(w); p < resolution; p += static_cast<int>(workers)) {
        rows[static_cast<std::size_t>(p - 1)] = row(p);
      }
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

struct PointRecord {
  int p;
  int q;
  int h;
  int sigma;           // sigma(omega1, omega2)
  int sigma_inverted;  // sigma(omega1, omega2^{-1})
  bool pass;
};

struct SweepReport {
  int ell;
  int resolution;
  int checked = 0;
  int failed = 0;
  int skipped_on_roots = 0;
  std::vector<PointRecord> points;

  bool passed() const { return failed == 0; }
};

/// h == -1/2 (sigma(omega1, omega2) + sigma(omega1, omega2^{-1})) at every
/// admissible grid point, h by counting and sigma from the generic engine.
inline SweepReport sweep_main_identity(TorusIndex ell, int resolution) {
  require_resolution(resolution);
  const sig::SeifertSystem system = sig::torus_seifert(ell);
  struct Row {
    std::vector<PointRecord> points;
    int skipped = 0;
  };
  const auto rows = parallel_rows(resolution, [&](int p) {
    Row r;
    for (int q = 1; q < resolution; ++q) {
      const AnglePair alpha = grid_angle(p, q, resolution);
      if (!torus::is_defined(ell, alpha)) {
        ++r.skipped;
        continue;
      }
      const int h = torus::h_invariant(ell, alpha);
      const auto a = sig::sigma_eval(system, alpha);
      const auto b = sig::sigma_eval(system, alpha.with_inverted_omega2());
      const bool ok = !a.nullity_warning && !b.nullity_warning && 2 * h == -(a.signature + b.signature);
      r.points.push_back({p, q, h, a.signature, b.signature, ok});
    }
    return r;
  });

  SweepReport report{ell.value(), resolution};
  for (const auto& r : rows) {
    report.skipped_on_roots += r.skipped;
    for (const auto& pt : r.points) {
      ++report.checked;
      if (!pt.pass) ++report.failed;
      report.points.push_back(pt);
    }
  }
  return report;
}

inline nlohmann::ordered_json to_json(const SweepReport& r, bool verbose = false) {
  nlohmann::ordered_json j{{"ell", r.ell},
                           {"resolution", r.resolution},
                           {"checked", r.checked},
                           {"failed", r.failed},
                           {"skipped_on_roots", r.skipped_on_roots}};
  if (verbose) {
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : r.points) {
      pts.push_back({{"alpha1", std::to_string(p.p) + "/" + std::to_string(r.resolution)},
                     {"alpha2", std::to_string(p.q) + "/" + std::to_string(r.resolution)},
                     {"h", p.h},
                     {"sigma", p.sigma},
                     {"sigma_inverted", p.sigma_inverted},
                     {"pass", p.pass}});
    }
    j["points"] = std::move(pts);
  }
  return j;
}

/// cells[p-1][q-1] = h at (p/res pi, q/res pi), or kExcludedCell on the root locus.
struct RegionGrid {
  int ell;
  int resolution;
  std::vector<std::vector<int>> cells;
};

inline RegionGrid region_grid(TorusIndex ell, int resolution) {
  require_resolution(resolution);
  auto cells = parallel_rows(resolution, [&](int p) {
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(resolution - 1));
    for (int q = 1; q < resolution; ++q) {
      const AnglePair alpha = grid_angle(p, q, resolution);
      row.push_back(torus::is_defined(ell, alpha) ? torus::h_invariant(ell, alpha) : kExcludedCell);
    }
    return row;
  });
  return {ell.value(), resolution, std::move(cells)};
}

struct CongruenceReport {
  int ell;
  int resolution;
  int checked = 0;
  int failed = 0;
  /// Points with vanishing Conway potential, where the congruence says nothing.
  int skipped_nabla_zero = 0;

  bool passed() const { return failed == 0; }
};

inline int mod4(long v) { return static_cast<int>(((v % 4) + 4) % 4); }

/// sigma(omega1, omega2) == 2 + ell + sign(nabla) (mod 4) wherever nabla != 0.
inline CongruenceReport check_mod4_congruence(int ell, int resolution) {
  if (ell < 1) throw PositiveOnly("mod-4 congruence is checked for ell > 0");
  require_resolution(resolution);
  const TorusIndex idx(ell);
  const sig::SeifertSystem system = sig::torus_seifert(idx);
  struct Row {
    int checked = 0, failed = 0, skipped = 0;
  };
  const auto rows = parallel_rows(resolution, [&](int p) {
    Row r;
    for (int q = 1; q < resolution; ++q) {
      const AnglePair alpha = grid_angle(p, q, resolution);
      const int nabla = sig::chebyshev_u_sign(ell - 1, *alpha.sum_over_pi());
      if (nabla == 0) {
        ++r.skipped;
        continue;
      }
      const auto s = sig::sigma_eval(system, alpha);
      ++r.checked;
      if (s.nullity_warning || mod4(s.signature - 2 - ell - nabla) != 0) ++r.failed;
    }
    return r;
  });
  CongruenceReport report{ell, resolution};
  for (const auto& r : rows) {
    report.checked += r.checked;
    report.failed += r.failed;
    report.skipped_nabla_zero += r.skipped;
  }
  return report;
}

using SigmaFunction = std::function<int(const AnglePair&)>;
/// Sign of the Conway potential at omega^{1/2}; 0 where it vanishes.
using PotentialSignFunction = std::function<int(const AnglePair&)>;

struct JumpReport {
  int checked = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<AnglePair> violations;

  bool passed() const { return failed == 0; }
};

/// sigma_{L+} - sigma_L is 0 where nabla_{L+} nabla_L > 0 and -2 where it is
/// negative. Points where either potential vanishes are skipped.
inline JumpReport check_sigma_jump_corollary(std::span<const AnglePair> points, const SigmaFunction& sigma_l,
                                             const SigmaFunction& sigma_lplus, const PotentialSignFunction& nabla_l,
                                             const PotentialSignFunction& nabla_lplus) {
  JumpReport report;
  for (const auto& alpha : points) {
    const int product = nabla_l(alpha) * nabla_lplus(alpha);
    if (product == 0) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const int expected = product > 0 ? 0 : -2;
    if (sigma_lplus(alpha) - sigma_l(alpha) != expected) {
      ++report.failed;
      report.violations.push_back(alpha);
    }
  }
  return report;
}

}  // namespace bclink::verify
