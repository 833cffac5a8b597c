#include "netclust/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "netclust/io.hpp"

namespace netclust {

double distortion(const Correspondence& r, const Network& nx, const Network& ny) {
  std::vector<bool> x_hit(nx.size(), false), y_hit(ny.size(), false);
  for (const auto& [x, y] : r.pairs) {
    if (x >= nx.size() || y >= ny.size()) {
      throw Error(ErrorCode::InvalidCorrespondence, "pair index out of range");
    }
    x_hit[x] = true;
    y_hit[y] = true;
  }
  if (std::find(x_hit.begin(), x_hit.end(), false) != x_hit.end() ||
      std::find(y_hit.begin(), y_hit.end(), false) != y_hit.end()) {
    throw Error(ErrorCode::InvalidCorrespondence,
                "correspondence must cover every node on both sides");
  }
  double worst = 0.0;
  for (const auto& [x, y] : r.pairs)
    for (const auto& [x2, y2] : r.pairs)
      worst = std::max(worst, std::abs(nx(x, x2) - ny(y, y2)));
  return worst;
}

namespace {

// distortion of graph(f) ∪ graph(g), organized as three blocks:
// f-f pairs, g-g pairs, and the f-g cross terms.
double pair_distortion(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g,
                       const Network& nx, const Network& ny) {
  const std::size_t nxs = nx.size(), nys = ny.size();
  double worst = 0.0;
  for (std::size_t x = 0; x < nxs; ++x)
    for (std::size_t x2 = 0; x2 < nxs; ++x2)
      worst = std::max(worst, std::abs(nx(x, x2) - ny(f[x], f[x2])));
  for (std::size_t y = 0; y < nys; ++y)
    for (std::size_t y2 = 0; y2 < nys; ++y2)
      worst = std::max(worst, std::abs(nx(g[y], g[y2]) - ny(y, y2)));
  for (std::size_t x = 0; x < nxs; ++x)
    for (std::size_t y = 0; y < nys; ++y) {
      worst = std::max(worst, std::abs(nx(x, g[y]) - ny(f[x], y)));
      worst = std::max(worst, std::abs(nx(g[y], x) - ny(y, f[x])));
    }
  return worst;
}

bool advance(std::vector<std::size_t>& digits, std::size_t base) {
  std::size_t pos = 0;
  while (pos < digits.size() && ++digits[pos] == base) digits[pos++] = 0;
  return pos < digits.size();
}

}  // namespace

double network_distance_exact(const Network& nx, const Network& ny, std::size_t cap) {
  if (nx.size() > cap || ny.size() > cap) {
    throw Error(ErrorCode::InstanceTooLarge,
                "exact distance is capped at " + std::to_string(cap) + " nodes per side");
  }
  const std::size_t nxs = nx.size(), nys = ny.size();

  // Precompute each g's own distortion so the inner loop can skip dominated
  // combinations early.
  std::vector<std::vector<std::size_t>> gs;
  std::vector<double> g_self;
  {
    std::vector<std::size_t> g(nys, 0);
    do {
      double worst = 0.0;
      for (std::size_t y = 0; y < nys; ++y)
        for (std::size_t y2 = 0; y2 < nys; ++y2)
          worst = std::max(worst, std::abs(nx(g[y], g[y2]) - ny(y, y2)));
      gs.push_back(g);
      g_self.push_back(worst);
    } while (advance(g, nxs));
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> f(nxs, 0);
  do {
    double f_self = 0.0;
    for (std::size_t x = 0; x < nxs; ++x)
      for (std::size_t x2 = 0; x2 < nxs; ++x2)
        f_self = std::max(f_self, std::abs(nx(x, x2) - ny(f[x], f[x2])));
    if (f_self >= best) continue;
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
      double worst = std::max(f_self, g_self[gi]);
      if (worst >= best) continue;
      const auto& g = gs[gi];
      for (std::size_t x = 0; x < nxs && worst < best; ++x)
        for (std::size_t y = 0; y < nys; ++y) {
          worst = std::max(worst, std::abs(nx(x, g[y]) - ny(f[x], y)));
          worst = std::max(worst, std::abs(nx(g[y], x) - ny(y, f[x])));
          if (worst >= best) break;
        }
      best = std::min(best, worst);
    }
  } while (advance(f, nys));
  return 0.5 * best;
}

double network_distance_upper(const Network& nx, const Network& ny, int trials,
                              std::uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorCode::InvalidSize, "need at least one trial");
  }
  const std::size_t nxs = nx.size(), nys = ny.size();
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::size_t> f(nxs), g(nys);
    if (trial == 0 && nxs == nys) {
      // start one trial from the identity; catches equal networks at once
      for (std::size_t x = 0; x < nxs; ++x) f[x] = x;
      for (std::size_t y = 0; y < nys; ++y) g[y] = y;
    } else {
      for (auto& v : f) v = rng() % nys;
      for (auto& v : g) v = rng() % nxs;
    }
    double current = pair_distortion(f, g, nx, ny);
    // greedy single-point reassignment until no move helps
    bool improved = true;
    while (improved && current > 0.0) {
      improved = false;
      for (std::size_t x = 0; x < nxs; ++x) {
        const std::size_t keep = f[x];
        for (std::size_t y = 0; y < nys; ++y) {
          if (y == keep) continue;
          f[x] = y;
          const double candidate = pair_distortion(f, g, nx, ny);
          if (candidate < current) {
            current = candidate;
            improved = true;
          } else {
            f[x] = keep;
          }
        }
      }
      for (std::size_t y = 0; y < nys; ++y) {
        const std::size_t keep = g[y];
        for (std::size_t x = 0; x < nxs; ++x) {
          if (x == keep) continue;
          g[y] = x;
          const double candidate = pair_distortion(f, g, nx, ny);
          if (candidate < current) {
            current = candidate;
            improved = true;
          } else {
            g[y] = keep;
          }
        }
      }
    }
    best = std::min(best, current);
  }
  return 0.5 * best;
}

AuditReport check_stability(const RepresenterFamily& family, const Network& nx,
                            const Network& ny, std::size_t cap) {
  const double lipschitz = 1.0 / family.sep();
  const double d_in = network_distance_exact(nx, ny, cap);
  const Ultrametric ux = cluster_representable(family, nx);
  const Ultrametric uy = cluster_representable(family, ny);
  const double d_out = network_distance_exact(ux.as_network(), uy.as_network(), cap);

  AuditReport report;
  report.property = "stability";
  report.probes = 1;
  report.holds = d_out <= lipschitz * d_in + kDivisionTolerance;
  if (!report.holds) {
    AuditWitness w;
    w.network = nx;
    w.params["lipschitz"] = format_double(lipschitz);
    w.params["input_distance"] = format_double(d_in);
    w.expected = lipschitz * d_in;
    w.actual = d_out;
    report.witness = std::move(w);
  }
  return report;
}

}  // namespace netclust
