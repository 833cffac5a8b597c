#include "netclust/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "netclust/io.hpp"

namespace netclust {

namespace {

bool values_equal(double a, double b, bool exact) {
  if (exact || a == b) return a == b;
  return std::abs(a - b) <= kDivisionTolerance * std::max(std::abs(a), std::abs(b));
}

// a <= b, with slack when divisions fed the operands
bool value_le(double a, double b, bool exact) {
  if (a <= b) return true;
  if (exact) return false;
  return a - b <= kDivisionTolerance * std::max(std::abs(a), std::abs(b));
}

AuditReport holds_report(std::string property, std::size_t probes) {
  AuditReport r;
  r.property = std::move(property);
  r.holds = true;
  r.probes = probes;
  return r;
}

AuditReport violated_report(std::string property, std::size_t probes, AuditWitness w) {
  AuditReport r;
  r.property = std::move(property);
  r.holds = false;
  r.probes = probes;
  r.witness = std::move(w);
  return r;
}

}  // namespace

std::string AuditReport::to_json() const {
  nlohmann::json j;
  j["property"] = property;
  j["verdict"] = holds ? "holds on all probes" : "violated";
  j["probes"] = probes;
  if (witness) {
    nlohmann::json w;
    if (witness->network) {
      w["network"]["labels"] = witness->network->labels();
      auto rows = nlohmann::json::array();
      for (std::size_t i = 0; i < witness->network->size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t k = 0; k < witness->network->size(); ++k)
          row.push_back((*witness->network)(i, k));
        rows.push_back(std::move(row));
      }
      w["network"]["dissim"] = std::move(rows);
    }
    for (const auto& [key, value] : witness->params) w["params"][key] = value;
    w["pair"] = {witness->node_a, witness->node_b};
    w["expected"] = witness->expected;
    w["actual"] = witness->actual;
    j["witness"] = std::move(w);
  }
  return j.dump(2) + "\n";
}

AuditReport check_excisiveness(const MethodSpec& method, const Network& n) {
  const bool exact = method.division_free();
  const Ultrametric u = run_method(method, n);
  std::set<double> deltas;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) deltas.insert(u(i, j));

  std::size_t probes = 0;
  for (double delta : deltas) {
    const Partition part = partition_at(u, delta);
    for (const auto& block : part.blocks) {
      if (block.size() < 2) continue;
      ++probes;
      const Network sub = restrict_network(n, block);
      const Ultrametric usub = run_method(method, sub);
      for (std::size_t a = 0; a < sub.size(); ++a) {
        for (std::size_t b = 0; b < sub.size(); ++b) {
          const std::size_t ia = n.index_of(sub.labels()[a]);
          const std::size_t ib = n.index_of(sub.labels()[b]);
          if (!values_equal(usub(a, b), u(ia, ib), exact)) {
            AuditWitness w;
            w.network = n;
            w.params["method"] = method.describe();
            w.params["delta"] = format_double(delta);
            std::string joined;
            for (const auto& l : block) joined += (joined.empty() ? "" : ",") + l;
            w.params["block"] = joined;
            w.node_a = sub.labels()[a];
            w.node_b = sub.labels()[b];
            w.expected = u(ia, ib);
            w.actual = usub(a, b);
            return violated_report("excisive", probes, std::move(w));
          }
        }
      }
    }
  }
  return holds_report("excisive", probes);
}

AuditReport check_scale_preservation(const MethodSpec& method, const Network& n,
                                     const std::vector<double>& alphas) {
  if (alphas.empty()) {
    throw Error(ErrorCode::NonPositiveScale, "need at least one scale factor");
  }
  const bool exact = method.division_free();
  const Ultrametric u = run_method(method, n);
  std::size_t probes = 0;
  for (double alpha : alphas) {
    ++probes;
    const Ultrametric scaled_u = run_method(method, scale_network(n, alpha));
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::size_t j = 0; j < n.size(); ++j) {
        const double expected = alpha * u(i, j);
        if (!values_equal(scaled_u(i, j), expected, exact)) {
          AuditWitness w;
          w.network = n;
          w.params["method"] = method.describe();
          w.params["alpha"] = format_double(alpha);
          w.node_a = n.labels()[i];
          w.node_b = n.labels()[j];
          w.expected = expected;
          w.actual = scaled_u(i, j);
          return violated_report("scale", probes, std::move(w));
        }
      }
    }
  }
  return holds_report("scale", probes);
}

AuditReport check_idempotency(const MethodSpec& method, const Network& n) {
  const bool exact = method.division_free();
  const Ultrametric u = run_method(method, n);
  const Ultrametric uu = run_method(method, u.as_network());
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (!values_equal(uu(i, j), u(i, j), exact)) {
        AuditWitness w;
        w.network = n;
        w.params["method"] = method.describe();
        w.node_a = n.labels()[i];
        w.node_b = n.labels()[j];
        w.expected = u(i, j);
        w.actual = uu(i, j);
        return violated_report("idempotent", 1, std::move(w));
      }
    }
  }
  return holds_report("idempotent", 1);
}

AuditReport check_value_axiom(const MethodSpec& method,
                              const std::vector<std::pair<double, double>>& grid) {
  const bool exact = method.division_free();
  std::size_t probes = 0;
  for (const auto& [alpha, beta] : grid) {
    ++probes;
    const Network two({"p", "q"}, Matrix::from_rows({{0.0, alpha}, {beta, 0.0}}));
    const Ultrametric u = run_method(method, two);
    const double expected = std::max(alpha, beta);
    if (!values_equal(u(0, 1), expected, exact)) {
      AuditWitness w;
      w.network = two;
      w.params["method"] = method.describe();
      w.params["alpha"] = format_double(alpha);
      w.params["beta"] = format_double(beta);
      w.node_a = "p";
      w.node_b = "q";
      w.expected = expected;
      w.actual = u(0, 1);
      return violated_report("value", probes, std::move(w));
    }
  }
  return holds_report("value", probes);
}

AuditReport check_transformation_axiom(const MethodSpec& method, const Network& nx,
                                       const Network& ny,
                                       const std::vector<std::size_t>& phi) {
  if (phi.size() != nx.size()) {
    throw Error(ErrorCode::ShapeMismatch, "map length does not match source size");
  }
  for (std::size_t i : phi) {
    if (i >= ny.size()) {
      throw Error(ErrorCode::UnknownLabel, "map target index out of range");
    }
  }
  for (std::size_t i = 0; i < nx.size(); ++i) {
    for (std::size_t j = 0; j < nx.size(); ++j) {
      if (ny(phi[i], phi[j]) > nx(i, j)) {
        throw Error(ErrorCode::NotDissimilarityReducing,
                    "map expands the pair (" + nx.labels()[i] + "," + nx.labels()[j] + ")");
      }
    }
  }
  const bool exact = method.division_free();
  const Ultrametric ux = run_method(method, nx);
  const Ultrametric uy = run_method(method, ny);
  for (std::size_t i = 0; i < nx.size(); ++i) {
    for (std::size_t j = 0; j < nx.size(); ++j) {
      if (!value_le(uy(phi[i], phi[j]), ux(i, j), exact)) {
        AuditWitness w;
        w.network = nx;
        w.params["method"] = method.describe();
        w.node_a = nx.labels()[i];
        w.node_b = nx.labels()[j];
        w.expected = ux(i, j);
        w.actual = uy(phi[i], phi[j]);
        return violated_report("transform", 1, std::move(w));
      }
    }
  }
  return holds_report("transform", 1);
}

AuditReport check_sandwich(const MethodSpec& method, const Network& n) {
  const bool exact = method.division_free();
  const Ultrametric u = run_method(method, n);
  const Ultrametric lo = nonreciprocal(n);
  const Ultrametric hi = reciprocal(n);
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) {
      const bool low_ok = value_le(lo(i, j), u(i, j), exact);
      if (!low_ok || !value_le(u(i, j), hi(i, j), exact)) {
        AuditWitness w;
        w.network = n;
        w.params["method"] = method.describe();
        w.params["bound"] = low_ok ? "reciprocal" : "nonreciprocal";
        w.node_a = n.labels()[i];
        w.node_b = n.labels()[j];
        w.expected = low_ok ? hi(i, j) : lo(i, j);
        w.actual = u(i, j);
        return violated_report("sandwich", 1, std::move(w));
      }
    }
  }
  return holds_report("sandwich", 1);
}

std::vector<double> default_alphas() { return {0.5, 2.0, 10.0}; }

namespace {
constexpr double kWeightSet[] = {1.0, 2.0, 3.0, 5.0, 8.0};
constexpr std::size_t kWeightCount = sizeof(kWeightSet) / sizeof(kWeightSet[0]);
}  // namespace

std::vector<std::pair<double, double>> default_value_grid() {
  std::vector<std::pair<double, double>> grid;
  for (double a : kWeightSet)
    for (double b : kWeightSet) grid.emplace_back(a, b);
  return grid;
}

Network random_network(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  Matrix a(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a(i, j) = kWeightSet[rng() % kWeightCount];
  return Network(std::move(labels), std::move(a));
}

ContractionPair contract_network(const Network& source, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = source.size();
  const std::size_t m = 1 + rng() % n;
  std::vector<std::size_t> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = rng() % m;
  // powers of two keep the scaled weights exactly representable
  const double shrink[] = {1.0, 0.5, 0.25};
  const double gamma = shrink[rng() % 3];

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("y" + std::to_string(i + 1));
  Matrix a(m, 0.0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (p != q) a(p, q) = kWeightSet[0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (phi[i] != phi[j]) a(phi[i], phi[j]) = std::min(a(phi[i], phi[j]), source(i, j));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (p != q) a(p, q) *= gamma;
  return {source, Network(std::move(labels), std::move(a)), std::move(phi)};
}

ContractionPair random_contraction_pair(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t net_seed = rng();
  return contract_network(random_network(n, net_seed), rng());
}

}  // namespace netclust
