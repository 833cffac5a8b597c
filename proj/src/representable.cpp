#include "netclust/representable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "netclust/minimax.hpp"

namespace netclust {

namespace {

void check_representer(const Representer& r) {
  if (r.k < 2) {
    throw Error(ErrorCode::InvalidRepresenter,
                "representer '" + r.name + "' needs k >= 2 nodes");
  }
  std::vector<bool> seen(r.k * r.k, false);
  for (const auto& e : r.edges) {
    if (e.src >= r.k || e.dst >= r.k) {
      throw Error(ErrorCode::InvalidRepresenter,
                  "representer '" + r.name + "' edge index out of range");
    }
    if (e.src == e.dst) {
      throw Error(ErrorCode::InvalidRepresenter,
                  "representer '" + r.name + "' has a self-pair");
    }
    if (seen[e.src * r.k + e.dst]) {
      throw Error(ErrorCode::InvalidRepresenter,
                  "representer '" + r.name + "' defines edge " + std::to_string(e.src) +
                      "->" + std::to_string(e.dst) + " twice");
    }
    seen[e.src * r.k + e.dst] = true;
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "representer '" + r.name + "' has a non-positive weight");
    }
  }
  // weak connectivity over the undirected support
  std::vector<std::size_t> comp(r.k);
  for (std::size_t i = 0; i < r.k; ++i) comp[i] = i;
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : r.edges) {
    auto a = find(e.src), b = find(e.dst);
    if (a != b) comp[std::max(a, b)] = std::min(a, b);
  }
  for (std::size_t i = 0; i < r.k; ++i) {
    if (find(i) != find(0)) {
      throw Error(ErrorCode::NotWeaklyConnected,
                  "representer '" + r.name + "' is not weakly connected");
    }
  }
}

}  // namespace

RepresenterFamily::RepresenterFamily(std::vector<Representer> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::EmptyFamily, "a family needs at least one representer");
  }
  sep_ = std::numeric_limits<double>::infinity();
  bound_ = 0.0;
  unit_weights_ = true;
  for (const auto& r : members_) {
    check_representer(r);
    if (r.edges.empty()) {
      throw Error(ErrorCode::NotWeaklyConnected,
                  "representer '" + r.name + "' has no edges");
    }
    for (const auto& e : r.edges) {
      sep_ = std::min(sep_, e.weight);
      bound_ = std::max(bound_, e.weight);
      if (e.weight != 1.0) unit_weights_ = false;
    }
  }
}

RepresenterFamily validate_family(std::vector<Representer> raw) {
  return RepresenterFamily(std::move(raw));
}

double expansion_constant(const NodeMap& phi, const Representer& omega, const Network& n) {
  if (phi.size() != omega.k) {
    throw Error(ErrorCode::ShapeMismatch, "node map length does not match representer size");
  }
  double L = 0.0;
  for (const auto& e : omega.edges) {
    L = std::max(L, n(phi[e.src], phi[e.dst]) / e.weight);
  }
  return L;
}

Matrix optimal_multiples(const Representer& omega, const Network& n, std::size_t cap) {
  check_representer(omega);
  if (omega.k > cap) {
    throw Error(ErrorCode::RepresenterTooLarge,
                "representer has " + std::to_string(omega.k) + " nodes, cap is " +
                    std::to_string(cap));
  }
  const std::size_t sz = n.size();
  const std::size_t k = omega.k;
  Matrix lambda(sz, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < sz; ++i) lambda(i, i) = 0.0;

  // Enumerate all sz^k maps once; scatter each map's expansion constant to
  // every ordered pair in its image. Equivalent to per-pair constrained
  // minimization without the extra n^2 factor.
  NodeMap phi(k, 0);
  for (;;) {
    double L = 0.0;
    for (const auto& e : omega.edges) {
      L = std::max(L, n(phi[e.src], phi[e.dst]) / e.weight);
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        double& slot = lambda(phi[a], phi[b]);
        slot = std::min(slot, L);
      }
    std::size_t pos = 0;
    while (pos < k && ++phi[pos] == sz) phi[pos++] = 0;
    if (pos == k) break;
  }
  return lambda;
}

namespace {

// A cycle representer with one uniform forward weight and, optionally, a
// uniform backward ring. Such members admit an exact DP over walks, with no
// k cap.
struct UniformCycle {
  std::size_t k;
  double forward;
  std::optional<double> backward;
};

std::optional<UniformCycle> as_uniform_cycle(const Representer& r) {
  if (r.k < 3) return std::nullopt;
  std::vector<double> fwd(r.k, 0.0), bwd(r.k, 0.0);
  for (const auto& e : r.edges) {
    if ((e.src + 1) % r.k == e.dst) {
      fwd[e.src] = e.weight;
    } else if ((e.dst + 1) % r.k == e.src) {
      bwd[e.dst] = e.weight;
    } else {
      return std::nullopt;
    }
  }
  for (std::size_t i = 1; i < r.k; ++i) {
    if (fwd[i] != fwd[0] || bwd[i] != bwd[0]) return std::nullopt;
  }
  if (fwd[0] == 0.0) return std::nullopt;
  if (bwd[0] == 0.0) return UniformCycle{r.k, fwd[0], std::nullopt};
  return UniformCycle{r.k, fwd[0], bwd[0]};
}

// Optimal multiples for a uniform cycle, O(k n^3) instead of n^k.
//
// Rotating a map around the cycle leaves its expansion constant unchanged,
// so for the pair (x,x') we may fix phi(0) = x and place x' at some position
// j in 1..k-1. The map is then a closed walk x -> x' -> x; each step (u,v)
// costs e(u,v) = max(A(u,v)/f, A(v,u)/b) (forward edge plus the reverse ring
// edge over the same position pair), and the expansion constant is the
// maximum step cost. With E_j = minimax cost over exactly-j-step walks,
//   lambda(x,x') = min_j max(E_j(x,x'), E_{k-j}(x',x)).
// Stalling on a node costs 0 (diagonal of A), so E_j is non-increasing in j
// and walks may revisit nodes, matching the unrestricted map enumeration.
Matrix cycle_multiples(const UniformCycle& c, const Network& n) {
  const std::size_t sz = n.size();
  Matrix e(sz, 0.0);
  for (std::size_t u = 0; u < sz; ++u)
    for (std::size_t v = 0; v < sz; ++v) {
      double cost = n(u, v) / c.forward;
      if (c.backward) cost = std::max(cost, n(v, u) / *c.backward);
      e(u, v) = cost;
    }

  std::vector<Matrix> E;
  E.reserve(c.k);
  E.push_back(e);  // E[0] = exactly one step
  for (std::size_t step = 2; step <= c.k - 1; ++step) {
    const Matrix& prev = E.back();
    Matrix next(sz, std::numeric_limits<double>::infinity());
    for (std::size_t m = 0; m < sz; ++m)
      for (std::size_t x = 0; x < sz; ++x) {
        const double head = prev(x, m);
        for (std::size_t y = 0; y < sz; ++y)
          next(x, y) = std::min(next(x, y), std::max(head, e(m, y)));
      }
    E.push_back(std::move(next));
  }

  Matrix lambda(sz, std::numeric_limits<double>::infinity());
  for (std::size_t x = 0; x < sz; ++x) lambda(x, x) = 0.0;
  for (std::size_t x = 0; x < sz; ++x)
    for (std::size_t y = 0; y < sz; ++y) {
      if (x == y) continue;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 1; j <= c.k - 1; ++j) {
        best = std::min(best, std::max(E[j - 1](x, y), E[c.k - j - 1](y, x)));
      }
      lambda(x, y) = best;
    }
  return lambda;
}

}  // namespace

Matrix family_multiples(const RepresenterFamily& family, const Network& n,
                        std::size_t cap) {
  const std::size_t sz = n.size();
  Matrix lambda(sz, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < sz; ++i) lambda(i, i) = 0.0;
  for (const auto& r : family.members()) {
    const auto cycle = as_uniform_cycle(r);
    Matrix grid = cycle ? cycle_multiples(*cycle, n) : optimal_multiples(r, n, cap);
    lambda = entrywise_min(lambda, grid);
  }
  return lambda;
}

Ultrametric cluster_representable(const RepresenterFamily& family, const Network& n,
                                  std::size_t cap) {
  Matrix lambda = family_multiples(family, n, cap);
  return single_linkage(Network(n.labels(), std::move(lambda)));
}

Representer cycle_representer(std::size_t k, double forward,
                              std::optional<double> backward) {
  if (k < 2) {
    throw Error(ErrorCode::InvalidSize, "a cycle needs k >= 2 nodes");
  }
  Representer r;
  r.k = k;
  r.name = "cycle-" + std::to_string(k);
  if (k == 2) {
    r.edges.push_back({0, 1, forward});
    r.edges.push_back({1, 0, backward.value_or(forward)});
    return r;
  }
  for (std::size_t i = 0; i < k; ++i) r.edges.push_back({i, (i + 1) % k, forward});
  if (backward) {
    for (std::size_t i = 0; i < k; ++i) r.edges.push_back({(i + 1) % k, i, *backward});
  }
  return r;
}

std::vector<Representer> nonreciprocal_family(std::size_t n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidSize, "network size must be positive");
  }
  std::vector<Representer> cycles;
  for (std::size_t k = 2; k <= 2 * n; ++k) cycles.push_back(cycle_representer(k, 1.0));
  return cycles;
}

Matrix three_cycle_kernel(const Network& n, double c) {
  if (!(c >= 1.0)) {
    throw Error(ErrorCode::NonPositiveWeight, "weight ratio must satisfy c >= 1");
  }
  const std::size_t sz = n.size();
  Matrix b(sz, 0.0);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < sz; ++k) {
        const double v = std::max({n(i, j), n(j, k), n(k, i),
                                   n(j, i) / c, n(k, j) / c, n(i, k) / c});
        best = std::min(best, v);
      }
      b(i, j) = best;
    }
  return entrywise_min(b, b.transposed());
}

namespace {

double parse_weight(const std::string& token, std::size_t lineno) {
  auto parse_one = [&](const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                             ": bad weight '" + token + "'");
    }
    return v;
  };
  const auto slash = token.find('/');
  if (slash == std::string::npos) return parse_one(token);
  const double p = parse_one(token.substr(0, slash));
  const double q = parse_one(token.substr(slash + 1));
  if (q == 0.0) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(lineno) + ": zero denominator in '" + token + "'");
  }
  return p / q;
}

}  // namespace

std::vector<Representer> parse_family_file(const std::string& text) {
  std::vector<Representer> members;
  Representer current;
  bool open = false;
  auto flush = [&]() {
    if (open) members.push_back(std::move(current));
    current = Representer{};
    open = false;
  };

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) {
      flush();
      continue;
    }
    if (word == "representer") {
      flush();
      std::string name, k_tok;
      if (!(fields >> name >> k_tok)) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": expected 'representer <name> <k>'");
      }
      char* end = nullptr;
      const long k = std::strtol(k_tok.c_str(), &end, 10);
      if (*end != '\0' || k < 0) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": bad node count '" + k_tok + "'");
      }
      current.name = name;
      current.k = static_cast<std::size_t>(k);
      open = true;
    } else if (word == "edge") {
      if (!open) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": edge before any representer header");
      }
      std::string src_tok, dst_tok, w_tok;
      if (!(fields >> src_tok >> dst_tok >> w_tok)) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": expected 'edge <src> <dst> <weight>'");
      }
      char* end = nullptr;
      const long src = std::strtol(src_tok.c_str(), &end, 10);
      if (*end != '\0' || src < 0) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": bad index '" + src_tok + "'");
      }
      const long dst = std::strtol(dst_tok.c_str(), &end, 10);
      if (*end != '\0' || dst < 0) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": bad index '" + dst_tok + "'");
      }
      current.edges.push_back({static_cast<std::size_t>(src), static_cast<std::size_t>(dst),
                               parse_weight(w_tok, lineno)});
    } else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": unknown directive '" + word + "'");
    }
    std::string extra;
    if (fields >> extra) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": trailing tokens after '" + word + "'");
    }
  }
  flush();
  if (members.empty()) {
    throw Error(ErrorCode::EmptyFamily, "family file defines no representers");
  }
  return members;
}

}  // namespace netclust
