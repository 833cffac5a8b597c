#include "netclust/methods.hpp"

#include <algorithm>
#include <cstdlib>

#include "netclust/io.hpp"
#include "netclust/minimax.hpp"

namespace netclust {

Ultrametric reciprocal(const Network& n) { return single_linkage(max_symmetrize(n)); }

Ultrametric nonreciprocal(const Network& n) {
  Matrix u = directed_minimax(n);
  return Ultrametric(n.labels(), symmetric_max(u));
}

Ultrametric semi_reciprocal(const Network& n, int t) {
  Matrix grid = bounded_hop_minimax(n, t);
  return single_linkage(Network(n.labels(), symmetric_max(grid)));
}

Ultrametric grafting(const Network& n, double beta) {
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::NonPositiveScale, "grafting cut must be positive");
  }
  const Ultrametric ur = reciprocal(n);
  const Ultrametric unr = nonreciprocal(n);
  Matrix u(n.size(), 0.0);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      u(i, j) = ur(i, j) <= beta ? unr(i, j) : ur(i, j);
  // the Ultrametric constructor re-checks the strong triangle inequality
  return Ultrametric(n.labels(), std::move(u));
}

MethodSpec MethodSpec::parse(const std::string& text) {
  MethodSpec spec;
  if (text == "reciprocal") {
    spec.kind = Kind::Reciprocal;
    return spec;
  }
  if (text == "nonreciprocal") {
    spec.kind = Kind::Nonreciprocal;
    return spec;
  }
  if (text.rfind("semi:", 0) == 0) {
    const std::string arg = text.substr(5);
    char* end = nullptr;
    const long t = std::strtol(arg.c_str(), &end, 10);
    if (arg.empty() || *end != '\0') {
      throw Error(ErrorCode::UnknownMethod, "bad hop bound in '" + text + "'");
    }
    spec.kind = Kind::SemiReciprocal;
    spec.t = static_cast<int>(t);
    return spec;
  }
  if (text.rfind("graft:", 0) == 0) {
    const std::string arg = text.substr(6);
    char* end = nullptr;
    const double beta = std::strtod(arg.c_str(), &end);
    if (arg.empty() || *end != '\0') {
      throw Error(ErrorCode::UnknownMethod, "bad cut value in '" + text + "'");
    }
    spec.kind = Kind::Grafting;
    spec.beta = beta;
    return spec;
  }
  if (text.rfind("representable:", 0) == 0) {
    const std::string path = text.substr(14);
    if (path.empty()) {
      throw Error(ErrorCode::UnknownMethod, "missing family file in '" + text + "'");
    }
    spec.kind = Kind::Representable;
    spec.family = std::make_shared<RepresenterFamily>(
        validate_family(parse_family_file(read_file(path))));
    spec.family_name = path;
    return spec;
  }
  throw Error(ErrorCode::UnknownMethod, "unrecognized method '" + text + "'");
}

MethodSpec MethodSpec::representable(RepresenterFamily family, std::string name) {
  MethodSpec spec;
  spec.kind = Kind::Representable;
  spec.family = std::make_shared<RepresenterFamily>(std::move(family));
  spec.family_name = std::move(name);
  return spec;
}

std::string MethodSpec::describe() const {
  switch (kind) {
    case Kind::Reciprocal: return "reciprocal";
    case Kind::Nonreciprocal: return "nonreciprocal";
    case Kind::SemiReciprocal: return "semi:" + std::to_string(t);
    case Kind::Grafting: return "graft:" + format_double(beta);
    case Kind::Representable: return "representable:" + family_name;
  }
  return "unknown";
}

bool MethodSpec::division_free() const {
  return kind != Kind::Representable || (family && family->unit_weights());
}

Ultrametric run_method(const MethodSpec& spec, const Network& n) {
  switch (spec.kind) {
    case MethodSpec::Kind::Reciprocal: return reciprocal(n);
    case MethodSpec::Kind::Nonreciprocal: return nonreciprocal(n);
    case MethodSpec::Kind::SemiReciprocal: return semi_reciprocal(n, spec.t);
    case MethodSpec::Kind::Grafting: return grafting(n, spec.beta);
    case MethodSpec::Kind::Representable:
      if (!spec.family) {
        throw Error(ErrorCode::EmptyFamily, "representable spec has no family attached");
      }
      return cluster_representable(*spec.family, n, spec.cap);
  }
  throw Error(ErrorCode::UnknownMethod, "unhandled method kind");
}

}  // namespace netclust
