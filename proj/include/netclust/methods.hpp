#pragma once

#include <memory>
#include <string>

#include "netclust/network.hpp"
#include "netclust/representable.hpp"

namespace netclust {

Ultrametric reciprocal(const Network& n);
Ultrametric nonreciprocal(const Network& n);
Ultrametric semi_reciprocal(const Network& n, int t);
Ultrametric grafting(const Network& n, double beta);

// Parsed method selector. Text syntax: "reciprocal", "nonreciprocal",
// "semi:<t>", "graft:<beta>", "representable:<family-file>".
struct MethodSpec {
  enum class Kind { Reciprocal, Nonreciprocal, SemiReciprocal, Grafting, Representable };

  Kind kind = Kind::Reciprocal;
  int t = 0;
  double beta = 0.0;
  std::shared_ptr<const RepresenterFamily> family;
  std::string family_name;
  std::size_t cap = kDefaultRepresenterCap;

  static MethodSpec parse(const std::string& text);  // loads family files
  static MethodSpec representable(RepresenterFamily family, std::string name = "family");

  std::string describe() const;
  // Comparisons against this method's output may use exact equality; false
  // when expansion constants divide by non-unit weights.
  bool division_free() const;
};

Ultrametric run_method(const MethodSpec& spec, const Network& n);

}  // namespace netclust
