#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "netclust/ingest.hpp"
#include "netclust/io.hpp"
#include "netclust/methods.hpp"
#include "netclust/metric.hpp"
#include "netclust/properties.hpp"

namespace {

using namespace netclust;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitCap = 4;

struct CommonOpts {
  std::string input;
  std::string format = "matrix";
  std::string zero_policy = "sentinel";
};

Network load_network(const CommonOpts& opts) {
  IngestionSpec spec;
  spec.path = opts.input;
  spec.format = parse_format(opts.format);
  spec.zero_policy =
      opts.zero_policy == "error" ? ZeroPolicy::Error : ZeroPolicy::Sentinel;
  return ingest(spec);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

int run_cluster(const CommonOpts& common, const std::string& method_text,
                const std::string& output, const std::string& out_format,
                std::size_t cap) {
  MethodSpec method = MethodSpec::parse(method_text);
  method.cap = cap;
  const Network n = load_network(common);
  const Ultrametric u = run_method(method, n);
  if (out_format == "json") {
    emit(output, dendrogram_to_json(dendrogram_from_ultrametric(u)));
  } else if (out_format == "newick") {
    emit(output, dendrogram_to_newick(dendrogram_from_ultrametric(u)));
  } else if (out_format == "ultra-csv") {
    emit(output, write_network_csv(u.as_network()));
  } else {
    std::cerr << "error: ParseError: unknown output format '" << out_format << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_audit(const CommonOpts& common, const std::string& property,
              const std::string& method_text, const std::string& input_b,
              std::uint64_t seed, std::size_t probes, std::size_t cap,
              const std::string& output) {
  static const std::set<std::string> kProperties = {
      "excisive", "scale", "idempotent", "value", "transform", "sandwich", "stability"};
  if (!kProperties.count(property)) {
    throw Error(ErrorCode::UnknownProperty, "no audit named '" + property + "'");
  }
  if (property != "value" && common.input.empty()) {
    std::cerr << "error: Usage: audit " << property << " needs --input\n";
    return kExitUsage;
  }
  MethodSpec method = MethodSpec::parse(method_text);
  method.cap = cap;

  AuditReport total;
  total.property = property;
  auto merge = [&](AuditReport r) {
    total.probes += r.probes;
    if (!r.holds && total.holds) {
      total.holds = false;
      total.witness = std::move(r.witness);
    }
  };

  if (property == "stability") {
    if (method.kind != MethodSpec::Kind::Representable) {
      std::cerr << "error: UnknownMethod: the stability audit applies to "
                   "representable methods only\n";
      return kExitUsage;
    }
    if (input_b.empty()) {
      std::cerr << "error: ParseError: stability needs --input-b\n";
      return kExitUsage;
    }
    const Network nx = load_network(common);
    CommonOpts b = common;
    b.input = input_b;
    merge(check_stability(*method.family, nx, load_network(b), cap));
  } else if (property == "value") {
    merge(check_value_axiom(method, default_value_grid()));
  } else {
    const Network n = load_network(common);
    std::mt19937_64 rng(seed);
    if (property == "excisive") {
      merge(check_excisiveness(method, n));
      for (std::size_t p = 0; p < probes; ++p)
        merge(check_excisiveness(method, random_network(n.size(), rng())));
    } else if (property == "scale") {
      merge(check_scale_preservation(method, n, default_alphas()));
      for (std::size_t p = 0; p < probes; ++p)
        merge(check_scale_preservation(method, random_network(n.size(), rng()),
                                       default_alphas()));
    } else if (property == "idempotent") {
      merge(check_idempotency(method, n));
      for (std::size_t p = 0; p < probes; ++p)
        merge(check_idempotency(method, random_network(n.size(), rng())));
    } else if (property == "sandwich") {
      merge(check_sandwich(method, n));
      for (std::size_t p = 0; p < probes; ++p)
        merge(check_sandwich(method, random_network(n.size(), rng())));
    } else if (property == "transform") {
      const std::size_t rounds = probes == 0 ? 1 : probes;
      for (std::size_t p = 0; p < rounds; ++p) {
        const ContractionPair pair = contract_network(n, rng());
        merge(check_transformation_axiom(method, pair.source, pair.target, pair.phi));
      }
    }
  }
  emit(output, total.to_json());
  return total.holds ? kExitOk : kExitViolated;
}

int run_distance(const CommonOpts& common, const std::string& input_b, bool exact,
                 bool upper, int trials, std::size_t cap, std::uint64_t seed) {
  if (exact == upper) {
    std::cerr << "error: ParseError: pick exactly one of --exact / --upper\n";
    return kExitUsage;
  }
  const Network a = load_network(common);
  CommonOpts b_opts = common;
  b_opts.input = input_b;
  const Network b = load_network(b_opts);
  if (exact) {
    std::cout << "exact " << format_sig(network_distance_exact(a, b, cap)) << "\n";
  } else {
    std::cout << "upper " << format_sig(network_distance_upper(a, b, trials, seed))
              << "\n";
  }
  return kExitOk;
}

int run_ingest_check(const CommonOpts& common) {
  const Network n = load_network(common);
  std::cout << "ok: " << n.size() << (n.size() == 1 ? " node" : " nodes");
  if (n.size() > 1) {
    double max_v = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i)
      for (std::size_t j = 0; j < n.size(); ++j) max_v = std::max(max_v, n(i, j));
    std::cout << ", separation " << format_sig(separation(n)) << ", max "
              << format_sig(max_v);
  }
  std::cout << "\n";
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnknownMethod:
    case ErrorCode::UnknownProperty:
      return kExitUsage;
    case ErrorCode::RepresenterTooLarge:
    case ErrorCode::InstanceTooLarge:
      return kExitCap;
    default:
      return kExitData;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hierarchical clustering of directed dissimilarity networks"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string method_text;
  std::string output;
  std::string out_format = "json";
  std::string input_b;
  std::string property;
  std::uint64_t seed = 0;
  std::size_t probes = 5;
  std::size_t cap = kDefaultRepresenterCap;
  std::size_t distance_cap = kDefaultDistanceCap;
  bool exact = false, upper = false;
  int trials = 50;

  auto add_common = [&](CLI::App* cmd, bool input_required = true) {
    auto* opt = cmd->add_option("--input", common.input, "input file");
    if (input_required) opt->required();
    cmd->add_option("--format", common.format, "matrix | edges | similarity")
        ->check(CLI::IsMember({"matrix", "edges", "similarity"}));
    cmd->add_option("--zero-policy", common.zero_policy,
                    "zero similarities: sentinel | error")
        ->check(CLI::IsMember({"sentinel", "error"}));
  };

  auto* cluster = app.add_subcommand("cluster", "run a clustering method");
  add_common(cluster);
  cluster->add_option("--method", method_text, "method spec")->required();
  cluster->add_option("--output", output, "output path (default stdout)");
  cluster->add_option("--out-format", out_format, "json | newick | ultra-csv")
      ->check(CLI::IsMember({"json", "newick", "ultra-csv"}));
  cluster->add_option("--cap", cap, "representer size cap");

  auto* audit = app.add_subcommand("audit", "audit a method against a property");
  audit->add_option("property", property,
                    "excisive | scale | idempotent | value | transform | sandwich | stability")
      ->required();
  add_common(audit, false);
  audit->add_option("--method", method_text, "method spec")->required();
  audit->add_option("--input-b", input_b, "second network (stability)");
  audit->add_option("--seed", seed, "probe generator seed");
  audit->add_option("--probes", probes, "extra random probes");
  audit->add_option("--cap", cap, "representer size cap");
  audit->add_option("--output", output, "report path (default stdout)");

  auto* distance = app.add_subcommand("distance", "network distance between two inputs");
  add_common(distance);
  distance->add_option("--input-b", input_b, "second network")->required();
  distance->add_flag("--exact", exact, "exact search over function pairs");
  distance->add_flag("--upper", upper, "randomized upper bound");
  distance->add_option("--trials", trials, "randomized restarts for --upper");
  distance->add_option("--cap", distance_cap, "exact-mode size cap");
  distance->add_option("--seed", seed, "restart seed");

  auto* ingest_check = app.add_subcommand("ingest-check", "validate an input file");
  add_common(ingest_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: Usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cluster->parsed()) return run_cluster(common, method_text, output, out_format, cap);
    if (audit->parsed())
      return run_audit(common, property, method_text, input_b, seed, probes, cap, output);
    if (distance->parsed())
      return run_distance(common, input_b, exact, upper, trials, distance_cap, seed);
    if (ingest_check->parsed()) return run_ingest_check(common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
