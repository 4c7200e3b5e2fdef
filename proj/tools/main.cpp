#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tubings/errors.hpp"
#include "tubings/json_io.hpp"
#include "tubings/opcat.hpp"
#include "tubings/verify.hpp"

namespace {

using tubings::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct OutputOptions {
  bool pretty = false;
  std::string output_path;
};

void emit(const Json& j, const OutputOptions& out) {
  std::string text = out.pretty ? j.dump(2) : j.dump();
  if (out.output_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out.output_path);
    if (!f) throw tubings::InputError("cannot open output file " + out.output_path);
    f << text << "\n";
  }
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw tubings::InputError("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw tubings::InputError("JSON parse error in " + path + ": " + e.what());
  }
}

// Deterministic FNV-1a, used as the cache checksum.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_dir_from_env(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("TUBINGS_CACHE_DIR");
  return env ? env : "";
}

Json enumerate_with_cache(const tubings::Graph& g, const std::string& cache_dir) {
  std::string payload;
  if (!cache_dir.empty()) {
    std::string path = cache_dir + "/" + std::to_string(fnv1a(g.encode())) + ".json";
    std::ifstream f(path);
    if (f) {
      try {
        Json cached = Json::parse(f);
        std::string body = cached.at("tubings").dump();
        if (cached.at("graph") == tubings::graph_to_json(g) &&
            cached.at("checksum").get<std::uint64_t>() == fnv1a(body))
          return cached.at("tubings");
      } catch (...) {
        // corrupted cache entries are recomputed silently
      }
    }
  }
  Json arr = Json::array();
  for (const tubings::Tubing& T : tubings::enumerate_tubings(g))
    arr.push_back(tubings::tubing_to_json(T));
  if (!cache_dir.empty()) {
    Json cached;
    cached["graph"] = tubings::graph_to_json(g);
    cached["checksum"] = fnv1a(arr.dump());
    cached["tubings"] = arr;
    std::string path = cache_dir + "/" + std::to_string(fnv1a(g.encode())) + ".json";
    std::ofstream f(path);
    if (f) f << cached.dump() << "\n";
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tubings: the combinatorial calculus of graph associahedra"};
  app.require_subcommand(1);

  OutputOptions out;
  app.add_flag("--pretty", out.pretty, "indent JSON output");
  app.add_option("-o,--output", out.output_path, "write JSON to a file instead of stdout");

  std::string cache_dir_flag;
  app.add_option("--cache-dir", cache_dir_flag,
                 "cache directory for enumerations (or TUBINGS_CACHE_DIR)");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "all tubings of a graph");
  std::string enum_graph;
  cmd_enum->add_option("graph", enum_graph, "graph JSON file")->required();

  // fvector
  auto* cmd_fvec = app.add_subcommand("fvector", "face counts by dimension");
  std::string fvec_graph;
  cmd_fvec->add_option("graph", fvec_graph, "graph JSON file")->required();

  // boundary
  auto* cmd_boundary = app.add_subcommand("boundary", "signed boundary of a tubing");
  std::string boundary_tubing;
  cmd_boundary->add_option("tubing", boundary_tubing, "tubing JSON file")->required();

  // coproduct
  auto* cmd_coprod = app.add_subcommand("coproduct", "pre-Lie coproduct of a tubing");
  std::string coprod_tubing;
  cmd_coprod->add_option("tubing", coprod_tubing, "tubing JSON file")->required();

  // substitute
  auto* cmd_subst = app.add_subcommand("substitute", "substitution into a tubing");
  std::string subst_tubing;
  int subst_slot = -1;
  std::string subst_arg;
  std::vector<std::string> subst_full;
  cmd_subst->add_option("tubing", subst_tubing, "tubing JSON file")->required();
  cmd_subst->add_option("--slot", subst_slot, "slot index (numbering order, universal = 0)");
  cmd_subst->add_option("--arg", subst_arg, "argument tubing JSON file for --slot");
  cmd_subst->add_option("--full", subst_full, "argument files S0 ... Sk for every slot");

  // dtub
  auto* cmd_dtub = app.add_subcommand("dtub", "trialgebra operations on dtubings");
  std::string dtub_op, dtub_a, dtub_b;
  cmd_dtub->add_option("op", dtub_op, "vdash|dashv|times|d|lright|lleft|lperp")->required();
  cmd_dtub->add_option("a", dtub_a, "first operand JSON file")->required();
  cmd_dtub->add_option("b", dtub_b, "second operand JSON file (not used by d)");

  // opcat
  auto* cmd_opcat = app.add_subcommand("opcat", "operadic-category computations");
  auto* cmd_fiber = cmd_opcat->add_subcommand("fiber", "fiber of a morphism");
  std::string fiber_T, fiber_S;
  int fiber_i = 1;
  cmd_fiber->add_option("source", fiber_T, "source tubing JSON file")->required();
  cmd_fiber->add_option("target", fiber_S, "target tubing JSON file")->required();
  cmd_fiber->add_option("--i", fiber_i, "fiber index")->required();
  auto* cmd_axioms = cmd_opcat->add_subcommand("verify", "axiom report for a graph");
  std::string axioms_graph;
  cmd_axioms->add_option("graph", axioms_graph, "graph JSON file")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  tubings::SuiteOptions sopt;
  cmd_verify->add_option("suite", suite, "d2|welldef|prelie|topo|substitution|generators|"
                                         "operad|permutad|trias|lalgebra|opcat")
      ->required();
  cmd_verify->add_option("--max-n", sopt.max_n, "node cap for the suite");
  cmd_verify->add_option("--seed", sopt.seed, "seed for sampled cases");
  cmd_verify->add_option("--samples", sopt.samples, "sample count for randomized parts");
  cmd_verify->add_option("--threads", sopt.threads, "worker threads (0 = hardware)");

  // convert: documented extension point, not implemented
  auto* cmd_convert =
      app.add_subcommand("convert", "format conversion (reserved, not implemented)");

  try {
    app.parse(argc, argv);

    if (*cmd_enum) {
      emit(enumerate_with_cache(tubings::graph_from_json(load_json(enum_graph)),
                                cache_dir_from_env(cache_dir_flag)),
           out);
      return kExitOk;
    }
    if (*cmd_fvec) {
      Json arr = Json::array();
      for (long long c : tubings::f_vector(tubings::graph_from_json(load_json(fvec_graph))))
        arr.push_back(c);
      emit(arr, out);
      return kExitOk;
    }
    if (*cmd_boundary) {
      tubings::Tubing T = tubings::tubing_from_json(load_json(boundary_tubing));
      emit(tubings::chain_to_json(tubings::boundary(T)), out);
      return kExitOk;
    }
    if (*cmd_coprod) {
      tubings::Tubing T = tubings::tubing_from_json(load_json(coprod_tubing));
      emit(tubings::coproduct_to_json(tubings::prelie_coproduct(T)), out);
      return kExitOk;
    }
    if (*cmd_subst) {
      tubings::Tubing T = tubings::tubing_from_json(load_json(subst_tubing));
      tubings::LabeledTubing labeled = tubings::LabeledTubing::with_default_labels(T);
      tubings::Tubing result = T;
      if (!subst_full.empty()) {
        std::vector<tubings::Tubing> args;
        for (const std::string& path : subst_full)
          args.push_back(tubings::tubing_from_json(load_json(path)));
        result = tubings::gamma_full(labeled, args);
      } else if (subst_slot >= 0) {
        if (subst_arg.empty())
          throw tubings::InputError("--slot requires --arg <tubing.json>");
        if (subst_slot >= static_cast<int>(labeled.labels.size()))
          throw tubings::InputError("slot index out of range");
        result = tubings::gamma_t(T, labeled.labels[subst_slot],
                                  tubings::tubing_from_json(load_json(subst_arg)));
      } else {
        throw tubings::InputError("substitute needs --slot <i> --arg <S.json> or --full ...");
      }
      Json j;
      j["tubing"] = tubings::tubing_to_json(result);
      if (result.graph().edge_count() ==
          result.graph().node_count() * (result.graph().node_count() - 1) / 2) {
        Json x = Json::array();
        for (int v : tubings::to_surjection(result)) x.push_back(v);
        j["surjection"] = std::move(x);
      }
      emit(j, out);
      return kExitOk;
    }
    if (*cmd_dtub) {
      using tubings::DChain;
      using tubings::DTubing;
      if (dtub_op == "d") {
        DTubing a = tubings::dtubing_from_json(load_json(dtub_a));
        emit(tubings::dchain_to_json(tubings::differential(a)), out);
        return kExitOk;
      }
      if (dtub_b.empty()) throw tubings::InputError("dtub " + dtub_op + " needs two operands");
      if (dtub_op == "lright" || dtub_op == "lleft" || dtub_op == "lperp") {
        tubings::Tubing a = tubings::tubing_from_json(load_json(dtub_a));
        tubings::Tubing b = tubings::tubing_from_json(load_json(dtub_b));
        tubings::Tubing r = dtub_op == "lright" ? tubings::l_right(a, b)
                            : dtub_op == "lleft" ? tubings::l_left(a, b)
                                                 : tubings::l_perp(a, b);
        emit(tubings::tubing_to_json(r), out);
        return kExitOk;
      }
      DTubing a = tubings::dtubing_from_json(load_json(dtub_a));
      DTubing b = tubings::dtubing_from_json(load_json(dtub_b));
      DChain r;
      if (dtub_op == "vdash") r = tubings::vdash(a, b);
      else if (dtub_op == "dashv") r = tubings::dashv(a, b);
      else if (dtub_op == "times") r = tubings::times(a, b);
      else throw tubings::InputError("unknown dtub op " + dtub_op);
      emit(tubings::dchain_to_json(r), out);
      return kExitOk;
    }
    if (*cmd_opcat) {
      if (*cmd_fiber) {
        tubings::Tubing T = tubings::tubing_from_json(load_json(fiber_T));
        tubings::Tubing S = tubings::tubing_from_json(load_json(fiber_S));
        auto f = tubings::OcdMorphism::checked(T, S);
        emit(tubings::tubing_to_json(tubings::fiber(f, fiber_i).tubing), out);
        return kExitOk;
      }
      if (*cmd_axioms) {
        tubings::AxiomReport r =
            tubings::axiom_suite(tubings::graph_from_json(load_json(axioms_graph)));
        Json j;
        Json entries = Json::array();
        for (const auto& e : r.entries) {
          Json je;
          je["axiom"] = e.axiom;
          je["cases"] = e.cases;
          je["failures"] = e.failures;
          if (!e.counterexample.empty()) je["counterexample"] = e.counterexample;
          entries.push_back(std::move(je));
        }
        j["axioms"] = std::move(entries);
        j["pass"] = r.all_passed();
        emit(j, out);
        return r.all_passed() ? kExitOk : kExitVerificationFailure;
      }
      throw tubings::InputError("opcat needs a subcommand (fiber|verify)");
    }
    if (*cmd_verify) {
      tubings::VerificationReport rep = tubings::run_suite(suite, sopt);
      emit(rep.to_json(), out);
      return rep.passed() ? kExitOk : kExitVerificationFailure;
    }
    if (*cmd_convert) {
      throw tubings::InputError(
          "convert is a reserved extension point; no emitters are implemented");
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const tubings::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const tubings::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const tubings::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
