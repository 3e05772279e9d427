#include "kbp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kbp/errors.hpp"
#include "kbp/json_io.hpp"
#include "kbp/selftest.hpp"
#include "kbp/specfun.hpp"

namespace kbp::cli {
namespace {

construct::ConstructionParams params_of(const RunConfig& c) {
  construct::ConstructionParams p{DimPair(c.n, c.k), c.s0, c.eps, c.variant};
  p.validate();
  return p;
}

RunResult dispatch(const RunConfig& c) {
  if (c.grid < 2) throw ParameterError("--grid must be >= 2");
  if (c.degree < 1) throw ParameterError("--degree must be >= 1");
  const DimPair dims(c.n, c.k);

  switch (c.command) {
    case Command::constants:
      return {kExitOk, dump_stable(specfun::to_json(specfun::make_constants_table(dims))),
              "constants for n=" + std::to_string(c.n) + " k=" + std::to_string(c.k)};

    case Command::construct: {
      const auto params = params_of(c);
      auto r = construct::verify_claims(construct::build_g(params), dims, c.grid);
      nlohmann::json doc = construct::to_json(r);
      doc["params"] = construct::to_json(params);
      return {kExitOk, dump_stable(doc), "construction built"};
    }

    case Command::verify: {
      const auto params = params_of(c);
      const auto r = construct::verify_claims(construct::build_g(params), dims, c.grid);
      const auto all = construct::verify_all_m(r, c.n, c.grid);
      nlohmann::json doc = construct::to_json(r);
      doc["params"] = construct::to_json(params);
      nlohmann::json per_k = nlohmann::json::object();
      bool ok = r.claims_hold();
      for (const auto& [k, m] : all) {
        per_k[std::to_string(k)] = {{"dual_margin", m.dual_margin},
                                    {"perp_margin", m.perp_margin},
                                    {"slack", m.slack},
                                    {"holds", m.holds}};
        ok = ok && m.holds;
      }
      doc["all_k"] = per_k;
      doc["verified"] = ok;
      return {ok ? kExitOk : kExitNegative, dump_stable(doc),
              ok ? "claims verified" : "claims NOT verified"};
    }

    case Command::certify: {
      const auto params = params_of(c);
      try {
        const auto cert = certify::certify_with_doubling(params, c.degree, Exec::parallel, c.seed);
        return {kExitOk, dump_stable(certify::to_json(cert, c.emit_moments)),
                "certificate found: pairing " + std::to_string(cert.pairing_value)};
      } catch (const CertificateNotFound& e) {
        nlohmann::json doc = {{"params", construct::to_json(params)},
                              {"status", "certificate not found"},
                              {"detail", e.what()}};
        return {kExitNegative, dump_stable(doc), "certificate not found"};
      }
    }

    case Command::profile: {
      if (!c.output_path) throw ParameterError("profile requires --out PATH");
      const auto params = params_of(c);
      const auto samples = certify::body_profile(params, c.grid);
      return {kExitOk, certify::body_profile_csv(samples),
              "wrote " + std::to_string(samples.size()) + " profile rows"};
    }

    case Command::selftest: {
      const auto report = run_selftest(c);
      const bool ok = report.at("failed").get<int>() == 0;
      return {ok ? kExitOk : kExitNegative, dump_stable(report),
              "selftest: " + std::to_string(report.at("passed").get<int>()) + " passed, " +
                  std::to_string(report.at("failed").get<int>()) + " failed"};
    }
  }
  throw ParameterError("unknown command");
}

}  // namespace

Command command_from_string(const std::string& name) {
  if (name == "constants") return Command::constants;
  if (name == "construct") return Command::construct;
  if (name == "verify") return Command::verify;
  if (name == "certify") return Command::certify;
  if (name == "profile") return Command::profile;
  if (name == "selftest") return Command::selftest;
  throw ParameterError("unknown command: " + name);
}

RunResult run(const RunConfig& config) {
  try {
    return dispatch(config);
  } catch (const ParameterError& e) {
    return {kExitParameter, "", e.what()};
  } catch (const DomainError& e) {
    return {kExitParameter, "", e.what()};
  } catch (const UnsupportedError& e) {
    return {kExitParameter, "", e.what()};
  } catch (const VerificationFailed& e) {
    return {kExitNegative, "", e.what()};
  } catch (const CertificateNotFound& e) {
    return {kExitNegative, "", e.what()};
  } catch (const AccuracyError& e) {
    return {kExitAccuracy, "", std::string(e.what()) + " (last estimate " +
                                   std::to_string(e.last_estimate()) + ")"};
  } catch (const std::exception& e) {
    return {kExitAccuracy, "", e.what()};
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Counter-example profile, verification and certificate for k-intersection bodies"};
  RunConfig config;
  std::string command;
  std::string variant = "parabola";
  std::string out;

  app.add_option("command", command, "constants | construct | verify | certify | profile | selftest")
      ->required()
      ->check(CLI::IsMember({"constants", "construct", "verify", "certify", "profile", "selftest"}));
  app.add_option("--n", config.n, "ambient dimension (>= 4)");
  app.add_option("--k", config.k, "class index (2 <= k <= n-2)");
  app.add_option("--s0", config.s0, "center of the bump");
  app.add_option("--eps", config.eps, "bump half-width parameter");
  app.add_option("--variant", variant, "bump shape")->check(CLI::IsMember({"parabola", "glued"}));
  app.add_option("--grid", config.grid, "verification / profile grid size");
  app.add_option("--degree", config.degree, "starting Bernstein degree for certify");
  app.add_flag("--emit-moments", config.emit_moments, "include every Bernstein moment in the bundle");
  app.add_option("--out", out, "output path");
  app.add_option("--seed", config.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }
  config.command = command_from_string(command);
  config.variant = construct::variant_from_string(variant);
  if (!out.empty()) config.output_path = out;

  const RunResult result = run(config);
  if (!result.document.empty()) {
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open " << *config.output_path << " for writing\n";
        return kExitParameter;
      }
      file << result.document;
    } else {
      std::cout << result.document;
    }
  }
  if (!result.message.empty()) std::cerr << result.message << "\n";
  return result.exit_code;
}

}  // namespace kbp::cli
