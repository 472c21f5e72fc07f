// fixlab command-line driver. Talks to the core exclusively through the
// extern-C surface in fixlab.h; all structured data crosses as JSON.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixlab.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 64;

struct InstanceHandle {
  fixlab_instance* ptr = nullptr;
  ~InstanceHandle() { fixlab_instance_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { fixlab_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

int report_error(const char* what, fixlab_status status, OwnedString& err) {
  std::cerr << "error: " << what;
  if (err.ptr) std::cerr << ": " << err.ptr;
  std::cerr << "\n";
  return status == FIXLAB_ERR_INVALID_INSTANCE || status == FIXLAB_ERR_PARSE
             ? kExitInvalid
             : kExitFail;
}

int load(const std::string& path, InstanceHandle& handle) {
  OwnedString err;
  fixlab_status st = fixlab_instance_load(path.c_str(), &handle.ptr, &err.ptr);
  if (st != FIXLAB_OK) return report_error("cannot load instance", st, err);
  return kExitPass;
}

std::string slack_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return std::to_string(v.get<double>());
}

int run_check(const std::string& path, const std::string& tau,
              const std::string& mode, bool as_json) {
  InstanceHandle inst;
  if (int rc = load(path, inst)) return rc;
  OwnedString cert, err;
  fixlab_status st = fixlab_check(inst.ptr, tau.empty() ? nullptr : tau.c_str(),
                                  mode.empty() ? nullptr : mode.c_str(), 0,
                                  &cert.ptr, &err.ptr);
  if (st != FIXLAB_OK) return report_error("check failed", st, err);
  json j = json::parse(cert.str());
  if (as_json) {
    std::cout << cert.str() << "\n";
  } else {
    std::cout << "mode:      " << j["mode"].get<std::string>() << "\n"
              << "tau:       " << j["tau"].get<double>() << "\n"
              << "tau_star:  " << slack_text(j["tau_star"]) << "\n"
              << "tuples:    " << j["tuples"].get<size_t>() << "\n"
              << "result:    " << (j["passes"].get<bool>() ? "PASS" : "FAIL")
              << "\n";
    for (const auto& v : j["violations"]) {
      std::cout << "  violated: i=" << v["i"] << " x=" << v["x"]
                << " y=" << v["y"] << " ux=" << v["ux"]
                << " best uy=" << v["uy"] << " slack=" << slack_text(v["slack"])
                << "\n";
    }
  }
  return j["passes"].get<bool>() ? kExitPass : kExitFail;
}

int run_tau(const std::string& path, const std::string& mode) {
  InstanceHandle inst;
  if (int rc = load(path, inst)) return rc;
  double tau_star = 0;
  OwnedString err;
  fixlab_status st = fixlab_max_tau(
      inst.ptr, mode.empty() ? nullptr : mode.c_str(), &tau_star, &err.ptr);
  if (st != FIXLAB_OK) return report_error("tau failed", st, err);
  if (std::isinf(tau_star))
    std::cout << "inf\n";
  else
    std::cout << tau_star << "\n";
  return tau_star > 0 ? kExitPass : kExitFail;
}

int run_solve(const std::string& path, const std::string& start, int map_index,
              const std::string& mode, bool as_json) {
  InstanceHandle inst;
  if (int rc = load(path, inst)) return rc;
  OwnedString traces, err;
  fixlab_status st =
      fixlab_solve(inst.ptr, start.empty() ? nullptr : start.c_str(), map_index,
                   0, mode.empty() ? nullptr : mode.c_str(), 0, &traces.ptr,
                   &err.ptr);
  if (st != FIXLAB_OK) return report_error("solve failed", st, err);
  if (as_json) {
    std::cout << traces.str() << "\n";
    return kExitPass;
  }
  json j = json::parse(traces.str());
  for (const auto& t : j) {
    std::cout << "orbit from " << t["start"].get<std::string>() << " via T"
              << t["map_index"] << ": " << t["start"].get<std::string>();
    for (const auto& s : t["steps"])
      std::cout << " -> " << s["successor"].get<std::string>();
    const auto& term = t["terminal"];
    std::string kind = term["kind"].get<std::string>();
    if (kind == "fixed_point")
      std::cout << " | fixed point " << term["point"].get<std::string>();
    else if (kind == "stalled")
      std::cout << " | stalled at " << term["point"].get<std::string>() << " ("
                << term["reason"].get<std::string>() << ")";
    else if (kind == "cycle_detected")
      std::cout << " | cycle detected";
    else
      std::cout << " | step limit";
    if (!t["decrement"].is_null())
      std::cout << " [decrement "
                << (t["decrement"]["ok"].get<bool>() ? "ok" : "violated")
                << "]";
    if (!t["n1"].is_null()) std::cout << " [n1=" << t["n1"] << "]";
    std::cout << "\n";
  }
  return kExitPass;
}

int run_analyze(const std::string& path, bool as_json) {
  InstanceHandle inst;
  if (int rc = load(path, inst)) return rc;
  OwnedString report, err;
  fixlab_status st = fixlab_analyze(inst.ptr, &report.ptr, &err.ptr);
  if (st != FIXLAB_OK) return report_error("analyze failed", st, err);
  if (as_json) {
    std::cout << report.str() << "\n";
    return kExitPass;
  }
  json j = json::parse(report.str());
  for (size_t i = 0; i < j["fix_sets"].size(); ++i)
    std::cout << "Fix(T" << i + 1 << ") = " << j["fix_sets"][i].dump() << "\n";
  std::cout << "fix sets equal:    "
            << (j["fix_sets_equal"].get<bool>() ? "yes" : "no") << "\n"
            << "common fixed point set: " << j["common_fix"].dump() << "\n"
            << "well-ordered:      "
            << (j["well_ordered"].get<bool>() ? "yes" : "no") << "\n"
            << "singleton:         "
            << (j["singleton"].get<bool>() ? "yes" : "no") << "\n"
            << "conclusion (3):    "
            << (j["conclusion3_biconditional"].get<bool>() ? "holds" : "fails")
            << "\n";
  return kExitPass;
}

int run_generate(std::uint64_t seed, int n, double density, int m,
                 const std::string& out_path) {
  InstanceHandle inst;
  OwnedString err;
  fixlab_status st = fixlab_generate(seed, n, density, m, &inst.ptr, &err.ptr);
  if (st != FIXLAB_OK) return report_error("generate failed", st, err);
  if (out_path.empty()) {
    OwnedString text;
    fixlab_instance_to_json(inst.ptr, &text.ptr);
    std::cout << text.str();
    return kExitPass;
  }
  st = fixlab_instance_save(inst.ptr, out_path.c_str(), &err.ptr);
  if (st != FIXLAB_OK) return report_error("cannot write instance", st, err);
  std::cout << "wrote " << out_path << "\n";
  return kExitPass;
}

bool expect(bool ok, const std::string& what, int& failures) {
  std::cout << (ok ? "  ok   " : "  FAIL ") << what << "\n";
  if (!ok) ++failures;
  return ok;
}

// Builds the worked-example truncation and asserts its golden expectations:
// the certificate at tau = 1 in both modes, the fixed-point structure, and
// convergence of every orbit to the bottom point.
int run_example23(int n, bool as_json) {
  InstanceHandle inst;
  OwnedString err;
  fixlab_status st = fixlab_example23(n, &inst.ptr, &err.ptr);
  if (st != FIXLAB_OK) return report_error("example23 failed", st, err);

  if (as_json) {
    OwnedString text;
    fixlab_instance_to_json(inst.ptr, &text.ptr);
    std::cout << text.str();
    return kExitPass;
  }

  int failures = 0;
  std::cout << "example23 N=" << n << "\n";
  for (const char* mode : {"existential", "strong"}) {
    OwnedString cert;
    st = fixlab_check(inst.ptr, "1", mode, 0, &cert.ptr, &err.ptr);
    if (st != FIXLAB_OK) return report_error("check failed", st, err);
    json j = json::parse(cert.str());
    expect(j["passes"].get<bool>(),
           std::string(mode) + " certificate passes at tau=1", failures);
    double tau_star = 0;
    fixlab_max_tau(inst.ptr, mode, &tau_star, nullptr);
    expect(tau_star >= 1.0, std::string(mode) + " tau_star >= 1", failures);
  }
  {
    OwnedString report;
    st = fixlab_analyze(inst.ptr, &report.ptr, &err.ptr);
    if (st != FIXLAB_OK) return report_error("analyze failed", st, err);
    json j = json::parse(report.str());
    expect(j["fix_sets_equal"].get<bool>(), "fix sets equal", failures);
    expect(j["common_fix"] == json::array({"1"}), "common fixed point {1}",
           failures);
    expect(j["singleton"].get<bool>() && j["well_ordered"].get<bool>(),
           "common set singleton and well-ordered", failures);
  }
  for (int map_index : {1, 2}) {
    OwnedString traces;
    st = fixlab_solve(inst.ptr, nullptr, map_index, 0, "existential", 0,
                      &traces.ptr, &err.ptr);
    if (st != FIXLAB_OK) return report_error("solve failed", st, err);
    json j = json::parse(traces.str());
    bool all_converge = true;
    for (const auto& t : j) {
      bool ok = t["terminal"]["kind"] == "fixed_point" &&
                t["terminal"]["point"] == "1" &&
                static_cast<int>(t["steps"].size()) <= 2 * n;
      all_converge = all_converge && ok;
    }
    expect(all_converge,
           "all orbits via T" + std::to_string(map_index) +
               " reach fixed point 1 within 2N steps",
           failures);
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixlab: contraction certificates and fixed-point orbits on "
               "finite ordered metric spaces"};
  app.require_subcommand(1);

  std::string path, tau, mode, start, out_path;
  int map_index = 1, n = 10, m = 2;
  std::uint64_t seed = 1;
  double density = 0.5;
  bool as_json = false;

  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode, "existential|strong");
  };

  auto* check = app.add_subcommand("check", "decide the contraction hypothesis");
  check->add_option("instance", path)->required();
  check->add_option("--tau", tau, "modulus override, rational");
  add_mode(check);
  check->add_flag("--json", as_json);

  auto* tau_cmd = app.add_subcommand("tau", "maximal admissible modulus");
  tau_cmd->add_option("instance", path)->required();
  add_mode(tau_cmd);

  auto* solve = app.add_subcommand("solve", "run fixed-point orbits");
  solve->add_option("instance", path)->required();
  solve->add_option("--start", start, "start point label (default: all)");
  solve->add_option("--map-index", map_index, "1-based first map");
  add_mode(solve);
  solve->add_flag("--json", as_json);

  auto* analyze = app.add_subcommand("analyze", "fixed-point sets and conclusions");
  analyze->add_option("instance", path)->required();
  analyze->add_flag("--json", as_json);

  auto* example = app.add_subcommand("example23", "golden worked example");
  example->add_option("--n", n, "truncation size");
  example->add_flag("--json", as_json, "emit the instance instead of checking");

  auto* generate = app.add_subcommand("generate", "random instance");
  generate->add_option("--seed", seed)->required();
  generate->add_option("--n", n, "point count")->required();
  generate->add_option("--density", density, "order density in [0,1]");
  generate->add_option("--m", m, "number of maps");
  generate->add_option("-o,--output", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed()) return run_check(path, tau, mode, as_json);
  if (tau_cmd->parsed()) return run_tau(path, mode);
  if (solve->parsed()) return run_solve(path, start, map_index, mode, as_json);
  if (analyze->parsed()) return run_analyze(path, as_json);
  if (example->parsed()) return run_example23(n, as_json);
  if (generate->parsed()) return run_generate(seed, n, density, m, out_path);
  return kExitUsage;
}
