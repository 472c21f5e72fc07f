#include "fixlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "fixlab/builders.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/instance.hpp"
#include "fixlab/solver.hpp"

using nlohmann::json;
using namespace fixlab;

struct fixlab_instance {
  Instance inst;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error) *error = dup_string(message);
}

template <typename Fn>
fixlab_status wrap(char** error, Fn&& fn) {
  try {
    fn();
    return FIXLAB_OK;
  } catch (const InvalidInstance& e) {
    set_error(error, e.what());
    return FIXLAB_ERR_INVALID_INSTANCE;
  } catch (const InvalidParameter& e) {
    set_error(error, e.what());
    return FIXLAB_ERR_INVALID_PARAMETER;
  } catch (const DomainError& e) {
    set_error(error, e.what());
    return FIXLAB_ERR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return FIXLAB_ERR_PARSE;
  }
}

json finite_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

json entry_to_json(const OrderedMetricSpace& space, const WitnessEntry& e) {
  json j;
  j["i"] = e.i + 1;
  j["x"] = space.points[e.x];
  j["y"] = space.points[e.y];
  j["ux"] = space.points[e.ux];
  j["uy"] = e.uy ? json(space.points[*e.uy]) : json(nullptr);
  j["slack"] = finite_or_inf(e.slack);
  if (e.uy && !std::isinf(e.slack)) {
    j["d"] = e.dist;
    j["M"] = e.m;
  }
  return j;
}

json certificate_to_json(const OrderedMetricSpace& space,
                         const Certificate& cert) {
  json j;
  j["passes"] = cert.passes;
  j["tau"] = cert.tau;
  j["tau_star"] = finite_or_inf(cert.tau_star);
  j["mode"] = mode_to_string(cert.mode);
  j["tuples"] = cert.witness_table.size();
  json viols = json::array();
  for (const auto& e : cert.violations) viols.push_back(entry_to_json(space, e));
  j["violations"] = std::move(viols);
  json table = json::array();
  for (const auto& e : cert.witness_table) table.push_back(entry_to_json(space, e));
  j["witness_table"] = std::move(table);
  return j;
}

json trace_to_json(const Instance& inst, PointIndex x0, int i0, Mode mode,
                   const OrbitTrace& trace, double eps) {
  const auto& space = inst.space;
  json j;
  j["start"] = space.points[x0];
  j["map_index"] = i0 + 1;
  j["mode"] = mode_to_string(mode);
  json steps = json::array();
  bool any_positive = false;
  for (const auto& s : trace.steps) {
    if (s.d > 0) any_positive = true;
    json step;
    step["point"] = space.points[s.point];
    step["map_index"] = s.map_index + 1;
    step["successor"] = space.points[s.successor];
    step["d"] = to_string(s.d);
    step["F_d"] = s.gauge_of_d;
    step["slack"] = s.slack_used ? finite_or_inf(*s.slack_used) : json(nullptr);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  json terminal;
  switch (trace.terminal) {
    case TerminalKind::FixedPoint:
      terminal["kind"] = "fixed_point";
      terminal["point"] = space.points[trace.terminal_point];
      break;
    case TerminalKind::Stalled:
      terminal["kind"] = "stalled";
      terminal["point"] = space.points[trace.terminal_point];
      terminal["reason"] = trace.stall_reason;
      break;
    case TerminalKind::CycleDetected: {
      terminal["kind"] = "cycle_detected";
      json cycle = json::array();
      for (const auto& [p, m] : trace.cycle)
        cycle.push_back({space.points[p], m + 1});
      terminal["cycle"] = std::move(cycle);
      break;
    }
    case TerminalKind::StepLimit:
      terminal["kind"] = "step_limit";
      terminal["point"] = space.points[trace.terminal_point];
      break;
  }
  j["terminal"] = std::move(terminal);
  j["n1"] = trace.n1 ? json(*trace.n1) : json(nullptr);
  if (!trace.steps.empty() && trace.steps.front().d > 0) {
    auto dec = decrement_check(trace, inst.gauge, to_double(inst.tau), eps);
    j["decrement"] = {{"ok", dec.ok},
                      {"first_violation", dec.first_violation
                                              ? json(*dec.first_violation)
                                              : json(nullptr)}};
  } else {
    j["decrement"] = nullptr;
  }
  return j;
}

Mode resolve_mode(const Instance& inst, const char* override_str) {
  return override_str ? mode_from_string(override_str) : inst.mode;
}

double resolve_eps(double eps) { return eps > 0 ? eps : default_eps(); }

}  // namespace

extern "C" {

void fixlab_string_free(char* s) { std::free(s); }

void fixlab_instance_free(fixlab_instance* inst) { delete inst; }

fixlab_status fixlab_instance_from_json(const char* text,
                                        fixlab_instance** out, char** error) {
  return wrap(error, [&] {
    if (!text || !out) throw InvalidParameter("null argument");
    *out = new fixlab_instance{instance_from_json(text)};
  });
}

fixlab_status fixlab_instance_load(const char* path, fixlab_instance** out,
                                   char** error) {
  return wrap(error, [&] {
    if (!path || !out) throw InvalidParameter("null argument");
    *out = new fixlab_instance{load_instance(path)};
  });
}

fixlab_status fixlab_instance_to_json(const fixlab_instance* inst, char** out) {
  return wrap(nullptr, [&] {
    if (!inst || !out) throw InvalidParameter("null argument");
    *out = dup_string(instance_to_json(inst->inst));
  });
}

fixlab_status fixlab_instance_save(const fixlab_instance* inst,
                                   const char* path, char** error) {
  return wrap(error, [&] {
    if (!inst || !path) throw InvalidParameter("null argument");
    save_instance(inst->inst, path);
  });
}

fixlab_status fixlab_example23(int n, fixlab_instance** out, char** error) {
  return wrap(error, [&] {
    if (!out) throw InvalidParameter("null argument");
    auto [space, family] = build_example23(n);
    Instance inst;
    inst.space = std::move(space);
    inst.family = std::move(family);
    inst.gauge = {GaugeKind::LnPlusId, 0.5};
    inst.functional.variant = FunctionalVariant::MMax;
    inst.tau = 1;
    inst.mode = Mode::Existential;
    inst.validate();
    *out = new fixlab_instance{std::move(inst)};
  });
}

fixlab_status fixlab_generate(uint64_t seed, int n, double order_density,
                              int m, fixlab_instance** out, char** error) {
  return wrap(error, [&] {
    if (!out) throw InvalidParameter("null argument");
    Instance inst;
    inst.space = generate_instance(seed, n, order_density);
    inst.family = generate_family(seed, inst.space, m);
    inst.gauge = {GaugeKind::LnPlusId, 0.5};
    inst.functional.variant = FunctionalVariant::MMax;
    inst.tau = 1;
    inst.mode = Mode::Existential;
    inst.validate();
    *out = new fixlab_instance{std::move(inst)};
  });
}

fixlab_status fixlab_validate(const fixlab_instance* inst, char** report,
                              char** error) {
  return wrap(error, [&] {
    if (!inst || !report) throw InvalidParameter("null argument");
    auto r = validate_space(inst->inst.space);
    json j;
    j["ok"] = r.ok;
    json viols = json::array();
    for (const auto& v : r.violations) {
      viols.push_back({{"axiom", v.axiom},
                       {"tuple", v.tuple},
                       {"lhs", to_string(v.lhs)},
                       {"rhs", to_string(v.rhs)}});
    }
    j["violations"] = std::move(viols);
    *report = dup_string(j.dump(2));
  });
}

fixlab_status fixlab_check(const fixlab_instance* inst,
                           const char* tau_override, const char* mode_override,
                           double eps, char** certificate, char** error) {
  return wrap(error, [&] {
    if (!inst || !certificate) throw InvalidParameter("null argument");
    const Instance& in = inst->inst;
    double tau = tau_override ? to_double(parse_rational(tau_override))
                              : to_double(in.tau);
    Mode mode = resolve_mode(in, mode_override);
    auto cert = check_family(in.space, in.family, in.gauge, in.functional, tau,
                             mode, resolve_eps(eps));
    *certificate = dup_string(certificate_to_json(in.space, cert).dump(2));
  });
}

fixlab_status fixlab_max_tau(const fixlab_instance* inst,
                             const char* mode_override, double* out_tau_star,
                             char** error) {
  return wrap(error, [&] {
    if (!inst || !out_tau_star) throw InvalidParameter("null argument");
    const Instance& in = inst->inst;
    *out_tau_star = max_tau(in.space, in.family, in.gauge, in.functional,
                            resolve_mode(in, mode_override));
  });
}

fixlab_status fixlab_solve(const fixlab_instance* inst,
                           const char* start_label, int map_index,
                           int max_steps, const char* mode_override,
                           double eps, char** traces, char** error) {
  return wrap(error, [&] {
    if (!inst || !traces) throw InvalidParameter("null argument");
    const Instance& in = inst->inst;
    Mode mode = resolve_mode(in, mode_override);
    double e = resolve_eps(eps);
    std::vector<PointIndex> starts;
    if (start_label) {
      PointIndex x0 = in.space.index_of(start_label);
      if (x0 < 0)
        throw InvalidParameter("unknown start point \"" +
                               std::string(start_label) + "\"");
      starts.push_back(x0);
    } else {
      for (PointIndex x = 0; x < in.space.size(); ++x) starts.push_back(x);
    }
    int i0 = map_index - 1;
    json out = json::array();
    for (PointIndex x0 : starts) {
      auto trace = orbit(in.space, in.family, in.gauge, in.functional,
                         to_double(in.tau), x0, i0, max_steps, mode, e);
      out.push_back(trace_to_json(in, x0, i0, mode, trace, e));
    }
    *traces = dup_string(out.dump(2));
  });
}

fixlab_status fixlab_analyze(const fixlab_instance* inst, char** report,
                             char** error) {
  return wrap(error, [&] {
    if (!inst || !report) throw InvalidParameter("null argument");
    const Instance& in = inst->inst;
    auto r = analyze(in.space, in.family);
    auto labels = [&](const std::set<PointIndex>& s) {
      json arr = json::array();
      for (PointIndex p : s) arr.push_back(in.space.points[p]);
      return arr;
    };
    json j;
    json fix_sets = json::array();
    for (const auto& s : r.fix_sets) fix_sets.push_back(labels(s));
    j["fix_sets"] = std::move(fix_sets);
    j["fix_sets_equal"] = r.fix_sets_equal;
    j["common_fix"] = labels(r.common_fix);
    j["common_nonempty"] = r.common_nonempty;
    j["well_ordered"] = r.well_ordered_common;
    j["singleton"] = r.singleton;
    j["conclusion3_biconditional"] = r.conclusion3_biconditional;
    *report = dup_string(j.dump(2));
  });
}

}  // extern "C"
