#include "fixlab/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixlab/errors.hpp"

namespace fixlab {

using nlohmann::json;

namespace {

std::string describe(const ValidationIssue& issue) {
  std::ostringstream os;
  os << issue.axiom << " violated at (";
  for (size_t k = 0; k < issue.tuple.size(); ++k)
    os << (k ? "," : "") << issue.tuple[k];
  os << ")";
  if (issue.axiom.rfind("metric", 0) == 0)
    os << ": " << to_string(issue.lhs) << " vs " << to_string(issue.rhs);
  return os.str();
}

json space_to_json(const OrderedMetricSpace& space) {
  json j;
  j["points"] = space.points;
  json rows = json::array();
  for (const auto& row : space.dist) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  j["dist"] = std::move(rows);
  json order = json::array();
  for (const auto& [a, b] : space.strict_order) order.push_back({a, b});
  j["strict_order"] = std::move(order);
  return j;
}

OrderedMetricSpace space_from_json(const json& j) {
  OrderedMetricSpace space;
  space.points = j.at("points").get<std::vector<std::string>>();
  for (const auto& row : j.at("dist")) {
    std::vector<Rational> r;
    for (const auto& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
    space.dist.push_back(std::move(r));
  }
  for (const auto& pair : j.at("strict_order")) {
    if (pair.size() != 2) throw InvalidInstance("strict_order entries are pairs");
    space.strict_order.insert({pair[0].get<int>(), pair[1].get<int>()});
  }
  return space;
}

json gauge_to_json(const Gauge& g) {
  return {{"kind", gauge_kind_to_string(g.kind)}, {"lambda", g.lambda}};
}

Gauge gauge_from_json(const json& j) {
  Gauge g;
  g.kind = gauge_kind_from_string(j.at("kind").get<std::string>());
  g.lambda = j.at("lambda").get<double>();
  return g;
}

json functional_to_json(const Functional& f) {
  json j{{"variant", functional_variant_to_string(f.variant)}};
  switch (f.variant) {
    case FunctionalVariant::MLinear:
      j["alpha"] = to_string(f.alpha);
      j["beta"] = to_string(f.beta);
      j["gamma"] = to_string(f.gamma);
      j["delta1"] = to_string(f.delta1);
      j["delta2"] = to_string(f.delta2);
      break;
    case FunctionalVariant::LinearABC:
      j["alpha"] = to_string(f.alpha);
      j["beta"] = to_string(f.beta);
      j["gamma"] = to_string(f.gamma);
      break;
    case FunctionalVariant::Kannan:
      j["h"] = to_string(f.h);
      break;
    default:
      break;
  }
  return j;
}

Functional functional_from_json(const json& j) {
  Functional f;
  f.variant = functional_variant_from_string(j.at("variant").get<std::string>());
  auto coeff = [&](const char* name) {
    return parse_rational(j.at(name).get<std::string>());
  };
  switch (f.variant) {
    case FunctionalVariant::MLinear:
      f.alpha = coeff("alpha");
      f.beta = coeff("beta");
      f.gamma = coeff("gamma");
      f.delta1 = coeff("delta1");
      f.delta2 = coeff("delta2");
      break;
    case FunctionalVariant::LinearABC:
      f.alpha = coeff("alpha");
      f.beta = coeff("beta");
      f.gamma = coeff("gamma");
      break;
    case FunctionalVariant::Kannan:
      f.h = coeff("h");
      break;
    default:
      break;
  }
  return f;
}

}  // namespace

void Instance::validate() const {
  auto report = validate_space(space);
  if (!report.ok)
    throw InvalidInstance("space: " + describe(report.violations.front()));
  family.validate(space);
  functional.validate();
  try {
    gauge.validate();
  } catch (const InvalidParameter& e) {
    throw InvalidInstance(std::string("gauge: ") + e.what());
  }
  if (tau <= 0) throw InvalidInstance("tau must be positive");
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("parse error: ") + e.what());
  }
  try {
    Instance inst;
    inst.space = space_from_json(j.at("space"));
    const int n = inst.space.size();
    for (const auto& map_json : j.at("maps")) {
      if (static_cast<int>(map_json.size()) != n)
        throw InvalidInstance("map is not total over the point set");
      std::vector<std::vector<PointIndex>> map;
      for (const auto& cell : map_json) {
        std::vector<PointIndex> values;
        for (const auto& label : cell) {
          PointIndex v = inst.space.index_of(label.get<std::string>());
          if (v < 0)
            throw InvalidInstance("map value \"" + label.get<std::string>() +
                                  "\" is not a known point");
          values.push_back(v);
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        map.push_back(std::move(values));
      }
      inst.family.maps.push_back(std::move(map));
    }
    inst.gauge = gauge_from_json(j.at("gauge"));
    inst.functional = functional_from_json(j.at("functional"));
    inst.tau = parse_rational(j.at("tau").get<std::string>());
    inst.mode = mode_from_string(j.value("mode", "existential"));
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("schema error: ") + e.what());
  }
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["space"] = space_to_json(inst.space);
  json maps = json::array();
  for (const auto& map : inst.family.maps) {
    json m = json::array();
    for (const auto& values : map) {
      json cell = json::array();
      for (PointIndex v : values) cell.push_back(inst.space.points[v]);
      m.push_back(std::move(cell));
    }
    maps.push_back(std::move(m));
  }
  j["maps"] = std::move(maps);
  j["gauge"] = gauge_to_json(inst.gauge);
  j["functional"] = functional_to_json(inst.functional);
  j["tau"] = to_string(inst.tau);
  j["mode"] = mode_to_string(inst.mode);
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return instance_from_json(buf.str());
  } catch (const InvalidInstance& e) {
    throw InvalidInstance(path + ": " + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInstance("cannot write \"" + path + "\"");
  out << instance_to_json(inst);
}

}  // namespace fixlab
