#include "cfr/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace cfr {

namespace {

using Json = nlohmann::ordered_json;

void reject_unknown_keys(const Json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!object.is_object()) throw FormatError(where + ": expected an object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) throw FormatError(where + ": unknown key \"" + item.key() + "\"");
  }
}

const Json& required(const Json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError(where + ": missing \"" + key + "\"");
  }
  return *it;
}

double as_number(const Json& value, const std::string& where) {
  if (!value.is_number()) throw FormatError(where + ": expected a number");
  return value.get<double>();
}

int as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw FormatError(where + ": expected an integer");
  return value.get<int>();
}

std::vector<double> as_numbers(const Json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError(where + ": expected an array");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_number(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::optional<std::vector<double>> optional_numbers(const Json& object,
                                                    const char* key) {
  auto it = object.find(key);
  if (it == object.end()) return std::nullopt;
  return as_numbers(*it, key);
}

NominalPlan parse_nominal_plan(const Json& value) {
  if (!value.is_array()) throw FormatError("nominal_plan: expected an array");
  NominalPlan plan;
  for (std::size_t h = 0; h < value.size(); ++h) {
    const std::string where = "nominal_plan[" + std::to_string(h) + "]";
    if (!value[h].is_array()) throw FormatError(where + ": expected an array");
    auto& occupancies = plan.vehicles.emplace_back();
    for (std::size_t i = 0; i < value[h].size(); ++i) {
      const Json& o = value[h][i];
      const std::string at = where + "[" + std::to_string(i) + "]";
      reject_unknown_keys(o, {"resource", "entry", "exit"}, at);
      const Json& resource = required(o, "resource", at);
      if (!resource.is_string()) throw FormatError(at + ".resource: expected a string");
      occupancies.push_back({resource.get<std::string>(),
                             as_number(required(o, "entry", at), at + ".entry"),
                             as_number(required(o, "exit", at), at + ".exit")});
    }
  }
  return plan;
}

Json to_json(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  const Json root = parse_json(text);
  reject_unknown_keys(root,
                      {"n", "arcs", "deviations", "weights", "completion_times",
                       "due_dates", "anticipation_bounds", "alpha", "beta",
                       "nominal_plan", "generator"},
                      "instance");
  InstanceFile file;
  RecoveryInstance& inst = file.instance;
  inst.graph.vehicle_count = as_int(required(root, "n", "instance"), "n");

  const Json& arcs = required(root, "arcs", "instance");
  if (!arcs.is_array()) throw FormatError("arcs: expected an array");
  inst.graph.arcs.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "arcs[" + std::to_string(i) + "]";
    reject_unknown_keys(arcs[i], {"from", "to", "slack"}, where);
    inst.graph.arcs.push_back(
        {as_int(required(arcs[i], "from", where), where + ".from"),
         as_int(required(arcs[i], "to", where), where + ".to"),
         as_number(required(arcs[i], "slack", where), where + ".slack")});
  }
  inst.deviations = as_numbers(required(root, "deviations", "instance"), "deviations");
  inst.weights = optional_numbers(root, "weights");
  inst.completion_times = optional_numbers(root, "completion_times");
  inst.due_dates = optional_numbers(root, "due_dates");
  inst.anticipation_bounds = optional_numbers(root, "anticipation_bounds");
  if (auto it = root.find("alpha"); it != root.end()) inst.alpha = as_number(*it, "alpha");
  if (auto it = root.find("beta"); it != root.end()) inst.beta = as_number(*it, "beta");

  if (auto it = root.find("nominal_plan"); it != root.end()) {
    file.nominal_plan = parse_nominal_plan(*it);
  }
  if (auto it = root.find("generator"); it != root.end()) {
    reject_unknown_keys(*it, {"seed", "p", "algorithm"}, "generator");
    const Json& seed = required(*it, "seed", "generator");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw FormatError("generator.seed: expected an integer");
    }
    const Json& algorithm = required(*it, "algorithm", "generator");
    if (!algorithm.is_string()) throw FormatError("generator.algorithm: expected a string");
    file.generator = GeneratorInfo{seed.get<std::uint64_t>(),
                                   as_number(required(*it, "p", "generator"), "generator.p"),
                                   algorithm.get<std::string>()};
  }
  return file;
}

std::string dump_instance(const InstanceFile& file) {
  const RecoveryInstance& inst = file.instance;
  Json root;
  root["n"] = inst.graph.vehicle_count;
  Json arcs = Json::array();
  for (const ConflictArc& a : inst.graph.arcs) {
    Json arc;
    arc["from"] = a.tail;
    arc["to"] = a.head;
    arc["slack"] = a.slack;
    arcs.push_back(std::move(arc));
  }
  root["arcs"] = std::move(arcs);
  root["deviations"] = to_json(inst.deviations);
  if (inst.weights) root["weights"] = to_json(*inst.weights);
  if (inst.completion_times) root["completion_times"] = to_json(*inst.completion_times);
  if (inst.due_dates) root["due_dates"] = to_json(*inst.due_dates);
  if (inst.anticipation_bounds) {
    root["anticipation_bounds"] = to_json(*inst.anticipation_bounds);
  }
  root["alpha"] = inst.alpha;
  root["beta"] = inst.beta;
  if (file.nominal_plan) {
    Json vehicles = Json::array();
    for (const auto& occupancies : file.nominal_plan->vehicles) {
      Json list = Json::array();
      for (const Occupancy& o : occupancies) {
        Json item;
        item["resource"] = o.resource;
        item["entry"] = o.entry;
        item["exit"] = o.exit;
        list.push_back(std::move(item));
      }
      vehicles.push_back(std::move(list));
    }
    root["nominal_plan"] = std::move(vehicles);
  }
  if (file.generator) {
    Json gen;
    gen["seed"] = file.generator->seed;
    gen["p"] = file.generator->sparsity;
    gen["algorithm"] = file.generator->algorithm;
    root["generator"] = std::move(gen);
  }
  return root.dump(1) + "\n";
}

std::string dump_plan(const RecoveryPlan& plan) {
  Json root;
  root["objective"] = std::string(to_string(plan.objective));
  root["mode"] = std::string(to_string(plan.mode));
  root["u"] = to_json(plan.u);
  root["x"] = to_json(plan.x);
  root["delta"] = to_json(plan.delta);
  if (plan.lateness) root["lateness"] = to_json(*plan.lateness);
  root["z"] = plan.objective_value;
  if (plan.combined_value) root["z_prime"] = *plan.combined_value;
  return root.dump(1) + "\n";
}

RecoveryPlan parse_plan(const std::string& text) {
  const Json root = parse_json(text);
  reject_unknown_keys(root, {"objective", "mode", "u", "x", "delta", "lateness", "z",
                             "z_prime"},
                      "plan");
  RecoveryPlan plan;
  const Json& objective = required(root, "objective", "plan");
  const Json& mode = required(root, "mode", "plan");
  if (!objective.is_string() || !mode.is_string()) {
    throw FormatError("plan: objective and mode must be strings");
  }
  const auto parsed_objective = parse_objective(objective.get<std::string>());
  const auto parsed_mode = parse_mode(mode.get<std::string>());
  if (!parsed_objective) throw FormatError("plan: unknown objective");
  if (!parsed_mode) throw FormatError("plan: unknown mode");
  plan.objective = *parsed_objective;
  plan.mode = *parsed_mode;
  plan.u = as_numbers(required(root, "u", "plan"), "u");
  plan.x = as_numbers(required(root, "x", "plan"), "x");
  plan.delta = as_numbers(required(root, "delta", "plan"), "delta");
  plan.lateness = optional_numbers(root, "lateness");
  plan.objective_value = as_number(required(root, "z", "plan"), "z");
  if (auto it = root.find("z_prime"); it != root.end()) {
    plan.combined_value = as_number(*it, "z_prime");
  }
  return plan;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

void write_instance_file(const std::filesystem::path& path, const InstanceFile& file) {
  write_text_file(path, dump_instance(file));
}

RecoveryPlan read_plan_file(const std::filesystem::path& path) {
  return parse_plan(read_text_file(path));
}

void write_plan_file(const std::filesystem::path& path, const RecoveryPlan& plan) {
  write_text_file(path, dump_plan(plan));
}

}  // namespace cfr
