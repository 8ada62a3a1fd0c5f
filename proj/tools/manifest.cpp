#include "manifest.hpp"

#include "simpcalc/error.hpp"

namespace simpcalc::cli {

namespace {

int int_field(const Json& task, const char* key, int fallback) {
  return task.contains(key) ? task.at(key).get<int>() : fallback;
}

std::string string_field(const Json& task, const char* key) {
  if (!task.contains(key)) throw InvalidArgument(std::string("task is missing '") + key + "'");
  return task.at(key).get<std::string>();
}

CommandResult run_task(const Workspace& ws, const Json& task, std::size_t max_enum) {
  const std::string op = string_field(task, "op");
  const std::size_t limit = task.contains("max_enum") ? task.at("max_enum").get<std::size_t>() : max_enum;
  if (op == "space") return cmd_space(ws.build_space(task.at("space")));
  if (op == "homology") return cmd_homology(ws.build_space(task.at("space")), int_field(task, "top", 2));
  if (op == "mv") return cmd_mv(ws.build_cover(task.at("cover")), int_field(task, "top", 2));
  if (op == "qcat") return cmd_qcat(ws.build_space(task.at("space")), int_field(task, "d", 2), limit);
  if (op == "mapspace")
    return cmd_mapspace(ws.build_space(task.at("space")), string_field(task, "x"), string_field(task, "y"),
                        int_field(task, "d", 1), limit);
  if (op == "excision") return cmd_excision(ws.square(string_field(task, "square")));
  if (op == "tower")
    return cmd_tower(Workspace::evaluator(string_field(task, "evaluator")), ws.build_space(task.at("space")),
                     int_field(task, "N", 3), int_field(task, "top", 2));
  if (op == "reduced") return cmd_reduced(Workspace::evaluator(string_field(task, "evaluator")), int_field(task, "N", 3));
  if (op == "counterexample") return cmd_counterexample();
  if (op == "complex") return cmd_complex(ws.complex(string_field(task, "complex")), int_field(task, "top", 2));
  throw InvalidArgument("unknown task op '" + op + "'");
}

}  // namespace

CommandResult run_manifest(const Json& manifest, std::size_t max_enum) {
  if (!manifest.is_object()) throw InvalidArgument("a manifest is a JSON object");
  Workspace ws;
  if (manifest.contains("spaces"))
    for (const auto& [name, value] : manifest.at("spaces").items()) ws.define_space(name, ws.build_space(value));
  if (manifest.contains("covers"))
    for (const auto& [name, value] : manifest.at("covers").items()) ws.define_cover(name, ws.build_cover(value));
  if (manifest.contains("squares"))
    for (const auto& [name, value] : manifest.at("squares").items()) ws.define_square(name, value.get<std::string>());
  if (manifest.contains("complexes"))
    for (const auto& [name, value] : manifest.at("complexes").items())
      ws.define_complex(name, value.is_string() ? ws.complex(value.get<std::string>()) : chain_complex_from_json(value));

  CommandResult out{Json{{"tasks", Json::array()}}, "", true};
  std::size_t index = 0;
  for (const auto& task : manifest.value("tasks", Json::array())) {
    CommandResult r = run_task(ws, task, max_enum);
    out.ok = out.ok && r.ok;
    out.text += "== task " + std::to_string(index) + ": " + task.at("op").get<std::string>() + "\n" + r.text;
    out.record["tasks"].push_back(Json{{"task", task}, {"ok", r.ok}, {"result", std::move(r.record)}});
    ++index;
  }
  out.record["ok"] = out.ok;
  return out;
}

}  // namespace simpcalc::cli
