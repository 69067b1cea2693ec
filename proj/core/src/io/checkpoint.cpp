#include "shadowlab/io/checkpoint.hpp"

#include <charconv>
#include <fstream>

#include "shadowlab/errors.hpp"

namespace shadowlab::io {

namespace {

constexpr const char* kFormat = "shadowlab-frontier";

std::string hex(EdgeString s) {
  char buf[24];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, s, 16);
  (void)ec;
  return std::string(buf, end);
}

EdgeString unhex(const Json& j) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, "edge string must be a hex string");
  const std::string& text = j.get_ref<const std::string&>();
  EdgeString s = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), s, 16);
  if (ec != std::errc() || end != text.data() + text.size()) throw Error(ErrorKind::Parse, "bad edge string '" + text + "'");
  return s;
}

Json optional_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::uint64_t> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

}  // namespace

Json frontier_to_json(const SearchFrontier& frontier) {
  Json doc;
  doc["format"] = kFormat;
  doc["version"] = kCheckpointVersion;
  Json p;
  p["n"] = frontier.params.n;
  p["t"] = to_string(frontier.params.t);
  p["k"] = frontier.params.k;
  p["ell"] = frontier.params.ell;
  doc["params"] = std::move(p);
  doc["enumerate"] = frontier.enumerate;
  doc["feasible"] = frontier.feasible;
  doc["seed_bound"] = frontier.seed_bound;
  doc["upper_bound"] = optional_json(frontier.upper_bound);
  doc["seed_witness"] = hex(frontier.seed_witness);
  doc["expansion_nodes"] = frontier.expansion_nodes;
  Json tasks = Json::array();
  for (const SearchTask& task : frontier.tasks) {
    Json t;
    t["root"] = hex(task.root);
    t["done"] = task.done;
    t["nodes"] = task.nodes;
    t["best"] = optional_json(task.best);
    Json w = Json::array();
    for (EdgeString s : task.witnesses) w.push_back(hex(s));
    t["witnesses"] = std::move(w);
    tasks.push_back(std::move(t));
  }
  doc["tasks"] = std::move(tasks);
  return doc;
}

SearchFrontier frontier_from_json(const Json& doc) {
  try {
    if (doc.at("format") != kFormat) throw Error(ErrorKind::Parse, "not a search checkpoint");
    if (doc.at("version") != kCheckpointVersion) {
      throw Error(ErrorKind::Parse, "unsupported checkpoint version " + doc.at("version").dump());
    }
    SearchFrontier frontier;
    const Json& p = doc.at("params");
    frontier.params.n = p.at("n").get<int>();
    frontier.params.t = parse_rational(p.at("t").get<std::string>());
    frontier.params.k = p.at("k").get<int>();
    frontier.params.ell = p.at("ell").get<int>();
    frontier.params.validate();
    frontier.enumerate = doc.at("enumerate").get<bool>();
    frontier.feasible = doc.at("feasible").get<bool>();
    frontier.seed_bound = doc.at("seed_bound").get<std::uint64_t>();
    frontier.upper_bound = optional_from(doc.at("upper_bound"));
    frontier.seed_witness = unhex(doc.at("seed_witness"));
    frontier.expansion_nodes = doc.at("expansion_nodes").get<std::uint64_t>();
    for (const Json& t : doc.at("tasks")) {
      SearchTask task;
      task.root = unhex(t.at("root"));
      task.done = t.at("done").get<bool>();
      task.nodes = t.at("nodes").get<std::uint64_t>();
      task.best = optional_from(t.at("best"));
      for (const Json& w : t.at("witnesses")) task.witnesses.push_back(unhex(w));
      frontier.tasks.push_back(std::move(task));
    }
    return frontier;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed checkpoint: ") + e.what());
  }
}

void save_frontier(const SearchFrontier& frontier, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << frontier_to_json(frontier).dump(1) << '\n';
}

SearchFrontier load_frontier(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("checkpoint is not JSON: ") + e.what());
  }
  return frontier_from_json(doc);
}

}  // namespace shadowlab::io
