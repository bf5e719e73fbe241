#include "redlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace redlab::io {

namespace {

[[noreturn]] void bail(const std::string& what) { throw std::invalid_argument(what); }

void need(const Json& j, const char* field) {
  if (!j.contains(field)) bail(std::string("missing field \"") + field + '"');
}

}  // namespace

Json schedule_to_json(const relcore::PartitionSchedule& s) {
  Json j;
  j["n"] = s.n;
  j["stable_from"] = s.stable_from;
  j["stages"] = s.stages;
  return j;
}

relcore::PartitionSchedule schedule_from_json(const Json& j) {
  need(j, "n");
  need(j, "stable_from");
  need(j, "stages");
  relcore::PartitionSchedule s;
  s.n = j["n"].get<int>();
  s.stable_from = j["stable_from"].get<int>();
  s.stages = j["stages"].get<std::vector<std::vector<std::vector<int>>>>();
  const auto rep = relcore::validate_schedule(s);
  if (!rep.ok()) bail("schedule invalid: " + rep.violations.front());
  s.index_blocks();
  return s;
}

Json feed_to_json(const stagecraft::EnumFeed& f) {
  Json j;
  j["events"] = f.events;
  j["horizon"] = f.horizon;
  return j;
}

stagecraft::EnumFeed feed_from_json(const Json& j) {
  need(j, "events");
  stagecraft::EnumFeed f;
  f.events = j["events"].get<std::vector<std::pair<long long, long long>>>();
  f.horizon = j.value("horizon", 0ll);
  if (f.horizon == 0)
    for (const auto& [e, s] : f.events) f.horizon = std::max(f.horizon, s);
  const auto diag = f.check();
  if (!diag.empty()) bail("feed invalid: " + diag);
  return f;
}

Json segments_to_json(const stagecraft::SegmentFeed& f) {
  Json j;
  Json cols = Json::object();
  for (const auto& [k, ls] : f.lengths) cols[std::to_string(k)] = ls;
  j["segments"] = cols;
  j["horizon"] = f.horizon;
  return j;
}

stagecraft::SegmentFeed segments_from_json(const Json& j) {
  need(j, "segments");
  need(j, "horizon");
  stagecraft::SegmentFeed f;
  f.horizon = j["horizon"].get<long long>();
  for (const auto& [key, val] : j["segments"].items())
    f.lengths[std::stoll(key)] = val.get<std::vector<long long>>();
  const auto diag = f.check();
  if (!diag.empty()) bail("segments invalid: " + diag);
  return f;
}

Json preorder_to_json(const relcore::PreorderTable& p) {
  Json j;
  j["n"] = p.n;
  Json rows = Json::array();
  for (int i = 0; i < p.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < p.n; ++k) row.push_back(p.leq[i][k] ? 1 : 0);
    rows.push_back(row);
  }
  j["leq"] = rows;
  return j;
}

relcore::PreorderTable preorder_from_json(const Json& j) {
  need(j, "n");
  need(j, "leq");
  relcore::PreorderTable p;
  p.n = j["n"].get<int>();
  const auto rows = j["leq"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != p.n) bail("preorder: wrong row count");
  p.leq.assign(p.n, std::vector<bool>(p.n, false));
  for (int i = 0; i < p.n; ++i) {
    if (static_cast<int>(rows[i].size()) != p.n) bail("preorder: wrong column count");
    for (int k = 0; k < p.n; ++k) p.leq[i][k] = rows[i][k] != 0;
  }
  if (!p.valid()) bail("preorder: not reflexive/transitive");
  return p;
}

Json machine_to_json(const machina::Machine& m) {
  Json j;
  j["tapes"] = m.tapes;
  j["states"] = m.state_names;
  j["start"] = m.state_names.at(m.start);
  Json acc = Json::array();
  for (int a : m.accept) acc.push_back(m.state_names.at(a));
  j["accept"] = acc;
  Json trs = Json::array();
  for (const auto& [key, tr] : m.delta) {
    Json t;
    t["state"] = m.state_names.at(key.first);
    t["read"] = key.second;
    t["next"] = m.state_names.at(tr.next);
    t["write"] = tr.write;
    t["move"] = tr.move;
    trs.push_back(t);
  }
  j["transitions"] = trs;
  if (m.has_oracle()) {
    Json o;
    o["query"] = m.state_names.at(m.query_state);
    o["yes"] = m.state_names.at(m.yes_state);
    o["no"] = m.state_names.at(m.no_state);
    o["tape"] = m.query_tape;
    j["oracle"] = o;
  }
  return j;
}

machina::Machine machine_from_json(const Json& j) {
  need(j, "tapes");
  need(j, "states");
  need(j, "start");
  need(j, "transitions");
  machina::Machine m;
  m.tapes = j["tapes"].get<int>();
  for (const auto& s : j["states"]) m.add_state(s.get<std::string>());
  m.start = m.state_id(j["start"].get<std::string>());
  if (j.contains("accept"))
    for (const auto& s : j["accept"]) m.accept.insert(m.state_id(s.get<std::string>()));
  for (const auto& t : j["transitions"]) {
    m.add_rule(m.state_id(t.at("state").get<std::string>()), t.at("read").get<std::string>(),
               m.state_id(t.at("next").get<std::string>()), t.at("write").get<std::string>(),
               t.at("move").get<std::string>());
  }
  if (j.contains("oracle")) {
    const auto& o = j["oracle"];
    m.query_state = m.state_id(o.at("query").get<std::string>());
    m.yes_state = m.state_id(o.at("yes").get<std::string>());
    m.no_state = m.state_id(o.at("no").get<std::string>());
    m.query_tape = o.at("tape").get<int>();
  }
  const auto diag = m.check();
  if (!diag.empty()) bail("machine invalid: " + diag);
  return m;
}

Json scenario_to_json(const injury::Scenario& sc) {
  Json j;
  j["depth"] = sc.depth;
  j["stages"] = sc.stages;
  j["seed"] = sc.seed;
  Json feeds = Json::object();
  for (int d = 0; d < sc.depth; ++d) feeds[std::to_string(d)] = sc.feeds[d];
  j["feeds"] = feeds;
  Json fns = Json::array();
  for (const auto& f : sc.functionals) {
    Json fj;
    if (f.machine_backed) {
      fj["type"] = "machine";
      fj["machine"] = machine_to_json(f.machine);
    } else {
      fj["type"] = "table";
      Json entries = Json::array();
      for (const auto& [l, e] : f.table) {
        Json ej;
        ej["l"] = l;
        ej["min_stage"] = e.min_stage;
        ej["use"] = e.use;
        ej["output"] = e.output;
        entries.push_back(ej);
      }
      fj["entries"] = entries;
    }
    fns.push_back(fj);
  }
  j["functionals"] = fns;
  return j;
}

injury::Scenario scenario_from_json(const Json& j) {
  need(j, "depth");
  need(j, "stages");
  need(j, "feeds");
  injury::Scenario sc;
  sc.depth = j["depth"].get<int>();
  sc.stages = j["stages"].get<long long>();
  sc.seed = j.value("seed", 0ull);
  sc.feeds.assign(sc.depth, {});
  for (const auto& [key, val] : j["feeds"].items()) {
    const long long d = std::stoll(key);
    if (d < 0 || d >= sc.depth) bail("scenario: feed level outside depth");
    sc.feeds[static_cast<size_t>(d)] = val.get<std::vector<long long>>();
  }
  if (j.contains("functionals")) {
    for (const auto& fj : j["functionals"]) {
      injury::Functional f;
      const std::string type = fj.at("type").get<std::string>();
      if (type == "machine") {
        f.machine_backed = true;
        f.machine = machine_from_json(fj.at("machine"));
      } else if (type == "table") {
        for (const auto& ej : fj.at("entries")) {
          injury::TableEntry e;
          e.min_stage = ej.at("min_stage").get<long long>();
          e.use = ej.at("use").get<long long>();
          e.output = ej.at("output").get<int>();
          f.table[ej.at("l").get<long long>()] = e;
        }
      } else {
        bail("scenario: unknown functional type " + type);
      }
      sc.functionals.push_back(std::move(f));
    }
  }
  const auto diag = sc.check();
  if (!diag.empty()) bail("scenario invalid: " + diag);
  return sc;
}

std::string events_to_jsonl(const injury::RunResult& r) {
  static const char* kTypeNames[] = {"visit",   "init",      "k_define", "marker_define",
                                     "marker_undefine", "enumerate", "diagonalize", "correct"};
  static const char* kReasonNames[] = {"none",       "right_of", "extension", "self_init",
                                       "correction", "lift",     "diag"};
  std::ostringstream out;
  for (const auto& ev : r.events) {
    Json j;
    j["s"] = ev.stage;
    j["type"] = kTypeNames[static_cast<int>(ev.type)];
    j["node"] = ev.node.text();
    j["a"] = ev.a;
    j["b"] = ev.b;
    if (ev.reason != injury::Reason::None) j["reason"] = kReasonNames[static_cast<int>(ev.reason)];
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bail("cannot write " + path);
  out << content;
}

std::string sniff_kind(const Json& j) {
  if (j.contains("stages") && j.contains("stable_from")) return "schedule";
  if (j.contains("depth") && j.contains("feeds")) return "scenario";
  if (j.contains("events")) return "feed";
  if (j.contains("segments")) return "segments";
  if (j.contains("leq")) return "preorder";
  if (j.contains("tapes")) return "machine";
  throw std::invalid_argument("unrecognized file format");
}

}  // namespace redlab::io
