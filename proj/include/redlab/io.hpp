#pragma once

#include <string>

#include <json.hpp>

#include "redlab/injury.hpp"
#include "redlab/machina.hpp"
#include "redlab/relcore.hpp"
#include "redlab/stagecraft.hpp"

// JSON file formats. Every loader validates shape and type invariants and
// throws std::invalid_argument with a description on failure; writers produce
// key-ordered JSON so reports are byte-stable.
namespace redlab::io {

using Json = nlohmann::ordered_json;

// {"n": N, "stable_from": T, "stages": [[[0,1],[2]], ...]}
Json schedule_to_json(const relcore::PartitionSchedule& s);
relcore::PartitionSchedule schedule_from_json(const Json& j);

// {"events": [[elem, stage], ...], "horizon": H}
Json feed_to_json(const stagecraft::EnumFeed& f);
stagecraft::EnumFeed feed_from_json(const Json& j);

// {"segments": {"0": [l0, l1, ...], ...}, "horizon": H}
Json segments_to_json(const stagecraft::SegmentFeed& f);
stagecraft::SegmentFeed segments_from_json(const Json& j);

// {"n": N, "leq": [[1,0],[1,1]]}
Json preorder_to_json(const relcore::PreorderTable& p);
relcore::PreorderTable preorder_from_json(const Json& j);

// {"tapes": k, "states": [...], "start": "q", "accept": [...],
//  "transitions": [{"state","read","next","write","move"}, ...],
//  "oracle": {"query","yes","no","tape"}?}
Json machine_to_json(const machina::Machine& m);
machina::Machine machine_from_json(const Json& j);

// {"depth": D, "stages": S, "seed": n, "feeds": {"0": [...], ...},
//  "functionals": [{"type":"table","entries":[{"l","min_stage","use","output"}]}
//                  | {"type":"machine","machine":{...}}, ...]}
Json scenario_to_json(const injury::Scenario& sc);
injury::Scenario scenario_from_json(const Json& j);

// One JSON object per line, in event order.
std::string events_to_jsonl(const injury::RunResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Identifies the format of a parsed file by its fields: one of "schedule",
// "feed", "segments", "preorder", "machine", "scenario"; throws when none fit.
std::string sniff_kind(const Json& j);

}  // namespace redlab::io
