// redbench: command-line front end for the workbench. Subcommands load JSON
// inputs, run the requested construction, and write machine-readable reports.
// Exit codes: 0 success, 1 check failure, 2 input error.

#include <CLI11.hpp>
#include <iostream>

#include "redlab/embedder.hpp"
#include "redlab/gen.hpp"
#include "redlab/injury.hpp"
#include "redlab/intalg.hpp"
#include "redlab/io.hpp"
#include "redlab/machina.hpp"
#include "redlab/pi1.hpp"
#include "redlab/relcore.hpp"
#include "redlab/stagecraft.hpp"
#include "redlab/suite.hpp"

namespace {

using redlab::io::Json;

constexpr int kOk = 0, kCheckFailure = 1, kInputError = 2;

void emit(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    redlab::io::write_file(out_path, text);
}

Json parse_file(const std::string& path) {
  const std::string text = redlab::io::read_file(path);
  return Json::parse(text);  // throws with byte position on malformed input
}

int cmd_validate(const std::string& path) {
  Json j;
  try {
    j = parse_file(path);
  } catch (const std::exception& ex) {
    std::cerr << path << ": " << ex.what() << "\n";
    return kInputError;
  }
  try {
    const std::string kind = redlab::io::sniff_kind(j);
    if (kind == "schedule") {
      auto s = redlab::io::schedule_from_json(j);
      (void)s;
    } else if (kind == "feed") {
      redlab::io::feed_from_json(j);
    } else if (kind == "segments") {
      redlab::io::segments_from_json(j);
    } else if (kind == "preorder") {
      redlab::io::preorder_from_json(j);
    } else if (kind == "machine") {
      redlab::io::machine_from_json(j);
    } else if (kind == "scenario") {
      redlab::io::scenario_from_json(j);
    }
    std::cout << path << ": valid " << kind << "\n";
    return kOk;
  } catch (const std::exception& ex) {
    std::cerr << path << ": " << ex.what() << "\n";
    return kCheckFailure;
  }
}

int run_pi1(const std::string& schedule_path, const std::string& out_path) {
  const auto sched = redlab::io::schedule_from_json(parse_file(schedule_path));
  const long long w = std::max<long long>(sched.stable_from, sched.n);
  const auto table = redlab::pi1::build_rows(sched, w);

  Json rep;
  rep["schedule"] = redlab::io::schedule_to_json(sched);
  rep["window"] = w;
  Json rows = Json::array();
  for (int x = 0; x < sched.n; ++x) rows.push_back(table.rows[x]);
  rep["rows"] = rows;
  Json decide = Json::array();
  bool agree = true;
  for (int x = 0; x < sched.n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < sched.n; ++y) {
      const bool d = x == y || redlab::pi1::decide_by_rows(sched, x, y, w);
      row.push_back(d ? 1 : 0);
      agree = agree && d == redlab::relcore::limit_related(sched, x, y);
    }
    decide.push_back(row);
  }
  rep["decide"] = decide;
  rep["matches_limit"] = agree;
  emit(rep, out_path);
  return agree ? kOk : kCheckFailure;
}

int run_machina(const std::string& machine_path, const std::string& input,
                const std::string& oracle_bits, long long budget, const std::string& out_path) {
  const auto m = redlab::io::machine_from_json(parse_file(machine_path));
  redlab::machina::RunResult r;
  if (oracle_bits.empty()) {
    r = redlab::machina::run(m, input, budget);
  } else {
    std::vector<std::uint8_t> oracle;
    for (char c : oracle_bits) oracle.push_back(c == '1' ? 1 : 0);
    r = redlab::machina::run_with_oracle(m, input, oracle, budget);
  }
  Json rep;
  rep["input"] = input;
  rep["halt"] = r.halt == redlab::machina::Halt::Halted
                    ? "halted"
                    : (r.halt == redlab::machina::Halt::Timeout ? "timeout" : "oracle_out");
  rep["steps"] = r.steps;
  rep["output"] = r.output;
  rep["value"] = redlab::machina::output_value(r);
  if (!oracle_bits.empty()) rep["use"] = r.use;
  emit(rep, out_path);
  return kOk;
}

int run_stagecraft(const std::string& feed_path, const std::string& feed2_path,
                   const std::string& segments_path, long long horizon,
                   const std::string& out_path) {
  const auto s_feed = redlab::io::feed_from_json(parse_file(feed_path));
  Json rep;
  rep["feed"] = redlab::io::feed_to_json(s_feed);
  if (!feed2_path.empty()) {
    const auto t_feed = redlab::io::feed_from_json(parse_file(feed2_path));
    const long long h = horizon > 0 ? horizon : std::max(s_feed.horizon, t_feed.horizon);
    Json race = Json::array();
    for (long long n = 0; n <= h; ++n)
      race.push_back(redlab::stagecraft::race_member(s_feed, t_feed, n) ? 1 : 0);
    rep["race_membership_by_length"] = race;
    Json windows;
    const auto e0 = redlab::stagecraft::window_compare(
        s_feed, t_feed, redlab::stagecraft::WindowKind::SymmetricDiffSize, h);
    const auto e2 = redlab::stagecraft::window_compare(
        s_feed, t_feed, redlab::stagecraft::WindowKind::ReciprocalSum, h);
    windows["symmetric_diff_size"] = e0.diff_size;
    windows["reciprocal_partial_sum"] = redlab::rat_text(e2.partial_sum);
    windows["note"] = "approximation at horizon " + std::to_string(h);
    rep["windows"] = windows;
  }
  if (!segments_path.empty()) {
    const auto segs = redlab::io::segments_from_json(parse_file(segments_path));
    const auto sp = redlab::stagecraft::run_splitting(s_feed, segs);
    Json sj;
    sj["e_part"] = sp.e_part;
    sj["f_part"] = sp.f_part;
    rep["splitting"] = sj;
  }
  emit(rep, out_path);
  return kOk;
}

int run_embed(const std::string& preorder_path, int gens, const std::string& out_path) {
  const auto p = redlab::io::preorder_from_json(parse_file(preorder_path));
  const int n = gens > 0 ? gens : p.n;
  const redlab::embedder::IntervalAlgebra target;
  const auto res = redlab::embedder::embed_preorder(p, n, target);

  Json rep;
  rep["preorder"] = redlab::io::preorder_to_json(p);
  rep["depth"] = res.depth;
  Json images = Json::array();
  for (const auto& im : res.images) images.push_back(redlab::intalg::to_text(im));
  rep["images"] = images;
  Json audits = Json::array();
  bool audit_ok = true;
  for (size_t d = 0; d < res.audits.size(); ++d) {
    long long zeros = 0, mismatches = 0;
    for (const auto& [src, tgt] : res.audits[d]) {
      zeros += src ? 1 : 0;
      if (src != tgt) ++mismatches;
    }
    audit_ok = audit_ok && mismatches == 0;
    Json a;
    a["depth"] = d + 1;
    a["vanishing_products"] = zeros;
    a["mismatches"] = mismatches;
    audits.push_back(a);
  }
  rep["audit"] = audits;
  rep["order_equivalent"] = res.order_equivalent;
  emit(rep, out_path);
  return res.order_equivalent && audit_ok ? kOk : kCheckFailure;
}

int run_injury(const std::string& scenario_path, long long stages_override, bool audit,
               const std::string& out_path) {
  auto sc = redlab::io::scenario_from_json(parse_file(scenario_path));
  if (stages_override > 0) {
    if (stages_override > sc.stages)
      throw std::invalid_argument("--stages exceeds the scenario's feed horizon");
    sc.stages = stages_override;
    for (auto& f : sc.feeds) f.resize(static_cast<size_t>(sc.stages) + 1);
  }
  const auto res = redlab::injury::run(sc);
  const std::string log = redlab::io::events_to_jsonl(res);
  if (out_path.empty())
    std::cout << log;
  else
    redlab::io::write_file(out_path, log);
  if (audit) {
    const auto rep = redlab::injury::audit_markers(res);
    std::cerr << "audit: rule1=" << rep.rule1.size() << " rule2=" << rep.rule2.size()
              << " column=" << rep.column.size() << " undischarged=" << rep.undischarged.size()
              << " init_wipes=" << rep.init_wipes << "\n";
    for (const auto& v : rep.rule1) std::cerr << "rule1: " << v << "\n";
    for (const auto& v : rep.rule2) std::cerr << "rule2: " << v << "\n";
    for (const auto& v : rep.column) std::cerr << "column: " << v << "\n";
    if (!rep.clean()) return kCheckFailure;
  }
  return kOk;
}

int run_suite(const std::string& scale_name, std::uint64_t seed, const std::string& format,
              const std::string& out_path) {
  const auto scale =
      scale_name == "full" ? redlab::suite::Scale::Full : redlab::suite::Scale::Smoke;
  const auto results = redlab::suite::run_all(scale, seed);
  std::cout << redlab::suite::format_lines(results);
  long long passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed\n";

  if (!out_path.empty()) {
    // The written report carries no timings, so identical configs produce
    // byte-identical files.
    if (format == "csv") {
      std::string csv = "id,name,pass,detail\n";
      for (const auto& r : results)
        csv += r.id + ",\"" + r.name + "\"," + (r.pass ? "1" : "0") + ",\"" + r.detail + "\"\n";
      redlab::io::write_file(out_path, csv);
    } else {
      Json rep = Json::array();
      for (const auto& r : results) {
        Json cj;
        cj["id"] = r.id;
        cj["name"] = r.name;
        cj["pass"] = r.pass;
        cj["detail"] = r.detail;
        rep.push_back(cj);
      }
      redlab::io::write_file(out_path, rep.dump(2) + "\n");
    }
  }
  return passed == static_cast<long long>(results.size()) ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"redbench: constructions on relations, machines and priority trees"};
  app.require_subcommand(1);

  std::string path, out_path, format = "json";
  std::uint64_t seed = 1;
  long long stages = 0, horizon = 0, step_cap = 1 << 20;

  auto* validate = app.add_subcommand("validate", "check an input file");
  validate->add_option("file", path)->required();

  auto* run = app.add_subcommand("run", "run a construction");
  run->require_subcommand(1);

  std::string schedule_path, machine_path, input_bits, oracle_bits, feed_path, feed2_path,
      segments_path, preorder_path, scenario_path;
  int gens = 0;
  bool audit = false;

  auto* rp = run->add_subcommand("pi1", "row table and decisions for a schedule");
  rp->add_option("--schedule", schedule_path)->required();
  rp->add_option("--out", out_path);

  auto* rm = run->add_subcommand("machina", "simulate a machine");
  rm->add_option("--machine", machine_path)->required();
  rm->add_option("--input", input_bits);
  rm->add_option("--oracle", oracle_bits);
  rm->add_option("--step-cap", step_cap);
  rm->add_option("--out", out_path);

  auto* rs = run->add_subcommand("stagecraft", "race language, windows, splitting");
  rs->add_option("--feed", feed_path)->required();
  rs->add_option("--feed2", feed2_path);
  rs->add_option("--segments", segments_path);
  rs->add_option("--horizon", horizon);
  rs->add_option("--out", out_path);

  auto* re = run->add_subcommand("embed", "embed a preorder into the interval algebra");
  re->add_option("--preorder", preorder_path)->required();
  re->add_option("--gens", gens);
  re->add_option("--out", out_path);

  auto* ri = run->add_subcommand("injury", "run a priority-tree scenario");
  ri->add_option("--scenario", scenario_path)->required();
  ri->add_option("--stages", stages);
  ri->add_flag("--audit", audit);
  ri->add_option("--out", out_path);

  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance suite");
  std::string scale = "smoke";
  suite_cmd->add_option("--scale", scale)->check(CLI::IsMember({"smoke", "full"}));
  suite_cmd->add_option("--seed", seed);
  suite_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  suite_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (run->parsed()) {
      if (rp->parsed()) return run_pi1(schedule_path, out_path);
      if (rm->parsed()) return run_machina(machine_path, input_bits, oracle_bits, step_cap, out_path);
      if (rs->parsed()) return run_stagecraft(feed_path, feed2_path, segments_path, horizon, out_path);
      if (re->parsed()) return run_embed(preorder_path, gens, out_path);
      if (ri->parsed()) return run_injury(scenario_path, stages, audit, out_path);
    }
    if (suite_cmd->parsed()) return run_suite(scale, seed, format, out_path);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
