// hosoya — render the Hosoya triangle, materialize point configurations,
// verify the identity catalog over parameter grids, emit generalized
// Fibonacci sequences, and cross-check the closed form against the
// recursion-built table.
//
// Exit status: 0 = all checks pass, 1 = at least one identity failure,
// 2 = usage or domain error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hosoya/errors.hpp"
#include "hosoya/fib.hpp"
#include "hosoya/geometry.hpp"
#include "hosoya/identities.hpp"
#include "hosoya/oracle.hpp"
#include "hosoya/render.hpp"
#include "hosoya/report.hpp"
#include "hosoya/triangle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw hosoya::ParamDomainError("cannot open output file: " + out_path);
  f << text;
}

long long parse_single_value(const std::string& s) {
  if (s == "left" || s == "slash") return 0;
  if (s == "right" || s == "backslash") return 1;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw hosoya::ParamDomainError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw hosoya::ParamDomainError("not an integer: '" + s + "'");
  return v;
}

struct ParamValue {
  long long lo = 0;
  long long hi = 0;
  bool is_range = false;
};

// "5", "left", or inclusive "lo..hi".
ParamValue parse_param_value(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long long v = parse_single_value(s);
    return {v, v, false};
  }
  ParamValue v;
  v.lo = parse_single_value(s.substr(0, dots));
  v.hi = parse_single_value(s.substr(dots + 2));
  v.is_range = true;
  return v;
}

std::string catalog_listing() {
  std::string out = "known identities:\n";
  for (const auto& row : hosoya::catalog()) {
    out += "  " + std::string(row.name) + " (";
    for (std::size_t i = 0; i < row.params.size(); ++i) {
      if (i) out += ",";
      out += std::string(row.params[i]);
    }
    out += ")  domain: " + std::string(row.domain) + "\n";
  }
  return out;
}

int run_render(long long rows, const std::string& format, const std::string& highlight,
               const std::string& out_path) {
  hosoya::RenderOptions opts;
  opts.rows = rows;
  const auto fmt = hosoya::render_format_from_name(format);
  if (!fmt) {
    throw hosoya::ParamDomainError("unknown format '" + format +
                                   "' (expected ascii, csv, json or svg)");
  }
  opts.format = *fmt;
  if (!highlight.empty()) opts.highlight = hosoya::parse_config_spec(highlight);
  hosoya::FibTable tab;
  emit(hosoya::render(opts, tab), out_path);
  return kExitOk;
}

int run_config(const std::string& spec_text, const std::string& format,
               const std::string& out_path) {
  const auto spec = hosoya::parse_config_spec(spec_text);
  hosoya::FibTable tab;
  const auto points = hosoya::materialize(spec, tab);
  if (format == "json") {
    emit(hosoya::point_set_json(spec, points).dump(2) + "\n", out_path);
  } else if (format == "csv") {
    emit(hosoya::point_set_csv(points), out_path);
  } else if (format == "ascii" || format == "svg") {
    emit(hosoya::point_set_view(points,
                                format == "svg" ? hosoya::RenderFormat::Svg
                                                : hosoya::RenderFormat::Ascii,
                                tab),
         out_path);
  } else {
    throw hosoya::ParamDomainError("unknown format '" + format +
                                   "' (expected json, csv, ascii or svg)");
  }
  return kExitOk;
}

int run_sequence(long long d, long long count, const std::string& format,
                 const std::string& out_path) {
  hosoya::FibTable tab;
  const auto seq = hosoya::ladder_sequence(d, count, tab);
  if (format == "json") {
    nlohmann::json j;
    j["d"] = d;
    j["count"] = count;
    auto vals = nlohmann::json::array();
    for (const auto& v : seq) vals.push_back(v.str());
    j["values"] = std::move(vals);
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::string line;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) line += ',';
      line += seq[i].str();
    }
    emit(line + "\n", out_path);
  }
  return kExitOk;
}

int run_oracle_check(long long rows, const std::string& format, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = hosoya::RecursiveTable::build(rows);
  hosoya::FibTable tab;
  const auto mismatches = table.cross_check(tab);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (format == "json") {
    nlohmann::json j;
    j["rows"] = rows;
    j["entries"] = table.entry_count();
    j["mismatches"] = static_cast<long long>(mismatches.size());
    auto list = nlohmann::json::array();
    for (std::size_t i = 0; i < mismatches.size() && i < 10; ++i) {
      nlohmann::json q;
      q["r"] = mismatches[i].at.row;
      q["k"] = mismatches[i].at.pos;
      q["recursive"] = mismatches[i].recursive.str();
      q["closed"] = mismatches[i].closed.str();
      list.push_back(std::move(q));
    }
    j["first_mismatches"] = std::move(list);
    j["elapsed_ms"] = ms;
    emit(j.dump(2) + "\n", out_path);
  } else {
    emit("rows=" + std::to_string(rows) + " entries=" + std::to_string(table.entry_count()) +
             " mismatches=" + std::to_string(mismatches.size()) + " elapsed_ms=" +
             std::to_string(ms) + "\n",
         out_path);
  }
  return mismatches.empty() ? kExitOk : kExitFailure;
}

int run_verify(const std::string& id_name, const std::map<std::string, std::string>& given,
               bool paper_form, const std::string& format, const std::string& out_path) {
  const auto id = hosoya::find_identity(id_name);
  if (!id) {
    throw hosoya::ParamDomainError("unknown identity '" + id_name + "'\n" + catalog_listing());
  }
  const auto& meta = hosoya::info(*id);
  const auto form = paper_form ? hosoya::Form::PaperStated : hosoya::Form::Corrected;

  for (const auto& [name, text] : given) {
    if (std::find(meta.params.begin(), meta.params.end(), name) == meta.params.end()) {
      throw hosoya::ParamDomainError(std::string(meta.name) + " does not take parameter '" +
                                     name + "' (expected: " + std::string(meta.domain) + ")");
    }
  }

  // RECTANGLE_CLOSED's r only enters the paper-stated form and defaults to 0.
  std::map<std::string, ParamValue> values;
  bool any_range = false;
  for (const auto& pname : meta.params) {
    auto it = given.find(std::string(pname));
    if (it == given.end()) {
      if (*id == hosoya::IdentityId::RectangleClosed && pname == "r") {
        values["r"] = {0, 0, false};
        continue;
      }
      throw hosoya::ParamDomainError(std::string(meta.name) + " requires --" +
                                     std::string(pname) + " (domain: " +
                                     std::string(meta.domain) + ")");
    }
    const auto v = parse_param_value(it->second);
    any_range = any_range || v.is_range;
    values[std::string(pname)] = v;
  }

  hosoya::FibTable tab;
  hosoya::ReportDocument doc;
  doc.command = "verify";
  doc.inputs["id"] = std::string(meta.name);
  doc.inputs["paper_form"] = paper_form;
  {
    nlohmann::json in = nlohmann::json::object();
    for (const auto& [name, v] : values) {
      in[name] = v.is_range ? std::to_string(v.lo) + ".." + std::to_string(v.hi)
                            : std::to_string(v.lo);
    }
    doc.inputs["params"] = std::move(in);
  }
  doc.generated_at = hosoya::iso8601_utc_now();

  bool ok = false;
  std::string text;
  if (!any_range) {
    hosoya::Params params;
    for (const auto& [name, v] : values) params[name] = v.lo;
    const auto rep = hosoya::verify(*id, params, tab, form);
    doc.results.push_back(hosoya::identity_report_json(rep));
    ok = rep.holds;
    text = std::string(meta.name) + " {";
    bool first = true;
    for (const auto& [name, v] : params) {
      if (!first) text += ", ";
      text += name + "=" + std::to_string(v);
      first = false;
    }
    text += "}: ";
    for (std::size_t i = 0; i < rep.members.size(); ++i) {
      if (i) text += " = ";
      text += rep.members[i].str();
    }
    text += rep.holds ? "  holds" : "  FAILS";
    text += "\n";
    if (!rep.note.empty()) text += "note: " + rep.note + "\n";
  } else {
    hosoya::Ranges ranges;
    for (const auto& pname : meta.params) {
      const auto& v = values[std::string(pname)];
      ranges.push_back({std::string(pname), {v.lo, v.hi}});
    }
    const auto rep = hosoya::sweep(*id, ranges, tab, form);
    doc.results.push_back(hosoya::sweep_report_json(rep));
    ok = rep.failure_count == 0;
    text = std::string(meta.name) + " sweep " + rep.grid + ": instances=" +
           std::to_string(rep.instances) + " failures=" + std::to_string(rep.failure_count) +
           " (" + std::to_string(rep.elapsed_ms) + " ms)\n";
    const std::size_t show = std::min<std::size_t>(rep.failures.size(), 10);
    for (std::size_t i = 0; i < show; ++i) {
      text += "  failure at {";
      bool first = true;
      for (const auto& [name, v] : rep.failures[i]) {
        if (!first) text += ", ";
        text += name + "=" + std::to_string(v);
        first = false;
      }
      text += "}\n";
    }
    if (rep.failure_count > static_cast<long long>(show)) {
      text += "  ... " + std::to_string(rep.failure_count - show) + " more\n";
    }
  }

  if (format == "json") {
    emit(hosoya::document_to_string(doc), out_path);
  } else {
    emit(text, out_path);
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic Hosoya triangle toolkit"};
  app.require_subcommand(0, 1);

  auto* render_cmd = app.add_subcommand("render", "render triangle rows 1..N");
  long long render_rows = 1;
  std::string render_format = "ascii", render_highlight, render_out;
  render_cmd->add_option("--rows", render_rows, "number of rows (row r = line r)")
      ->required();
  render_cmd->add_option("--format", render_format, "ascii|csv|json|svg");
  render_cmd->add_option("--highlight", render_highlight,
                         "configuration spec KIND[@r,k][:key=val,...] to mark");
  render_cmd->add_option("--out", render_out, "write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "verify one identity or sweep a grid");
  std::string verify_id, verify_format = "text", verify_out;
  bool verify_paper = false;
  verify_cmd->add_option("id", verify_id, "identity name (see --list)")->required();
  verify_cmd->add_flag("--paper-form", verify_paper,
                       "evaluate the paper-stated form of a corrected row");
  verify_cmd->add_option("--format", verify_format, "text|json");
  verify_cmd->add_option("--out", verify_out, "write to file instead of stdout");
  std::map<std::string, std::string> verify_params;
  for (const char* name : {"k", "j", "i", "r", "n", "m", "l", "a", "b", "c", "d", "t",
                           "side", "first_run"}) {
    verify_cmd->add_option("--" + std::string(name), verify_params[name],
                           "parameter " + std::string(name) + " (INT or LO..HI)");
  }

  auto* config_cmd = app.add_subcommand("config", "materialize a configuration");
  std::string config_spec, config_format = "json", config_out;
  config_cmd->add_option("spec", config_spec, "KIND[@r,k][:key=val,...]")->required();
  config_cmd->add_option("--format", config_format, "json|csv|ascii|svg");
  config_cmd->add_option("--out", config_out, "write to file instead of stdout");

  auto* seq_cmd = app.add_subcommand("sequence",
                                     "generalized Fibonacci sequence of the d-th oblique ladder");
  long long seq_d = 1, seq_count = 2;
  std::string seq_format = "text", seq_out;
  seq_cmd->add_option("--d", seq_d, "diagonal index (>= 1)")->required();
  seq_cmd->add_option("--count", seq_count, "number of terms (>= 2)")->required();
  seq_cmd->add_option("--format", seq_format, "text|json");
  seq_cmd->add_option("--out", seq_out, "write to file instead of stdout");

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "build the recursion-only table and compare with the closed form");
  long long oracle_rows = 300;
  std::string oracle_format = "text", oracle_out;
  oracle_cmd->add_option("--rows", oracle_rows, "max row (default 300)");
  oracle_cmd->add_option("--format", oracle_format, "text|json");
  oracle_cmd->add_option("--out", oracle_out, "write to file instead of stdout");

  bool list_ids = false;
  app.add_flag("--list", list_ids, "list the identity catalog and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list_ids) {
      std::cout << catalog_listing();
      return kExitOk;
    }
    if (render_cmd->parsed()) {
      return run_render(render_rows, render_format, render_highlight, render_out);
    }
    if (verify_cmd->parsed()) {
      std::map<std::string, std::string> given;
      for (const auto& [name, text] : verify_params) {
        if (!text.empty()) given[name] = text;
      }
      return run_verify(verify_id, given, verify_paper, verify_format, verify_out);
    }
    if (config_cmd->parsed()) return run_config(config_spec, config_format, config_out);
    if (seq_cmd->parsed()) return run_sequence(seq_d, seq_count, seq_format, seq_out);
    if (oracle_cmd->parsed()) return run_oracle_check(oracle_rows, oracle_format, oracle_out);
    std::cerr << "error: no subcommand given\n";
    return kExitUsage;
  } catch (const hosoya::ParamDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hosoya::OutOfTriangleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
