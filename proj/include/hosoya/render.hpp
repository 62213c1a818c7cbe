#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hosoya/errors.hpp"
#include "hosoya/geometry.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

enum class RenderFormat { Ascii, Csv, Json, Svg };

inline std::optional<RenderFormat> render_format_from_name(std::string_view name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "csv") return RenderFormat::Csv;
  if (name == "json") return RenderFormat::Json;
  if (name == "svg") return RenderFormat::Svg;
  return std::nullopt;
}

// Triangle rows 1..rows; in every format line/row i carries triangle row i.
struct RenderOptions {
  long long rows = 1;
  RenderFormat format = RenderFormat::Ascii;
  std::optional<ConfigSpec> highlight;
};

namespace render_detail {

using PointKey = std::pair<long long, long long>;

inline std::set<PointKey> point_keys(const PointSet& s) {
  std::set<PointKey> keys;
  for (const auto& p : s.points) keys.insert({p.at.row, p.at.pos});
  return keys;
}

inline std::string centered(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  const std::size_t pad = width - s.size();
  const std::size_t left = pad / 2;
  return std::string(left, ' ') + s + std::string(pad - left, ' ');
}

}  // namespace render_detail

inline std::string render_ascii(const TriangleWindow& w, const PointSet* highlight) {
  const auto keys = highlight ? render_detail::point_keys(*highlight)
                              : std::set<render_detail::PointKey>{};
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (long long r = w.first_row; r <= w.last_row; ++r) {
    const auto& row = w.rows[static_cast<std::size_t>(r - w.first_row)];
    std::vector<std::string> line;
    for (long long k = 0; k <= r; ++k) {
      std::string s = row[static_cast<std::size_t>(k)].str();
      if (keys.count({r, k})) s = "[" + s + "]";
      width = std::max(width, s.size());
      line.push_back(std::move(s));
    }
    cells.push_back(std::move(line));
  }
  std::string out;
  for (long long r = w.first_row; r <= w.last_row; ++r) {
    const auto& line = cells[static_cast<std::size_t>(r - w.first_row)];
    std::string text(static_cast<std::size_t>(w.last_row - r) * (width + 1) / 2, ' ');
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += ' ';
      text += render_detail::centered(line[i], width);
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text;
    out += '\n';
  }
  return out;
}

// One triangle row per line, comma-separated decimal integers.
inline std::string render_csv(const TriangleWindow& w) {
  std::string out;
  for (const auto& row : w.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += row[k].str();
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json window_json(const TriangleWindow& w, const PointSet* highlight) {
  nlohmann::json j;
  j["first_row"] = w.first_row;
  j["last_row"] = w.last_row;
  auto rows = nlohmann::json::array();
  for (const auto& row : w.rows) {
    auto line = nlohmann::json::array();
    for (const auto& v : row) line.push_back(v.str());
    rows.push_back(std::move(line));
  }
  j["rows"] = std::move(rows);
  if (highlight) {
    auto hl = nlohmann::json::array();
    for (const auto& p : highlight->points) {
      nlohmann::json q;
      q["r"] = p.at.row;
      q["k"] = p.at.pos;
      q["value"] = p.value.str();
      q["role"] = p.role;
      hl.push_back(std::move(q));
    }
    j["highlight"] = std::move(hl);
  }
  return j;
}

// Schematic SVG. Row r sits at y = r*step, entry (r,k) at x = (k - r/2)*step,
// the same convention that makes vertical runs vertical.
inline std::string render_svg(const TriangleWindow& w, const PointSet* highlight) {
  const long long half = 26;        // half of the x step
  const long long step_y = 52;
  const long long margin = 2 * half + 8;
  const long long min_x = -w.last_row * half - margin;
  const long long min_y = w.first_row * step_y - margin;
  const long long width = 2 * (w.last_row * half + margin);
  const long long height = (w.last_row - w.first_row) * step_y + 2 * margin;

  auto x_of = [&](long long r, long long k) { return (2 * k - r) * half; };
  auto y_of = [&](long long r) { return r * step_y; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + std::to_string(min_x) +
         " " + std::to_string(min_y) + " " + std::to_string(width) + " " +
         std::to_string(height) + "\" font-family=\"monospace\" font-size=\"13\">\n";

  const auto keys = highlight ? render_detail::point_keys(*highlight)
                              : std::set<render_detail::PointKey>{};
  if (highlight && highlight->points.size() > 1) {
    std::string pts;
    bool any = false;
    for (const auto& p : highlight->points) {
      if (p.at.row < w.first_row || p.at.row > w.last_row) continue;
      if (!pts.empty()) pts += ' ';
      pts += std::to_string(x_of(p.at.row, p.at.pos)) + "," + std::to_string(y_of(p.at.row));
      any = true;
    }
    if (any) {
      out += "  <polyline points=\"" + pts +
             "\" fill=\"none\" stroke=\"#c33\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (long long r = w.first_row; r <= w.last_row; ++r) {
    const auto& row = w.rows[static_cast<std::size_t>(r - w.first_row)];
    for (long long k = 0; k <= r; ++k) {
      const long long x = x_of(r, k), y = y_of(r);
      const bool hl = keys.count({r, k}) != 0;
      if (hl) {
        out += "  <circle cx=\"" + std::to_string(x) + "\" cy=\"" + std::to_string(y) +
               "\" r=\"" + std::to_string(half - 4) +
               "\" fill=\"#fbeaea\" stroke=\"#c33\" stroke-width=\"1.5\"/>\n";
      }
      out += "  <text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y + 4) +
             "\" text-anchor=\"middle\"" + (hl ? " fill=\"#c33\"" : "") + ">" +
             row[static_cast<std::size_t>(k)].str() + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

// Materialize a highlight spec against a window; a DIAGONAL highlight with
// no explicit len is fitted to the window.
inline PointSet materialize_highlight(const ConfigSpec& spec, const TriangleWindow& w,
                                      FibTable& tab) {
  ConfigSpec fitted = spec;
  if (spec.kind == ConfigKind::Diagonal && !spec.parameters.count("len")) {
    auto it = spec.parameters.find("d");
    if (it == spec.parameters.end()) throw ParamDomainError("DIAGONAL requires parameter 'd'");
    fitted.parameters["len"] = std::max<long long>(0, w.last_row - it->second + 1);
  }
  return materialize(fitted, tab);
}

inline std::string render(const RenderOptions& opts, FibTable& tab) {
  if (opts.rows < 1) throw ParamDomainError("render requires rows >= 1");
  TriangleWindow w = window(1, opts.rows, tab);
  std::optional<PointSet> highlight;
  if (opts.highlight) highlight = materialize_highlight(*opts.highlight, w, tab);
  const PointSet* hl = highlight ? &*highlight : nullptr;
  switch (opts.format) {
    case RenderFormat::Ascii: return render_ascii(w, hl);
    case RenderFormat::Csv: return render_csv(w);
    case RenderFormat::Json: return window_json(w, hl).dump(2) + "\n";
    case RenderFormat::Svg: return render_svg(w, hl);
  }
  throw ParamDomainError("unknown render format");
}

// Point-set views used by the `config` command.
inline std::string point_set_csv(const PointSet& s) {
  std::string out = "r,k,value,role\n";
  for (const auto& p : s.points) {
    out += std::to_string(p.at.row) + "," + std::to_string(p.at.pos) + "," +
           p.value.str() + "," + p.role + "\n";
  }
  return out;
}

inline nlohmann::json point_set_json(const ConfigSpec& spec, const PointSet& s) {
  nlohmann::json j;
  j["config"] = config_spec_to_string(spec);
  j["kind"] = std::string(config_kind_name(spec.kind));
  auto pts = nlohmann::json::array();
  for (const auto& p : s.points) {
    nlohmann::json q;
    q["r"] = p.at.row;
    q["k"] = p.at.pos;
    q["value"] = p.value.str();
    q["role"] = p.role;
    pts.push_back(std::move(q));
  }
  j["points"] = std::move(pts);
  j["sum"] = s.sum().str();
  return j;
}

// Triangle view of a configuration: the window spanning its rows with the
// configuration highlighted.
inline std::string point_set_view(const PointSet& s, RenderFormat format, FibTable& tab) {
  long long lo = 0, hi = 0;
  bool first = true;
  for (const auto& p : s.points) {
    lo = first ? p.at.row : std::min(lo, p.at.row);
    hi = first ? p.at.row : std::max(hi, p.at.row);
    first = false;
  }
  TriangleWindow w = window(lo, hi, tab);
  return format == RenderFormat::Svg ? render_svg(w, &s) : render_ascii(w, &s);
}

}  // namespace hosoya
