#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"
#include "hosoya/fib.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

enum class Side { Left, Right };
enum class RunDirection { Slash, Backslash };

struct PointValue {
  GridPoint at;
  BigInt value;
  std::string role;  // optional label (shaft/blade, column, apex, ...)
};

struct PointSet {
  std::vector<PointValue> points;

  BigInt sum() const {
    BigInt s = 0;
    for (const auto& p : points) s += p.value;
    return s;
  }
};

// One line of a ladder. Length is the difference of its end points,
// absolute length its absolute value.
struct Rung {
  std::vector<PointValue> points;
  BigInt length;
  BigInt absolute_length;

  BigInt sum() const {
    BigInt s = 0;
    for (const auto& p : points) s += p.value;
    return s;
  }
};

namespace layout {

// Vertical runs step two rows down and one position right; those are the
// lattice points sharing one rendered x-coordinate (x = k - r/2).
inline std::vector<GridPoint> vertical_run(GridPoint start, long long count) {
  if (count < 0) throw ParamDomainError("vertical_run requires count >= 0");
  std::vector<GridPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (long long t = 0; t < count; ++t) {
    pts.emplace_back(start.row + 2 * t, start.pos + t);
  }
  return pts;
}

inline std::vector<GridPoint> horizontal_rung(GridPoint start, long long count) {
  if (count < 0) throw ParamDomainError("horizontal_rung requires count >= 0");
  std::vector<GridPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (long long t = 0; t < count; ++t) {
    pts.emplace_back(start.row, start.pos + t);
  }
  return pts;
}

// p_1..p_n down a long zigzag: each overlapping triple lies on one diagonal
// run, slash runs holding k fixed across two row steps, backslash runs
// incrementing k with each row, alternating per triple. Consequently
// p_{2t+3} = p_{2t+2} + p_{2t+1} in value.
inline std::vector<GridPoint> long_zigzag(GridPoint start, long long n,
                                          RunDirection first_run) {
  if (n < 3) throw ParamDomainError("long_zigzag requires points >= 3");
  std::vector<GridPoint> pts{start};
  pts.reserve(static_cast<std::size_t>(n));
  RunDirection run = first_run;
  while (static_cast<long long>(pts.size()) < n) {
    GridPoint cur = pts.back();
    for (int step = 0; step < 2 && static_cast<long long>(pts.size()) < n; ++step) {
      cur = (run == RunDirection::Slash) ? GridPoint(cur.row + 1, cur.pos)
                                         : GridPoint(cur.row + 1, cur.pos + 1);
      pts.push_back(cur);
    }
    run = (run == RunDirection::Slash) ? RunDirection::Backslash : RunDirection::Slash;
  }
  return pts;
}

// The 6k+5 zigzag: five-point head (p_1+p_2 = p_3+p_4 = p_5 by the two
// defining recursions at the apex) plus three vertical columns of 2k points.
// The apex and middle column are shared by both zigzags.
struct Zigzag6k5 {
  std::array<GridPoint, 5> head;  // p_1..p_5, p_5 = apex
  std::vector<GridPoint> left;    // starts at H(r+1, c)
  std::vector<GridPoint> middle;  // starts at H(r+2, c+1)
  std::vector<GridPoint> right;   // starts at H(r+1, c+1)
};

inline Zigzag6k5 zigzag_6k5(GridPoint apex, long long k) {
  if (k < 1) throw ParamDomainError("zigzag_6k5 requires k >= 1");
  const long long r = apex.row, c = apex.pos;
  Zigzag6k5 z{{GridPoint(r - 2, c - 2), GridPoint(r - 1, c - 1),
               GridPoint(r - 2, c), GridPoint(r - 1, c), apex},
              vertical_run(GridPoint(r + 1, c), 2 * k),
              vertical_run(GridPoint(r + 2, c + 1), 2 * k),
              vertical_run(GridPoint(r + 1, c + 1), 2 * k)};
  return z;
}

// Hockey stick: shaft of n vertically aligned points starting on the first
// nonzero edge diagonal, s_i = H(k+2i-2, i); the blade sits one half-step
// left of the shaft line for even n and one half-step right for odd n.
// The right-side stick is the mirror image H(r,c) -> H(r, r-c).
struct HockeyStick {
  std::vector<GridPoint> shaft;
  GridPoint blade;
  Side blade_side;  // side the blade points to (already mirrored for Right)
};

inline HockeyStick hockey_stick(long long k, long long n, Side side) {
  if (k < 2) throw ParamDomainError("hockey_stick requires base row k >= 2");
  if (n < 1) throw ParamDomainError("hockey_stick requires count n >= 1");
  HockeyStick h;
  h.shaft.reserve(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i) h.shaft.emplace_back(k + 2 * i - 2, i);
  const long long blade_row = k + 2 * n - 1;
  const long long blade_pos = (n % 2 == 0) ? n : n + 1;
  h.blade = GridPoint(blade_row, blade_pos);
  h.blade_side = (n % 2 == 0) ? Side::Left : Side::Right;
  if (side == Side::Right) {
    for (auto& p : h.shaft) p = GridPoint(p.row, p.row - p.pos);
    h.blade = GridPoint(h.blade.row, h.blade.row - h.blade.pos);
    h.blade_side = (h.blade_side == Side::Left) ? Side::Right : Side::Left;
  }
  return h;
}

}  // namespace layout

inline PointSet to_point_set(const std::vector<GridPoint>& pts, FibTable& tab,
                             std::string_view role_prefix = "") {
  PointSet s;
  s.points.reserve(pts.size());
  long long i = 1;
  for (const auto& p : pts) {
    std::string role = role_prefix.empty()
                           ? std::string()
                           : std::string(role_prefix) + std::to_string(i);
    s.points.push_back({p, entry(p, tab), std::move(role)});
    ++i;
  }
  return s;
}

// --- labeled constructors ------------------------------------------------

inline PointSet vertical_run(GridPoint start, long long count, FibTable& tab) {
  return to_point_set(layout::vertical_run(start, count), tab);
}

inline PointSet horizontal_rung(GridPoint start, long long count, FibTable& tab) {
  return to_point_set(layout::horizontal_rung(start, count), tab);
}

// Backslash oblique ladder with two-point horizontal rungs. Rung t is
// {H(t+d+1, t), H(t+d+1, t+1)} = {F_t F_{d+1}, F_{t+1} F_d}; consecutive
// rungs advance one row down and one position right.
inline std::vector<Rung> oblique_ladder(long long d, long long rungs, FibTable& tab) {
  if (d < 1) throw ParamDomainError("oblique_ladder requires d >= 1");
  if (rungs < 1) throw ParamDomainError("oblique_ladder requires rungs >= 1");
  std::vector<Rung> out;
  out.reserve(static_cast<std::size_t>(rungs));
  for (long long t = 1; t <= rungs; ++t) {
    GridPoint a(t + d + 1, t), b(t + d + 1, t + 1);
    Rung rung;
    rung.points.push_back({a, entry(a, tab), "rung" + std::to_string(t)});
    rung.points.push_back({b, entry(b, tab), "rung" + std::to_string(t)});
    rung.length = rung.points[1].value - rung.points[0].value;
    rung.absolute_length = abs(rung.length);
    out.push_back(std::move(rung));
  }
  return out;
}

// F_{d+1}, F_d, then the rung sums of oblique_ladder(d): the generalized
// Fibonacci sequence seeded by a consecutive Fibonacci pair.
inline std::vector<BigInt> ladder_sequence(long long d, long long count, FibTable& tab) {
  if (d < 1) throw ParamDomainError("ladder_sequence requires d >= 1");
  if (count < 2) throw ParamDomainError("ladder_sequence requires count >= 2");
  std::vector<BigInt> seq;
  seq.reserve(static_cast<std::size_t>(count));
  seq.push_back(tab.fib_ref(d + 1));
  seq.push_back(tab.fib_ref(d));
  for (long long t = 1; static_cast<long long>(seq.size()) < count; ++t) {
    seq.push_back(entry(t + d + 1, t, tab) + entry(t + d + 1, t + 1, tab));
  }
  return seq;
}

inline PointSet long_zigzag(GridPoint start, long long points, RunDirection first_run,
                            FibTable& tab) {
  return to_point_set(layout::long_zigzag(start, points, first_run), tab, "p");
}

// Labeled 6k+5 zigzag. Left zigzag = {p1,p2,p5} + left + middle columns;
// right zigzag = {p3,p4,p5} + right + middle columns.
inline PointSet zigzag_6k5(GridPoint apex, long long k, FibTable& tab) {
  const auto z = layout::zigzag_6k5(apex, k);
  PointSet s;
  s.points.reserve(static_cast<std::size_t>(6 * k + 5));
  for (std::size_t i = 0; i < z.head.size(); ++i) {
    s.points.push_back({z.head[i], entry(z.head[i], tab), "p" + std::to_string(i + 1)});
  }
  for (const auto& p : z.left) s.points.push_back({p, entry(p, tab), "left"});
  for (const auto& p : z.middle) s.points.push_back({p, entry(p, tab), "middle"});
  for (const auto& p : z.right) s.points.push_back({p, entry(p, tab), "right"});
  return s;
}

inline PointSet hockey_stick(long long k, long long n, Side side, FibTable& tab) {
  const auto h = layout::hockey_stick(k, n, side);
  PointSet s;
  s.points.reserve(h.shaft.size() + 1);
  long long i = 1;
  for (const auto& p : h.shaft) {
    s.points.push_back({p, entry(p, tab), "s" + std::to_string(i++)});
  }
  s.points.push_back({h.blade, entry(h.blade, tab),
                      h.blade_side == Side::Left ? "blade_L" : "blade_R"});
  return s;
}

// The 2x2 window {H(n,r), H(n,r+1), H(n+1,r), H(n+1,r+1)}.
inline PointSet rhombus(long long n, long long r, FibTable& tab) {
  if (r < 0 || r + 1 > n) throw ParamDomainError("rhombus requires 0 <= r and r+1 <= n");
  PointSet s;
  s.points.push_back({GridPoint(n, r), entry(n, r, tab), "top_left"});
  s.points.push_back({GridPoint(n, r + 1), entry(n, r + 1, tab), "top_right"});
  s.points.push_back({GridPoint(n + 1, r), entry(n + 1, r, tab), "bottom_left"});
  s.points.push_back({GridPoint(n + 1, r + 1), entry(n + 1, r + 1, tab), "bottom_right"});
  return s;
}

// a = H(n+1, r-1), b = H(n, r), c = H(n+2, r+1); the right orientation is
// the mirror image (same values by row symmetry).
inline PointSet triangle_config(long long n, long long r, Side orientation,
                                FibTable& tab) {
  if (r < 1 || r > n) throw ParamDomainError("triangle_config requires 1 <= r <= n");
  GridPoint a(n + 1, r - 1), b(n, r), c(n + 2, r + 1);
  if (orientation == Side::Right) {
    a = GridPoint(a.row, a.row - a.pos);
    b = GridPoint(b.row, b.row - b.pos);
    c = GridPoint(c.row, c.row - c.pos);
  }
  PointSet s;
  s.points.push_back({a, entry(a, tab), "a"});
  s.points.push_back({b, entry(b, tab), "b"});
  s.points.push_back({c, entry(c, tab), "c"});
  return s;
}

// The points of the signed braid identity: on the left the diagonal chain
// H(n-k, m-k) (k = 0..l) and the alternating diagonal H(n+k, m+k)
// (k = 1..l); on the right the vertical column H(n-k, m) and H(n+k, m).
inline PointSet braid_terms(long long n, long long m, long long l, FibTable& tab) {
  if (m < 0 || m > n) throw ParamDomainError("braid_terms requires 0 <= m <= n");
  if (l < 0 || l > m || l > n - m) {
    throw ParamDomainError("braid_terms requires 0 <= l <= min(m, n-m)");
  }
  PointSet s;
  auto add = [&](long long r, long long c, std::string role) {
    GridPoint p(r, c);
    s.points.push_back({p, entry(p, tab), std::move(role)});
  };
  for (long long k = 0; k <= l; ++k) {
    add(n - k, m - k, "left[" + std::to_string(k) + "]+");
  }
  for (long long k = 1; k <= l; ++k) {
    add(n + k, m + k, "left[" + std::to_string(k) + "]" + (k % 2 ? "-" : "+"));
  }
  for (long long k = 0; k <= l; ++k) {
    add(n - k, m, "right[" + std::to_string(k) + "]+");
  }
  for (long long k = 1; k <= l; ++k) {
    add(n + k, m, "right[" + std::to_string(k) + "]" + (k % 2 ? "-" : "+"));
  }
  return s;
}

inline PointSet diagonal_points(long long d, long long len, FibTable& tab) {
  if (d < 0 || len < 0) throw ParamDomainError("diagonal requires d >= 0 and len >= 0");
  PointSet s;
  for (long long t = 0; t < len; ++t) {
    GridPoint p(d + t, t);
    s.points.push_back({p, entry(p, tab), ""});
  }
  return s;
}

// --- named configuration specs -------------------------------------------

enum class ConfigKind {
  VerticalRun,
  HorizontalRung,
  ObliqueLadder,
  LongZigzag,
  Zigzag6k5,
  HockeyStick,
  BraidTerms,
  Rhombus,
  TriangleConfig,
  Diagonal,
};

struct ConfigSpec {
  ConfigKind kind = ConfigKind::VerticalRun;
  std::optional<GridPoint> anchor;
  std::map<std::string, long long> parameters;
};

inline std::string_view config_kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::VerticalRun: return "VERTICAL_RUN";
    case ConfigKind::HorizontalRung: return "HORIZONTAL_RUNG";
    case ConfigKind::ObliqueLadder: return "OBLIQUE_LADDER";
    case ConfigKind::LongZigzag: return "LONG_ZIGZAG";
    case ConfigKind::Zigzag6k5: return "ZIGZAG_6K5";
    case ConfigKind::HockeyStick: return "HOCKEY_STICK";
    case ConfigKind::BraidTerms: return "BRAID_TERMS";
    case ConfigKind::Rhombus: return "RHOMBUS";
    case ConfigKind::TriangleConfig: return "TRIANGLE_CONFIG";
    case ConfigKind::Diagonal: return "DIAGONAL";
  }
  return "?";
}

inline std::optional<ConfigKind> config_kind_from_name(std::string_view name) {
  for (ConfigKind k :
       {ConfigKind::VerticalRun, ConfigKind::HorizontalRung, ConfigKind::ObliqueLadder,
        ConfigKind::LongZigzag, ConfigKind::Zigzag6k5, ConfigKind::HockeyStick,
        ConfigKind::BraidTerms, ConfigKind::Rhombus, ConfigKind::TriangleConfig,
        ConfigKind::Diagonal}) {
    if (config_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace detail {

inline long long config_param(const ConfigSpec& spec, const std::string& name) {
  auto it = spec.parameters.find(name);
  if (it == spec.parameters.end()) {
    throw ParamDomainError(std::string(config_kind_name(spec.kind)) +
                           " requires parameter '" + name + "'");
  }
  return it->second;
}

inline long long config_param_or(const ConfigSpec& spec, const std::string& name,
                                 long long fallback) {
  auto it = spec.parameters.find(name);
  return it == spec.parameters.end() ? fallback : it->second;
}

inline GridPoint config_anchor(const ConfigSpec& spec) {
  if (!spec.anchor) {
    throw ParamDomainError(std::string(config_kind_name(spec.kind)) +
                           " requires an anchor point (KIND@r,k)");
  }
  return *spec.anchor;
}

}  // namespace detail

inline PointSet materialize(const ConfigSpec& spec, FibTable& tab) {
  using detail::config_anchor;
  using detail::config_param;
  using detail::config_param_or;
  switch (spec.kind) {
    case ConfigKind::VerticalRun:
      return vertical_run(config_anchor(spec), config_param(spec, "count"), tab);
    case ConfigKind::HorizontalRung:
      return horizontal_rung(config_anchor(spec), config_param(spec, "count"), tab);
    case ConfigKind::ObliqueLadder: {
      PointSet s;
      for (const auto& rung :
           oblique_ladder(config_param(spec, "d"), config_param(spec, "rungs"), tab)) {
        for (const auto& p : rung.points) s.points.push_back(p);
      }
      return s;
    }
    case ConfigKind::LongZigzag:
      return long_zigzag(config_anchor(spec), config_param(spec, "points"),
                         config_param_or(spec, "first", 0) == 0 ? RunDirection::Slash
                                                                : RunDirection::Backslash,
                         tab);
    case ConfigKind::Zigzag6k5:
      return zigzag_6k5(config_anchor(spec), config_param(spec, "k"), tab);
    case ConfigKind::HockeyStick:
      return hockey_stick(config_param(spec, "k"), config_param(spec, "n"),
                          config_param_or(spec, "side", 0) == 0 ? Side::Left : Side::Right,
                          tab);
    case ConfigKind::BraidTerms: {
      GridPoint a = config_anchor(spec);
      return braid_terms(a.row, a.pos, config_param(spec, "l"), tab);
    }
    case ConfigKind::Rhombus: {
      GridPoint a = config_anchor(spec);
      return rhombus(a.row, a.pos, tab);
    }
    case ConfigKind::TriangleConfig: {
      GridPoint a = config_anchor(spec);
      return triangle_config(a.row, a.pos,
                             config_param_or(spec, "orient", 0) == 0 ? Side::Left
                                                                     : Side::Right,
                             tab);
    }
    case ConfigKind::Diagonal:
      // "len" is filled in by the renderer when highlighting; standalone
      // materialization requires it.
      return diagonal_points(config_param(spec, "d"), config_param(spec, "len"), tab);
  }
  throw ParamDomainError("unknown configuration kind");
}

// Configuration spec syntax: KIND[@r,k][:key=val,key=val,...]. Values are
// integers; the words left/right, slash/backslash map to 0/1.
inline ConfigSpec parse_config_spec(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw ParamDomainError("bad config spec '" + std::string(text) + "': " + why);
  };
  std::string_view rest = text;
  std::string_view kind_part = rest;
  std::string_view anchor_part, params_part;
  if (auto at = rest.find('@'); at != std::string_view::npos) {
    kind_part = rest.substr(0, at);
    rest = rest.substr(at + 1);
    if (auto colon = rest.find(':'); colon != std::string_view::npos) {
      anchor_part = rest.substr(0, colon);
      params_part = rest.substr(colon + 1);
    } else {
      anchor_part = rest;
    }
  } else if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    kind_part = rest.substr(0, colon);
    params_part = rest.substr(colon + 1);
  }

  ConfigSpec spec;
  auto kind = config_kind_from_name(kind_part);
  if (!kind) fail("unknown kind '" + std::string(kind_part) + "'");
  spec.kind = *kind;

  auto parse_int = [&](std::string_view s) -> long long {
    if (s == "left" || s == "slash") return 0;
    if (s == "right" || s == "backslash") return 1;
    long long v = 0;
    std::size_t used = 0;
    bool ok = !s.empty();
    if (ok) {
      try {
        v = std::stoll(std::string(s), &used);
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || used != s.size()) fail("not an integer: '" + std::string(s) + "'");
    return v;
  };

  if (!anchor_part.empty()) {
    auto comma = anchor_part.find(',');
    if (comma == std::string_view::npos) fail("anchor must be r,k");
    spec.anchor = GridPoint(parse_int(anchor_part.substr(0, comma)),
                            parse_int(anchor_part.substr(comma + 1)));
  }
  while (!params_part.empty()) {
    auto comma = params_part.find(',');
    std::string_view item = params_part.substr(0, comma);
    params_part = comma == std::string_view::npos ? std::string_view{}
                                                  : params_part.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) fail("parameter must be key=value");
    spec.parameters[std::string(item.substr(0, eq))] = parse_int(item.substr(eq + 1));
  }
  return spec;
}

inline std::string config_spec_to_string(const ConfigSpec& spec) {
  std::string out{config_kind_name(spec.kind)};
  if (spec.anchor) {
    out += "@" + std::to_string(spec.anchor->row) + "," + std::to_string(spec.anchor->pos);
  }
  bool first = true;
  for (const auto& [k, v] : spec.parameters) {
    out += first ? ":" : ",";
    out += k + "=" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace hosoya
