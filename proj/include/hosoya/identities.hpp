#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"
#include "hosoya/fib.hpp"
#include "hosoya/geometry.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

// The identity catalog. Every displayed equation is an exactly evaluated
// chain of members; rows whose stated sign/index/hypothesis is disproved by
// the recursion oracle carry status Corrected, and both the corrected and
// the paper-stated form stay evaluable.
enum class IdentityId {
  RungSum,
  RectangleShift,
  RectangleClosed,
  AltRungAbs,
  EvenRungSum,
  OddRunLength,
  ColumnDiff,
  DiagonalSum,
  Cassini,
  Catalan,
  Docagne,
  Johnson,
  ZigzagParallel,
  LongZigzagAlt,
  ZigzagColumnSum,
  ZigzagBalance,
  HockeyStick,
  BraidSigned,
  BraidNormalized,
  BraidClosed,
  RhombusDet,
  TriangleConfig,
  GenFibLadder,
};

enum class CatalogStatus { AsStated, Corrected };
enum class Form { Corrected, PaperStated };

using Params = std::map<std::string, long long, std::less<>>;

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  CatalogStatus status;
  std::vector<std::string_view> params;
  std::string_view domain;  // human-readable validity domain
  std::string_view note;    // correction / reading note, if any
};

inline const std::vector<IdentityInfo>& catalog() {
  static const std::vector<IdentityInfo> rows = {
      {IdentityId::RungSum, "RUNG_SUM", CatalogStatus::AsStated,
       {"k", "j"}, "0 <= j <= k", ""},
      {IdentityId::RectangleShift, "RECTANGLE_SHIFT", CatalogStatus::Corrected,
       {"k", "j", "i", "r"}, "j,i,r >= 0 and j+i <= k",
       "stated exponent (-1)^(r+1) forces D = -D at r=0; oracle-confirmed exponent is (-1)^r"},
      {IdentityId::RectangleClosed, "RECTANGLE_CLOSED", CatalogStatus::Corrected,
       {"k", "j", "i", "r"}, "j,i >= 0 and 2j+i <= k (r only enters the paper-stated form; default 0)",
       "stated exponent depends on the free variable r; oracle-confirmed exponent is (-1)^(j+1)"},
      {IdentityId::AltRungAbs, "ALT_RUNG_ABS", CatalogStatus::AsStated,
       {"k", "j", "r", "n"}, "n >= 1, j,r >= 0, j+2n-1 <= k",
       "the unbound (-1)^i in the source display is read as (-1)^t"},
      {IdentityId::EvenRungSum, "EVEN_RUNG_SUM", CatalogStatus::AsStated,
       {"k", "j", "m", "n"}, "n >= 1, m >= 1, j >= 0, j+m <= k", ""},
      {IdentityId::OddRunLength, "ODD_RUN_LENGTH", CatalogStatus::Corrected,
       {"k", "j", "n", "i"}, "n >= 1, j >= 0, j+n <= k; corrected: i even >= 2 (paper-stated: i odd >= 1)",
       "stated hypothesis 'i a positive odd number' fails (e.g. k=4, i=1); "
       "an odd number of rung points means even i"},
      {IdentityId::ColumnDiff, "COLUMN_DIFF", CatalogStatus::AsStated,
       {"r", "k", "j"}, "r,k,j >= 1 and r >= j",
       "the companion determinant display does not equal this expression; the H-form is the content"},
      {IdentityId::DiagonalSum, "DIAGONAL_SUM", CatalogStatus::AsStated,
       {"k", "j", "m"}, "j >= 0, k > j, m >= 0", ""},
      {IdentityId::Cassini, "CASSINI", CatalogStatus::AsStated,
       {"k"}, "k >= 1", ""},
      {IdentityId::Catalan, "CATALAN", CatalogStatus::AsStated,
       {"k", "j"}, "0 <= j <= k", ""},
      {IdentityId::Docagne, "DOCAGNE", CatalogStatus::AsStated,
       {"k", "j"}, "0 <= j <= k", ""},
      {IdentityId::Johnson, "JOHNSON", CatalogStatus::AsStated,
       {"k", "j", "r", "i", "l"}, "k+j = r+i, i < j, i <= k, 0 <= l <= i", ""},
      {IdentityId::ZigzagParallel, "ZIGZAG_PARALLEL", CatalogStatus::Corrected,
       {"a", "b", "j"}, "a,b >= 1, 1 <= j <= min(a,b); corrected: j odd",
       "stated for every j <= min(a,b), but the equality fails for even j whenever a != b "
       "(e.g. (a,b,j)=(2,3,2)); corrected hypothesis: j odd"},
      {IdentityId::LongZigzagAlt, "LONG_ZIGZAG_ALT", CatalogStatus::AsStated,
       {"r", "c", "n", "first_run"}, "(r,c) in triangle, n >= 3 odd, first_run in {0,1}", ""},
      {IdentityId::ZigzagColumnSum, "ZIGZAG_COLUMN_SUM", CatalogStatus::Corrected,
       {"a", "b", "c", "d", "k"}, "a,b,c,d >= 1, a+c = b+d, k >= 1",
       "stated closed form uses k+n_e and the parity of a+b, failing e.g. at "
       "(a,b,c,d,k)=(1,2,2,1,1); brute-force re-derived form uses n_e+2k and the parity "
       "of s=a+c with n_e = floor(s/2)"},
      {IdentityId::ZigzagBalance, "ZIGZAG_BALANCE", CatalogStatus::AsStated,
       {"r", "c", "k"}, "k >= 1 and 2 <= c <= r-2 (head in triangle)", ""},
      {IdentityId::HockeyStick, "HOCKEY_STICK", CatalogStatus::AsStated,
       {"k", "n", "side"}, "k >= 2, n >= 1, side in {0,1}",
       "blade coordinates are derived (row k+2n-1, position n or n+1 by shaft parity) "
       "and oracle-gated"},
      {IdentityId::BraidSigned, "BRAID_SIGNED", CatalogStatus::AsStated,
       {"n", "m", "l"}, "0 <= m <= n, 0 <= l <= min(m, n-m)", ""},
      {IdentityId::BraidNormalized, "BRAID_NORMALIZED", CatalogStatus::AsStated,
       {"m", "r", "l"}, "l >= 1, m >= l+1, r >= l+1 (cross-multiplied)", ""},
      {IdentityId::BraidClosed, "BRAID_CLOSED", CatalogStatus::Corrected,
       {"m", "l"}, "l >= 1, m >= l+1",
       "each term is (-1)^k L_k F_m, telescoping to F_m((-1)^l L_{l-1} + 1); the stated "
       "piecewise form has the wrong sign for odd l and deviates by 2(-1)^{l'} for even l=2l'"},
      {IdentityId::RhombusDet, "RHOMBUS_DET", CatalogStatus::AsStated,
       {"n", "r"}, "r >= 0, r+1 <= n", ""},
      {IdentityId::TriangleConfig, "TRIANGLE_CONFIG", CatalogStatus::Corrected,
       {"n", "r"}, "1 <= r <= n",
       "stated value F_{2r-n+1} fails at (n,r)=(4,2); oracle-confirmed value is "
       "(-1)^r F_{n-2r} (negafibonacci for n < 2r)"},
      {IdentityId::GenFibLadder, "GEN_FIB_LADDER", CatalogStatus::AsStated,
       {"d", "t"}, "d >= 1, t >= 1 (term index; G_1 = F_{d+1}, G_2 = F_d, G_{t+2} = rung-t sum)", ""},
  };
  return rows;
}

inline const IdentityInfo& info(IdentityId id) {
  for (const auto& row : catalog()) {
    if (row.id == id) return row;
  }
  throw ParamDomainError("unknown identity id");
}

inline std::optional<IdentityId> find_identity(std::string_view name) {
  for (const auto& row : catalog()) {
    if (row.name == name) return row.id;
  }
  return std::nullopt;
}

struct IdentityReport {
  IdentityId id;
  Params params;
  std::vector<BigInt> members;  // chained equality, left to right
  bool holds = false;
  std::string note;
};

struct SweepReport {
  IdentityId id;
  std::string grid;
  long long instances = 0;
  long long failure_count = 0;
  std::vector<Params> failures;  // first witnesses in grid order
  std::int64_t elapsed_ms = 0;

  static constexpr std::size_t kMaxStoredFailures = 1000;
};

namespace detail {

inline long long arg(const Params& p, std::string_view name) {
  auto it = p.find(name);
  if (it == p.end()) {
    throw ParamDomainError("missing parameter '" + std::string(name) + "'");
  }
  return it->second;
}

inline long long arg_or(const Params& p, std::string_view name, long long fallback) {
  auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

struct Ctx {
  FibTable& tab;

  BigInt H(long long r, long long k) {
    if (r < 0 || k < 0 || k > r) {
      throw OutOfTriangleError("entry out of triangle: (" + std::to_string(r) + "," +
                               std::to_string(k) + ")");
    }
    return tab.fib_ref(k) * tab.fib_ref(r - k);
  }

  const BigInt& F(long long n) { return tab.fib_ref(n); }  // n >= 0
  BigInt Fs(long long n) { return tab.fib(n); }            // signed index
  BigInt L(long long n) { return tab.lucas(n); }
};

// Sum of the alternating braid terms: T(x) = sum_{k=1..l} (F_{x-k} + (-1)^k F_{x+k}).
inline BigInt braid_term_sum(Ctx& c, long long x, long long l) {
  BigInt s = 0;
  for (long long k = 1; k <= l; ++k) {
    s += c.Fs(x - k) + neg_one_pow(k) * c.F(x + k);
  }
  return s;
}

inline BigInt zigzag_column_sum(Ctx& c, long long a, long long b, long long k) {
  BigInt s = 0;
  for (long long t = 0; t < 2 * k; ++t) s += c.F(a + t) * c.F(b + t);
  return s;
}

inline BigInt ladder_term(Ctx& c, long long d, long long i) {
  if (i == 1) return c.F(d + 1);
  if (i == 2) return c.F(d);
  const long long t = i - 2;  // rung index
  return c.H(t + d + 1, t) + c.H(t + d + 1, t + 1);
}

}  // namespace detail

// First violated constraint of the row's validity domain, if any. The
// domain differs between forms only where the correction is the hypothesis
// itself (ODD_RUN_LENGTH's and ZIGZAG_PARALLEL's parity).
inline std::optional<std::string> domain_violation(IdentityId id, const Params& p,
                                                   Form form = Form::Corrected) {
  using detail::arg;
  using detail::arg_or;
  auto bad = [](std::string s) { return std::optional<std::string>(std::move(s)); };
  switch (id) {
    case IdentityId::RungSum: {
      const auto k = arg(p, "k"), j = arg(p, "j");
      if (j < 0) return bad("requires j >= 0");
      if (j > k) return bad("requires j <= k");
      return std::nullopt;
    }
    case IdentityId::RectangleShift: {
      const auto k = arg(p, "k"), j = arg(p, "j"), i = arg(p, "i"), r = arg(p, "r");
      if (j < 0 || i < 0 || r < 0) return bad("requires j, i, r >= 0");
      if (j + i > k) return bad("requires j + i <= k");
      return std::nullopt;
    }
    case IdentityId::RectangleClosed: {
      const auto k = arg(p, "k"), j = arg(p, "j"), i = arg(p, "i");
      const auto r = arg_or(p, "r", 0);
      if (j < 0 || i < 0 || r < 0) return bad("requires j, i, r >= 0");
      if (2 * j + i > k) return bad("requires 2j + i <= k");
      return std::nullopt;
    }
    case IdentityId::AltRungAbs: {
      const auto k = arg(p, "k"), j = arg(p, "j"), r = arg(p, "r"), n = arg(p, "n");
      if (n < 1) return bad("requires n >= 1");
      if (j < 0 || r < 0) return bad("requires j, r >= 0");
      if (j + 2 * n - 1 > k) return bad("requires j + 2n - 1 <= k");
      return std::nullopt;
    }
    case IdentityId::EvenRungSum: {
      const auto k = arg(p, "k"), j = arg(p, "j"), m = arg(p, "m"), n = arg(p, "n");
      if (n < 1) return bad("requires n >= 1");
      if (m < 1) return bad("requires m >= 1");
      if (j < 0) return bad("requires j >= 0");
      if (j + m > k) return bad("requires j + m <= k");
      return std::nullopt;
    }
    case IdentityId::OddRunLength: {
      const auto k = arg(p, "k"), j = arg(p, "j"), n = arg(p, "n"), i = arg(p, "i");
      if (n < 1) return bad("requires n >= 1");
      if (j < 0) return bad("requires j >= 0");
      if (j + n > k) return bad("requires j + n <= k");
      if (form == Form::Corrected) {
        if (i < 2 || i % 2 != 0) return bad("requires even i >= 2 (corrected hypothesis)");
      } else {
        if (i < 1 || i % 2 != 1) return bad("requires odd i >= 1 (paper-stated hypothesis)");
      }
      return std::nullopt;
    }
    case IdentityId::ColumnDiff: {
      const auto r = arg(p, "r"), k = arg(p, "k"), j = arg(p, "j");
      if (r < 1 || k < 1 || j < 1) return bad("requires r, k, j >= 1");
      if (r < j) return bad("requires r >= j");
      return std::nullopt;
    }
    case IdentityId::DiagonalSum: {
      const auto k = arg(p, "k"), j = arg(p, "j"), m = arg(p, "m");
      if (j < 0) return bad("requires j >= 0");
      if (k <= j) return bad("requires k > j");
      if (m < 0) return bad("requires m >= 0");
      return std::nullopt;
    }
    case IdentityId::Cassini:
      if (arg(p, "k") < 1) return bad("requires k >= 1");
      return std::nullopt;
    case IdentityId::Catalan:
    case IdentityId::Docagne: {
      const auto k = arg(p, "k"), j = arg(p, "j");
      if (j < 0) return bad("requires j >= 0");
      if (j > k) return bad("requires j <= k");
      return std::nullopt;
    }
    case IdentityId::Johnson: {
      const auto k = arg(p, "k"), j = arg(p, "j"), r = arg(p, "r"), i = arg(p, "i"),
                 l = arg(p, "l");
      if (i < 0) return bad("requires i >= 0");
      if (i >= j) return bad("requires i < j");
      if (k + j != r + i) return bad("requires k + j = r + i");
      if (i > k) return bad("requires i <= k");
      if (l < 0 || l > i) return bad("requires 0 <= l <= i");
      return std::nullopt;
    }
    case IdentityId::ZigzagParallel: {
      const auto a = arg(p, "a"), b = arg(p, "b"), j = arg(p, "j");
      if (a < 1 || b < 1) return bad("requires a, b >= 1");
      if (j < 1 || j > std::min(a, b)) return bad("requires 1 <= j <= min(a,b)");
      if (form == Form::Corrected && j % 2 == 0) {
        return bad("requires odd j (corrected hypothesis)");
      }
      return std::nullopt;
    }
    case IdentityId::LongZigzagAlt: {
      const auto r = arg(p, "r"), c = arg(p, "c"), n = arg(p, "n"),
                 f = arg(p, "first_run");
      if (r < 0 || c < 0 || c > r) return bad("requires start in triangle (0 <= c <= r)");
      if (n < 3 || n % 2 == 0) return bad("requires odd n >= 3");
      if (f != 0 && f != 1) return bad("requires first_run in {0,1}");
      return std::nullopt;
    }
    case IdentityId::ZigzagColumnSum: {
      const auto a = arg(p, "a"), b = arg(p, "b"), c = arg(p, "c"), d = arg(p, "d"),
                 k = arg(p, "k");
      if (a < 1 || b < 1 || c < 1 || d < 1) return bad("requires a, b, c, d >= 1");
      if (a + c != b + d) return bad("requires a + c = b + d");
      if (k < 1) return bad("requires k >= 1");
      return std::nullopt;
    }
    case IdentityId::ZigzagBalance: {
      const auto r = arg(p, "r"), c = arg(p, "c"), k = arg(p, "k");
      if (k < 1) return bad("requires k >= 1");
      if (c < 2 || c > r - 2) return bad("requires 2 <= c <= r - 2 (head in triangle)");
      return std::nullopt;
    }
    case IdentityId::HockeyStick: {
      const auto k = arg(p, "k"), n = arg(p, "n"), s = arg(p, "side");
      if (k < 2) return bad("requires k >= 2");
      if (n < 1) return bad("requires n >= 1");
      if (s != 0 && s != 1) return bad("requires side in {0,1}");
      return std::nullopt;
    }
    case IdentityId::BraidSigned: {
      const auto n = arg(p, "n"), m = arg(p, "m"), l = arg(p, "l");
      if (m < 0 || m > n) return bad("requires 0 <= m <= n");
      if (l < 0 || l > std::min(m, n - m)) return bad("requires 0 <= l <= min(m, n-m)");
      return std::nullopt;
    }
    case IdentityId::BraidNormalized: {
      const auto m = arg(p, "m"), r = arg(p, "r"), l = arg(p, "l");
      if (l < 1) return bad("requires l >= 1");
      if (m < l + 1 || r < l + 1) return bad("requires m, r >= l + 1");
      return std::nullopt;
    }
    case IdentityId::BraidClosed: {
      const auto m = arg(p, "m"), l = arg(p, "l");
      if (l < 1) return bad("requires l >= 1");
      if (m < l + 1) return bad("requires m >= l + 1");
      return std::nullopt;
    }
    case IdentityId::RhombusDet: {
      const auto n = arg(p, "n"), r = arg(p, "r");
      if (r < 0) return bad("requires r >= 0");
      if (r + 1 > n) return bad("requires r + 1 <= n");
      return std::nullopt;
    }
    case IdentityId::TriangleConfig: {
      const auto n = arg(p, "n"), r = arg(p, "r");
      if (r < 1 || r > n) return bad("requires 1 <= r <= n");
      return std::nullopt;
    }
    case IdentityId::GenFibLadder: {
      const auto d = arg(p, "d"), t = arg(p, "t");
      if (d < 1) return bad("requires d >= 1");
      if (t < 1) return bad("requires t >= 1");
      return std::nullopt;
    }
  }
  return bad("unknown identity id");
}

// Evaluate the (possibly chained) equality members of one identity instance.
inline std::vector<BigInt> eval_members(IdentityId id, const Params& p, FibTable& tab,
                                        Form form = Form::Corrected) {
  using detail::arg;
  using detail::arg_or;
  detail::Ctx c{tab};
  switch (id) {
    case IdentityId::RungSum: {
      const auto k = arg(p, "k"), j = arg(p, "j");
      return {c.H(k, j) + c.H(k + 2, j + 1), BigInt(c.F(k + 1))};
    }
    case IdentityId::RectangleShift: {
      const auto k = arg(p, "k"), j = arg(p, "j"), i = arg(p, "i"), r = arg(p, "r");
      BigInt d0 = c.H(k, j) - c.H(k, j + i);
      BigInt dr = c.H(k + 2 * r, j + r) - c.H(k + 2 * r, j + i + r);
      const int sign = form == Form::Corrected ? neg_one_pow(r) : neg_one_pow(r + 1);
      return {std::move(d0), sign * dr};
    }
    case IdentityId::RectangleClosed: {
      const auto k = arg(p, "k"), j = arg(p, "j"), i = arg(p, "i");
      const auto r = arg_or(p, "r", 0);
      BigInt d0 = c.H(k, j) - c.H(k, j + i);
      const int sign = form == Form::Corrected ? neg_one_pow(j + 1) : neg_one_pow(r + 1);
      return {std::move(d0), sign * c.H(k - 2 * j, i)};
    }
    case IdentityId::AltRungAbs: {
      const auto k = arg(p, "k"), j = arg(p, "j"), r = arg(p, "r"), n = arg(p, "n");
      BigInt s1 = 0, s2 = 0;
      for (long long t = 0; t < 2 * n; ++t) {
        s1 += neg_one_pow(t) * c.H(k, j + t);
        s2 += neg_one_pow(t) * c.H(k + 2 * r, j + t + r);
      }
      return {abs(s1), abs(s2)};
    }
    case IdentityId::EvenRungSum: {
      const auto k = arg(p, "k"), j = arg(p, "j"), m = arg(p, "m"), n = arg(p, "n");
      BigInt s1 = 0, s2 = 0;
      for (long long t = 0; t < 2 * n; ++t) {
        s1 += c.H(k + 2 * t, j + t);
        s2 += c.H(k + 2 * t, j + m + t);
      }
      return {std::move(s1), std::move(s2)};
    }
    case IdentityId::OddRunLength: {
      const auto k = arg(p, "k"), j = arg(p, "j"), n = arg(p, "n"), i = arg(p, "i");
      return {c.H(k + 2 * i, j + i) - c.H(k, j),
              c.H(k + 2 * i, j + n + i) - c.H(k, j + n), c.H(k + 2 * i, i)};
    }
    case IdentityId::ColumnDiff: {
      const auto r = arg(p, "r"), k = arg(p, "k"), j = arg(p, "j");
      return {c.H(r + k, j) - c.H(r, j),
              c.F(j) * (c.H(r + k - j + 1, 1) - c.H(r - j + 1, 1))};
    }
    case IdentityId::DiagonalSum: {
      const auto k = arg(p, "k"), j = arg(p, "j"), m = arg(p, "m");
      BigInt s1 = 0, s2 = 0;
      for (long long i = 0; i <= m; ++i) {
        s1 += c.H(k + i, j + i);
        s2 += c.H(j + i + 1, 1);
      }
      return {std::move(s1), c.F(k - j) * s2};
    }
    case IdentityId::Cassini: {
      const auto k = arg(p, "k");
      return {c.H(2 * k, k) - c.H(2 * k, k - 1), BigInt(neg_one_pow(k - 1))};
    }
    case IdentityId::Catalan: {
      const auto k = arg(p, "k"), j = arg(p, "j");
      return {c.H(2 * k, k) - c.H(2 * k, k - j), neg_one_pow(k - j) * c.H(2 * j, j)};
    }
    case IdentityId::Docagne: {
      const auto k = arg(p, "k"), j = arg(p, "j");
      return {c.H(k + j + 1, k) - c.H(k + j + 1, j),
              neg_one_pow(j) * c.H(k - j + 1, k - j)};
    }
    case IdentityId::Johnson: {
      const auto k = arg(p, "k"), j = arg(p, "j"), r = arg(p, "r"), i = arg(p, "i"),
                 l = arg(p, "l");
      return {c.H(k + j, j) - c.H(r + i, i),
              neg_one_pow(l) * (c.H(k + j - 2 * l, j - l) - c.H(r + i - 2 * l, i - l)),
              neg_one_pow(i) * c.H(k + j - 2 * i, j - i)};
    }
    case IdentityId::ZigzagParallel: {
      const auto a = arg(p, "a"), b = arg(p, "b"), j = arg(p, "j");
      return {c.F(a) * (c.F(b - j) - c.F(b + j)), c.F(b) * (c.F(a - j) - c.F(a + j))};
    }
    case IdentityId::LongZigzagAlt: {
      const auto r = arg(p, "r"), cc = arg(p, "c"), n = arg(p, "n"),
                 f = arg(p, "first_run");
      const auto pts = layout::long_zigzag(
          GridPoint(r, cc), n, f == 0 ? RunDirection::Slash : RunDirection::Backslash);
      BigInt alt = 0;
      for (std::size_t idx = 1; idx + 1 < pts.size(); idx += 2) alt += entry(pts[idx], tab);
      return {std::move(alt), entry(pts.back(), tab) - entry(pts.front(), tab)};
    }
    case IdentityId::ZigzagColumnSum: {
      const auto a = arg(p, "a"), b = arg(p, "b"), cc = arg(p, "c"), d = arg(p, "d"),
                 k = arg(p, "k");
      BigInt s1 = detail::zigzag_column_sum(c, a, cc, k);
      BigInt s2 = detail::zigzag_column_sum(c, b, d, k);
      BigInt closed;
      if (form == Form::Corrected) {
        const long long s = a + cc, ne = s / 2;
        closed = (s % 2 != 0) ? BigInt(c.F(ne + 2 * k) * c.F(ne + 2 * k) - c.F(ne) * c.F(ne))
                              : BigInt(c.F(ne + 2 * k) * c.F(ne + 2 * k - 1) -
                                       c.F(ne) * c.F(ne - 1));
      } else {
        const long long s = a + b, ne = s / 2;
        closed = (s % 2 != 0) ? BigInt(c.F(k + ne) * c.F(k + ne) - c.F(ne) * c.F(ne))
                              : BigInt(c.F(ne + k) * c.F(ne + k - 1) -
                                       c.F(ne) * c.Fs(ne - 1));
      }
      return {std::move(s1), std::move(s2), std::move(closed)};
    }
    case IdentityId::ZigzagBalance: {
      const auto r = arg(p, "r"), cc = arg(p, "c"), k = arg(p, "k");
      const auto z = layout::zigzag_6k5(GridPoint(r, cc), k);
      BigInt apex = entry(z.head[4], tab);
      BigInt mid = 0;
      for (const auto& q : z.middle) mid += entry(q, tab);
      BigInt lhs = entry(z.head[0], tab) + entry(z.head[1], tab) + apex + mid;
      BigInt rhs = entry(z.head[2], tab) + entry(z.head[3], tab) + apex + mid;
      for (const auto& q : z.left) lhs += entry(q, tab);
      for (const auto& q : z.right) rhs += entry(q, tab);
      return {std::move(lhs), std::move(rhs)};
    }
    case IdentityId::HockeyStick: {
      const auto k = arg(p, "k"), n = arg(p, "n"), s = arg(p, "side");
      const auto h = layout::hockey_stick(k, n, s == 0 ? Side::Left : Side::Right);
      BigInt shaft = 0;
      for (const auto& q : h.shaft) shaft += entry(q, tab);
      std::vector<BigInt> members{std::move(shaft), entry(h.blade, tab)};
      if (k == 2) {
        // central shaft: both blade candidates must coincide
        members.push_back(entry(GridPoint(h.blade.row, h.blade.row - h.blade.pos), tab));
      }
      return members;
    }
    case IdentityId::BraidSigned: {
      const auto n = arg(p, "n"), m = arg(p, "m"), l = arg(p, "l");
      BigInt lhs = 0, rhs = 0;
      for (long long k = 0; k <= l; ++k) {
        lhs += c.H(n - k, m - k);
        rhs += c.H(n - k, m);
      }
      for (long long k = 1; k <= l; ++k) {
        lhs += neg_one_pow(k) * c.H(n + k, m + k);
        rhs += neg_one_pow(k) * c.H(n + k, m);
      }
      return {std::move(lhs), std::move(rhs)};
    }
    case IdentityId::BraidNormalized: {
      const auto m = arg(p, "m"), r = arg(p, "r"), l = arg(p, "l");
      return {c.F(r) * detail::braid_term_sum(c, m, l),
              c.F(m) * detail::braid_term_sum(c, r, l)};
    }
    case IdentityId::BraidClosed: {
      const auto m = arg(p, "m"), l = arg(p, "l");
      BigInt sum = detail::braid_term_sum(c, m, l);
      BigInt closed;
      if (form == Form::Corrected) {
        closed = c.F(m) * (neg_one_pow(l) * c.L(l - 1) + 1);
      } else if (l % 2 == 1) {
        closed = c.F(m) * (c.F(l) + c.Fs(l - 2) + 1);
      } else {
        const long long lp = l / 2;
        closed = c.F(m) * (5 * c.F(lp - 1) * c.F(lp) + 1 + neg_one_pow(lp));
      }
      return {std::move(sum), std::move(closed)};
    }
    case IdentityId::RhombusDet: {
      const auto n = arg(p, "n"), r = arg(p, "r");
      return {c.H(n, r) * c.H(n + 1, r + 1) - c.H(n, r + 1) * c.H(n + 1, r),
              neg_one_pow(n - r + 1) * c.F(r) * c.F(r + 1)};
    }
    case IdentityId::TriangleConfig: {
      const auto n = arg(p, "n"), r = arg(p, "r");
      BigInt abc = c.H(n + 1, r - 1) + c.H(n, r) - c.H(n + 2, r + 1);
      BigInt rhs = form == Form::Corrected ? BigInt(neg_one_pow(r) * c.Fs(n - 2 * r))
                                           : c.Fs(2 * r - n + 1);
      return {std::move(abc), std::move(rhs)};
    }
    case IdentityId::GenFibLadder: {
      const auto d = arg(p, "d"), t = arg(p, "t");
      return {detail::ladder_term(c, d, t + 2),
              detail::ladder_term(c, d, t + 1) + detail::ladder_term(c, d, t)};
    }
  }
  throw ParamDomainError("unknown identity id");
}

// True when the corrected and paper-stated forms evaluate different members
// (as opposed to differing only in the hypothesis).
inline bool paper_formula_differs(IdentityId id) {
  switch (id) {
    case IdentityId::RectangleShift:
    case IdentityId::RectangleClosed:
    case IdentityId::ZigzagColumnSum:
    case IdentityId::BraidClosed:
    case IdentityId::TriangleConfig:
      return true;
    default:
      return false;
  }
}

namespace detail {

inline bool all_equal(const std::vector<BigInt>& members) {
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i] != members[0]) return false;
  }
  return true;
}

inline std::string chain_string(const std::vector<BigInt>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += " | ";
    out += members[i].str();
  }
  return out;
}

}  // namespace detail

// Evaluate one identity instance. Domain violations throw ParamDomainError
// naming the violated constraint; out-of-triangle materialization propagates.
// For corrected rows evaluated in their corrected form, the report note also
// records the verdict of the paper-stated form.
inline IdentityReport verify(IdentityId id, const Params& params, FibTable& tab,
                             Form form = Form::Corrected) {
  const IdentityInfo& meta = info(id);
  if (auto violation = domain_violation(id, params, form)) {
    throw ParamDomainError(std::string(meta.name) + ": " + *violation);
  }
  IdentityReport rep;
  rep.id = id;
  rep.params = params;
  rep.members = eval_members(id, params, tab, form);
  rep.holds = detail::all_equal(rep.members);
  if (meta.status == CatalogStatus::Corrected) {
    rep.note = form == Form::PaperStated ? "paper-stated form; " : "corrected form; ";
    rep.note += meta.note;
    if (form == Form::Corrected && paper_formula_differs(id) &&
        !domain_violation(id, params, Form::PaperStated)) {
      auto paper = eval_members(id, params, tab, Form::PaperStated);
      rep.note += detail::all_equal(paper)
                      ? "; paper-stated form agrees here"
                      : "; paper-stated form fails here: " + detail::chain_string(paper);
    }
  } else if (!meta.note.empty()) {
    rep.note = meta.note;
  }
  return rep;
}

inline IdentityReport verify(IdentityId id, const Params& params,
                             Form form = Form::Corrected) {
  FibTable tab;
  return verify(id, params, tab, form);
}

// Inclusive per-parameter ranges, iterated row-major in the given order.
using Ranges = std::vector<std::pair<std::string, std::pair<long long, long long>>>;

// Run verify over the full grid, filtering each point by the validity
// domain first. Failures are recorded in grid order (lexicographic by the
// given parameter order); at most kMaxStoredFailures witnesses are kept but
// failure_count is always exact.
inline SweepReport sweep(IdentityId id, const Ranges& ranges, FibTable& tab,
                         Form form = Form::Corrected) {
  const IdentityInfo& meta = info(id);
  if (ranges.empty()) throw ParamDomainError("sweep requires at least one range");
  for (const auto& [name, lohi] : ranges) {
    if (std::find(meta.params.begin(), meta.params.end(), name) == meta.params.end()) {
      throw ParamDomainError(std::string(meta.name) + ": unknown parameter '" + name + "'");
    }
  }

  SweepReport rep;
  rep.id = id;
  {
    std::string g;
    for (const auto& [name, lohi] : ranges) {
      if (!g.empty()) g += ", ";
      g += name + "=" + std::to_string(lohi.first) + ".." + std::to_string(lohi.second);
    }
    rep.grid = std::move(g);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const bool grid_empty =
      std::any_of(ranges.begin(), ranges.end(),
                  [](const auto& r) { return r.second.first > r.second.second; });
  if (!grid_empty) {
    Params cur;
    std::vector<long long> vals(ranges.size());
    std::vector<Params::iterator> slots(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      vals[i] = ranges[i].second.first;
      slots[i] = cur.insert_or_assign(ranges[i].first, vals[i]).first;
    }
    bool done = false;
    while (!done) {
      for (std::size_t i = 0; i < ranges.size(); ++i) slots[i]->second = vals[i];
      if (!domain_violation(id, cur, form)) {
        ++rep.instances;
        auto members = eval_members(id, cur, tab, form);
        if (!detail::all_equal(members)) {
          ++rep.failure_count;
          if (rep.failures.size() < SweepReport::kMaxStoredFailures) {
            rep.failures.push_back(cur);
          }
        }
      }
      // odometer, last parameter fastest
      done = true;
      for (std::size_t pos = ranges.size(); pos-- > 0;) {
        if (vals[pos] < ranges[pos].second.second) {
          ++vals[pos];
          done = false;
          break;
        }
        vals[pos] = ranges[pos].second.first;
      }
    }
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

inline SweepReport sweep(IdentityId id, const Ranges& ranges, Form form = Form::Corrected) {
  FibTable tab;
  return sweep(id, ranges, tab, form);
}

}  // namespace hosoya
