#pragma once

#include <string>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"
#include "hosoya/fib.hpp"

namespace hosoya {

// Coordinate (row r, position k) with 0 <= k <= r. Constructing anything
// else throws; there is no silent clamping anywhere downstream.
struct GridPoint {
  long long row = 0;
  long long pos = 0;

  GridPoint() = default;
  GridPoint(long long r, long long k) : row(r), pos(k) {
    if (r < 0 || k < 0 || k > r) {
      throw OutOfTriangleError("coordinate out of triangle: (" +
                               std::to_string(r) + "," + std::to_string(k) +
                               ")");
    }
  }

  friend bool operator==(const GridPoint& a, const GridPoint& b) {
    return a.row == b.row && a.pos == b.pos;
  }
};

// H(r,k) = F_k * F_{r-k}. This closed form is the production path for every
// entry; the recursion-built table lives in oracle.hpp and exists only to
// cross-check it.
inline BigInt entry(const GridPoint& p, FibTable& tab) {
  return tab.fib_ref(p.pos) * tab.fib_ref(p.row - p.pos);
}

inline BigInt entry(const GridPoint& p) {
  return fib(p.pos) * fib(p.row - p.pos);
}

inline BigInt entry(long long r, long long k, FibTable& tab) {
  return entry(GridPoint(r, k), tab);
}

// Dense row r, edge zeros included; palindromic.
inline std::vector<BigInt> row(long long r, FibTable& tab) {
  if (r < 0) throw OutOfTriangleError("row index must be >= 0");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(r) + 1);
  for (long long k = 0; k <= r; ++k) out.push_back(entry(r, k, tab));
  return out;
}

inline std::vector<BigInt> row(long long r) {
  FibTable tab;
  return row(r, tab);
}

struct TriangleWindow {
  long long first_row = 0;
  long long last_row = 0;
  std::vector<std::vector<BigInt>> rows;
};

inline TriangleWindow window(long long first_row, long long last_row,
                             FibTable& tab) {
  if (first_row < 0 || last_row < first_row) {
    throw ParamDomainError("window requires 0 <= first_row <= last_row");
  }
  TriangleWindow w{first_row, last_row, {}};
  w.rows.reserve(static_cast<std::size_t>(last_row - first_row) + 1);
  for (long long r = first_row; r <= last_row; ++r) w.rows.push_back(row(r, tab));
  return w;
}

// The d-th diagonal [H(d+t, t) for t = 0..len-1]: the Fibonacci sequence
// scaled by F_d.
inline std::vector<BigInt> diagonal(long long d, long long len, FibTable& tab) {
  if (d < 0 || len < 0) throw ParamDomainError("diagonal requires d >= 0 and len >= 0");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(len));
  for (long long t = 0; t < len; ++t) out.push_back(entry(d + t, t, tab));
  return out;
}

inline std::vector<BigInt> diagonal(long long d, long long len) {
  FibTable tab;
  return diagonal(d, len, tab);
}

}  // namespace hosoya
