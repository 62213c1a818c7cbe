#pragma once

#include <cstddef>
#include <deque>
#include <utility>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"

namespace hosoya {

namespace detail {

// {F_n, F_{n+1}} by fast doubling, n >= 0.
inline std::pair<BigInt, BigInt> fib_pair(unsigned long long n) {
  if (n == 0) return {BigInt(0), BigInt(1)};
  auto [a, b] = fib_pair(n >> 1);  // a = F_m, b = F_{m+1}, m = n/2
  BigInt c = a * (2 * b - a);      // F_{2m}
  BigInt d = a * a + b * b;        // F_{2m+1}
  if (n & 1ULL) return {d, c + d};
  return {c, d};
}

}  // namespace detail

// F_n for any signed index. F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2};
// negative indices follow the negafibonacci rule F_{-n} = (-1)^{n+1} F_n.
inline BigInt fib(long long n) {
  if (n >= 0) return detail::fib_pair(static_cast<unsigned long long>(n)).first;
  const auto m = static_cast<unsigned long long>(-n);
  BigInt f = detail::fib_pair(m).first;
  return (m % 2 == 0) ? BigInt(-f) : f;
}

// L_n with L_0 = 2, L_1 = 1, same recurrence; L_{-n} = (-1)^n L_n falls out
// of the negafibonacci rule.
inline BigInt lucas(long long n) { return fib(n - 1) + fib(n + 1); }

// Memoized ascending Fibonacci table for dense sweeps. Growth is append-only
// and monotone, and lives in a deque so that references handed out by
// fib_ref stay valid while the table grows. Reads of already-covered indices
// do not mutate; for shared use either pre-size with ensure() and read
// concurrently, or give each sweep worker its own table.
class FibTable {
 public:
  FibTable() : vals_{BigInt(0), BigInt(1)} {}

  void ensure(long long n) {
    const std::size_t need = magnitude(n) + 1;
    while (vals_.size() < need) {
      const std::size_t s = vals_.size();
      vals_.push_back(vals_[s - 1] + vals_[s - 2]);
    }
  }

  // F_n for n >= 0 without a copy; grows the table as needed.
  const BigInt& fib_ref(long long n) {
    if (n < 0) throw ParamDomainError("FibTable::fib_ref requires n >= 0");
    ensure(n);
    return vals_[static_cast<std::size_t>(n)];
  }

  BigInt fib(long long n) {
    if (n >= 0) return fib_ref(n);
    const BigInt& f = fib_ref(-n);
    return ((-n) % 2 == 0) ? BigInt(-f) : f;
  }

  BigInt lucas(long long n) { return fib(n - 1) + fib(n + 1); }

  std::size_t size() const { return vals_.size(); }

 private:
  static std::size_t magnitude(long long n) {
    return static_cast<std::size_t>(n < 0 ? -n : n);
  }

  std::deque<BigInt> vals_;  // F_0, F_1, ... ascending
};

}  // namespace hosoya
