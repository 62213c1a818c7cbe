#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

// Independent ground truth: the triangle built purely from the double
// recursion
//   A: H(r,k) = H(r-1,k)   + H(r-2,k)
//   B: H(r,k) = H(r-1,k-1) + H(r-2,k-2)
// and the seeds H(0,0)=0, H(1,0)=0, H(1,1)=0, H(2,1)=1. The closed form is
// never used in construction; wherever both recursions apply they are both
// evaluated and must agree.
class RecursiveTable {
 public:
  static RecursiveTable build(long long max_row) {
    if (max_row < 2) throw ParamDomainError("RecursiveTable requires max_row >= 2");
    RecursiveTable t;
    t.rows_.resize(static_cast<std::size_t>(max_row) + 1);
    t.rows_[0] = {BigInt(0)};
    t.rows_[1] = {BigInt(0), BigInt(0)};
    for (long long r = 2; r <= max_row; ++r) {
      auto& cur = t.rows_[static_cast<std::size_t>(r)];
      const auto& r1 = t.rows_[static_cast<std::size_t>(r - 1)];
      const auto& r2 = t.rows_[static_cast<std::size_t>(r - 2)];
      cur.resize(static_cast<std::size_t>(r) + 1);
      for (long long k = 0; k <= r; ++k) {
        if (r == 2 && k == 1) {
          cur[1] = 1;  // seed
          continue;
        }
        const bool has_a = k <= r - 2;  // operands of A in range
        const bool has_b = k >= 2;      // operands of B in range
        BigInt a, b;
        if (has_a) a = r1[static_cast<std::size_t>(k)] + r2[static_cast<std::size_t>(k)];
        if (has_b) b = r1[static_cast<std::size_t>(k - 1)] + r2[static_cast<std::size_t>(k - 2)];
        if (has_a && has_b && a != b) {
          // Must never fire; firing means the construction itself is broken.
          throw std::logic_error("recursion disagreement at (" + std::to_string(r) +
                                 "," + std::to_string(k) + "): " + a.str() +
                                 " vs " + b.str());
        }
        cur[static_cast<std::size_t>(k)] = has_a ? std::move(a) : std::move(b);
      }
    }
    return t;
  }

  long long max_row() const { return static_cast<long long>(rows_.size()) - 1; }

  const BigInt& at(long long r, long long k) const {
    if (r < 0 || r > max_row() || k < 0 || k > r) {
      throw OutOfTriangleError("oracle lookup out of range: (" + std::to_string(r) +
                               "," + std::to_string(k) + ")");
    }
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
  }

  struct Mismatch {
    GridPoint at;
    BigInt recursive;
    BigInt closed;
  };

  // Compare every entry against the closed form; empty result means the two
  // paths agree on the whole table.
  std::vector<Mismatch> cross_check(FibTable& tab) const {
    std::vector<Mismatch> out;
    for (long long r = 0; r <= max_row(); ++r) {
      for (long long k = 0; k <= r; ++k) {
        BigInt closed = entry(r, k, tab);
        const BigInt& rec = rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        if (rec != closed) out.push_back({GridPoint(r, k), rec, std::move(closed)});
      }
    }
    return out;
  }

  long long entry_count() const {
    const long long n = max_row() + 1;
    return n * (n + 1) / 2;
  }

 private:
  RecursiveTable() = default;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace hosoya
