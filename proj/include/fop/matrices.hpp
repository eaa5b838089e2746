#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fop/errors.hpp"

namespace fop {

/// Sparse {0,-1,1} matrix keyed by (row, col) in row-major order.
class SignMatrix {
 public:
  SignMatrix() : rows_(0), cols_(0) {}
  SignMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, int v) {
    if (v == 0)
      entries_.erase({r, c});
    else if (v == 1 || v == -1)
      entries_[{r, c}] = static_cast<std::int8_t>(v);
    else
      throw input_error("sign matrix: entries must be 0/+1/-1");
  }

  int at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, int>, std::int8_t>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  SignMatrix transpose() const {
    SignMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
  }

  friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_dense_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (c) os << ' ';
        os << at(r, c);
      }
      os << '\n';
    }
    return os.str();
  }

  /// One "row col sign" line per stored entry, row-major.
  std::string to_triples_string() const {
    std::ostringstream os;
    for (const auto& [cell, v] : entries_) os << cell.first << ' ' << cell.second << ' ' << int(v) << '\n';
    return os.str();
  }

 private:
  int rows_, cols_;
  std::map<std::pair<int, int>, std::int8_t> entries_;
};

/// Dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  long long at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw input_error("integer matrix product: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        long long v = a.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) += v * b.at(k, j);
      }
    return out;
  }

  int row_support(int r) const {
    int c = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(r, j) != 0) ++c;
    return c;
  }

  std::string to_csv() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (c) os << ',';
        os << at(r, c);
      }
      os << '\n';
    }
    return os.str();
  }

  std::string to_grid_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (c) os << ' ';
        os << at(r, c);
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  int rows_, cols_;
  std::vector<long long> a_;
};

/// M M^T, exact.
inline IntMatrix gram(const IntMatrix& m) { return m * m.transpose(); }

inline bool is_scalar_identity(const IntMatrix& m, long long k) {
  if (m.rows() != m.cols()) return false;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != (r == c ? k : 0)) return false;
  return true;
}

}  // namespace fop
