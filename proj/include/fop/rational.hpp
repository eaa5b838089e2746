#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fop/errors.hpp"

namespace fop {

/// Exact rational number on 64-bit parts with overflow-checked arithmetic.
/// The eliminations this library runs keep coefficients tiny; the checks are
/// there so any excursion fails loudly instead of silently wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw input_error("rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_),
                    checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num_) * b.num_),
                    checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw input_error("rational: division by zero");
    return Rational(checked(static_cast<__int128>(a.num_) * b.den_),
                    checked(static_cast<__int128>(a.den_) * b.num_));
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw engine_error("rational: 64-bit overflow");
    return static_cast<long long>(v);
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

/// One equation sum(coef * x_var) = 0, variables sorted ascending.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Rank of a sparse homogeneous system by exact fraction-free-ish Gaussian
/// elimination (pivot rows are normalized to leading coefficient 1; every
/// incoming row is reduced against the accumulated pivots).
inline int sparse_rank(int nvars, const std::vector<SparseRow>& rows) {
  std::vector<SparseRow> pivot(static_cast<std::size_t>(nvars));
  std::vector<char> has(static_cast<std::size_t>(nvars), 0);
  int rank = 0;

  auto add_scaled = [](const SparseRow& a, const SparseRow& b, const Rational& factor) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, b[j].second * factor);
        ++j;
      } else {
        Rational v = a[i].second + b[j].second * factor;
        if (!v.is_zero()) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  };

  for (const SparseRow& r : rows) {
    SparseRow row = r;
    while (!row.empty()) {
      int lead = row.front().first;
      if (!has[static_cast<std::size_t>(lead)]) {
        Rational inv = Rational(1) / row.front().second;
        for (auto& [v, c] : row) c = c * inv;
        pivot[static_cast<std::size_t>(lead)] = std::move(row);
        has[static_cast<std::size_t>(lead)] = 1;
        ++rank;
        break;
      }
      row = add_scaled(row, pivot[static_cast<std::size_t>(lead)], -row.front().second);
    }
  }
  return rank;
}

inline int nullspace_dimension(int nvars, const std::vector<SparseRow>& rows) {
  return nvars - sparse_rank(nvars, rows);
}

}  // namespace fop
