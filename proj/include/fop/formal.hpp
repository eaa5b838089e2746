#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fop/errors.hpp"
#include "fop/hom_basis.hpp"
#include "fop/matrices.hpp"
#include "fop/rng.hpp"

namespace fop {

/// A named noncommuting indeterminate.
struct Symbol {
  std::string name;
  auto operator<=>(const Symbol&) const = default;
};

/// A word in the free monoid on symbols; the empty word is the ring unit.
using Word = std::vector<Symbol>;

/// Element of the free noncommutative ring Z{symbols}: finitely many words
/// with nonzero integer coefficients. Multiplication concatenates words and
/// never commutes letters.
class FreePoly {
 public:
  FreePoly() = default;

  static FreePoly zero() { return FreePoly(); }
  static FreePoly constant(long long c) {
    FreePoly p;
    p.add_term({}, c);
    return p;
  }
  static FreePoly symbol(const Symbol& s, long long c = 1) {
    FreePoly p;
    p.add_term({s}, c);
    return p;
  }

  void add_term(const Word& w, long long c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Word, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Sum of absolute coefficient values.
  long long mass() const {
    long long m = 0;
    for (const auto& [w, c] : terms_) m += c < 0 ? -c : c;
    return m;
  }

  /// If the polynomial is exactly +-1 times a single length-1 word, returns
  /// (symbol, sign).
  std::optional<std::pair<Symbol, int>> as_signed_symbol() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [w, c] = *terms_.begin();
    if (w.size() != 1 || (c != 1 && c != -1)) return std::nullopt;
    return std::make_pair(w[0], static_cast<int>(c));
  }

  FreePoly reversed_words() const {
    FreePoly out;
    for (const auto& [w, c] : terms_) {
      Word r(w.rbegin(), w.rend());
      out.add_term(r, c);
    }
    return out;
  }

  friend FreePoly operator+(const FreePoly& a, const FreePoly& b) {
    FreePoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
  }
  friend FreePoly operator-(const FreePoly& a, const FreePoly& b) {
    FreePoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
  }
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    FreePoly out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    return out;
  }
  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      long long v = c;
      if (first) {
        if (v < 0) {
          os << "-";
          v = -v;
        }
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      first = false;
      if (v != 1 || w.empty()) os << v;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i || v != 1) os << '*';
        os << w[i].name;
      }
    }
    return os.str();
  }

 private:
  std::map<Word, long long> terms_;
};

/// Matrix over the free ring. FOP factors keep every entry equal to 0 or a
/// +-single symbol; general products are unrestricted.
class FormalMatrix {
 public:
  FormalMatrix() : rows_(0), cols_(0) {}
  FormalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FreePoly& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const FreePoly& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const FormalMatrix& a, const FormalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  int row_support(int r) const {
    int k = 0;
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) ++k;
    return k;
  }

 private:
  int rows_, cols_;
  std::vector<FreePoly> a_;
};

/// All symbols occurring in a matrix, sorted by name.
inline std::vector<Symbol> symbols_of(const FormalMatrix& m) {
  std::set<Symbol> seen;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& [w, coef] : m.at(r, c).terms())
        for (const Symbol& s : w) seen.insert(s);
  return {seen.begin(), seen.end()};
}

/// Formal linear combination sum_i symbol_i * E_i over a Hom basis. The
/// disjoint supports keep every entry a 0 or +-single symbol.
inline FormalMatrix assemble(const HomBasis& basis, const std::vector<Symbol>& symbols) {
  if (symbols.size() != basis.basis.size()) {
    std::ostringstream os;
    os << "assemble: " << basis.basis.size() << " orientable orbit(s) need exactly that many symbols, got "
       << symbols.size();
    throw input_error(os.str());
  }
  std::set<Symbol> uniq(symbols.begin(), symbols.end());
  if (uniq.size() != symbols.size()) throw input_error("assemble: duplicate symbol names");
  FormalMatrix out(basis.rows, basis.cols);
  for (std::size_t k = 0; k < basis.basis.size(); ++k)
    for (const auto& [cell, s] : basis.basis[k].entries())
      out.at(cell.first, cell.second) = FreePoly::symbol(symbols[k], s);
  return out;
}

/// A B^T with words concatenated as (entry of A) * (entry of B); under block
/// substitution the second letter of each product is the transposed block.
inline FormalMatrix mul_transpose(const FormalMatrix& a, const FormalMatrix& b) {
  if (a.cols() != b.cols()) throw input_error("mul_transpose: factors must have equal column counts");
  FormalMatrix out(a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j) {
      FreePoly acc;
      for (int t = 0; t < a.cols(); ++t) acc = acc + a.at(i, t) * b.at(j, t);
      out.at(i, j) = acc;
    }
  return out;
}

/// Transpose with every word reversed; models block transposition, so
/// formal_transpose(mul_transpose(A,B)) == mul_transpose(B,A) identically.
inline FormalMatrix formal_transpose(const FormalMatrix& p) {
  FormalMatrix out(p.cols(), p.rows());
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) out.at(c, r) = p.at(r, c).reversed_words();
  return out;
}

inline FormalMatrix add(const FormalMatrix& a, const FormalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw input_error("formal add: shape mismatch");
  FormalMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

inline bool is_zero(const FormalMatrix& p) {
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c)
      if (!p.at(r, c).is_zero()) return false;
  return true;
}

/// Plain entrywise symmetry P(i,j) == P(j,i). This is the formal-amicability
/// notion: an assembled product A B^T is symmetric in this sense exactly
/// when block substitution with pairwise-amicable blocks yields a symmetric
/// integer matrix.
inline bool is_symmetric(const FormalMatrix& p) {
  if (p.rows() != p.cols()) return false;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = r + 1; c < p.cols(); ++c)
      if (!(p.at(r, c) == p.at(c, r))) return false;
  return true;
}

/// For a square matrix with zero off-diagonal and one common diagonal
/// polynomial, returns that polynomial; otherwise nothing (NOT_SCALAR).
inline std::optional<FreePoly> diagonal_profile(const FormalMatrix& p) {
  if (p.rows() != p.cols()) throw input_error("diagonal_profile: square matrix required");
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c)
      if (r != c && !p.at(r, c).is_zero()) return std::nullopt;
  if (p.rows() == 0) return FreePoly::zero();
  const FreePoly& d = p.at(0, 0);
  for (int r = 1; r < p.rows(); ++r)
    if (!(p.at(r, r) == d)) return std::nullopt;
  return d;
}

/// Replaces each +-symbol entry by the matching signed block; 0 becomes the
/// zero block. All blocks must share one shape, and every symbol of P must
/// be mapped (map a symbol to an explicit zero block to drop it).
inline IntMatrix substitute(const FormalMatrix& p, const std::map<Symbol, IntMatrix>& blocks) {
  if (blocks.empty()) throw input_error("substitute: no blocks given");
  const int br = blocks.begin()->second.rows();
  const int bc = blocks.begin()->second.cols();
  for (const auto& [s, m] : blocks)
    if (m.rows() != br || m.cols() != bc) throw input_error("substitute: blocks of mixed shapes");

  IntMatrix out(p.rows() * br, p.cols() * bc);
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) {
      const FreePoly& e = p.at(r, c);
      if (e.is_zero()) continue;
      auto ss = e.as_signed_symbol();
      if (!ss) throw input_error("substitute: entries must be 0 or a +-single symbol");
      auto it = blocks.find(ss->first);
      if (it == blocks.end()) throw input_error("substitute: unmapped symbol '" + ss->first.name + "'");
      for (int i = 0; i < br; ++i)
        for (int j = 0; j < bc; ++j) out.at(r * br + i, c * bc + j) = ss->second * it->second.at(i, j);
    }
  return out;
}

namespace detail {

inline std::map<Symbol, IntMatrix> random_blocks(const std::vector<Symbol>& symbols, int r, int c, Rng& rng) {
  std::map<Symbol, IntMatrix> blocks;
  for (const Symbol& s : symbols) {
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rng.int_in(-3, 3);
    blocks.emplace(s, std::move(m));
  }
  return blocks;
}

/// Random symmetric circulant of size n: first row palindromic, so the
/// matrix equals its own transpose. Any two of these commute and satisfy
/// X Y^T = Y X^T, i.e. they are pairwise amicable.
inline IntMatrix random_symmetric_circulant(int n, Rng& rng) {
  std::vector<long long> row(static_cast<std::size_t>(n));
  for (int d = 0; d <= n / 2; ++d) {
    long long v = rng.int_in(-3, 3);
    row[static_cast<std::size_t>(d)] = v;
    row[static_cast<std::size_t>((n - d) % n)] = v;
  }
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = row[static_cast<std::size_t>(((j - i) % n + n) % n)];
  return m;
}

}  // namespace detail

/// Substitutes random integer blocks (shared random shape up to 3x3, entries
/// in [-3,3]) into a formal orthogonal pair and confirms the substituted
/// product is exactly zero, once per trial. A false return signals an engine
/// bug, not bad input.
inline bool orthogonality_transfer_check(const FormalMatrix& a, const FormalMatrix& b, int trials,
                                         std::uint64_t seed = default_seed) {
  std::vector<Symbol> syms = symbols_of(a);
  for (const Symbol& s : symbols_of(b)) syms.push_back(s);
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    int r = static_cast<int>(rng.int_in(1, 3));
    int c = static_cast<int>(rng.int_in(1, 3));
    auto blocks = detail::random_blocks(syms, r, c, rng);
    IntMatrix as = substitute(a, blocks);
    IntMatrix bs = substitute(b, blocks);
    IntMatrix prod = as * bs.transpose();
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j)
        if (prod.at(i, j) != 0) return false;
  }
  return true;
}

/// Bounded search for monomial equivalence of two factor-shaped matrices:
/// is B = P_r D_r A D_c P_c after some bijective, possibly sign-flipping,
/// renaming of symbols? Enumerates row permutations, row signs and symbol
/// renamings, then matches columns up to a global sign by bipartite search.
/// Meant for small factors (the 4x8 fixture comparison); cost grows as
/// rows! * 2^rows * (#symbols)! * 2^#symbols.
inline bool monomially_equivalent(const FormalMatrix& a, const FormalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const int m = a.rows(), n = a.cols();
  if (m > 6) throw input_error("monomially_equivalent: bounded search supports at most 6 rows");

  std::vector<Symbol> sa = symbols_of(a), sb = symbols_of(b);
  if (sa.size() != sb.size()) return false;
  const std::size_t k = sa.size();
  if (k > 4) throw input_error("monomially_equivalent: bounded search supports at most 4 symbols");

  // entry codes: 0, or +-(symbol index + 1)
  auto encode = [](const FormalMatrix& mtx, const std::vector<Symbol>& syms) {
    std::vector<std::vector<int>> code(static_cast<std::size_t>(mtx.rows()),
                                       std::vector<int>(static_cast<std::size_t>(mtx.cols()), 0));
    for (int i = 0; i < mtx.rows(); ++i)
      for (int j = 0; j < mtx.cols(); ++j) {
        const FreePoly& e = mtx.at(i, j);
        if (e.is_zero()) continue;
        auto ss = e.as_signed_symbol();
        if (!ss) throw input_error("monomially_equivalent: factor-shaped matrices only");
        auto it = std::find(syms.begin(), syms.end(), ss->first);
        code[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            ss->second * static_cast<int>(it - syms.begin() + 1);
      }
    return code;
  };
  const auto ca = encode(a, sa);
  const auto cb = encode(b, sb);

  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;

  std::vector<int> rename(k);  // symbol index in a -> index in b
  for (std::size_t i = 0; i < k; ++i) rename[i] = static_cast<int>(i);

  do {  // row permutation of a
    for (std::uint32_t row_signs = 0; row_signs < (1u << m); ++row_signs) {
      do {  // symbol renaming
        for (std::uint32_t sym_signs = 0; sym_signs < (1u << k); ++sym_signs) {
          // transformed column t of a: entry i = rowsign * renamed code
          auto column_of_a = [&](int t) {
            std::vector<int> col(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
              int v = ca[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(t)];
              if (v != 0) {
                int idx = std::abs(v) - 1;
                int sgn = (v > 0 ? 1 : -1) * (((row_signs >> i) & 1) ? -1 : 1) *
                          (((sym_signs >> idx) & 1) ? -1 : 1);
                v = sgn * (rename[static_cast<std::size_t>(idx)] + 1);
              }
              col[static_cast<std::size_t>(i)] = v;
            }
            return col;
          };
          auto column_of_b = [&](int j) {
            std::vector<int> col(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = cb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            return col;
          };
          // bipartite match: each b-column to a distinct a-column, up to global sign
          std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
          std::vector<std::vector<int>> acols;
          for (int t = 0; t < n; ++t) acols.push_back(column_of_a(t));
          bool feasible = true;
          for (int j = 0; j < n && feasible; ++j) {
            std::vector<int> bj = column_of_b(j), bj_neg = bj;
            for (int& x : bj_neg) x = -x;
            for (int t = 0; t < n; ++t)
              if (acols[static_cast<std::size_t>(t)] == bj || acols[static_cast<std::size_t>(t)] == bj_neg)
                candidates[static_cast<std::size_t>(j)].push_back(t);
            if (candidates[static_cast<std::size_t>(j)].empty()) feasible = false;
          }
          if (!feasible) continue;
          std::vector<int> match(static_cast<std::size_t>(n), -1);
          std::vector<char> used(static_cast<std::size_t>(n), 0);
          std::function<bool(int)> place = [&](int j) {
            if (j == n) return true;
            for (int t : candidates[static_cast<std::size_t>(j)]) {
              if (used[static_cast<std::size_t>(t)]) continue;
              used[static_cast<std::size_t>(t)] = 1;
              match[static_cast<std::size_t>(j)] = t;
              if (place(j + 1)) return true;
              used[static_cast<std::size_t>(t)] = 0;
            }
            return false;
          };
          if (place(0)) return true;
        }
      } while (std::next_permutation(rename.begin(), rename.end()));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Substitutes pairwise-amicable random blocks (1x1 scalars on odd trials,
/// symmetric circulants on even trials) into a formally symmetric product
/// pair and confirms the substituted A B^T is a symmetric integer matrix.
/// Arbitrary independent blocks do not preserve symmetry; amicable families
/// are exactly the blocks this construction is for.
inline bool amicability_transfer_check(const FormalMatrix& a, const FormalMatrix& b, int trials,
                                       std::uint64_t seed = default_seed) {
  std::vector<Symbol> syms = symbols_of(a);
  for (const Symbol& s : symbols_of(b)) syms.push_back(s);
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::map<Symbol, IntMatrix> blocks;
    if (t % 2 == 0) {
      blocks = detail::random_blocks(syms, 1, 1, rng);
    } else {
      int n = static_cast<int>(rng.int_in(2, 3));
      for (const Symbol& s : syms) blocks.emplace(s, detail::random_symmetric_circulant(n, rng));
    }
    IntMatrix as = substitute(a, blocks);
    IntMatrix bs = substitute(b, blocks);
    IntMatrix prod = as * bs.transpose();
    if (!(prod == prod.transpose())) return false;
  }
  return true;
}

}  // namespace fop
