#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "fop/errors.hpp"

namespace fop {

/// A signed permutation on {0,...,n-1}: a bijection `image` together with a
/// sign attached to each source point. As a matrix it has exactly one
/// nonzero entry per row and column, placed at (image(i), i) with value
/// sign(i), i.e. it sends the basis vector e_i to sign(i) * e_image(i).
///
/// Plain permutations are signed permutations with all signs +1.
class SignedPerm {
 public:
  SignedPerm() = default;

  SignedPerm(std::vector<int> image, std::vector<std::int8_t> signs)
      : image_(std::move(image)), signs_(std::move(signs)) {
    if (image_.size() != signs_.size()) throw input_error("signed permutation: image/sign length mismatch");
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t i = 0; i < image_.size(); ++i) {
      int t = image_[i];
      if (t < 0 || static_cast<std::size_t>(t) >= image_.size() || seen[t])
        throw input_error("signed permutation: image is not a bijection");
      seen[t] = 1;
      if (signs_[i] != 1 && signs_[i] != -1) throw input_error("signed permutation: signs must be +1/-1");
    }
  }

  static SignedPerm identity(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
    return SignedPerm(std::move(img), std::vector<std::int8_t>(n, 1));
  }

  std::size_t size() const { return image_.size(); }
  int image(int i) const { return image_[static_cast<std::size_t>(i)]; }
  int sign(int i) const { return signs_[static_cast<std::size_t>(i)]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != static_cast<int>(i) || signs_[i] != 1) return false;
    return true;
  }

  bool is_plain() const {
    for (std::int8_t s : signs_)
      if (s != 1) return false;
    return true;
  }

  /// this . rhs: apply rhs first, then this.
  SignedPerm compose(const SignedPerm& rhs) const {
    if (size() != rhs.size()) throw input_error("signed permutation: domain size mismatch");
    std::vector<int> img(size());
    std::vector<std::int8_t> sg(size());
    for (std::size_t i = 0; i < size(); ++i) {
      int mid = rhs.image_[i];
      img[i] = image_[static_cast<std::size_t>(mid)];
      sg[i] = static_cast<std::int8_t>(rhs.signs_[i] * signs_[static_cast<std::size_t>(mid)]);
    }
    return SignedPerm(std::move(img), std::move(sg));
  }

  SignedPerm inverse() const {
    std::vector<int> img(size());
    std::vector<std::int8_t> sg(size());
    for (std::size_t i = 0; i < size(); ++i) {
      img[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
      sg[static_cast<std::size_t>(image_[i])] = signs_[i];
    }
    return SignedPerm(std::move(img), std::move(sg));
  }

  SignedPerm without_signs() const {
    return SignedPerm(image_, std::vector<std::int8_t>(size(), 1));
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.image_ == b.image_ && a.signs_ == b.signs_;
  }
  friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
    if (auto c = a.image_ <=> b.image_; c != 0) return c;
    return a.signs_ <=> b.signs_;
  }

  /// One-line notation plus sign vector, e.g. "1,2,0:++-".
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) os << ',';
      os << image_[i];
    }
    os << ':';
    for (std::size_t i = 0; i < size(); ++i) os << (signs_[i] > 0 ? '+' : '-');
    return os.str();
  }

  static SignedPerm parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw input_error("signed permutation literal needs ':': " + text);
    std::vector<int> img;
    {
      std::istringstream is(text.substr(0, colon));
      std::string tok;
      while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw input_error("signed permutation literal: empty image entry");
        img.push_back(std::atoi(tok.c_str()));
      }
    }
    std::vector<std::int8_t> sg;
    for (char c : text.substr(colon + 1)) {
      if (c == '+')
        sg.push_back(1);
      else if (c == '-')
        sg.push_back(-1);
      else
        throw input_error(std::string("signed permutation literal: bad sign char '") + c + "'");
    }
    return SignedPerm(std::move(img), std::move(sg));
  }

 private:
  std::vector<int> image_;
  std::vector<std::int8_t> signs_;
};

}  // namespace fop
