#pragma once

// Exact integer domain: radicands, candidates (p, q) and the defect n*q^2 - p^2.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tennenbaum {

using Integer = boost::multiprecision::cpp_int;

/// Thrown when an input violates an operation's precondition. The message
/// names the violated inequality.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a request would exceed a resource guard (e.g. grid size).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& v) { return v.str(); }

/// Parses a decimal integer with optional leading '-'. Rejects anything else.
inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  // cpp_int reads a leading 0 as octal
  std::size_t first = text.find_first_not_of('0', i);
  if (first == std::string_view::npos) return Integer(0);
  Integer v(std::string(text.substr(first)));
  return i == 1 ? Integer(-v) : v;
}

/// Greatest r with r*r <= v. Requires v >= 0.
inline Integer isqrt(const Integer& v) {
  if (v < 0) throw precondition_error("isqrt requires a non-negative argument");
  return boost::multiprecision::sqrt(v);
}

/// Smallest r with r*r >= v. Requires v >= 0.
inline Integer ceil_sqrt(const Integer& v) {
  Integer r = isqrt(v);
  if (r * r < v) ++r;
  return r;
}

/// The integer n under the radical, n >= 2.
class Radicand {
 public:
  const Integer& value() const { return n_; }
  const Integer& sqrt_floor() const { return root_; }
  bool is_square() const { return root_ * root_ == n_; }
  bool is_odd() const { return boost::multiprecision::bit_test(n_, 0); }

  friend bool operator==(const Radicand& a, const Radicand& b) { return a.n_ == b.n_; }

 private:
  friend Radicand classify(const Integer& n);
  Radicand(Integer n, Integer root) : n_(std::move(n)), root_(std::move(root)) {}

  Integer n_;
  Integer root_;
};

/// Builds a Radicand, computing floor(sqrt(n)). Rejects n < 2.
inline Radicand classify(const Integer& n) {
  if (n < 2) throw precondition_error("radicand requires n >= 2, got " + to_string(n));
  return Radicand(n, isqrt(n));
}

/// Side p of the big square and side q of each small square.
struct Candidate {
  Integer p;
  Integer q;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Candidate& c) {
  return os << '(' << c.p << ',' << c.q << ')';
}

inline std::string to_string(const Candidate& c) {
  return "(" + to_string(c.p) + "," + to_string(c.q) + ")";
}

/// n*q^2 - p^2; zero exactly when p/q would be sqrt(n).
struct Defect {
  Integer value;

  bool is_zero() const { return value == 0; }
  friend bool operator==(const Defect&, const Defect&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Defect& d) { return os << d.value; }

inline Defect defect(const Radicand& n, const Candidate& c) {
  return Defect{n.value() * c.q * c.q - c.p * c.p};
}

/// k(k+1)/2.
inline Integer triangular(const Integer& k) {
  if (k < 0) throw precondition_error("triangular requires k >= 0");
  return k * (k + 1) / 2;
}

}  // namespace tennenbaum
