#pragma once

// Exhaustive search for exact solutions of n q^2 = p^2, the continued
// fraction of sqrt(n), its convergents, and bounded-defect near-solutions.

#include "core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tennenbaum {

/// All (p,q), 1 <= q <= q_max, with n q^2 = p^2. Empty for non-square n.
inline std::vector<Candidate> find_exact(const Radicand& n, const Integer& q_max) {
  if (q_max < 1) throw precondition_error("find_exact requires q_max >= 1");
  std::vector<Candidate> out;
  for (Integer q = 1; q <= q_max; ++q) {
    const Integer target = n.value() * q * q;
    Integer p = isqrt(target);
    if (p * p == target) out.push_back(Candidate{std::move(p), q});
  }
  return out;
}

/// State (m, d, a) of the periodic expansion sqrt(n) = [a0; a1, a2, ...],
/// with d | n - m^2.
struct CFState {
  Integer m;
  Integer d;
  Integer a;

  friend bool operator==(const CFState&, const CFState&) = default;
};

inline void require_non_square(const Radicand& n, const char* what) {
  if (n.is_square())
    throw precondition_error(std::string(what) + " requires a non-square n, got " + to_string(n.value()));
}

inline CFState cf_start(const Radicand& n) { return CFState{0, 1, n.sqrt_floor()}; }

inline CFState cf_next(const Radicand& n, const CFState& s) {
  CFState next;
  next.m = s.d * s.a - s.m;
  next.d = (n.value() - next.m * next.m) / s.d;
  next.a = (n.sqrt_floor() + next.m) / next.d;
  return next;
}

inline std::vector<CFState> cf_states(const Radicand& n, std::size_t count) {
  require_non_square(n, "continued fraction");
  std::vector<CFState> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(cf_start(n));
  while (out.size() < count) out.push_back(cf_next(n, out.back()));
  return out;
}

/// First `count` partial quotients a0, a1, ...
inline std::vector<Integer> cf_expansion(const Radicand& n, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (auto& s : cf_states(n, count)) out.push_back(std::move(s.a));
  return out;
}

/// First `count` convergents h_k / k_k, starting from (a0, 1).
inline std::vector<Candidate> convergents(const Radicand& n, std::size_t count) {
  std::vector<Candidate> out;
  out.reserve(count);
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  for (const Integer& a : cf_expansion(n, count)) {
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    h_prev2 = std::exchange(h_prev, h);
    k_prev2 = std::exchange(k_prev, k);
    out.push_back(Candidate{std::move(h), std::move(k)});
  }
  return out;
}

struct NearSolution {
  Candidate candidate;
  Defect defect;
};

/// Every (p,q) with 1 <= q <= q_max, q < p <= nq and |n q^2 - p^2| <= bound,
/// sorted by q then p. For each q only p in [ceil_sqrt(nq^2 - bound),
/// isqrt(nq^2 + bound)] can qualify, so scanning that window is complete.
inline std::vector<NearSolution> near_solutions(const Radicand& n, const Integer& q_max,
                                                const Integer& defect_bound) {
  require_non_square(n, "near_solutions");
  if (defect_bound < 0) throw precondition_error("near_solutions requires defect_bound >= 0");
  std::vector<NearSolution> out;
  for (Integer q = 1; q <= q_max; ++q) {
    const Integer target = n.value() * q * q;
    Integer lo = target > defect_bound ? ceil_sqrt(target - defect_bound) : Integer(0);
    Integer hi = isqrt(target + defect_bound);
    if (lo <= q) lo = q + 1;
    if (hi > n.value() * q) hi = n.value() * q;
    for (Integer p = lo; p <= hi; ++p) {
      out.push_back(NearSolution{Candidate{p, q}, Defect{target - p * p}});
    }
  }
  return out;
}

}  // namespace tennenbaum
