#pragma once

// Descent maps (p,q) -> (nq-p, p-q) and its halved form, orbits, and the
// certificate that decides when the descent argument proves sqrt(n) irrational.

#include "core.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tennenbaum {

enum class MapVariant { Full, Halved };

inline std::string_view to_string(MapVariant v) { return v == MapVariant::Full ? "full" : "halved"; }

/// Candidate is outside the map's range q <= p < nq (or q < 1).
class range_violation : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// Halved map requested where parity does not guarantee integrality.
class parity_violation : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

namespace detail {

// q = p is admitted so a chain can land on the terminal q = 0.
inline void check_range(const Radicand& n, const Candidate& c) {
  if (c.q < 1) throw range_violation("requires q >= 1, got q = " + to_string(c.q));
  if (c.p < c.q)
    throw range_violation("requires q <= p < n·q, but p = " + to_string(c.p) + " < q = " + to_string(c.q));
  if (c.p >= n.value() * c.q)
    throw range_violation("requires q <= p < n·q, but p = " + to_string(c.p) +
                          " >= n·q = " + to_string(Integer(n.value() * c.q)));
}

}  // namespace detail

/// (p,q) -> (nq - p, p - q).
inline Candidate full_map(const Radicand& n, const Candidate& c) {
  detail::check_range(n, c);
  return Candidate{n.value() * c.q - c.p, c.p - c.q};
}

/// (p,q) -> ((nq - p)/2, (p - q)/2). Needs n odd and p = q (mod 2).
inline Candidate halved_map(const Radicand& n, const Candidate& c) {
  if (!n.is_odd())
    throw parity_violation("halved map requires odd n, got n = " + to_string(n.value()));
  if (boost::multiprecision::bit_test(c.p, 0) != boost::multiprecision::bit_test(c.q, 0))
    throw parity_violation("halved map requires p ≡ q (mod 2), got " + to_string(c));
  detail::check_range(n, c);
  return Candidate{(n.value() * c.q - c.p) / 2, (c.p - c.q) / 2};
}

inline Candidate apply_map(MapVariant v, const Radicand& n, const Candidate& c) {
  return v == MapVariant::Full ? full_map(n, c) : halved_map(n, c);
}

struct DescentStep {
  Candidate before;
  Candidate after;
  MapVariant variant;
  Defect defect_before;
  Defect defect_after;
};

struct Unsupported {
  std::string reason;
};

using VariantChoice = std::variant<MapVariant, Unsupported>;

/// n(n-4): negative iff the full map shrinks p for an exact solution.
inline Integer full_decrease_value(const Radicand& n) { return n.value() * (n.value() - 4); }
/// n(n-9): negative iff the halved map shrinks p for an exact solution.
inline Integer halved_decrease_value(const Radicand& n) { return n.value() * (n.value() - 9); }

/// Picks the descent map that works for n. For n = 3 both work; Halved wins.
inline VariantChoice variant_for(const Radicand& n) {
  if (n.is_square()) return Unsupported{"exact solutions exist (perfect square)"};
  const Integer full = full_decrease_value(n);
  const Integer halved = halved_decrease_value(n);
  if (n.is_odd() && halved < 0) return MapVariant::Halved;
  if (full < 0) return MapVariant::Full;

  const std::string ns = to_string(n.value());
  std::string reason = ns + "·(" + ns + "−4) = " + to_string(full) + " ≥ 0";
  if (n.is_odd())
    reason += "; " + ns + "·(" + ns + "−9) = " + to_string(halved) + " ≥ 0";
  else
    reason += "; parity not guaranteed for even n";
  return Unsupported{std::move(reason)};
}

struct StopReason {
  enum class Kind { QReachedZero, PreconditionFailed, FixedPoint, MaxSteps };
  Kind kind;
  std::string description;  // set for PreconditionFailed
};

inline std::string to_string(const StopReason& r) {
  switch (r.kind) {
    case StopReason::Kind::QReachedZero: return "q reached zero";
    case StopReason::Kind::PreconditionFailed: return "precondition failed: " + r.description;
    case StopReason::Kind::FixedPoint: return "fixed point";
    case StopReason::Kind::MaxSteps: return "max steps reached";
  }
  return {};
}

struct Orbit {
  Radicand n;
  std::vector<DescentStep> steps;
  StopReason stop;

  /// Last candidate reached (the start when no step was taken).
  Candidate final_candidate(const Candidate& start) const {
    return steps.empty() ? start : steps.back().after;
  }
};

/// Iterates the chosen map from c. Never steps past a failed precondition.
inline Orbit orbit(const Radicand& n, const Candidate& c, MapVariant variant, std::size_t max_steps) {
  Orbit out{n, {}, {StopReason::Kind::MaxSteps, {}}};
  if (c.q == 0) {
    out.stop = {StopReason::Kind::QReachedZero, {}};
    return out;
  }
  Candidate current = c;
  Defect current_defect = defect(n, current);
  while (out.steps.size() < max_steps) {
    Candidate next;
    try {
      next = apply_map(variant, n, current);
    } catch (const precondition_error& e) {
      out.stop = {StopReason::Kind::PreconditionFailed, e.what()};
      return out;
    }
    Defect next_defect = defect(n, next);
    out.steps.push_back({current, next, variant, current_defect, next_defect});
    if (next == current) {
      out.stop = {StopReason::Kind::FixedPoint, {}};
      return out;
    }
    if (next.q == 0) {
      out.stop = {StopReason::Kind::QReachedZero, {}};
      return out;
    }
    current = std::move(next);
    current_defect = std::move(next_defect);
  }
  return out;
}

struct Certificate {
  enum class Conclusion { IrrationalByDescent, MethodInapplicable };

  Radicand n;
  MapVariant variant;              // the map whose inequality was checked
  bool parity_lemma_holds;         // n*q^2 = p^2 forces p = q (mod 2)
  Integer decrease_value;          // n(n-4) for Full, n(n-9) for Halved
  bool decrease_inequality_holds;  // decrease_value < 0
  Conclusion conclusion;
  std::string reason;
  std::optional<Candidate> witness;  // (k,1) when n = k^2
};

/// Checks p = q (mod 2) over all residue pairs solving n*q^2 = p^2 (mod 2).
inline bool parity_lemma(const Radicand& n) {
  const int nr = n.is_odd() ? 1 : 0;
  for (int pr = 0; pr < 2; ++pr) {
    for (int qr = 0; qr < 2; ++qr) {
      const bool solves = (nr * qr * qr - pr * pr) % 2 == 0;
      if (solves && pr != qr) return false;
    }
  }
  return true;
}

inline Certificate prove_irrational(const Radicand& n) {
  using C = Certificate::Conclusion;
  const bool parity = parity_lemma(n);
  const VariantChoice choice = variant_for(n);
  const MapVariant checked = std::holds_alternative<MapVariant>(choice)
                                 ? std::get<MapVariant>(choice)
                                 : (n.is_odd() ? MapVariant::Halved : MapVariant::Full);
  const Integer value = checked == MapVariant::Full ? full_decrease_value(n) : halved_decrease_value(n);
  const bool decreases = value < 0;

  Certificate cert{n, checked, parity, value, decreases, C::MethodInapplicable, {}, std::nullopt};
  if (n.is_square()) {
    cert.reason = "perfect square";
    cert.witness = Candidate{n.sqrt_floor(), 1};
    return cert;
  }
  if (decreases && (checked == MapVariant::Full || parity)) {
    cert.conclusion = C::IrrationalByDescent;
    cert.reason = "descent strictly decreases p";
  } else if (!decreases) {
    const std::string ns = to_string(n.value());
    cert.reason = ns + "·(" + ns + (checked == MapVariant::Full ? "−4" : "−9") + ") = " +
                  to_string(value) + " ≥ 0";
  } else {
    cert.reason = "parity lemma fails";
  }
  return cert;
}

/// One-line summary, e.g. "irrational by halved descent; 7·(7−9) = −14 < 0; parity lemma holds".
inline std::string to_string(const Certificate& c) {
  const std::string ns = to_string(c.n.value());
  const std::string shift = c.variant == MapVariant::Full ? "4" : "9";
  std::string value = c.decrease_value < 0 ? "−" + to_string(Integer(-c.decrease_value))
                                           : to_string(c.decrease_value);
  const std::string inequality = ns + "·(" + ns + "−" + shift + ") = " + value +
                                 (c.decrease_inequality_holds ? " < 0" : " ≥ 0");
  const std::string parity = c.parity_lemma_holds ? "parity lemma holds" : "parity lemma fails";
  if (c.conclusion == Certificate::Conclusion::IrrationalByDescent)
    return "irrational by " + std::string(to_string(c.variant)) + " descent; " + inequality + "; " + parity;
  if (c.witness)
    return "method inapplicable: perfect square; witness family (" + to_string(c.witness->p) +
           "·m, m), e.g. " + to_string(*c.witness);
  return "method inapplicable: " + inequality + "; " + parity;
}

}  // namespace tennenbaum
