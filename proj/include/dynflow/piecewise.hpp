#pragma once

#include <map>
#include <vector>

#include "dynflow/rational.hpp"

namespace dynflow {

/// Right-continuous step function on [lo, hi). Piece i holds values()[i] on
/// [breakpoints()[i], breakpoints()[i+1]), the last piece runs to hi. The
/// representation is kept canonical: adjacent pieces always differ.
class PiecewiseConstantFn {
 public:
  struct Piece {
    Rational lo, hi, value;
  };

  PiecewiseConstantFn();
  /// Throws std::invalid_argument unless breakpoints are strictly increasing,
  /// start at lo, stay below hi and match values in length.
  PiecewiseConstantFn(Rational lo, Rational hi, std::vector<Rational> breakpoints,
                      std::vector<Rational> values);

  static PiecewiseConstantFn constant(Rational lo, Rational hi, Rational value);

  const Rational& domain_lo() const { return lo_; }
  const Rational& domain_hi() const { return hi_; }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::vector<Piece> pieces() const;

  bool contains(const Rational& t) const { return lo_ <= t && t < hi_; }
  bool is_constant() const { return values_.size() == 1; }
  const Rational& first_value() const { return values_.front(); }
  const Rational& last_value() const { return values_.back(); }
  Rational min_value() const;
  Rational max_value() const;

  /// Value of the piece containing t, or out_of_domain outside [lo, hi).
  Rational eval(const Rational& t, const Rational& out_of_domain) const;
  /// Index of the piece containing t; requires contains(t).
  std::size_t piece_index(const Rational& t) const;

  /// Exact integral over [a, b], treating the outside of the domain as 0.
  /// Throws std::invalid_argument when a > b.
  Rational integrate(const Rational& a, const Rational& b) const;

  /// Same function on a wider domain: the first value is continued to the
  /// left, the last to the right.
  PiecewiseConstantFn extended(const Rational& new_lo,
                               const Rational& new_hi) const;
  /// Restriction to [a, b) intersected with the domain. Requires overlap.
  PiecewiseConstantFn restricted(const Rational& a, const Rational& b) const;
  /// g(r*x + shift) = f(x); requires r > 0.
  PiecewiseConstantFn time_affine(const Rational& r,
                                  const Rational& shift) const;
  PiecewiseConstantFn scaled(const Rational& c) const;

  /// Number of value changes inside the domain.
  std::size_t count_changes() const { return breaks_.size() - 1; }
  /// Value changes at breakpoints p with a <= p < b (p > domain_lo).
  std::size_t count_changes(const Rational& a, const Rational& b) const;
  /// Breakpoints (excluding domain_lo) where the value changes.
  std::vector<Rational> change_points() const;

  friend bool operator==(const PiecewiseConstantFn&,
                         const PiecewiseConstantFn&) = default;

 private:
  void canonicalize();

  Rational lo_, hi_;
  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

PiecewiseConstantFn operator+(const PiecewiseConstantFn& f,
                              const PiecewiseConstantFn& g);

/// Accumulates "add v on [a, b)" contributions and produces a step function on
/// a fixed domain. Contributions are clipped to the domain.
class StepAccumulator {
 public:
  StepAccumulator(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  void add(const Rational& a, const Rational& b, const Rational& v);
  PiecewiseConstantFn build() const;

 private:
  Rational lo_, hi_;
  std::map<Rational, Rational> delta_;
};

/// Sorted union of all breakpoints of the given functions, clipped to [lo, hi)
/// and always containing lo.
std::vector<Rational> refine(const Rational& lo, const Rational& hi,
                             std::initializer_list<const PiecewiseConstantFn*> fns);

}  // namespace dynflow
