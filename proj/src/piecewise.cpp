#include "dynflow/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynflow {

PiecewiseConstantFn::PiecewiseConstantFn()
    : lo_(0), hi_(1), breaks_{Rational(0)}, values_{Rational(0)} {}

PiecewiseConstantFn::PiecewiseConstantFn(Rational lo, Rational hi,
                                         std::vector<Rational> breakpoints,
                                         std::vector<Rational> values)
    : lo_(std::move(lo)),
      hi_(std::move(hi)),
      breaks_(std::move(breakpoints)),
      values_(std::move(values)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("empty step-function domain");
  if (breaks_.empty() || breaks_.size() != values_.size())
    throw std::invalid_argument("breakpoints and values must match in length");
  if (breaks_.front() != lo_)
    throw std::invalid_argument("first breakpoint must equal the domain start");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i - 1] < breaks_[i]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  if (!(breaks_.back() < hi_))
    throw std::invalid_argument("breakpoint at or beyond the domain end");
  canonicalize();
}

PiecewiseConstantFn PiecewiseConstantFn::constant(Rational lo, Rational hi,
                                                  Rational value) {
  Rational b = lo;
  return PiecewiseConstantFn(std::move(lo), std::move(hi), {std::move(b)},
                             {std::move(value)});
}

void PiecewiseConstantFn::canonicalize() {
  std::size_t out = 1;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == values_[out - 1]) continue;
    breaks_[out] = breaks_[i];
    values_[out] = values_[i];
    ++out;
  }
  breaks_.resize(out);
  values_.resize(out);
}

std::vector<PiecewiseConstantFn::Piece> PiecewiseConstantFn::pieces() const {
  std::vector<Piece> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.push_back({breaks_[i], i + 1 < breaks_.size() ? breaks_[i + 1] : hi_,
                   values_[i]});
  return out;
}

Rational PiecewiseConstantFn::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}
Rational PiecewiseConstantFn::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

std::size_t PiecewiseConstantFn::piece_index(const Rational& t) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

Rational PiecewiseConstantFn::eval(const Rational& t,
                                   const Rational& out_of_domain) const {
  if (!contains(t)) return out_of_domain;
  return values_[piece_index(t)];
}

Rational PiecewiseConstantFn::integrate(const Rational& a,
                                        const Rational& b) const {
  if (b < a) throw std::invalid_argument("integration bounds reversed");
  Rational total = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Rational& plo = breaks_[i];
    const Rational& phi = i + 1 < breaks_.size() ? breaks_[i + 1] : hi_;
    const Rational l = max(plo, a);
    const Rational h = min(phi, b);
    if (l < h && !values_[i].is_zero()) total += values_[i] * (h - l);
  }
  return total;
}

PiecewiseConstantFn PiecewiseConstantFn::extended(const Rational& new_lo,
                                                  const Rational& new_hi) const {
  if (lo_ < new_lo || new_hi < hi_)
    throw std::invalid_argument("extension must contain the current domain");
  auto b = breaks_;
  b.front() = new_lo;
  return PiecewiseConstantFn(new_lo, new_hi, std::move(b), values_);
}

PiecewiseConstantFn PiecewiseConstantFn::restricted(const Rational& a,
                                                    const Rational& b) const {
  const Rational l = max(a, lo_);
  const Rational h = min(b, hi_);
  if (!(l < h)) throw std::invalid_argument("restriction outside the domain");
  std::vector<Rational> nb{l}, nv{values_[piece_index(l)]};
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (breaks_[i] <= l || h <= breaks_[i]) continue;
    nb.push_back(breaks_[i]);
    nv.push_back(values_[i]);
  }
  return PiecewiseConstantFn(l, h, std::move(nb), std::move(nv));
}

PiecewiseConstantFn PiecewiseConstantFn::time_affine(const Rational& r,
                                                     const Rational& shift) const {
  if (r.sign() <= 0) throw std::invalid_argument("time scale must be positive");
  std::vector<Rational> nb;
  nb.reserve(breaks_.size());
  for (const auto& b : breaks_) nb.push_back(r * b + shift);
  return PiecewiseConstantFn(r * lo_ + shift, r * hi_ + shift, std::move(nb),
                             values_);
}

PiecewiseConstantFn PiecewiseConstantFn::scaled(const Rational& c) const {
  std::vector<Rational> nv;
  nv.reserve(values_.size());
  for (const auto& v : values_) nv.push_back(v * c);
  return PiecewiseConstantFn(lo_, hi_, breaks_, std::move(nv));
}

std::size_t PiecewiseConstantFn::count_changes(const Rational& a,
                                               const Rational& b) const {
  std::size_t n = 0;
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (a <= breaks_[i] && breaks_[i] < b) ++n;
  return n;
}

std::vector<Rational> PiecewiseConstantFn::change_points() const {
  return {breaks_.begin() + 1, breaks_.end()};
}

PiecewiseConstantFn operator+(const PiecewiseConstantFn& f,
                              const PiecewiseConstantFn& g) {
  const Rational lo = min(f.domain_lo(), g.domain_lo());
  const Rational hi = max(f.domain_hi(), g.domain_hi());
  StepAccumulator acc(lo, hi);
  for (const auto* h : {&f, &g})
    for (const auto& p : h->pieces()) acc.add(p.lo, p.hi, p.value);
  return acc.build();
}

void StepAccumulator::add(const Rational& a, const Rational& b,
                          const Rational& v) {
  const Rational l = max(a, lo_);
  const Rational h = min(b, hi_);
  if (!(l < h) || v.is_zero()) return;
  delta_[l] += v;
  delta_[h] -= v;
}

PiecewiseConstantFn StepAccumulator::build() const {
  std::vector<Rational> b{lo_}, v{Rational(0)};
  Rational running = 0;
  for (const auto& [t, d] : delta_) {
    if (d.is_zero()) continue;
    running += d;
    if (!(t < hi_)) break;
    if (t == lo_) {
      v.front() = running;
    } else {
      b.push_back(t);
      v.push_back(running);
    }
  }
  return PiecewiseConstantFn(lo_, hi_, std::move(b), std::move(v));
}

std::vector<Rational> refine(const Rational& lo, const Rational& hi,
                             std::initializer_list<const PiecewiseConstantFn*> fns) {
  std::vector<Rational> pts{lo};
  for (const auto* f : fns)
    for (const auto& b : f->breakpoints())
      if (lo < b && b < hi) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace dynflow
