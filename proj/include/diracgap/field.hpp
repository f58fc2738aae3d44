#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "diracgap/types.hpp"

namespace diracgap {

/// Magnetic field profile B(x1,x2) pointing along e3, plus the particle mass.
/// Profiles are immutable after construction; evaluation is pure.
class FieldModel {
 public:
  struct Constant {
    double b0;
  };
  struct Periodic {
    double amplitude;
    double k1, k2;  // wave vector
  };
  struct Polynomial {
    // coefficient list for monomials x1^i x2^j with i+j <= degree,
    // ordered (i,j) = (0,0),(1,0),(0,1),(2,0),(1,1),(0,2),...
    std::vector<double> coeffs;
    int degree;
  };
  struct Sampled {
    int n1, n2;
    double L1, L2;
    std::vector<double> values;  // row-major [i1*n2 + i2], box [-L,L]^2
  };
  using Profile = std::variant<Constant, Periodic, Polynomial, Sampled>;

  FieldModel(Profile profile, double mass)
      : profile_(std::move(profile)), mass_(mass) {
    if (!(mass > 0.0)) throw DomainError("FieldModel: mass must be strictly positive");
    if (auto* p = std::get_if<Polynomial>(&profile_)) {
      const size_t want = static_cast<size_t>((p->degree + 1) * (p->degree + 2) / 2);
      if (p->coeffs.size() != want)
        throw DomainError("FieldModel: polynomial coefficient count does not match degree");
    }
    if (auto* s = std::get_if<Sampled>(&profile_)) {
      if (s->n1 < 2 || s->n2 < 2 || s->values.size() != static_cast<size_t>(s->n1) * s->n2)
        throw DomainError("FieldModel: sampled profile dimensions inconsistent");
    }
  }

  double mass() const { return mass_; }
  const Profile& profile() const { return profile_; }

  bool is_constant() const { return std::holds_alternative<Constant>(profile_); }
  double constant_value() const { return std::get<Constant>(profile_).b0; }

  double operator()(double x1, double x2) const {
    if (auto* c = std::get_if<Constant>(&profile_)) return c->b0;
    if (auto* p = std::get_if<Periodic>(&profile_))
      return p->amplitude * std::cos(p->k1 * x1 + p->k2 * x2);
    if (auto* p = std::get_if<Polynomial>(&profile_)) {
      double acc = 0.0;
      size_t idx = 0;
      for (int d = 0; d <= p->degree; ++d)
        for (int i = d; i >= 0; --i)
          acc += p->coeffs[idx++] * std::pow(x1, i) * std::pow(x2, d - i);
      return acc;
    }
    const auto& s = std::get<Sampled>(profile_);
    // bilinear interpolation, clamped to the sample box
    const double h1 = 2 * s.L1 / (s.n1 - 1), h2 = 2 * s.L2 / (s.n2 - 1);
    double u = std::clamp((x1 + s.L1) / h1, 0.0, double(s.n1 - 1));
    double v = std::clamp((x2 + s.L2) / h2, 0.0, double(s.n2 - 1));
    int i = std::min(int(u), s.n1 - 2), j = std::min(int(v), s.n2 - 2);
    double fu = u - i, fv = v - j;
    auto at = [&](int a, int b) { return s.values[a * s.n2 + b]; };
    return (1 - fu) * (1 - fv) * at(i, j) + fu * (1 - fv) * at(i + 1, j) +
           (1 - fu) * fv * at(i, j + 1) + fu * fv * at(i + 1, j + 1);
  }

 private:
  Profile profile_;
  double mass_;
};

namespace detail {

// adaptive Simpson with bounded refinement depth
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
    if (depth <= 0 && std::abs(delta) > 15.0 * tol)
      throw QuadratureError("adaptive_simpson: refinement limit reached",
                            left + right + delta / 15.0, std::abs(delta) / 15.0);
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 40) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace detail

/// a(x) = (-x2, x1) * int_0^1 s B(s x) ds, the radial-line-integral gauge
/// reproducing B = d1 a2 - d2 a1. For constant B0 this is (-B0 x2/2, B0 x1/2).
inline std::pair<double, double> transversal_gauge(const FieldModel& field, double x1, double x2,
                                                   double tol = 1e-10) {
  const double g = detail::integrate(
      [&](double s) { return s * field(s * x1, s * x2); }, 0.0, 1.0, tol);
  return {-x2 * g, x1 * g};
}

/// Vector potential (a1, a2, 0) for a field model; a3 = 0 identically.
class GaugePotential {
 public:
  explicit GaugePotential(FieldModel field, double quad_tol = 1e-10)
      : field_(std::move(field)), quad_tol_(quad_tol) {}

  std::pair<double, double> operator()(double x1, double x2) const {
    return transversal_gauge(field_, x1, x2, quad_tol_);
  }
  const FieldModel& field() const { return field_; }
  double quad_tol() const { return quad_tol_; }

 private:
  FieldModel field_;
  double quad_tol_;
};

/// max over points of |D1 a2 - D2 a1 - B| with central differences of step h
inline double gauge_curl_residual(const GaugePotential& gauge,
                                  const std::vector<std::pair<double, double>>& points,
                                  double h) {
  if (!(h > 0)) throw DomainError("gauge_curl_residual: step must be positive");
  double worst = 0.0;
  for (auto [x1, x2] : points) {
    const double d1a2 = (gauge(x1 + h, x2).second - gauge(x1 - h, x2).second) / (2 * h);
    const double d2a1 = (gauge(x1, x2 + h).first - gauge(x1, x2 - h).first) / (2 * h);
    worst = std::max(worst, std::abs(d1a2 - d2a1 - gauge.field()(x1, x2)));
  }
  return worst;
}

/// C^1 cutoff ramp: 0 for t <= 1, 1 for t >= 2, smoothstep in between.
inline double cutoff_theta(double t) {
  if (t < 0) throw DomainError("cutoff_theta: argument must be nonnegative");
  const double u = std::clamp(t - 1.0, 0.0, 1.0);
  return u * u * (3.0 - 2.0 * u);
}

}  // namespace diracgap
