#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "diracgap/types.hpp"

namespace diracgap {

/// Bounded hermitian 4x4 matrix potential V(x), x in R^3.
/// Hermiticity is guaranteed by construction; the gradient rule is optional
/// (used by the long-range classifier when available).
class PotentialModel {
 public:
  using EvalFn = std::function<Eigen::Matrix4cd(double, double, double)>;
  using GradFn = std::function<std::array<Eigen::Matrix4cd, 3>(double, double, double)>;

  PotentialModel() : family_("zero") {
    eval_ = [](double, double, double) { return Eigen::Matrix4cd::Zero().eval(); };
  }
  PotentialModel(std::string family, EvalFn eval, std::optional<GradFn> grad = std::nullopt)
      : family_(std::move(family)), eval_(std::move(eval)), grad_(std::move(grad)) {}

  Eigen::Matrix4cd operator()(double x1, double x2, double x3) const {
    return eval_(x1, x2, x3);
  }
  bool has_gradient() const { return grad_.has_value(); }
  std::array<Eigen::Matrix4cd, 3> gradient(double x1, double x2, double x3) const {
    if (grad_) return (*grad_)(x1, x2, x3);
    // central differences as fallback
    const double h = 1e-5;
    std::array<Eigen::Matrix4cd, 3> g;
    g[0] = (eval_(x1 + h, x2, x3) - eval_(x1 - h, x2, x3)) / (2 * h);
    g[1] = (eval_(x1, x2 + h, x3) - eval_(x1, x2 - h, x3)) / (2 * h);
    g[2] = (eval_(x1, x2, x3 + h) - eval_(x1, x2, x3 - h)) / (2 * h);
    return g;
  }
  const std::string& family() const { return family_; }
  bool is_zero() const { return family_ == "zero"; }

 private:
  std::string family_;
  EvalFn eval_;
  std::optional<GradFn> grad_;
};

struct PotentialSpec {
  std::string family;  // zero | scalar_gaussian | power_law | diagonal | matrix
  double v0 = 0.0;     // strength (scalar_gaussian, power_law amplitude)
  double width = 1.0;  // gaussian width
  double p = 2.0;      // power-law exponent: <x3>^-p
  std::array<double, 4> diag{0, 0, 0, 0};
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();  // user matrix (family "matrix")
};

/// Builds an evaluable PotentialModel. User matrices are hermitian-symmetrized
/// when the defect is round-off sized and rejected otherwise.
inline PotentialModel make_potential(const PotentialSpec& spec) {
  const Eigen::Matrix4cd id4 = Eigen::Matrix4cd::Identity();
  if (spec.family == "zero") return PotentialModel();
  if (spec.family == "scalar_gaussian") {
    const double v0 = spec.v0, w2 = spec.width * spec.width;
    auto eval = [v0, w2, id4](double x1, double x2, double x3) {
      return (v0 * std::exp(-(x1 * x1 + x2 * x2 + x3 * x3) / w2) * id4).eval();
    };
    auto grad = [v0, w2, id4](double x1, double x2, double x3) {
      const double g = v0 * std::exp(-(x1 * x1 + x2 * x2 + x3 * x3) / w2);
      std::array<Eigen::Matrix4cd, 3> out;
      out[0] = (-2 * x1 / w2) * g * id4;
      out[1] = (-2 * x2 / w2) * g * id4;
      out[2] = (-2 * x3 / w2) * g * id4;
      return out;
    };
    return PotentialModel("scalar_gaussian", eval, grad);
  }
  if (spec.family == "power_law") {
    // <x3>^-p * I4, decay along the field direction only
    const double p = spec.p, v0 = (spec.v0 == 0.0 ? 1.0 : spec.v0);
    auto eval = [p, v0, id4](double, double, double x3) {
      return (v0 * std::pow(angle_bracket(x3), -p) * id4).eval();
    };
    auto grad = [p, v0, id4](double, double, double x3) {
      std::array<Eigen::Matrix4cd, 3> out;
      out[0] = Eigen::Matrix4cd::Zero();
      out[1] = Eigen::Matrix4cd::Zero();
      const double b = angle_bracket(x3);
      out[2] = (v0 * -p * x3 * std::pow(b, -p - 2)) * id4;
      return out;
    };
    return PotentialModel("power_law", eval, grad);
  }
  if (spec.family == "diagonal") {
    Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i) d(i, i) = spec.diag[i];
    const double w2 = spec.width * spec.width;
    const bool gaussian_envelope = spec.v0 != 0.0;  // v0 scales a gaussian envelope
    const double v0 = spec.v0;
    auto eval = [d, gaussian_envelope, v0, w2](double x1, double x2, double x3) {
      if (!gaussian_envelope) return d.eval();
      return (v0 * std::exp(-(x1 * x1 + x2 * x2 + x3 * x3) / w2) * d).eval();
    };
    return PotentialModel("diagonal", eval);
  }
  if (spec.family == "matrix") {
    const double defect = (spec.matrix - spec.matrix.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-12)
      throw DomainError("make_potential: user matrix is not hermitian (defect " +
                        std::to_string(defect) + ")");
    const Eigen::Matrix4cd m = 0.5 * (spec.matrix + spec.matrix.adjoint().eval());
    const double v0 = (spec.v0 == 0.0 ? 1.0 : spec.v0), w2 = spec.width * spec.width;
    auto eval = [m, v0, w2](double x1, double x2, double x3) {
      return (v0 * std::exp(-(x1 * x1 + x2 * x2 + x3 * x3) / w2) * m).eval();
    };
    return PotentialModel("matrix", eval);
  }
  throw DomainError("make_potential: unknown family '" + spec.family + "'");
}

}  // namespace diracgap
