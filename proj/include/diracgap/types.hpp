#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace diracgap {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Mat = Eigen::MatrixXcd;
using SpMat = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<Complex>;

inline constexpr const char* kVersion = "0.1.0";

// error taxonomy: every failure carries a message naming the offending input
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct DomainError : Error {
  using Error::Error;
};
struct QuadratureError : Error {
  double best_estimate;
  double achieved_tol;
  QuadratureError(const std::string& msg, double best, double achieved)
      : Error(msg), best_estimate(best), achieved_tol(achieved) {}
};
struct AssemblyError : Error {
  using Error::Error;
};
struct SolveError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  std::string path;  // config field path, e.g. "backend.n_osc"
  ConfigError(const std::string& msg, std::string field_path = "")
      : Error(msg), path(std::move(field_path)) {}
};

inline double sq(double x) { return x * x; }

// <x> = sqrt(1 + x^2)
inline double angle_bracket(double x) { return std::sqrt(1.0 + x * x); }

}  // namespace diracgap
