#pragma once

#include <Eigen/Core>
#include <functional>

namespace mlpl {

struct NelderMeadOptions {
  int max_iterations = 500;
  double x_tolerance = 1e-8;   // max simplex vertex distance from the best vertex
  double f_tolerance = 1e-10;  // relative spread of objective values
  double initial_step = 0.05;  // relative (absolute when the coordinate is 0)
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free minimization with the standard reflection / expansion /
/// contraction / shrink coefficients (1, 2, 0.5, 0.5). The objective may return
/// +inf to reject infeasible points.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& start,
                             const NelderMeadOptions& opts = {});

}  // namespace mlpl
