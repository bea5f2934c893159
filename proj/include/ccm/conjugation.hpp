#pragma once

#include <Eigen/Core>
#include <string>

namespace ccm {

// Sampled conjugation function h : [0,1] -> [0,1], strictly increasing with
// h(0) = 0 and h(1) = 1, stored as m+1 samples on the uniform grid i/m and
// evaluated by linear interpolation.
struct ConjugationFunction {
  int m = 0;                // number of grid intervals; samples has m+1 rows
  Eigen::VectorXd samples;  // s_0 .. s_m

  // Throws std::invalid_argument naming the first offending sample index.
  void validate() const;
};

// h(z) = z sampled on m intervals.
ConjugationFunction identity_conjugation(int m);

// Piecewise-linear evaluation; exact at the sample grid. Requires 0 <= z <= 1.
double eval_h(const ConjugationFunction& conj, double z);

// h evaluated at the encoder grid points k * 2^-q, k = 0 .. 2^q - 1.
Eigen::VectorXd conjugated_grid(const ConjugationFunction& conj, int q);

// Zero-mean constellation 2 * h(k * 2^-q) - 1 per grid state.
Eigen::VectorXd grid_levels(const ConjugationFunction& conj, int q);

// Text format: line 1 holds m, the next m+1 lines hold s_0 .. s_m.
ConjugationFunction load_conjugation(const std::string& path);
void save_conjugation(const ConjugationFunction& conj, const std::string& path);

}  // namespace ccm
