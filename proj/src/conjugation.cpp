#include "ccm/conjugation.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ccm {

void ConjugationFunction::validate() const {
  if (m < 1) throw std::invalid_argument("conjugation: grid count m must be >= 1");
  if (samples.size() != m + 1) {
    throw std::invalid_argument("conjugation: expected " + std::to_string(m + 1) +
                                " samples, got " + std::to_string(samples.size()));
  }
  if (samples(0) != 0.0)
    throw std::invalid_argument("conjugation: sample 0 must be exactly 0");
  if (samples(m) != 1.0)
    throw std::invalid_argument("conjugation: sample " + std::to_string(m) +
                                " must be exactly 1");
  for (int i = 0; i < m; ++i) {
    if (!std::isfinite(samples(i + 1)))
      throw std::invalid_argument("conjugation: sample " + std::to_string(i + 1) +
                                  " is not finite");
    if (!(samples(i) < samples(i + 1)))
      throw std::invalid_argument("conjugation: sample " + std::to_string(i + 1) +
                                  " does not strictly increase");
  }
  for (int i = 1; i < m; ++i) {
    if (samples(i) <= 0.0 || samples(i) >= 1.0)
      throw std::invalid_argument("conjugation: sample " + std::to_string(i) +
                                  " lies outside the open interval (0,1)");
  }
}

ConjugationFunction identity_conjugation(int m) {
  ConjugationFunction conj;
  conj.m = m;
  conj.samples = Eigen::VectorXd::LinSpaced(m + 1, 0.0, 1.0);
  conj.samples(0) = 0.0;
  conj.samples(m) = 1.0;
  return conj;
}

double eval_h(const ConjugationFunction& conj, double z) {
  if (!(z >= 0.0 && z <= 1.0))
    throw std::invalid_argument("eval_h: argument outside [0,1]");
  const double pos = z * conj.m;
  int i = static_cast<int>(pos);
  if (i >= conj.m) return conj.samples(conj.m);
  const double t = pos - i;
  return conj.samples(i) + t * (conj.samples(i + 1) - conj.samples(i));
}

Eigen::VectorXd conjugated_grid(const ConjugationFunction& conj, int q) {
  const int n = 1 << q;
  Eigen::VectorXd out(n);
  const double step = 1.0 / n;
  for (int k = 0; k < n; ++k) out(k) = eval_h(conj, k * step);
  return out;
}

Eigen::VectorXd grid_levels(const ConjugationFunction& conj, int q) {
  return 2.0 * conjugated_grid(conj, q).array() - 1.0;
}

ConjugationFunction load_conjugation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("conjugation: cannot open " + path);
  ConjugationFunction conj;
  if (!(in >> conj.m)) throw std::runtime_error("conjugation: bad grid count in " + path);
  if (conj.m < 1) throw std::runtime_error("conjugation: grid count must be >= 1 in " + path);
  conj.samples.resize(conj.m + 1);
  for (int i = 0; i <= conj.m; ++i) {
    if (!(in >> conj.samples(i)))
      throw std::runtime_error("conjugation: missing sample " + std::to_string(i) +
                               " in " + path);
  }
  conj.validate();
  return conj;
}

void save_conjugation(const ConjugationFunction& conj, const std::string& path) {
  conj.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("conjugation: cannot write " + path);
  out << conj.m << '\n';
  out << std::setprecision(17);
  for (int i = 0; i <= conj.m; ++i) out << conj.samples(i) << '\n';
  if (!out) throw std::runtime_error("conjugation: write failed for " + path);
}

}  // namespace ccm
