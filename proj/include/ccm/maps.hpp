#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "ccm/conjugation.hpp"

namespace ccm {

// Chaotic piecewise-linear map family driving the encoder state.
enum class MapKind { bsm, mtm };

// Quantized chaotic encoder: 2^q states on the dyadic grid k * 2^-q, one
// information bit per step entering as a 2^-q perturbation.
struct CcmEncoder {
  int q = 5;
  MapKind map = MapKind::bsm;
  ConjugationFunction conj;
};

// One state transition, computed in exact integer arithmetic.
int encode_step(MapKind map, int q, int state, int bit);

// State-transition tables shared by encoder, decoder and bound. out[k][b] is
// the successor grid state; its conjugated value is the branch output.
struct Trellis {
  int q = 0;
  MapKind map = MapKind::bsm;
  Eigen::MatrixXi next;  // 2^q x 2
  Eigen::MatrixXi out;   // 2^q x 2, equal to next by construction
  std::vector<std::vector<std::pair<int, int>>> prev;  // prev[j] = {(state, bit)}

  int n_states() const { return 1 << q; }
};

Trellis build_trellis(const CcmEncoder& encoder);

struct SymbolSequence {
  Eigen::ArrayXi z;  // grid states
  Eigen::ArrayXd s;  // conjugated samples h(z * 2^-q) in [0,1]
  Eigen::ArrayXd x;  // zero-mean samples 2s - 1 in [-1,1]
};

SymbolSequence encode_block(const CcmEncoder& encoder, const std::vector<int>& bits,
                            int initial_state);

// Appends q zero tail bits; the decoder restricts the tail stages to
// zero-input branches.
std::vector<int> terminate_block(const CcmEncoder& encoder, std::vector<int> bits);

struct StationaryStats {
  Eigen::VectorXd dist;  // stationary state distribution under equiprobable bits
  double p = 0.0;        // signal power E[x^2] for the encoder's h
};

// Stationary law of the 2^q-state chain and the induced signal power.
StationaryStats stationary_distribution(const CcmEncoder& encoder);

// Power under a given stationary distribution and constellation.
double signal_power(const Eigen::VectorXd& dist, const Eigen::VectorXd& levels);

}  // namespace ccm
