#ifndef CVSTEER_ANALYTIC_HPP
#define CVSTEER_ANALYTIC_HPP

#include "cvsteer/fock.hpp"

namespace cvsteer {

// Averaged parity certainty at mirrored displacements for a coherent state.
// in_validity_region uses the default region (|beta| >= 0.05 or mean photon
// number gamma^2 >= 1); the closed forms themselves are total functions and
// the flag is metadata, not a gate.
struct CertaintyValue {
  double value = 0.0;
  Parity parity = Parity::even;
  double gamma = 0.0;
  double beta = 0.0;
  bool in_validity_region = true;
};

// P(even at beta) for coherent |gamma>: (1 + exp(-2(gamma-beta)^2))/2.
double analytic_even_parity_prob(double gamma, double beta);

// P(odd at beta) for coherent |gamma>: (1 - exp(-2(gamma-beta)^2))/2.
double analytic_odd_parity_prob(double gamma, double beta);

// 0.5 [p(gamma, beta) + p(gamma, -beta)] with the matching closed form.
CertaintyValue analytic_average_certainty(double gamma, double beta, Parity parity);

}  // namespace cvsteer

#endif
