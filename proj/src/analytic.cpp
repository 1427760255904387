#include "cvsteer/analytic.hpp"

#include <cmath>

namespace cvsteer {

double analytic_even_parity_prob(double gamma, double beta) {
  const double d2 = (gamma - beta) * (gamma - beta);
  return 0.5 * (1.0 + std::exp(-2.0 * d2));
}

double analytic_odd_parity_prob(double gamma, double beta) {
  const double d2 = (gamma - beta) * (gamma - beta);
  return 0.5 * (1.0 - std::exp(-2.0 * d2));
}

CertaintyValue analytic_average_certainty(double gamma, double beta, Parity parity) {
  auto p = (parity == Parity::even) ? analytic_even_parity_prob : analytic_odd_parity_prob;
  CertaintyValue c;
  c.value = 0.5 * (p(gamma, beta) + p(gamma, -beta));
  c.parity = parity;
  c.gamma = gamma;
  c.beta = beta;
  c.in_validity_region = std::abs(beta) >= 0.05 || gamma * gamma >= 1.0;
  return c;
}

}  // namespace cvsteer
