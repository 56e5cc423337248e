#pragma once

#include <optional>

#include "twogap/domain.hpp"

namespace twogap::predictor {

/// Asymptotic prediction of L_n for one n.
struct PredictionRecord {
  int n = 0;
  double phase = 0.0;            // {alpha n + omega(C)}
  double D_n = 0.0;              // circuit point with omega(D_n) = phase; may be +inf
  double G_DC = 0.0;             // G(D_n, C) from the ring Green function
  double a_n = 0.0;
  double L_theorem = 0.0;
  std::optional<double> L_refined;  // absent when a_n <= 0
  double theta_ratio = 0.0;      // e^{G(D_n, C)} from the theta series
  double theta_ratio_raw = 0.0;  // reciprocal orientation, kept for audit
};

enum class Variant { theorem, refined };

double phase(int n, const GreenCharacteristics& chars);

/// Circuit point D with omega(D) = phase in [0, 1). Returns +inf at phase == alpha.
double solve_Dn(const GreenCharacteristics& chars, double phase, double tol = 1e-12);

/// Theta nome h = exp(-pi p).
double nome(const GreenCharacteristics& chars);

/// |theta0((phase + omega_C)/2) / theta0((phase - omega_C)/2)|.
double theta_ratio_at_phase(const GreenCharacteristics& chars, double phase);
double theta_ratio(int n, const GreenCharacteristics& chars);

/// c = 2 (pi eta1)^{-1/2} e^{-eta2}.
double theorem_constant(const GreenCharacteristics& chars);

double a_n(int n, const GreenCharacteristics& chars);

PredictionRecord predict(int n, const GreenCharacteristics& chars);

/// L_n by one route. Throws DomainError for the refined route when a_n <= 0.
double predict(int n, const GreenCharacteristics& chars, Variant variant);

/// Largest relative gap between theta_ratio and exp(G(D_n, C)) over a few n.
double theta_orientation_discrepancy(const GreenCharacteristics& chars);

/// Asymptote of L_{2m+1} on [-A,-1] U [1,A].
double symmetric_reference(int m, double A);

/// Exact L_n on [-A,-1] U {1}: 2 / (T_n(1 + 4/(A-1)) + 1).
double degenerate_reference(int n, double A);

}  // namespace twogap::predictor
