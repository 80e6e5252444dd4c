#pragma once

#include <optional>
#include <string>

namespace expint {

// ---------------------------------------------------------------------------
// Series truncation control.

enum class TruncationMode { ToTolerance, FixedTerms };

struct TruncationPolicy {
  TruncationMode mode = TruncationMode::ToTolerance;
  // ToTolerance stops once two consecutive term magnitudes fall below
  // rel_tol * |partial sum| (or below the 1e-300 absolute floor).
  double rel_tol = 1e-16;
  // ToTolerance cap, or the exact term count for FixedTerms.
  int max_terms = 500;

  static TruncationPolicy fixed_terms(int n) {
    return TruncationPolicy{TruncationMode::FixedTerms, 0.0, n};
  }
  static TruncationPolicy to_tolerance(double rel_tol, int max_terms = 500) {
    return TruncationPolicy{TruncationMode::ToTolerance, rel_tol, max_terms};
  }
};

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double last_term = 0.0;  // magnitude of the final included term
  bool converged = false;
  // Set when the argument is beyond the kernel's cancellation threshold and
  // a caller should prefer another route.  The value is still the best the
  // series can do; nothing is thrown.
  bool accuracy_loss = false;
};

// ---------------------------------------------------------------------------
// Asymptotic expansions.

enum class BoundKind {
  Rigorous,          // proven inequality on the remainder
  FirstOmittedTerm,  // heuristic: magnitude of the first omitted term
};

struct AsymptoticResult {
  double value = 0.0;
  int n = 0;  // truncation order actually used
  double remainder_bound = 0.0;
  BoundKind bound_kind = BoundKind::FirstOmittedTerm;
};

// ---------------------------------------------------------------------------
// Quadrature.

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  // Geometric shrink factor for the symmetric exclusion radius around a
  // Cauchy principal-value pole.
  double pv_shrink = 0.5;
  // Period of the integrand's oscillation on a semi-infinite range.  When
  // set, the tail is summed between half-period nodes and accelerated.
  std::optional<double> osc_period_hint{};
};

struct QuadResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

// ---------------------------------------------------------------------------
// Evaluator results.

enum class Method { Series, ContinuedFraction, Asymptotic, Quadrature, Identity };

struct EvalResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  Method method = Method::Series;
  int terms_or_subdivisions = 0;
};

struct ComplexValue {
  double re = 0.0;
  double im = 0.0;
};

// ---------------------------------------------------------------------------
// Function identifier for oracle dispatch and truncation-order scans.

struct FnId {
  enum class Kind { Ei, E1, En, Ein, Si, Ci, li, li1, LiOffset, GammaUpper, GammaLower };

  Kind kind = Kind::Ei;
  double param = 0.0;  // order n for En, parameter s for the incomplete gammas

  static FnId of(Kind k) { return FnId{k, 0.0}; }
  static FnId en(double n) { return FnId{Kind::En, n}; }
  static FnId gamma_upper(double s) { return FnId{Kind::GammaUpper, s}; }
  static FnId gamma_lower(double s) { return FnId{Kind::GammaLower, s}; }

  const char* name() const {
    switch (kind) {
      case Kind::Ei: return "Ei";
      case Kind::E1: return "E1";
      case Kind::En: return "En";
      case Kind::Ein: return "Ein";
      case Kind::Si: return "Si";
      case Kind::Ci: return "Ci";
      case Kind::li: return "li";
      case Kind::li1: return "li1";
      case Kind::LiOffset: return "Li";
      case Kind::GammaUpper: return "GammaUpper";
      case Kind::GammaLower: return "GammaLower";
    }
    return "?";
  }
};

const char* method_name(Method m);

}  // namespace expint
