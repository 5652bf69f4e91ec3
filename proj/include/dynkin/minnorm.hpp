#pragma once

// Exact minimum-norm points of polyhedra.
//
// Phase 1 is a two-phase rational simplex with Bland's rule; an infeasible
// system comes back with a Farkas certificate. The minimiser of x^T G x is
// then found by a primal active-set method whose working set is always a
// linearly independent set of tight constraints. The result carries a KKT
// certificate that verify_certificate audits from scratch.

#include <optional>
#include <stdexcept>
#include <vector>

#include "dynkin/exactlin.hpp"
#include "dynkin/polyhedron.hpp"

namespace dynkin {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct StandardLpResult {
  LpStatus status = LpStatus::kInfeasible;
  RatVec solution;  // valid when optimal
  Rat value;
};

/// minimize c.y subject to a y = b, y >= 0.
StandardLpResult solve_standard_lp(const RatMat& a, const RatVec& b, const RatVec& c);

struct FeasibilityResult {
  bool feasible = false;
  RatVec point;
  /// When infeasible: y >= 0 with sum y_i n_i = 0 and sum y_i b_i > 0 over the
  /// constraints written as n_i . x >= b_i.
  RatVec farkas;
};

FeasibilityResult feasible_point(const Polyhedron& p);

/// Checks a Farkas certificate against the polyhedron.
bool verify_farkas(const Polyhedron& p, const RatVec& y);

struct PolyLpResult {
  LpStatus status = LpStatus::kInfeasible;
  RatVec point;
  Rat value;
};

/// minimize objective . x over the polyhedron (x free).
PolyLpResult lp_minimize(const Polyhedron& p, const RatVec& objective);

struct MinNormCertificate {
  RatVec minimizer;
  std::vector<int> active_set;  // constraint indices, ascending
  RatVec multipliers;           // one per active constraint, same order
  Rat norm_squared;
  int iterations = 0;
};

class InfeasiblePolyhedron : public std::runtime_error {
 public:
  InfeasiblePolyhedron(const std::string& what, RatVec farkas) : std::runtime_error(what), farkas_(std::move(farkas)) {}
  const RatVec& farkas() const { return farkas_; }

 private:
  RatVec farkas_;
};

/// Unique minimiser of x^T gram x over p. Throws InfeasiblePolyhedron.
MinNormCertificate min_norm_point(const Polyhedron& p, const RatMat& gram);

struct CertificateCheck {
  bool passed = true;
  std::string reason;
};

/// Feasibility, complementary slackness, multiplier signs and stationarity
/// gram * x = sum lambda_i * signed_normal_i, all by direct evaluation.
CertificateCheck verify_certificate(const Polyhedron& p, const RatMat& gram, const MinNormCertificate& c);

}  // namespace dynkin
