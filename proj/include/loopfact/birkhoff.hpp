#pragma once

#include <string>
#include <vector>

#include "loopfact/loop2.hpp"

namespace loopfact {

/// w = [diag(z^n, z^-n)] R^flip in the infinite dihedral group, R = [[0,-1],[1,0]].
struct WeylElement {
  int n = 0;
  bool flip = false;

  static WeylElement identity() { return {}; }
  static WeylElement r0() { return {-1, true}; }
  static WeylElement r1() { return {0, true}; }

  /// The fixed representative diag(z^n, z^-n) R^flip.
  LoopMatrix representative() const;
  LoopMatrix representative_inverse() const;
  WeylElement inverse() const;
  std::string label() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return {a.n + (a.flip ? -b.n : b.n), a.flip != b.flip};
  }
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n == b.n && a.flip == b.flip;
  }
};

struct BirkhoffFactors {
  LoopMatrix l;  // holomorphic in the exterior disk, l(inf) lower unipotent
  WeylElement w;
  cplx m0 = 1.0;  // unimodular
  double a0 = 1.0;
  LoopMatrix u;  // holomorphic in the disk, u(0) upper unipotent
  /// Least-squares residual of the defining linear system.
  double residual = 0.0;
  /// sigma_min / sigma_max of that system.
  double conditioning = 1.0;
  /// Largest coefficient of l w diag(m0 a0, 1/(m0 a0)) u - g.
  double reconstruction_defect = 0.0;

  LoopMatrix product() const;
};

struct FactorOptions {
  double residual_tol = 1e-9;
  /// Candidates with relative sigma_min below this are rejected outright.
  double singular_tol = 1e-10;
  /// Relative sigma_min in [singular_tol, marginal_tol) counts as marginal.
  double marginal_tol = 1e-6;
};

enum class FactorStatus { Rejected, Marginal, Accepted };

/// Solves for the factors of g with middle term w through the finite linear
/// system on l^-1 with degree window [-window, 0] (0 picks the default
/// span + 2|n| + 2).
FactorStatus factor_with(const LoopMatrix& g, const WeylElement& w, const FactorOptions& opt,
                         BirkhoffFactors& out, int window = 0);

/// g = l diag(m0 a0, 1/(m0 a0)) u; NotInTopStratum when w = 1 is not admissible.
BirkhoffFactors triangular_factorization(const LoopMatrix& g, const FactorOptions& opt = {});

/// Scans translation parts 0, 1, -1, 2, -2, ... (flip false first) up to
/// |n| <= span + 2 and returns the first admissible middle term.
BirkhoffFactors birkhoff_factorization(const LoopMatrix& g, const FactorOptions& opt = {});

WeylElement stratum(const LoopMatrix& g, const FactorOptions& opt = {});

/// SU(1,1) loop in the identity component without a triangular factorization.
LoopMatrix counterexample_loop(int trunc = kDefaultTrunc);

/// Norm of (e^{2z} (F + b2* (b2 F)_-))_+ for b2 = 1/z - 1, F = (1 - e^{-2z})/z - 1,
/// with the transcendental series truncated at trunc. perturb is added to F.
double tricondition_residual(int trunc = kDefaultTrunc, double perturb = 0.0);

}  // namespace loopfact
