#pragma once

#include <vector>

#include "loopfact/birkhoff.hpp"
#include "loopfact/loop2.hpp"

namespace loopfact {

struct RootSubgroupData {
  std::vector<cplx> etas;   // eta_0 .. eta_n
  std::vector<cplx> zetas;  // zeta_1 .. zeta_n
  LaurentSeries chi;        // star(chi) = -chi, no zero mode
  double chi0_im = 0.0;     // zero mode of chi is i * chi0_im

  /// chi + i chi0_im
  LaurentSeries chi_total() const;
};

/// Validates disk membership and anti-symmetry of chi; a zero mode in chi
/// is folded into chi0_im.
RootSubgroupData make_data(std::vector<cplx> etas, std::vector<cplx> zetas, LaurentSeries chi,
                           double chi0_im = 0.0);

/// chi with coefficient c_j at z^j and -conj(c_j) at z^-j, j = 1..k.
LaurentSeries imaginary_chi(const std::vector<cplx>& positive_coeffs);

/// (1 - |zeta|^2)^(-1/2)
double a_disk(cplx zeta);

Mat2 q_factor(cplx zeta);

/// a(zeta_n) [[1, zeta_n z^-n], [conj(zeta_n) z^n, 1]] ... a(zeta_1) [[1, zeta_1 z^-1], [conj(zeta_1) z, 1]]
LoopMatrix synth_g2(const std::vector<cplx>& zetas);

/// a(eta_n) [[1, conj(eta_n) z^n], [eta_n z^-n, 1]] ... a(eta_0) [[1, conj(eta_0)], [eta_0, 1]]
LoopMatrix synth_g1(const std::vector<cplx>& etas);

/// sigma(g1^-1) diag(e^chi, e^-chi) g2
LoopMatrix synth_full(const RootSubgroupData& data, int trunc = kDefaultTrunc);

/// Peels the factors of synth_g2 from the left, highest index first.
std::vector<cplx> analyze_g2(const LoopMatrix& g2, int n, double tol = 1e-8);

/// Peels the factors of synth_g1 from the left, highest index first; returns
/// eta_0..eta_n (empty for n = -1).
std::vector<cplx> analyze_g1(const LoopMatrix& g1, int n, double tol = 1e-8);

struct PartialRSF {
  LoopMatrix g1;
  LoopMatrix g2;
  LaurentSeries chi;  // without zero mode
  double chi0_im = 0.0;
  double boundary_sup_l = 0.0;  // sup |l21 / l11|
  double boundary_sup_u = 0.0;  // sup |u21 / u22|
  double diagonal_defect = 0.0;  // largest off-diagonal of the extracted torus part
  double reconstruction_defect = 0.0;
  BirkhoffFactors factors;
};

/// g = sigma(g1^-1) diag(e^chi, e^-chi) g2 with g1, g2 of triangular type.
PartialRSF partial_rsf(const LoopMatrix& g, int trunc = kDefaultTrunc, int num_samples = 512);

}  // namespace loopfact
