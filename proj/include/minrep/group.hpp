#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "minrep/quasipoly.hpp"
#include "minrep/radial.hpp"

namespace minrep {

/// Element of O(m+1, 2) acting on R^{m+3} with basis e_0, ..., e_{m+2}.
using LorentzMatrix = Eigen::MatrixXd;

/// diag(1, ..., 1, -1, -1) with m+1 positive entries.
Eigen::MatrixXd lorentz_metric(int m);
/// max |g^T J g - J|.
double lorentz_defect(const LorentzMatrix& g);
/// Throws DomainError unless lorentz_defect(g) <= tol * max(1, |g|_max^2).
void check_lorentz(const LorentzMatrix& g, int m, double tol = 1e-10);

struct Generators {
  std::vector<Eigen::MatrixXd> nbar;  // Nbar_1 .. Nbar_{m+1}
  std::vector<Eigen::MatrixXd> n;     // N_1 .. N_{m+1}
  Eigen::MatrixXd E;
  /// Real generator E_{m+2,m+1} - E_{m+1,m+2} of the rotation whose angle pi gives w0.
  Eigen::MatrixXd Z;
  LorentzMatrix w0;
};

/// Lie algebra generators and the inversion element. Needs m odd.
Generators make_generators(const ModelParams& params);

/// exp(sum b_j Nbar_j) in closed form, b in R^{m+1}.
LorentzMatrix make_nbar(const Eigen::VectorXd& b);
/// e^{tE}.
LorentzMatrix make_scaling(double t, int m);
/// diag(I_{m+1}, -I_2).
LorentzMatrix make_w0(int m);
/// Embeds h in O(m, 1) (acting on e_1 .. e_{m+1}) into the stabilizer of e_0 and e_{m+2}.
LorentzMatrix embed_m_plus(const Eigen::MatrixXd& h);
/// Rotation by `angle` in the plane (e_i, e_j), 1 <= i < j <= m.
LorentzMatrix m_plus_rotation(int m, int i, int j, double angle);
/// Boost with the given rapidity in the plane (e_i, e_{m+1}), 1 <= i <= m.
LorentzMatrix m_plus_boost(int m, int i, double rapidity);
/// Q(b) = b_1^2 + ... + b_m^2 - b_{m+1}^2.
double minkowski_form(const Eigen::VectorXd& b);

struct BruhatFactors {
  Eigen::VectorXd b;
  double t = 0.0;
  int delta = 1;
  LorentzMatrix m_plus;
  Eigen::VectorXd a;
  /// max |reconstruction - g| / max(1, |g|_max).
  double reconstruction_error = 0.0;
};

/// x_0 + x_{m+2} for x = g (e_0 - e_{m+2}); zero exactly on the parabolic subgroup.
double bruhat_criterion(const LorentzMatrix& g);
/// g = nbar_b e^{tE} (delta m_plus) w0 nbar_a. Throws InParabolicError when
/// |x_0 + x_{m+2}| <= 1e-12 |x|.
BruhatFactors bruhat_factor(const LorentzMatrix& g, const ModelParams& params);
LorentzMatrix bruhat_reconstruct(const BruhatFactors& f);

/// g = nbar_b e^{tE} (delta m_plus) for g in the parabolic subgroup.
struct ParabolicFactors {
  Eigen::VectorXd b;
  double t = 0.0;
  int delta = 1;
  LorentzMatrix m_plus;
};
ParabolicFactors parabolic_factor(const LorentzMatrix& g, const ModelParams& params);
LorentzMatrix parabolic_reconstruct(const ParabolicFactors& f);

/// A matrix together with the number of half turns of the compact rotation it
/// was built from, modulo 4. w0 carries one half turn; w0^2 is the identity
/// matrix but two half turns, the nontrivial central element of the cover.
struct CoverElement {
  LorentzMatrix g;
  int half_turns = 0;

  CoverElement operator*(const CoverElement& o) const;
  bool is_identity(double tol = 1e-12) const;
};
CoverElement cover_w0(int m);
/// Scalar by which the central part of the element acts: (-1)^{m+1} per full turn.
int cover_central_sign(const CoverElement& c, int m);

/// Product of 1..max_factors random generators (nbar, scaling, rotation, boost,
/// w0) with parameters in [-1, 1], redrawn while |x_0 + x_{m+2}| < 1e-6.
LorentzMatrix random_group_element(std::mt19937_64& rng, const ModelParams& params, int max_factors = 6);

enum class Sl2Generator { e_tilde, f_tilde, h_tilde, D };

/// Exact action on the radial part of the degree-l sector.
QuasiPolynomial apply_sl2_operator(Sl2Generator gen, int l, const QuasiPolynomial& f, const ModelParams& params);

}  // namespace minrep
