#include "minrep/group.hpp"

#include <cmath>
#include <string>

#include "minrep/errors.hpp"

namespace minrep {

namespace {

int dim_of(const LorentzMatrix& g) {
  const int n = static_cast<int>(g.rows());
  if (n < 5 || g.cols() != n) throw ArgumentError("group element must be a square matrix of size m+3 >= 5");
  return n - 3;
}

double max_abs(const Eigen::MatrixXd& g) { return g.cwiseAbs().maxCoeff(); }

// eps_j = +1 for 1 <= j <= m, -1 for j = m+1.
double eps(int j, int m) { return j == m + 1 ? -1.0 : 1.0; }

}  // namespace

Eigen::MatrixXd lorentz_metric(int m) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(m + 3, m + 3);
  j(m + 1, m + 1) = -1.0;
  j(m + 2, m + 2) = -1.0;
  return j;
}

double lorentz_defect(const LorentzMatrix& g) {
  const Eigen::MatrixXd j = lorentz_metric(dim_of(g));
  return max_abs(g.transpose() * j * g - j);
}

void check_lorentz(const LorentzMatrix& g, int m, double tol) {
  if (dim_of(g) != m) throw ArgumentError("matrix size does not match m+3");
  const double scale = std::max(1.0, max_abs(g));
  const double defect = lorentz_defect(g);
  if (!(defect <= tol * scale * scale))
    throw DomainError("matrix is not in O(m+1,2): metric defect " + std::to_string(defect));
}

Generators make_generators(const ModelParams& params) {
  const int m = params.m;
  if (m % 2 == 0) throw UnsupportedError("the inversion element needs m odd (got m=" + std::to_string(m) + ")");
  const int n = m + 3;
  Generators g;
  for (int j = 1; j <= m + 1; ++j) {
    Eigen::MatrixXd nb = Eigen::MatrixXd::Zero(n, n);
    nb(j, 0) = 1.0;
    nb(j, m + 2) = 1.0;
    nb(0, j) = -eps(j, m);
    nb(m + 2, j) = eps(j, m);
    g.nbar.push_back(nb);
    Eigen::MatrixXd nn = Eigen::MatrixXd::Zero(n, n);
    nn(j, 0) = 1.0;
    nn(j, m + 2) = -1.0;
    nn(0, j) = -eps(j, m);
    nn(m + 2, j) = -eps(j, m);
    g.n.push_back(nn);
  }
  g.E = Eigen::MatrixXd::Zero(n, n);
  g.E(0, m + 2) = 1.0;
  g.E(m + 2, 0) = 1.0;
  g.Z = Eigen::MatrixXd::Zero(n, n);
  g.Z(m + 2, m + 1) = 1.0;
  g.Z(m + 1, m + 2) = -1.0;
  g.w0 = make_w0(m);
  return g;
}

double minkowski_form(const Eigen::VectorXd& b) {
  const Eigen::Index k = b.size();
  return b.head(k - 1).squaredNorm() - b(k - 1) * b(k - 1);
}

namespace {

using MatrixLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> nbar_of(const Eigen::VectorXd& b) {
  const int m = static_cast<int>(b.size()) - 1;
  if (m < 2) throw ArgumentError("make_nbar: b must have m+1 >= 3 entries");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> g =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(m + 3, m + 3);
  Scalar q = 0;
  for (int j = 1; j <= m + 1; ++j) {
    const Scalar bj = b(j - 1);
    const Scalar e = static_cast<Scalar>(eps(j, m));
    g(j, 0) += bj;
    g(j, m + 2) += bj;
    g(0, j) -= e * bj;
    g(m + 2, j) += e * bj;
    q += e * bj * bj;
  }
  const Scalar hq = q / 2;
  g(0, 0) -= hq;
  g(0, m + 2) -= hq;
  g(m + 2, 0) += hq;
  g(m + 2, m + 2) += hq;
  return g;
}

MatrixLD scaling_ld(double t, int m) {
  MatrixLD g = MatrixLD::Identity(m + 3, m + 3);
  const long double lt = t;
  g(0, 0) = std::cosh(lt);
  g(m + 2, m + 2) = std::cosh(lt);
  g(0, m + 2) = std::sinh(lt);
  g(m + 2, 0) = std::sinh(lt);
  return g;
}

MatrixLD w0_ld(int m) { return make_w0(m).cast<long double>(); }

/// Checks that h fixes e_0 and e_{m+2} and removes the rounding left in those rows and columns.
LorentzMatrix clean_m_plus(const MatrixLD& h, int m, const char* what, bool internal) {
  LorentzMatrix out = h.cast<double>();
  const double scale = std::max(1.0, max_abs(out));
  double drift = 0.0;
  for (int k = 0; k < m + 3; ++k)
    for (int c : {0, m + 2}) {
      const double target = k == c ? 1.0 : 0.0;
      drift = std::max({drift, std::fabs(out(k, c) - target), std::fabs(out(c, k) - target)});
    }
  if (drift > 1e-8 * scale) {
    if (internal) throw InternalError(what);
    throw ArgumentError(what);
  }
  for (int k = 0; k < m + 3; ++k)
    for (int c : {0, m + 2}) {
      out(k, c) = k == c ? 1.0 : 0.0;
      out(c, k) = k == c ? 1.0 : 0.0;
    }
  return out;
}

}  // namespace

LorentzMatrix make_nbar(const Eigen::VectorXd& b) { return nbar_of<double>(b); }

LorentzMatrix make_scaling(double t, int m) {
  LorentzMatrix g = Eigen::MatrixXd::Identity(m + 3, m + 3);
  g(0, 0) = std::cosh(t);
  g(m + 2, m + 2) = std::cosh(t);
  g(0, m + 2) = std::sinh(t);
  g(m + 2, 0) = std::sinh(t);
  return g;
}

LorentzMatrix make_w0(int m) {
  LorentzMatrix g = Eigen::MatrixXd::Identity(m + 3, m + 3);
  g(m + 1, m + 1) = -1.0;
  g(m + 2, m + 2) = -1.0;
  return g;
}

LorentzMatrix embed_m_plus(const Eigen::MatrixXd& h) {
  const int m = static_cast<int>(h.rows()) - 1;
  if (h.cols() != h.rows()) throw ArgumentError("embed_m_plus: square (m+1)x(m+1) matrix expected");
  LorentzMatrix g = Eigen::MatrixXd::Identity(m + 3, m + 3);
  g.block(1, 1, m + 1, m + 1) = h;
  return g;
}

LorentzMatrix m_plus_rotation(int m, int i, int j, double angle) {
  if (!(1 <= i && i < j && j <= m)) throw ArgumentError("rotation plane needs 1 <= i < j <= m");
  LorentzMatrix g = Eigen::MatrixXd::Identity(m + 3, m + 3);
  g(i, i) = std::cos(angle);
  g(j, j) = std::cos(angle);
  g(i, j) = -std::sin(angle);
  g(j, i) = std::sin(angle);
  return g;
}

LorentzMatrix m_plus_boost(int m, int i, double rapidity) {
  if (!(1 <= i && i <= m)) throw ArgumentError("boost direction needs 1 <= i <= m");
  LorentzMatrix g = Eigen::MatrixXd::Identity(m + 3, m + 3);
  g(i, i) = std::cosh(rapidity);
  g(m + 1, m + 1) = std::cosh(rapidity);
  g(i, m + 1) = std::sinh(rapidity);
  g(m + 1, i) = std::sinh(rapidity);
  return g;
}

double bruhat_criterion(const LorentzMatrix& g) {
  const int m = dim_of(g);
  const Eigen::VectorXd x = g.col(0) - g.col(m + 2);
  return x(0) + x(m + 2);
}

BruhatFactors bruhat_factor(const LorentzMatrix& g, const ModelParams& params) {
  const int m = params.m;
  check_lorentz(g, m);
  const Eigen::MatrixXd j = lorentz_metric(m);
  const Eigen::MatrixXd g_inv = j * g.transpose() * j;
  const Eigen::VectorXd x = g.col(0) - g.col(m + 2);
  const Eigen::VectorXd y = g_inv.col(0) - g_inv.col(m + 2);
  const double sx = x(0) + x(m + 2);
  if (std::fabs(sx) <= 1e-12 * std::max(1.0, x.cwiseAbs().maxCoeff()))
    throw InParabolicError("x_0 + x_{m+2} vanishes: the element lies in the parabolic subgroup");
  const double sy = y(0) + y(m + 2);
  BruhatFactors f;
  f.a.resize(m + 1);
  f.b.resize(m + 1);
  for (int k = 1; k <= m + 1; ++k) {
    f.a(k - 1) = -y(k) / sy;
    f.b(k - 1) = x(k) / sx;
  }
  f.delta = sx > 0.0 ? 1 : -1;
  f.t = std::log(std::fabs(0.5 * sx));
  // w0 is an involution at the matrix level. Products run in extended
  // precision because the unipotent factors can be large.
  const MatrixLD mp = static_cast<long double>(f.delta) * scaling_ld(-f.t, m) * nbar_of<long double>(-f.b) *
                      g.cast<long double>() * nbar_of<long double>(-f.a) * w0_ld(m);
  f.m_plus = clean_m_plus(mp, m, "Bruhat middle factor does not fix e_0 and e_{m+2}", true);
  f.reconstruction_error = max_abs(bruhat_reconstruct(f) - g) / std::max(1.0, max_abs(g));
  return f;
}

LorentzMatrix bruhat_reconstruct(const BruhatFactors& f) {
  const int m = static_cast<int>(f.b.size()) - 1;
  const MatrixLD r = nbar_of<long double>(f.b) * scaling_ld(f.t, m) *
                     (static_cast<long double>(f.delta) * f.m_plus.cast<long double>()) * w0_ld(m) *
                     nbar_of<long double>(f.a);
  return r.cast<double>();
}

ParabolicFactors parabolic_factor(const LorentzMatrix& g, const ModelParams& params) {
  const int m = params.m;
  check_lorentz(g, m);
  // g (e_0 - e_{m+2}) = delta e^{-t} (e_0 - e_{m+2}),
  // g (e_0 + e_{m+2}) = delta e^{t} (1 - Q(b), 2b, 1 + Q(b)).
  const Eigen::VectorXd x = g.col(0) - g.col(m + 2);
  const Eigen::VectorXd y = g.col(0) + g.col(m + 2);
  const double scale = std::max(1.0, max_abs(g));
  if (std::fabs(x(0) + x(m + 2)) > 1e-9 * scale || x(0) == 0.0)
    throw ArgumentError("element is not in the parabolic subgroup");
  ParabolicFactors f;
  f.delta = x(0) > 0.0 ? 1 : -1;
  f.t = -std::log(std::fabs(x(0)));
  f.b.resize(m + 1);
  for (int k = 1; k <= m + 1; ++k) f.b(k - 1) = 0.5 * x(0) * y(k);
  const MatrixLD mp = static_cast<long double>(f.delta) * scaling_ld(-f.t, m) * nbar_of<long double>(-f.b) *
                      g.cast<long double>();
  f.m_plus = clean_m_plus(mp, m, "element is not in the parabolic subgroup", false);
  return f;
}

LorentzMatrix parabolic_reconstruct(const ParabolicFactors& f) {
  const int m = static_cast<int>(f.b.size()) - 1;
  const MatrixLD r = nbar_of<long double>(f.b) * scaling_ld(f.t, m) *
                     (static_cast<long double>(f.delta) * f.m_plus.cast<long double>());
  return r.cast<double>();
}

CoverElement CoverElement::operator*(const CoverElement& o) const { return {g * o.g, (half_turns + o.half_turns) % 4}; }

bool CoverElement::is_identity(double tol) const {
  return half_turns == 0 && (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
}

CoverElement cover_w0(int m) { return {make_w0(m), 1}; }

int cover_central_sign(const CoverElement& c, int m) {
  const int full_turns = c.half_turns / 2;
  return (full_turns % 2 == 1 && (m + 1) % 2 == 1) ? -1 : 1;
}

LorentzMatrix random_group_element(std::mt19937_64& rng, const ModelParams& params, int max_factors) {
  const int m = params.m;
  if (max_factors < 1) throw ArgumentError("random_group_element: max_factors must be >= 1");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> count(1, max_factors);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> axis(1, m);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    LorentzMatrix g = Eigen::MatrixXd::Identity(m + 3, m + 3);
    const int k = count(rng);
    for (int f = 0; f < k; ++f) {
      switch (kind(rng)) {
        case 0: {
          Eigen::VectorXd b(m + 1);
          for (int i = 0; i <= m; ++i) b(i) = unit(rng);
          g = g * make_nbar(b);
          break;
        }
        case 1: g = g * make_scaling(unit(rng), m); break;
        case 2: {
          int i = axis(rng);
          int j = axis(rng);
          while (j == i) j = axis(rng);
          g = g * m_plus_rotation(m, std::min(i, j), std::max(i, j), unit(rng));
          break;
        }
        case 3: g = g * m_plus_boost(m, axis(rng), unit(rng)); break;
        default: g = g * make_w0(m); break;
      }
    }
    if (std::fabs(bruhat_criterion(g)) >= 1e-6) return g;
  }
  throw InternalError("random_group_element: no well-conditioned sample found");
}

QuasiPolynomial apply_sl2_operator(Sl2Generator gen, int l, const QuasiPolynomial& f, const ModelParams& params) {
  if (l < 0) throw ArgumentError("angular degree l must be >= 0");
  const double m = params.m;
  const cplx i(0.0, 1.0);
  // r f'' + (m-1) f' - l(l+m-2) f / r, the sector Laplacian times r
  const auto r_laplacian = [&] {
    const QuasiPolynomial d1 = f.derivative();
    QuasiPolynomial out = d1.derivative().mul_r() + d1 * cplx(m - 1.0);
    if (l > 0) out = out - f.div_r() * cplx(l * (l + m - 2.0));
    return out;
  };
  switch (gen) {
    case Sl2Generator::e_tilde: return f.mul_r() * (2.0 * i);
    case Sl2Generator::h_tilde: return f.derivative().mul_r() * cplx(2.0) + f * cplx(m - 1.0);
    case Sl2Generator::f_tilde: return r_laplacian() * (0.5 * i);
    case Sl2Generator::D: return r_laplacian() * cplx(0.25) - f.mul_r();
  }
  throw InternalError("unknown sl2 generator");
}

}  // namespace minrep
