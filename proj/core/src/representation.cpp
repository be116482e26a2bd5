#include "moyal/representation.hpp"

#include <cmath>
#include <sstream>

#include "moyal/errors.hpp"
#include "moyal/fft.hpp"
#include "moyal/spectral.hpp"
#include "moyal/star.hpp"
#include "moyal/weyl_algebra.hpp"

namespace moyal {

OperatorMatrix build_left_regular_matrix(const GridFunction& f, const SkewForm& sigma) {
  const GridSpec& spec = f.spec();
  if (spec.dim > 2) throw DimensionError("L_f matrix is limited to d <= 2");
  if (sigma.dim() != spec.dim) throw DimensionError("L_f: form dimension differs from grid");
  const std::size_t side = spec.size();
  const auto side_i = static_cast<Eigen::Index>(side);

  // C(:, k) = f(x - theta sigma k) e(x.k) over the dual nodes k.
  Eigen::MatrixXcd c(side_i, side_i);
  const Mat shift_map = spec.theta * sigma.matrix();
  for (std::size_t k = 0; k < side; ++k) {
    const auto p = spec.dual_point(k);
    const Vec pv = Eigen::Map<const Vec>(p.data(), spec.dim);
    const Vec s = shift_map * pv;
    const GridFunction fs =
        spectral_shift(f, std::span<const double>(s.data(), static_cast<std::size_t>(s.size())));
    for (std::size_t i = 0; i < side; ++i) {
      const auto x = spec.point(i);
      double t = 0.0;
      for (int a = 0; a < spec.dim; ++a) t += x[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(a)];
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = fs[i] * unit_phase(t);
    }
  }

  // eta^(k) = sum_j eta(x_j) e(-x_j.k) / N^d, so row i of C times that map is
  // the conjugate of an inverse transform of the conjugated row.
  const double rescale = std::pow(spec.length, spec.dim) / static_cast<double>(side);
  Eigen::MatrixXcd m(side_i, side_i);
  std::vector<Complex> row(side);
  for (Eigen::Index i = 0; i < side_i; ++i) {
    for (std::size_t k = 0; k < side; ++k) row[k] = std::conj(c(i, static_cast<Eigen::Index>(k)));
    const GridFunction back = fft_inverse(GridFunction(spec, row));
    for (std::size_t j = 0; j < side; ++j) {
      m(i, static_cast<Eigen::Index>(j)) = std::conj(back[j]) * rescale;
    }
  }

  std::ostringstream prov;
  prov.precision(17);
  prov << "L_f d=" << spec.dim << " N=" << spec.n << " L=" << spec.length << " theta=" << spec.theta
       << " sigma=[";
  for (Eigen::Index r = 0; r < sigma.matrix().rows(); ++r) {
    for (Eigen::Index col = 0; col < sigma.matrix().cols(); ++col) {
      prov << (r + col > 0 ? "," : "") << sigma.matrix()(r, col);
    }
  }
  prov << "] |f|_2=" << norm_l2(f);
  return {std::move(m), prov.str()};
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

CstarReport cstar_identity_check(const GridFunction& f, const SkewForm& sigma) {
  const GridFunction ff = star_product(involution(f), f, sigma);
  const auto lf = build_left_regular_matrix(f, sigma);
  const auto lff = build_left_regular_matrix(ff, sigma);
  CstarReport r;
  r.norm_f = spectral_norm(lf.matrix);
  r.norm_ff = spectral_norm(lff.matrix);
  const double sq = r.norm_f * r.norm_f;
  r.defect = sq > 0.0 ? std::abs(r.norm_ff - sq) / sq : std::abs(r.norm_ff);
  const Eigen::MatrixXcd herm = 0.5 * (lff.matrix + lff.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = eig.eigenvalues()(0);
  return r;
}

RepresentationDefects representation_defects(const GridFunction& f, const GridFunction& g,
                                             const SkewForm& sigma) {
  const auto lf = build_left_regular_matrix(f, sigma);
  const auto lg = build_left_regular_matrix(g, sigma);
  const auto lfg = build_left_regular_matrix(star_product(f, g, sigma), sigma);
  const auto lfs = build_left_regular_matrix(involution(f), sigma);
  const double nf = spectral_norm(lf.matrix);
  const double ng = spectral_norm(lg.matrix);
  RepresentationDefects d;
  const Eigen::MatrixXcd prod = lf.matrix * lg.matrix;
  d.homomorphism = spectral_norm(lfg.matrix - prod) / (nf * ng);
  d.adjoint = spectral_norm(lfs.matrix - lf.matrix.adjoint()) / nf;
  return d;
}

}  // namespace moyal
