#include "sympair/search.hpp"

#include <random>
#include <stdexcept>

namespace sympair {

bool WedgeGram::is_zero() const {
  for (Eigen::Index r = 0; r < gram.rows(); ++r)
    for (Eigen::Index c = 0; c < gram.cols(); ++c)
      if (!gram(r, c).is_zero()) return false;
  return true;
}

WedgeGram wedge_gram(const LieAlgebra& g) {
  if (g.dim() != 4) throw std::invalid_argument("wedge_gram: dimension 4 required");
  WedgeGram out;
  out.basis = closed_forms(g, 2);
  out.volume = ExteriorForm::basis(4, {1, 2, 3, 4});
  const auto m = static_cast<Eigen::Index>(out.basis.size());
  IndexMask vol_mask = mask_of(std::vector<int>{1, 2, 3, 4});
  out.gram = MatX(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.gram(i, j) = wedge(out.basis[static_cast<std::size_t>(i)],
                             out.basis[static_cast<std::size_t>(j)]).coefficient(vol_mask);
  return out;
}

SignatureResult signature(const MatX& gram) {
  auto [diag, p] = symmetric_diagonalize(gram);
  SignatureResult s;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    int sg = diag(i).sign();
    if (sg > 0) ++s.positive;
    else if (sg < 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

bool has_invariant_symplectic(const LieAlgebra& g) {
  return !wedge_gram(g).is_zero();
}

bool has_invariant_symplectic_pair(const LieAlgebra& g) {
  return signature(wedge_gram(g).gram).indefinite();
}

PairWitness construct_pair_witness(const LieAlgebra& g) {
  PairWitness w;
  w.certificate = wedge_gram(g);
  w.sig = signature(w.certificate.gram);
  if (!w.sig.indefinite()) return w;

  auto [diag, p] = symmetric_diagonalize(w.certificate.gram);
  Eigen::Index ip = -1, in = -1;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (ip < 0 && diag(i).sign() > 0) ip = i;
    if (in < 0 && diag(i).sign() < 0) in = i;
  }

  auto basis_combination = [&](Eigen::Index col) {
    ExteriorForm f(4, 2);
    for (std::size_t r = 0; r < w.certificate.basis.size(); ++r)
      f += p(static_cast<Eigen::Index>(r), col) * w.certificate.basis[r];
    return f;
  };
  ExteriorForm u = basis_combination(ip);
  ExteriorForm v = basis_combination(in);
  const Scalar& a = diag(ip);
  const Scalar& b = diag(in);

  // u, v are orthogonal with q(u) = a > 0 > b = q(v); then u +- t*v with
  // t^2 = -a/b have square zero and nonzero product 2a.  The catalog Grams
  // are rational, so a single square root suffices.
  if (!a.is_rational() || !b.is_rational())
    throw std::logic_error("construct_pair_witness: expected rational diagonal");
  Scalar t = Scalar::sqrt_rational(-a.rational_part() / b.rational_part());
  w.omega1 = u + t * v;
  w.omega2 = u - t * v;
  w.found = true;
  w.verification = check_symplectic_pair(g, w.omega1, w.omega2);
  if (!w.verification.verdict)
    throw std::logic_error("construct_pair_witness: witness failed exact verification");
  return w;
}

bool brute_force_oracle(const LieAlgebra& g, std::uint64_t seed, int trials) {
  if (g.dim() != 4) throw std::invalid_argument("brute_force_oracle: dimension 4 required");
  auto z2 = closed_forms(g, 2);
  if (z2.empty()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < trials; ++trial) {
    ExteriorForm w1(4, 2), w2(4, 2);
    for (const auto& zeta : z2) {
      w1 += Scalar(coeff(rng)) * zeta;
      w2 += Scalar(coeff(rng)) * zeta;
    }
    if (w1.is_zero() || w2.is_zero()) continue;
    if (check_symplectic_pair(g, w1, w2).verdict) return true;
  }
  return false;
}

}  // namespace sympair
