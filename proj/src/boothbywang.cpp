#include "sympair/boothbywang.hpp"

#include <stdexcept>

namespace sympair {

ExteriorForm lift_form(const ExteriorForm& phi, int total_dim) {
  if (total_dim < phi.dim()) throw std::invalid_argument("lift_form: target dimension too small");
  ExteriorForm out(total_dim, phi.degree());
  for (const auto& [m, c] : phi.terms()) out.add_term(m, c);
  return out;
}

LieAlgebra central_extension_unchecked(const LieAlgebra& g, const ExteriorForm& omega) {
  if (omega.degree() != 2 || omega.dim() != g.dim())
    throw std::invalid_argument("central extension: closed 2-form on the base required");
  const int n = g.dim();
  LieAlgebra total(n + 1, g.name().empty() ? "ext" : g.name() + "^");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      VecX v(n + 1);
      v.setConstant(Scalar(0));
      v.head(n) = g.bracket_basis(i, j);
      v(n) = -omega.coefficient(mask_of(std::vector<int>{i, j}));
      total.set_bracket(i, j, v);
    }
  }
  return total;
}

CentralExtension central_extension(const LieAlgebra& g, const ExteriorForm& omega) {
  ExteriorForm residual = ce_d(g, omega);
  if (!residual.is_zero())
    throw std::invalid_argument("central extension: cocycle is not closed, d(omega) = " + residual.str());

  CentralExtension ext;
  ext.base = g;
  ext.cocycle = omega;
  ext.total = central_extension_unchecked(g, omega);
  ext.connection = ExteriorForm::basis(g.dim() + 1, {g.dim() + 1});

  JacobiReport jr = jacobi_check(ext.total);
  if (!jr.ok) throw std::logic_error("central extension lost Jacobi: " + jr.str());
  if (ce_d(ext.total, ext.connection) != lift_form(omega, g.dim() + 1))
    throw std::logic_error("central extension: connection curvature mismatch");
  return ext;
}

ContactSymplecticResult bw_contact_symplectic(const LieAlgebra& g, const ExteriorForm& omega1,
                                              const ExteriorForm& omega2) {
  PairReport input = check_symplectic_pair(g, omega1, omega2);
  if (!input.verdict)
    throw PairRejected("bw_contact_symplectic: input is not a symplectic pair", input);

  ContactSymplecticResult res;
  res.extension = central_extension(g, omega1);
  res.alpha = res.extension.connection;
  res.beta = lift_form(omega2, g.dim() + 1);
  res.report = check_contact_symplectic_pair(res.extension.total, res.alpha, res.beta);
  res.report.add("class matches half the curvature rank", res.report.k == rank_two_form(omega1) / 2,
                 "k = " + std::to_string(res.report.k));
  res.report.finalize();
  return res;
}

ContactPairResult bw_contact_pair_from_cs(const LieAlgebra& g, const ExteriorForm& alpha,
                                          const ExteriorForm& beta) {
  PairReport input = check_contact_symplectic_pair(g, alpha, beta);
  if (!input.verdict)
    throw PairRejected("bw_contact_pair_from_cs: input is not a contact-symplectic pair", input);

  ContactPairResult res;
  res.extension = central_extension(g, beta);
  res.alpha = lift_form(alpha, g.dim() + 1);
  res.gamma = res.extension.connection;
  res.report = check_contact_pair(res.extension.total, res.alpha, res.gamma);
  return res;
}

TorusExtensionResult torus_extension(const LieAlgebra& g, const ExteriorForm& omega1,
                                     const ExteriorForm& omega2) {
  PairReport input = check_symplectic_pair(g, omega1, omega2);
  if (!input.verdict)
    throw PairRejected("torus_extension: input is not a symplectic pair", input);

  const int n = g.dim();
  LieAlgebra total(n + 2, g.name().empty() ? "ext2" : g.name() + "^^");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      VecX v(n + 2);
      v.setConstant(Scalar(0));
      v.head(n) = g.bracket_basis(i, j);
      IndexMask m = mask_of(std::vector<int>{i, j});
      v(n) = -omega1.coefficient(m);
      v(n + 1) = -omega2.coefficient(m);
      total.set_bracket(i, j, v);
    }
  }
  JacobiReport jr = jacobi_check(total);
  if (!jr.ok) throw std::logic_error("torus extension lost Jacobi: " + jr.str());

  TorusExtensionResult res{std::move(total), ExteriorForm::basis(n + 2, {n + 1}),
                           ExteriorForm::basis(n + 2, {n + 2}), {}};
  res.report = check_contact_pair(res.total, res.alpha, res.gamma);
  return res;
}

}  // namespace sympair
