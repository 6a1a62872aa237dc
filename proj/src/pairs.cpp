#include "sympair/pairs.hpp"

#include <sstream>

namespace sympair {

void PairReport::add(const std::string& name, bool pass, const std::string& detail) {
  axioms.push_back({name, pass, detail});
}

void PairReport::finalize() {
  verdict = true;
  for (const auto& a : axioms) verdict = verdict && a.pass;
}

std::string PairReport::str() const {
  std::ostringstream os;
  os << kind << " pair on dim " << dim << ": " << (verdict ? "PASS" : "FAIL") << "\n";
  for (const auto& a : axioms)
    os << "  [" << (a.pass ? "ok" : "FAIL") << "] " << a.name
       << (a.detail.empty() ? "" : " (" + a.detail + ")") << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

FormClass form_class(const LieAlgebra& g, const ExteriorForm& alpha) {
  if (alpha.degree() != 1) throw std::invalid_argument("form_class: 1-form required");
  if (alpha.is_zero()) throw std::invalid_argument("form_class: zero form has no class");
  ExteriorForm d = ce_d(g, alpha);
  int top = 0;
  while (!wedge_power(d, top + 1).is_zero()) ++top;
  FormClass fc;
  fc.k = top;
  fc.valid = !wedge(alpha, wedge_power(d, top)).is_zero();
  return fc;
}

namespace {

/// Restriction nondegeneracy with guards so the report stays total even
/// when earlier axioms already failed.
AxiomResult restriction_symplectic(const LieAlgebra&, const ExteriorForm& omega,
                                   const Subspace& leaf, const std::string& name) {
  if (leaf.dim() < 2)
    return {name, false, "kernel leaf has dimension " + std::to_string(leaf.dim())};
  ExteriorForm r = restrict_form(omega, leaf);
  int rk = rank_two_form(r);
  bool pass = rk == leaf.dim();
  return {name, pass, "restricted rank " + std::to_string(rk) + " on dim " + std::to_string(leaf.dim())};
}

AxiomResult restriction_contact(const ExteriorForm& alpha_top, const Subspace& leaf,
                                const std::string& name) {
  if (alpha_top.degree() != leaf.dim())
    return {name, false,
            "leaf dimension " + std::to_string(leaf.dim()) + " does not match class " +
                std::to_string(alpha_top.degree())};
  ExteriorForm r = restrict_form(alpha_top, leaf);
  return {name, !r.is_zero(), r.is_zero() ? "restriction vanishes" : "restriction is a volume form"};
}

}  // namespace

PairReport check_symplectic_pair(const LieAlgebra& g, const ExteriorForm& omega1,
                                 const ExteriorForm& omega2) {
  if (omega1.degree() != 2 || omega2.degree() != 2)
    throw std::invalid_argument("check_symplectic_pair: two 2-forms required");
  if (omega1.dim() != g.dim() || omega2.dim() != g.dim())
    throw std::invalid_argument("check_symplectic_pair: dimension mismatch");

  const int n = g.dim();
  PairReport rep;
  rep.kind = "symplectic";
  rep.dim = n;

  rep.add("omega1 nontrivial", !omega1.is_zero());
  rep.add("omega2 nontrivial", !omega2.is_zero());
  rep.add("omega1 closed", ce_d(g, omega1).is_zero());
  rep.add("omega2 closed", ce_d(g, omega2).is_zero());

  int r1 = rank_two_form(omega1);
  int r2 = rank_two_form(omega2);
  rep.k = r1 / 2;
  rep.l = r2 / 2;
  rep.add("ranks positive and complementary", r1 > 0 && r2 > 0 && r1 + r2 == n,
          "rank " + std::to_string(r1) + " + rank " + std::to_string(r2) + " vs dim " + std::to_string(n));

  Subspace k1 = kernel(omega1);
  Subspace k2 = kernel(omega2);
  bool complementary = k1.dim() + k2.dim() == n && (k1 + k2).dim() == n;
  rep.add("kernels complementary", complementary,
          "dim " + std::to_string(k1.dim()) + " + dim " + std::to_string(k2.dim()));

  rep.axioms.push_back(restriction_symplectic(g, omega1, k2, "omega1 symplectic on kernel leaves of omega2"));
  rep.axioms.push_back(restriction_symplectic(g, omega2, k1, "omega2 symplectic on kernel leaves of omega1"));

  rep.notes.push_back("kernel distributions are integrable since both forms are closed");
  rep.finalize();
  return rep;
}

PairReport check_contact_symplectic_pair(const LieAlgebra& g, const ExteriorForm& alpha,
                                         const ExteriorForm& beta) {
  if (alpha.degree() != 1 || beta.degree() != 2)
    throw std::invalid_argument("check_contact_symplectic_pair: need a 1-form and a 2-form");
  if (alpha.dim() != g.dim() || beta.dim() != g.dim())
    throw std::invalid_argument("check_contact_symplectic_pair: dimension mismatch");

  const int n = g.dim();
  PairReport rep;
  rep.kind = "contact-symplectic";
  rep.dim = n;

  rep.add("alpha nontrivial", !alpha.is_zero());
  rep.add("beta nontrivial", !beta.is_zero());
  rep.add("beta closed", ce_d(g, beta).is_zero());

  int k = 0;
  bool alpha_odd = false;
  if (!alpha.is_zero()) {
    FormClass fc = form_class(g, alpha);
    k = fc.k;
    alpha_odd = fc.valid;
  }
  rep.k = k;
  rep.add("alpha has odd class 2k+1", alpha_odd, "k = " + std::to_string(k));

  int rb = rank_two_form(beta);
  int l = rb / 2;
  rep.l = l;
  rep.add("beta has positive even rank", rb > 0, "rank " + std::to_string(rb));

  rep.add("dimension is 2k+2l+1", n == 2 * k + 2 * l + 1,
          std::to_string(n) + " vs " + std::to_string(2 * k + 2 * l + 1));

  ExteriorForm alpha_top = wedge(alpha, wedge_power(ce_d(g, alpha), k));
  Subspace ka = alpha_top.is_zero() ? Subspace::whole(n) : kernel(alpha_top);
  Subspace kb = kernel(beta);
  bool complementary = ka.dim() + kb.dim() == n && (ka + kb).dim() == n;
  rep.add("kernels complementary", complementary,
          "dim " + std::to_string(ka.dim()) + " + dim " + std::to_string(kb.dim()));

  rep.axioms.push_back(restriction_contact(alpha_top, kb, "alpha contact on kernel leaves of beta"));
  rep.axioms.push_back(restriction_symplectic(g, beta, ka, "beta symplectic on kernel leaves of alpha"));

  rep.notes.push_back("kernel distributions are integrable since the defining forms are closed");
  rep.finalize();
  return rep;
}

PairReport check_contact_pair(const LieAlgebra& g, const ExteriorForm& alpha,
                              const ExteriorForm& gamma) {
  if (alpha.degree() != 1 || gamma.degree() != 1)
    throw std::invalid_argument("check_contact_pair: two 1-forms required");
  if (alpha.dim() != g.dim() || gamma.dim() != g.dim())
    throw std::invalid_argument("check_contact_pair: dimension mismatch");

  const int n = g.dim();
  PairReport rep;
  rep.kind = "contact";
  rep.dim = n;

  rep.add("alpha nontrivial", !alpha.is_zero());
  rep.add("gamma nontrivial", !gamma.is_zero());

  int k = 0, l = 0;
  bool alpha_odd = false, gamma_odd = false;
  if (!alpha.is_zero()) {
    FormClass fc = form_class(g, alpha);
    k = fc.k;
    alpha_odd = fc.valid;
  }
  if (!gamma.is_zero()) {
    FormClass fc = form_class(g, gamma);
    l = fc.k;
    gamma_odd = fc.valid;
  }
  rep.k = k;
  rep.l = l;
  rep.add("alpha has odd class 2k+1", alpha_odd, "k = " + std::to_string(k));
  rep.add("gamma has odd class 2l+1", gamma_odd, "l = " + std::to_string(l));
  rep.add("dimension is 2k+2l+2", n == 2 * k + 2 * l + 2,
          std::to_string(n) + " vs " + std::to_string(2 * k + 2 * l + 2));

  ExteriorForm alpha_top = wedge(alpha, wedge_power(ce_d(g, alpha), k));
  ExteriorForm gamma_top = wedge(gamma, wedge_power(ce_d(g, gamma), l));
  Subspace ka = alpha_top.is_zero() ? Subspace::whole(n) : kernel(alpha_top);
  Subspace kg = gamma_top.is_zero() ? Subspace::whole(n) : kernel(gamma_top);
  bool complementary = ka.dim() + kg.dim() == n && (ka + kg).dim() == n;
  rep.add("kernels complementary", complementary,
          "dim " + std::to_string(ka.dim()) + " + dim " + std::to_string(kg.dim()));

  rep.axioms.push_back(restriction_contact(alpha_top, kg, "alpha contact on kernel leaves of gamma"));
  rep.axioms.push_back(restriction_contact(gamma_top, ka, "gamma contact on kernel leaves of alpha"));

  rep.notes.push_back("kernel distributions are integrable since the defining forms are closed");
  rep.finalize();
  return rep;
}

std::pair<ExteriorForm, ExteriorForm> pair_to_pm(const ExteriorForm& omega1,
                                                 const ExteriorForm& omega2) {
  return {omega1 + omega2, omega1 - omega2};
}

std::pair<ExteriorForm, ExteriorForm> pm_to_pair(const ExteriorForm& plus,
                                                 const ExteriorForm& minus) {
  Scalar half(Rational(1, 2));
  return {half * (plus + minus), half * (plus - minus)};
}

CoupleReport couple_type(const LieAlgebra& g, const ExteriorForm& plus,
                         const ExteriorForm& minus) {
  if (g.dim() != 4) throw std::invalid_argument("couple_type: dimension 4 required");
  if (plus.degree() != 2 || minus.degree() != 2 || plus.dim() != 4 || minus.dim() != 4)
    throw std::invalid_argument("couple_type: two 2-forms on dimension 4 required");

  CoupleReport rep;
  bool plus_closed = ce_d(g, plus).is_zero();
  bool minus_closed = ce_d(g, minus).is_zero();
  bool plus_nondeg = rank_two_form(plus) == 4;
  bool minus_nondeg = rank_two_form(minus) == 4;
  rep.checks.push_back({"plus closed", plus_closed, ""});
  rep.checks.push_back({"minus closed", minus_closed, ""});
  rep.checks.push_back({"plus nondegenerate", plus_nondeg, ""});
  rep.checks.push_back({"minus nondegenerate", minus_nondeg, ""});
  rep.inputs_admissible = plus_closed && minus_closed && plus_nondeg && minus_nondeg;
  if (!rep.inputs_admissible) {
    rep.type = CoupleType::Neither;
    return rep;
  }

  ExteriorForm mixed = wedge(plus, minus);
  ExteriorForm sq_plus = wedge(plus, plus);
  ExteriorForm sq_minus = wedge(minus, minus);
  rep.checks.push_back({"mixed wedge vanishes", mixed.is_zero(), ""});
  if (!mixed.is_zero())
    rep.type = CoupleType::Neither;
  else if (sq_plus == -sq_minus)
    rep.type = CoupleType::SymplecticPair;
  else if (sq_plus == sq_minus)
    rep.type = CoupleType::ConformalCouple;
  else
    rep.type = CoupleType::Neither;
  return rep;
}

const char* couple_type_name(CoupleType t) {
  switch (t) {
    case CoupleType::SymplecticPair: return "symplectic-pair";
    case CoupleType::ConformalCouple: return "conformal-couple";
    default: return "neither";
  }
}

}  // namespace sympair
