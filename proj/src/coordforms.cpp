#include "sympair/coordforms.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sympair {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

void Poly::add_term(const std::vector<int>& exponents, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(exponents.size()) != nvars_)
    throw std::invalid_argument("exponent tuple has wrong length");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
  if (l.nvars_ != r.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out(l.nvars_);
  for (const auto& [ea, ca] : l.terms_) {
    for (const auto& [eb, cb] : r.terms_) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::derivative(int i) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("derivative index out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    int exp = e[static_cast<std::size_t>(i - 1)];
    if (exp == 0) continue;
    std::vector<int> reduced(e);
    reduced[static_cast<std::size_t>(i - 1)] -= 1;
    out.add_term(reduced, c * exp);
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong length");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& args) const {
  if (static_cast<int>(args.size()) != nvars_)
    throw std::invalid_argument("substitution needs one argument per variable");
  int out_vars = args.empty() ? 0 : args[0].nvars();
  for (const auto& a : args)
    if (a.nvars() != out_vars) throw std::invalid_argument("substitution arguments disagree");
  Poly out(out_vars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * args[i];
    out += term;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

PolyForm::PolyForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("chart dimension out of range");
  if (degree < 0) throw std::invalid_argument("negative degree");
}

PolyForm PolyForm::monomial(int dim, std::initializer_list<int> indices, const Poly& c) {
  std::vector<int> idx(indices);
  PolyForm f(dim, static_cast<int>(idx.size()));
  f.add_term(mask_of(idx), c);
  return f;
}

PolyForm PolyForm::basis(int dim, std::initializer_list<int> indices) {
  return monomial(dim, indices, Poly::constant(dim, Rational(1)));
}

Poly PolyForm::coefficient(IndexMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Poly(dim_) : it->second;
}

void PolyForm::add_term(IndexMask mask, const Poly& c) {
  if (c.is_zero()) return;
  if (c.nvars() != dim_) throw std::invalid_argument("coefficient variable count mismatch");
  if (degree_ > dim_) return;
  if (std::popcount(mask) != degree_) throw std::invalid_argument("tuple size does not match degree");
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm PolyForm::operator-() const {
  PolyForm out(dim_, degree_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("poly form sum: dimension or degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("poly form difference: dimension or degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

std::string PolyForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i : indices_of(m)) os << "*dx" << i;
  }
  return os.str();
}

PolyMap PolyMap::identity(int dim) {
  PolyMap f{dim, dim, {}};
  for (int i = 1; i <= dim; ++i) f.components.push_back(Poly::variable(dim, i));
  return f;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.source_dim != inner.target_dim)
    throw std::invalid_argument("compose: chart dimensions incompatible");
  PolyMap out{inner.source_dim, outer.target_dim, {}};
  for (const auto& comp : outer.components) out.components.push_back(comp.substitute(inner.components));
  return out;
}

PolyForm pd(const PolyForm& phi) {
  PolyForm out(phi.dim(), phi.degree() + 1);
  for (const auto& [m, c] : phi.terms()) {
    for (int i = 1; i <= phi.dim(); ++i) {
      IndexMask bit = IndexMask(1) << (i - 1);
      if (m & bit) continue;
      Poly dc = c.derivative(i);
      if (dc.is_zero()) continue;
      int s = wedge_sign(bit, m);
      if (s < 0) dc = -dc;
      out.add_term(m | bit, dc);
    }
  }
  return out;
}

PolyForm pwedge(const PolyForm& phi, const PolyForm& psi) {
  if (phi.dim() != psi.dim()) throw std::invalid_argument("pwedge: chart mismatch");
  PolyForm out(phi.dim(), phi.degree() + psi.degree());
  for (const auto& [ma, ca] : phi.terms()) {
    for (const auto& [mb, cb] : psi.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Poly c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  }
  return out;
}

PolyForm pullback(const PolyMap& f, const PolyForm& phi) {
  if (f.target_dim != phi.dim()) throw std::invalid_argument("pullback: chart mismatch");
  if (static_cast<int>(f.components.size()) != f.target_dim)
    throw std::invalid_argument("pullback: map needs one component per target coordinate");
  const int src = f.source_dim;

  // differentials of the components as 1-forms on the source chart
  std::vector<PolyForm> dcomp;
  dcomp.reserve(f.components.size());
  for (const auto& comp : f.components) {
    PolyForm d(src, 1);
    for (int j = 1; j <= src; ++j) d.add_term(IndexMask(1) << (j - 1), comp.derivative(j));
    dcomp.push_back(std::move(d));
  }

  PolyForm out(src, phi.degree());
  for (const auto& [m, c] : phi.terms()) {
    PolyForm term(src, 0);
    term.add_term(0, c.substitute(f.components));
    for (int i : indices_of(m)) term = pwedge(term, dcomp[static_cast<std::size_t>(i - 1)]);
    out += term;
  }
  return out;
}

bool InvarianceReport::all() const {
  for (bool b : invariant)
    if (!b) return false;
  return true;
}

InvarianceReport invariance_check(const PolyForm& phi, const std::vector<PolyMap>& generators) {
  InvarianceReport rep;
  for (const auto& gen : generators) {
    if (gen.source_dim != gen.target_dim || gen.source_dim != phi.dim())
      throw std::invalid_argument("invariance_check: square chart maps required");
    rep.invariant.push_back(pullback(gen, phi) == phi);
  }
  return rep;
}

ExteriorForm evaluate_at(const PolyForm& phi, const std::vector<Rational>& point) {
  ExteriorForm out(phi.dim(), phi.degree());
  for (const auto& [m, c] : phi.terms()) out.add_term(m, Scalar(c.eval(point)));
  return out;
}

GenericRankReport generic_rank(const PolyForm& phi, const std::vector<std::vector<Rational>>& samples) {
  if (phi.degree() != 2 || phi.dim() != 4)
    throw std::invalid_argument("generic_rank: 2-form on a 4-dimensional chart required");
  if (samples.empty()) throw std::invalid_argument("generic_rank: empty sample list");
  GenericRankReport rep;
  rep.square_identically_zero = pwedge(phi, phi).is_zero();
  rep.min_rank = 5;
  rep.max_rank = -1;
  for (const auto& pt : samples) {
    int r = rank_two_form(evaluate_at(phi, pt));
    rep.ranks.push_back(r);
    if (r < rep.min_rank) rep.min_rank = r;
    if (r > rep.max_rank) rep.max_rank = r;
  }
  return rep;
}

std::vector<std::vector<Rational>> default_grid(int dim) {
  const std::vector<Rational> ticks = {Rational(-1), Rational(-1, 2), Rational(0),
                                       Rational(1, 2), Rational(1)};
  std::vector<std::vector<Rational>> grid;
  std::vector<std::size_t> odo(static_cast<std::size_t>(dim), 0);
  while (true) {
    std::vector<Rational> pt;
    pt.reserve(static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < odo.size(); ++i) pt.push_back(ticks[odo[i]]);
    grid.push_back(std::move(pt));
    std::size_t i = 0;
    while (i < odo.size() && ++odo[i] == ticks.size()) odo[i++] = 0;
    if (i == odo.size()) break;
  }
  return grid;
}

}  // namespace sympair
