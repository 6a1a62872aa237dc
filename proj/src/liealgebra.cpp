#include "sympair/liealgebra.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sympair {

namespace {

int pair_index(int i, int j, int n) {
  // 1-based i < j mapped to a flat index.
  (void)n;
  return (j - 2) * (j - 1) / 2 + (i - 1);
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, std::string name) : dim_(dim), name_(std::move(name)) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("algebra dimension out of range");
  table_.resize(static_cast<std::size_t>(dim * (dim - 1) / 2));
  for (auto& v : table_) {
    v = VecX(dim);
    v.setConstant(Scalar(0));
  }
}

void LieAlgebra::set_bracket(int i, int j, const VecX& value) {
  if (i < 1 || j < 1 || i > dim_ || j > dim_ || i == j)
    throw std::invalid_argument("bracket indices out of range");
  if (value.size() != dim_) throw std::invalid_argument("bracket value has wrong dimension");
  if (i < j)
    table_[static_cast<std::size_t>(pair_index(i, j, dim_))] = value;
  else
    table_[static_cast<std::size_t>(pair_index(j, i, dim_))] = -value;
}

void LieAlgebra::set_bracket_term(int i, int j, int k, const Scalar& c) {
  if (k < 1 || k > dim_) throw std::invalid_argument("bracket output index out of range");
  VecX v = bracket_basis(i, j);
  v(k - 1) = c;
  set_bracket(i, j, v);
}

VecX LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_)
    throw std::invalid_argument("bracket indices out of range");
  if (i == j) {
    VecX z(dim_);
    z.setConstant(Scalar(0));
    return z;
  }
  if (i < j) return table_[static_cast<std::size_t>(pair_index(i, j, dim_))];
  return -table_[static_cast<std::size_t>(pair_index(j, i, dim_))];
}

VecX LieAlgebra::bracket(const VecX& x, const VecX& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  VecX out(dim_);
  out.setConstant(Scalar(0));
  for (int i = 1; i <= dim_; ++i) {
    if (x(i - 1).is_zero()) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (j == i || y(j - 1).is_zero()) continue;
      out += x(i - 1) * y(j - 1) * bracket_basis(i, j);
    }
  }
  return out;
}

Scalar LieAlgebra::structure_constant(int i, int j, int k) const {
  return bracket_basis(i, j)(k - 1);
}

bool LieAlgebra::is_unimodular() const {
  for (int i = 1; i <= dim_; ++i) {
    Scalar trace(0);
    for (int k = 1; k <= dim_; ++k) trace += structure_constant(i, k, k);
    if (!trace.is_zero()) return false;
  }
  return true;
}

std::string JacobiReport::str() const {
  if (ok) return "jacobi: ok";
  std::ostringstream os;
  os << "jacobi fails at (" << i << "," << j << "," << k << "), residual (";
  for (Eigen::Index t = 0; t < residual.size(); ++t) {
    if (t) os << ", ";
    os << residual(t).str();
  }
  os << ")";
  return os.str();
}

JacobiReport jacobi_check(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        VecX ek(n), ei(n), ej(n);
        ek.setConstant(Scalar(0)); ei.setConstant(Scalar(0)); ej.setConstant(Scalar(0));
        ei(i - 1) = Scalar(1); ej(j - 1) = Scalar(1); ek(k - 1) = Scalar(1);
        VecX residual = g.bracket(g.bracket_basis(i, j), ek) +
                        g.bracket(g.bracket_basis(j, k), ei) +
                        g.bracket(g.bracket_basis(k, i), ej);
        for (Eigen::Index t = 0; t < residual.size(); ++t) {
          if (!residual(t).is_zero()) return {false, i, j, k, residual};
        }
      }
    }
  }
  return {};
}

namespace {

ExteriorForm d_of_dual(const LieAlgebra& g, int k) {
  // d a^k = -sum_{i<j} c_ij^k a^i ^ a^j
  ExteriorForm out(g.dim(), 2);
  for (int i = 1; i <= g.dim(); ++i)
    for (int j = i + 1; j <= g.dim(); ++j)
      out.add_term(mask_of(std::vector<int>{i, j}), -g.structure_constant(i, j, k));
  return out;
}

}  // namespace

ExteriorForm ce_d(const LieAlgebra& g, const ExteriorForm& phi) {
  if (phi.dim() != g.dim()) throw std::invalid_argument("ce_d: dimension mismatch");
  ExteriorForm out(g.dim(), phi.degree() + 1);
  for (const auto& [m, c] : phi.terms()) {
    IndexMask rest = m;
    while (rest) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      IndexMask others = m ^ (IndexMask(1) << bit);
      int sign = (std::popcount(m & ((IndexMask(1) << bit) - 1)) & 1) ? -1 : 1;
      ExteriorForm dfactor = d_of_dual(g, bit + 1);
      for (const auto& [dm, dc] : dfactor.terms()) {
        int s = wedge_sign(dm, others);
        if (s == 0) continue;
        out.add_term(dm | others, Scalar(sign * s) * dc * c);
      }
    }
  }
  return out;
}

MatX ce_matrix(const LieAlgebra& g, int p) {
  const int n = g.dim();
  auto cols = masks_of_degree(n, p);
  auto rows = masks_of_degree(n, p + 1);
  MatX d(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  d.setConstant(Scalar(0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    ExteriorForm basis(n, p);
    basis.add_term(cols[c], Scalar(1));
    ExteriorForm image = ce_d(g, basis);
    for (std::size_t r = 0; r < rows.size(); ++r)
      d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = image.coefficient(rows[r]);
  }
  return d;
}

std::vector<ExteriorForm> closed_forms(const LieAlgebra& g, int p) {
  const int n = g.dim();
  if (p < 0 || p > n) return {};
  auto cols = masks_of_degree(n, p);
  MatX basis = nullspace(ce_matrix(g, p));
  std::vector<ExteriorForm> out;
  for (Eigen::Index r = 0; r < basis.rows(); ++r) {
    ExteriorForm f(n, p);
    for (std::size_t c = 0; c < cols.size(); ++c)
      f.add_term(cols[c], basis(r, static_cast<Eigen::Index>(c)));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> cohomology_dims(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<int> betti(static_cast<std::size_t>(n) + 1);
  std::vector<Eigen::Index> d_rank(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Eigen::Index> z_dim(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p <= n; ++p) {
    MatX d = ce_matrix(g, p);
    d_rank[static_cast<std::size_t>(p)] = rank_of(d);
    z_dim[static_cast<std::size_t>(p)] = d.cols() - d_rank[static_cast<std::size_t>(p)];
  }
  for (int p = 0; p <= n; ++p) {
    Eigen::Index prev_rank = (p == 0) ? 0 : d_rank[static_cast<std::size_t>(p - 1)];
    betti[static_cast<std::size_t>(p)] = static_cast<int>(z_dim[static_cast<std::size_t>(p)] - prev_rank);
  }
  return betti;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra out(a.dim() + b.dim(), a.name() + "+" + b.name());
  for (int i = 1; i <= a.dim(); ++i) {
    for (int j = i + 1; j <= a.dim(); ++j) {
      VecX v(out.dim());
      v.setConstant(Scalar(0));
      v.head(a.dim()) = a.bracket_basis(i, j);
      out.set_bracket(i, j, v);
    }
  }
  for (int i = 1; i <= b.dim(); ++i) {
    for (int j = i + 1; j <= b.dim(); ++j) {
      VecX v(out.dim());
      v.setConstant(Scalar(0));
      v.tail(b.dim()) = b.bracket_basis(i, j);
      out.set_bracket(a.dim() + i, a.dim() + j, v);
    }
  }
  return out;
}

namespace {

ExteriorForm two_form(int n, int i, int j) {
  return ExteriorForm::basis(n, {i, j});
}

CatalogEntry make_abelian(int n) {
  CatalogEntry e{"abelian" + std::to_string(n), LieAlgebra(n), {}, {}, "structure-equations"};
  e.algebra.set_name(e.name);
  if (n == 4) e.pair_forms = {two_form(4, 1, 2), two_form(4, 3, 4)};
  return e;
}

CatalogEntry make_heis3() {
  LieAlgebra g(3, "heis3");
  g.set_bracket_term(1, 2, 3, Scalar(-1));  // d a3 = a1^a2
  CatalogEntry e{"heis3", g, {}, {ExteriorForm::basis(3, {3})}, "structure-equations"};
  return e;
}

CatalogEntry make_nil3xR() {
  LieAlgebra g(4, "nil3xR");
  g.set_bracket_term(1, 2, 3, Scalar(-1));  // d a3 = a1^a2
  CatalogEntry e{"nil3xR", g, {two_form(4, 1, 3), two_form(4, 2, 4)}, {}, "structure-equations"};
  return e;
}

CatalogEntry make_nil4() {
  LieAlgebra g(4, "nil4");
  g.set_bracket_term(1, 4, 2, Scalar(-1));  // d a2 = a1^a4
  g.set_bracket_term(2, 4, 3, Scalar(-1));  // d a3 = a2^a4
  CatalogEntry e{"nil4", g, {two_form(4, 1, 2), two_form(4, 3, 4)}, {}, "structure-equations"};
  return e;
}

CatalogEntry make_sol3xR() {
  LieAlgebra g(4, "sol3xR");
  g.set_bracket_term(1, 4, 1, Scalar(-1));  // d a1 = a1^a4
  g.set_bracket_term(3, 4, 3, Scalar(1));   // d a3 = a4^a3
  CatalogEntry e{"sol3xR", g, {two_form(4, 1, 3), two_form(4, 2, 4)}, {}, "structure-equations"};
  return e;
}

CatalogEntry make_sl2xR() {
  LieAlgebra g(4, "sl2xR");
  g.set_bracket_term(1, 2, 2, Scalar(2));
  g.set_bracket_term(1, 3, 3, Scalar(-2));
  g.set_bracket_term(2, 3, 1, Scalar(1));
  return {"sl2xR", g, {}, {}, "representative-presentation"};
}

CatalogEntry make_sol4_0() {
  LieAlgebra g(4, "sol4_0");
  g.set_bracket_term(1, 4, 1, Scalar(-1));
  g.set_bracket_term(2, 4, 2, Scalar(-1));
  g.set_bracket_term(3, 4, 3, Scalar(2));
  return {"sol4_0", g, {}, {}, "representative-presentation"};
}

CatalogEntry make_sol4_1() {
  LieAlgebra g(4, "sol4_1");
  g.set_bracket_term(1, 2, 3, Scalar(-1));  // heisenberg core
  g.set_bracket_term(1, 4, 1, Scalar(-1));
  g.set_bracket_term(2, 4, 2, Scalar(1));
  return {"sol4_1", g, {}, {}, "representative-presentation"};
}

}  // namespace

LieAlgebra make_sol_mn(const Rational& a, const Rational& b) {
  Rational c = -(a + b);
  if (a == 0 || b == 0 || c == 0 || a + b == 0 || a + c == 0 || b + c == 0)
    throw std::invalid_argument("sol_mn eigenvalues must have pairwise nonzero sums");
  LieAlgebra g(4, "sol_mn");
  g.set_bracket_term(1, 4, 1, Scalar(-a));  // d a1 = a * a1^a4
  g.set_bracket_term(2, 4, 2, Scalar(-b));
  g.set_bracket_term(3, 4, 3, Scalar(-c));
  return g;
}

CatalogEntry catalog_get(const std::string& name, const std::vector<Rational>& params) {
  auto build = [&]() -> CatalogEntry {
    if (name.rfind("abelian", 0) == 0) {
      int n = std::stoi(name.substr(7));
      if (n < 2 || n > kMaxDim || n % 2 != 0)
        throw std::invalid_argument("abelian entries are abelian2..abelian16, even");
      return make_abelian(n);
    }
    if (name == "heis3") return make_heis3();
    if (name == "nil3xR") return make_nil3xR();
    if (name == "nil4") return make_nil4();
    if (name == "sol3xR") return make_sol3xR();
    if (name == "sl2xR") return make_sl2xR();
    if (name == "sol4_0") return make_sol4_0();
    if (name == "sol4_1") return make_sol4_1();
    if (name == "sol_mn") {
      Rational a = params.size() > 0 ? params[0] : Rational(1);
      Rational b = params.size() > 1 ? params[1] : Rational(2);
      return {"sol_mn", make_sol_mn(a, b), {}, {}, "representative-presentation"};
    }
    throw std::invalid_argument("unknown catalog name: " + name);
  };
  CatalogEntry entry = build();
  JacobiReport jr = jacobi_check(entry.algebra);
  if (!jr.ok) throw std::logic_error("catalog entry fails jacobi: " + entry.name);
  return entry;
}

std::vector<std::string> catalog_names() {
  return {"abelian2", "abelian4", "abelian6", "heis3", "nil3xR",
          "nil4",     "sol3xR",   "sl2xR",    "sol4_0", "sol4_1", "sol_mn"};
}

}  // namespace sympair
