#include "sympair/exterior.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sympair {

IndexMask mask_of(std::span<const int> indices) {
  IndexMask m = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDim) throw std::invalid_argument("index out of range");
    IndexMask bit = IndexMask(1) << (i - 1);
    if (m & bit) throw std::invalid_argument("repeated index in tuple");
    m |= bit;
  }
  return m;
}

std::vector<int> indices_of(IndexMask mask) {
  std::vector<int> out;
  while (mask) {
    int bit = std::countr_zero(mask);
    out.push_back(bit + 1);
    mask &= mask - 1;
  }
  return out;
}

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inversions = 0;
  IndexMask rest = b;
  while (rest) {
    int bit = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<IndexMask> masks_of_degree(int dim, int degree) {
  std::vector<IndexMask> out;
  if (degree < 0 || degree > dim) return out;
  if (degree == 0) {
    out.push_back(0);
    return out;
  }
  IndexMask limit = (dim >= 32) ? ~IndexMask(0) : (IndexMask(1) << dim);
  for (IndexMask m = (IndexMask(1) << degree) - 1; m < limit;) {
    out.push_back(m);
    // Gosper's hack: next mask with the same popcount.
    IndexMask c = m & -m;
    IndexMask r = m + c;
    if (r >= limit || r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

ExteriorForm::ExteriorForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("ambient dimension out of range");
  if (degree < 0) throw std::invalid_argument("negative degree");
}

ExteriorForm ExteriorForm::basis(int dim, std::initializer_list<int> indices) {
  std::vector<int> idx(indices);
  return monomial(dim, idx, Scalar(1));
}

ExteriorForm ExteriorForm::monomial(int dim, std::span<const int> indices, const Scalar& c) {
  ExteriorForm f(dim, static_cast<int>(indices.size()));
  for (int i : indices)
    if (i > dim) throw std::invalid_argument("index exceeds ambient dimension");
  f.add_term(mask_of(indices), c);
  return f;
}

Scalar ExteriorForm::coefficient(IndexMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ExteriorForm::add_term(IndexMask mask, const Scalar& c) {
  if (c.is_zero()) return;
  if (degree_ > dim_) return;  // forms beyond top degree are identically zero
  if (std::popcount(mask) != degree_) throw std::invalid_argument("tuple size does not match degree");
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm out(dim_, degree_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("form sum: dimension or degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("form difference: dimension or degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string ExteriorForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i : indices_of(m)) os << "*a" << i;
    if (m == 0) os << "*1";
  }
  return os.str();
}

ExteriorForm wedge(const ExteriorForm& phi, const ExteriorForm& psi) {
  if (phi.dim() != psi.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  ExteriorForm out(phi.dim(), phi.degree() + psi.degree());
  for (const auto& [ma, ca] : phi.terms()) {
    for (const auto& [mb, cb] : psi.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.add_term(ma | mb, Scalar(s) * ca * cb);
    }
  }
  return out;
}

ExteriorForm wedge_power(const ExteriorForm& phi, int k) {
  if (k < 0) throw std::invalid_argument("wedge_power: negative exponent");
  ExteriorForm out(phi.dim(), 0);
  out.add_term(0, Scalar(1));
  for (int i = 0; i < k; ++i) out = wedge(out, phi);
  return out;
}

ExteriorForm contract(const VecX& v, const ExteriorForm& phi) {
  if (v.size() != phi.dim()) throw std::invalid_argument("contract: dimension mismatch");
  if (phi.degree() < 1) throw std::invalid_argument("contract: degree must be at least 1");
  ExteriorForm out(phi.dim(), phi.degree() - 1);
  for (const auto& [m, c] : phi.terms()) {
    IndexMask rest = m;
    while (rest) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      if (v(bit).is_zero()) continue;
      IndexMask below = m & ((IndexMask(1) << bit) - 1);
      int sign = (std::popcount(below) & 1) ? -1 : 1;
      out.add_term(m ^ (IndexMask(1) << bit), Scalar(sign) * v(bit) * c);
    }
  }
  return out;
}

Scalar evaluate(const ExteriorForm& phi, const MatX& vectors) {
  if (vectors.rows() != phi.dim()) throw std::invalid_argument("evaluate: dimension mismatch");
  if (vectors.cols() != phi.degree()) throw std::invalid_argument("evaluate: arity mismatch");
  const int p = phi.degree();
  Scalar total(0);
  for (const auto& [m, c] : phi.terms()) {
    std::vector<int> rows = indices_of(m);
    MatX minor(p, p);
    for (int r = 0; r < p; ++r)
      for (int col = 0; col < p; ++col) minor(r, col) = vectors(rows[r] - 1, col);
    total += c * determinant(minor);
  }
  return total;
}

int rank_two_form(const ExteriorForm& omega) {
  if (omega.degree() != 2) throw std::invalid_argument("rank_two_form: degree 2 required");
  const int n = omega.dim();
  MatX a(n, n);
  a.setConstant(Scalar(0));
  for (const auto& [m, c] : omega.terms()) {
    auto idx = indices_of(m);
    a(idx[0] - 1, idx[1] - 1) = c;
    a(idx[1] - 1, idx[0] - 1) = -c;
  }
  int r = static_cast<int>(rank_of(a));
  if (r % 2 != 0) throw std::logic_error("skew rank must be even");
  if (n % 2 == 0) {
    bool top_power_nonzero = !wedge_power(omega, n / 2).is_zero();
    if ((r == n) != top_power_nonzero)
      throw std::logic_error("rank cross-check against top wedge power failed");
  }
  return r;
}

Subspace kernel(const ExteriorForm& phi) {
  const int n = phi.dim();
  if (phi.degree() < 1) throw std::invalid_argument("kernel: degree must be at least 1");
  auto rows = masks_of_degree(n, phi.degree() - 1);
  MatX m(static_cast<Eigen::Index>(rows.size()), n);
  m.setConstant(Scalar(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    IndexMask s = rows[r];
    for (int i = 0; i < n; ++i) {
      IndexMask bit = IndexMask(1) << i;
      if (s & bit) continue;
      Scalar c = phi.coefficient(s | bit);
      if (c.is_zero()) continue;
      int sign = (std::popcount(s & (bit - 1)) & 1) ? -1 : 1;
      m(static_cast<Eigen::Index>(r), i) = Scalar(sign) * c;
    }
  }
  return Subspace::from_spanning(n, nullspace(m));
}

ExteriorForm restrict_form(const ExteriorForm& phi, const Subspace& s) {
  if (phi.dim() != s.ambient()) throw std::invalid_argument("restrict: ambient dimension mismatch");
  const int k = s.dim();
  const int p = phi.degree();
  if (p > k) throw std::invalid_argument("restrict: degree exceeds subspace dimension");
  ExteriorForm out(k, p);
  for (IndexMask target : masks_of_degree(k, p)) {
    auto cols = indices_of(target);
    MatX vectors(phi.dim(), p);
    for (int c = 0; c < p; ++c) vectors.col(c) = s.basis_vector(cols[c] - 1);
    out.add_term(target, evaluate(phi, vectors));
  }
  return out;
}

Subspace Subspace::from_spanning(int ambient, const MatX& spanning_rows) {
  if (spanning_rows.cols() != ambient && spanning_rows.rows() > 0)
    throw std::invalid_argument("subspace: ambient dimension mismatch");
  MatX r = spanning_rows;
  Eigen::Index rank = row_reduce(r);
  Subspace s(ambient);
  s.basis_ = r.topRows(rank);
  return s;
}

Subspace Subspace::whole(int ambient) {
  return from_spanning(ambient, MatX::Identity(ambient, ambient));
}

bool Subspace::contains(const VecX& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  MatX stacked(basis_.rows() + 1, ambient_);
  stacked.topRows(basis_.rows()) = basis_;
  stacked.row(basis_.rows()) = v.transpose();
  return rank_of(stacked) == basis_.rows();
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.basis_.rows() != b.basis_.rows()) return false;
  for (Eigen::Index r = 0; r < a.basis_.rows(); ++r)
    for (Eigen::Index c = 0; c < a.basis_.cols(); ++c)
      if (a.basis_(r, c) != b.basis_(r, c)) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace sum: ambient mismatch");
  MatX stacked(a.basis().rows() + b.basis().rows(), a.ambient());
  stacked.topRows(a.basis().rows()) = a.basis();
  stacked.bottomRows(b.basis().rows()) = b.basis();
  return Subspace::from_spanning(a.ambient(), stacked);
}

}  // namespace sympair
