#include "sympair/fourman.hpp"

#include <stdexcept>

namespace sympair {

bool T2BundleData::shear_lambda(int& lambda) const {
  if (c[0] != 1 || c[2] != 0 || c[3] != 1) return false;
  lambda = c[1];
  return true;
}

bool T2BundleData::negative_shear_lambda(int& lambda) const {
  if (c[0] != -1 || c[2] != 0 || c[3] != -1) return false;
  lambda = c[1];
  return true;
}

namespace {

struct ExceptionalEntry {
  std::array<int, 4> c;
  int m, n;
};

// The finite list of flat total spaces, stored exactly as classified.
const ExceptionalEntry kFlatEntries[] = {
    {{0, -1, 1, -1}, 0, 0},
    {{0, -1, 1, -1}, -1, 0},
    {{0, -1, 1, 0}, 0, 0},
    {{0, -1, 1, 0}, -1, 0},
    {{1, -1, 1, 0}, 0, 0},
    {{-1, 0, 0, -1}, 0, 0},
    {{-1, 0, 0, -1}, -1, 0},
};

}  // namespace

std::vector<char> matching_rows(const T2BundleData& b) {
  if (b.det() != 1) throw std::invalid_argument("monodromy must have determinant 1");
  if (b.d != 1 && b.d != -1) throw std::invalid_argument("second monodromy must be I or -I");

  std::vector<char> rows;
  int lambda = 0;
  if (b.d == 1) {
    if (b.is_identity() && b.euler_m == 0 && b.euler_n == 0) rows.push_back('a');
    if (b.is_identity() && !(b.euler_m == 0 && b.euler_n == 0)) rows.push_back('b');
    for (const auto& e : kFlatEntries)
      if (b.c == e.c && b.euler_m == e.m && b.euler_n == e.n) {
        rows.push_back('c');
        break;
      }
    if (b.shear_lambda(lambda) && lambda != 0 && b.euler_n != 0) rows.push_back('d');
    if (b.negative_shear_lambda(lambda) && lambda != 0) rows.push_back('e');
    if (b.trace() >= 3 || b.trace() <= -3) rows.push_back('g');
  } else {
    if (b.shear_lambda(lambda) && lambda != 0) rows.push_back('f');
    if (b.trace() >= 3) rows.push_back('h');
  }
  return rows;
}

BundleClass classify_t2_bundle(const T2BundleData& b) {
  std::vector<char> rows = matching_rows(b);
  if (rows.empty()) throw std::domain_error("not in table normal form");
  if (rows.size() > 1) throw std::logic_error("normal form matched more than one row");

  BundleClass out;
  out.row = rows.front();
  switch (out.row) {
    case 'a': out.b1 = 4; out.geometry = "R4"; break;
    case 'b': out.b1 = 3; out.geometry = "Nil3xR"; break;
    case 'c': out.b1 = 2; out.geometry = "R4"; break;
    case 'd': out.b1 = 2; out.geometry = "Nil4"; break;
    case 'e': out.b1 = 2; out.geometry = "Nil3xR"; out.coordinate_route = true; break;
    case 'f': out.b1 = 2; out.geometry = "Nil3xR"; out.coordinate_route = true; break;
    case 'g': out.b1 = 2; out.geometry = "Sol3xR"; break;
    case 'h': out.b1 = 2; out.geometry = "Sol3xR"; break;
    default: break;
  }
  return out;
}

GompfFeasibility gompf_feasible(const PairedManifoldDescriptor& d1, std::size_t leaf1,
                                const PairedManifoldDescriptor& d2, std::size_t leaf2) {
  if (leaf1 >= d1.leaves.size() || leaf2 >= d2.leaves.size())
    throw std::invalid_argument("gompf_feasible: leaf index out of range");
  const LeafData& s1 = d1.leaves[leaf1];
  const LeafData& s2 = d2.leaves[leaf2];

  GompfFeasibility out;
  out.scale = Scalar(1);
  if (s1.area.sign() <= 0 || s2.area.sign() <= 0)
    throw std::invalid_argument("gompf_feasible: leaf areas must be positive");
  if (!s1.trivial_normal_bundle || !s2.trivial_normal_bundle) {
    out.reason = "a chosen leaf lacks a trivial normal bundle";
    return out;
  }
  if (!s1.product_neighbourhood || !s2.product_neighbourhood) {
    out.reason = "a chosen leaf lacks a product neighbourhood";
    return out;
  }
  if (s1.genus != s2.genus) {
    out.reason = "leaf genera differ (" + std::to_string(s1.genus) + " vs " +
                 std::to_string(s2.genus) + ")";
    return out;
  }
  out.feasible = true;
  out.scale = s1.area / s2.area;
  return out;
}

PairedManifoldDescriptor gompf_invariants(const PairedManifoldDescriptor& d1, std::size_t leaf1,
                                          const PairedManifoldDescriptor& d2, std::size_t leaf2) {
  GompfFeasibility feas = gompf_feasible(d1, leaf1, d2, leaf2);
  if (!feas.feasible)
    throw std::invalid_argument("gompf_invariants: infeasible sum: " + feas.reason);
  if (!d1.pontryagin_consistent() || !d2.pontryagin_consistent())
    throw std::invalid_argument("gompf_invariants: input Pontryagin ledger violates p1(F)+p1(G)=3*signature");

  const int g = d1.leaves[leaf1].genus;
  PairedManifoldDescriptor out;
  out.euler_characteristic =
      d1.euler_characteristic + d2.euler_characteristic - 2 * (2 - 2 * static_cast<long>(g));
  out.signature = d1.signature + d2.signature;
  out.p1_tangent_first = d1.p1_tangent_first + d2.p1_tangent_first;
  out.p1_tangent_second = d1.p1_tangent_second + d2.p1_tangent_second;
  if (!out.pontryagin_consistent())
    throw std::logic_error("gompf_invariants: combined ledger lost p1(F)+p1(G)=3*signature");

  for (std::size_t i = 0; i < d1.leaves.size(); ++i)
    if (i != leaf1) out.leaves.push_back(d1.leaves[i]);
  for (std::size_t i = 0; i < d2.leaves.size(); ++i) {
    if (i == leaf2) continue;
    LeafData scaled = d2.leaves[i];
    scaled.area = scaled.area * feas.scale;
    out.leaves.push_back(scaled);
  }
  return out;
}

RiemannianPossible pasternack_obstruction(long p1_normal, int codim) {
  if (codim < 1) throw std::invalid_argument("pasternack_obstruction: codimension must be positive");
  if (p1_normal != 0 && 4 > codim) return RiemannianPossible::No;
  return RiemannianPossible::Unknown;
}

const char* riemannian_possible_name(RiemannianPossible r) {
  return r == RiemannianPossible::No ? "no" : "unknown";
}

}  // namespace sympair
