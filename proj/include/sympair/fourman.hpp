#ifndef SYMPAIR_FOURMAN_HPP
#define SYMPAIR_FOURMAN_HPP

#include <array>
#include <string>
#include <vector>

#include "sympair/scalar.hpp"

namespace sympair {

/// Normal-form data of an oriented torus bundle over the torus: the two
/// commuting monodromies (the second is +-identity) and the Euler class.
struct T2BundleData {
  std::array<int, 4> c{1, 0, 0, 1};  // row-major 2x2, det must be 1
  int d = 1;                         // +1 for I, -1 for -I
  int euler_m = 0, euler_n = 0;

  int trace() const { return c[0] + c[3]; }
  int det() const { return c[0] * c[3] - c[1] * c[2]; }
  bool is_identity() const { return c == std::array<int, 4>{1, 0, 0, 1}; }
  bool is_minus_identity() const { return c == std::array<int, 4>{-1, 0, 0, -1}; }
  /// Unipotent shear [[1, l], [0, 1]]; returns false unless of that shape.
  bool shear_lambda(int& lambda) const;
  /// Negative shear [[-1, l], [0, -1]].
  bool negative_shear_lambda(int& lambda) const;
};

struct BundleClass {
  char row = '?';  // 'a'..'h'
  int b1 = 0;
  std::string geometry;  // R4, Nil3xR, Nil4, Sol3xR
  /// True when the row's verification route is the coordinate-chart one
  /// rather than a left-invariant pair on the model group.
  bool coordinate_route = false;
};

/// All classification rows whose stated conditions the data satisfies.
std::vector<char> matching_rows(const T2BundleData& b);

/// Classifies against the normal-form table; throws std::domain_error
/// ("not in table normal form") when no row matches and std::logic_error
/// when more than one does.
BundleClass classify_t2_bundle(const T2BundleData& b);

/// Closed leaf of a codimension-2 kernel foliation with the data needed
/// for the cut-and-paste feasibility check.
struct LeafData {
  int genus = 0;
  Scalar area;  // integral of the transverse 2-form, must be positive
  bool trivial_normal_bundle = false;
  bool product_neighbourhood = false;
};

struct PairedManifoldDescriptor {
  long euler_characteristic = 0;
  long signature = 0;
  long p1_tangent_first = 0;   // first Pontryagin number of the first foliation bundle
  long p1_tangent_second = 0;  // and of the complementary one
  std::vector<LeafData> leaves;

  /// The two foliation bundles sum to the tangent bundle.
  bool pontryagin_consistent() const {
    return p1_tangent_first + p1_tangent_second == 3 * signature;
  }
};

struct GompfFeasibility {
  bool feasible = false;
  Scalar scale;  // factor applied to the second transverse form; 1 = none
  std::string reason;
};

/// Matching condition along chosen closed leaves: both leaves need the
/// product flags, equal genus, and the areas fix the scaling constant.
GompfFeasibility gompf_feasible(const PairedManifoldDescriptor& d1, std::size_t leaf1,
                                const PairedManifoldDescriptor& d2, std::size_t leaf2);

/// Invariants of the sum along a genus-g leaf; Euler characteristics glue
/// by the standard cut-and-paste count, signatures add, and the Pontryagin
/// ledger is re-verified.
PairedManifoldDescriptor gompf_invariants(const PairedManifoldDescriptor& d1, std::size_t leaf1,
                                          const PairedManifoldDescriptor& d2, std::size_t leaf2);

/// One-directional vanishing criterion for Riemannian foliations: a
/// nonzero degree-4 Pontryagin number of the normal bundle in codimension
/// below 4 rules a Riemannian foliation out; otherwise silent.
enum class RiemannianPossible { No, Unknown };
RiemannianPossible pasternack_obstruction(long p1_normal, int codim);

const char* riemannian_possible_name(RiemannianPossible r);

}  // namespace sympair

#endif  // SYMPAIR_FOURMAN_HPP
