#include <doctest.h>

#include "sympair/fourman.hpp"
#include "sympair/liealgebra.hpp"
#include "sympair/search.hpp"

using namespace sympair;

namespace {

T2BundleData bundle(std::array<int, 4> c, int d, int m, int n) {
  T2BundleData b;
  b.c = c;
  b.d = d;
  b.euler_m = m;
  b.euler_n = n;
  return b;
}

LeafData leaf(int genus, const Rational& area, bool trivial = true, bool product = true) {
  return {genus, Scalar(area), trivial, product};
}

}  // namespace

TEST_CASE("classification of the printed normal forms") {
  BundleClass a = classify_t2_bundle(bundle({1, 0, 0, 1}, 1, 0, 0));
  CHECK(a.row == 'a');
  CHECK(a.b1 == 4);
  CHECK(a.geometry == "R4");

  BundleClass b = classify_t2_bundle(bundle({1, 0, 0, 1}, 1, 2, 5));
  CHECK(b.row == 'b');
  CHECK(b.b1 == 3);
  CHECK(b.geometry == "Nil3xR");

  BundleClass g = classify_t2_bundle(bundle({2, 1, 1, 1}, 1, 0, 0));
  CHECK(g.row == 'g');
  CHECK(g.b1 == 2);
  CHECK(g.geometry == "Sol3xR");
  CHECK(!g.coordinate_route);

  BundleClass d = classify_t2_bundle(bundle({1, 2, 0, 1}, 1, 0, 3));
  CHECK(d.row == 'd');
  CHECK(d.geometry == "Nil4");

  BundleClass e = classify_t2_bundle(bundle({-1, 1, 0, -1}, 1, 7, 0));
  CHECK(e.row == 'e');
  CHECK(e.geometry == "Nil3xR");
  CHECK(e.coordinate_route);

  BundleClass f = classify_t2_bundle(bundle({1, 1, 0, 1}, -1, 0, 0));
  CHECK(f.row == 'f');
  CHECK(f.coordinate_route);

  BundleClass h = classify_t2_bundle(bundle({3, 1, 2, 1}, -1, 1, 0));
  CHECK(h.row == 'h');
  CHECK(h.geometry == "Sol3xR");
}

TEST_CASE("all seven flat entries match row c") {
  const std::array<int, 4> mats[] = {
      {0, -1, 1, -1}, {0, -1, 1, 0}, {1, -1, 1, 0}, {-1, 0, 0, -1}};
  const std::pair<std::array<int, 4>, std::pair<int, int>> entries[] = {
      {mats[0], {0, 0}}, {mats[0], {-1, 0}}, {mats[1], {0, 0}}, {mats[1], {-1, 0}},
      {mats[2], {0, 0}}, {mats[3], {0, 0}},  {mats[3], {-1, 0}},
  };
  for (const auto& [c, euler] : entries) {
    BundleClass cls = classify_t2_bundle(bundle(c, 1, euler.first, euler.second));
    CHECK(cls.row == 'c');
    CHECK(cls.b1 == 2);
    CHECK(cls.geometry == "R4");
  }
}

TEST_CASE("inputs outside the table are refused") {
  // negative trace with the second monodromy -I is not listed
  CHECK_THROWS_AS(classify_t2_bundle(bundle({-2, 1, 1, -1}, -1, 0, 0)), std::domain_error);
  // identity with -I is not listed either
  CHECK_THROWS_AS(classify_t2_bundle(bundle({1, 0, 0, 1}, -1, 0, 0)), std::domain_error);
  // a unipotent shear with zero second Euler component falls between rows
  CHECK_THROWS_AS(classify_t2_bundle(bundle({1, 2, 0, 1}, 1, 3, 0)), std::domain_error);
  // flat-list matrices with an unlisted Euler class
  CHECK_THROWS_AS(classify_t2_bundle(bundle({-1, 0, 0, -1}, 1, 0, 1)), std::domain_error);
  // determinant must be one
  CHECK_THROWS_AS(classify_t2_bundle(bundle({1, 0, 0, -1}, 1, 0, 0)), std::invalid_argument);
}

TEST_CASE("rows are mutually exclusive over the small enumeration box") {
  long total = 0, matched = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          if (a * d - b * c != 1) continue;
          for (int dd : {1, -1})
            for (int m = -3; m <= 3; ++m)
              for (int n = -3; n <= 3; ++n) {
                auto rows = matching_rows(bundle({a, b, c, d}, dd, m, n));
                ++total;
                if (!rows.empty()) ++matched;
                CHECK(rows.size() <= 1);
              }
        }
  CHECK(total > 5000);
  CHECK(matched > 500);
}

TEST_CASE("every geometry in the table has an invariant pair on its model algebra") {
  const char* geo_algebra[] = {"abelian4", "nil3xR", "nil4", "sol3xR"};
  for (const char* name : geo_algebra) CHECK(has_invariant_symplectic_pair(catalog_get(name).algebra));
}

TEST_CASE("gluing feasibility") {
  PairedManifoldDescriptor d1{4, 2, 6, 0, {leaf(2, Rational(3))}};
  PairedManifoldDescriptor d2{4, -2, -6, 0, {leaf(2, Rational(3))}};

  GompfFeasibility same = gompf_feasible(d1, 0, d2, 0);
  CHECK(same.feasible);
  CHECK(same.scale == Scalar(1));

  PairedManifoldDescriptor d3{4, 0, 0, 0, {leaf(3, Rational(2))}};
  PairedManifoldDescriptor d4{4, 0, 0, 0, {leaf(3, Rational(5))}};
  GompfFeasibility scaled = gompf_feasible(d3, 0, d4, 0);
  CHECK(scaled.feasible);
  CHECK(scaled.scale == Scalar(Rational(2, 5)));

  // symmetric up to inverting the scale
  GompfFeasibility inverse_dir = gompf_feasible(d4, 0, d3, 0);
  CHECK(inverse_dir.feasible);
  CHECK(inverse_dir.scale == Scalar(Rational(5, 2)));

  GompfFeasibility genus_mismatch = gompf_feasible(d1, 0, d3, 0);
  CHECK(!genus_mismatch.feasible);

  PairedManifoldDescriptor no_flags{4, 0, 0, 0, {leaf(2, Rational(3), false, true)}};
  GompfFeasibility flags = gompf_feasible(no_flags, 0, d1, 0);
  CHECK(!flags.feasible);
  CHECK(flags.reason.find("normal bundle") != std::string::npos);
}

TEST_CASE("glued invariants") {
  // two torus products along torus leaves: everything vanishes
  PairedManifoldDescriptor t1{0, 0, 0, 0, {leaf(1, Rational(1))}};
  PairedManifoldDescriptor sum = gompf_invariants(t1, 0, t1, 0);
  CHECK(sum.euler_characteristic == 0);
  CHECK(sum.signature == 0);
  CHECK(sum.pontryagin_consistent());

  // genus-2 leaf with chi = 4 on both sides: 4 + 4 - 2(2-4) = 12
  PairedManifoldDescriptor g2a{4, 2, 6, 0, {leaf(2, Rational(1))}};
  PairedManifoldDescriptor g2b{4, 3, 0, 9, {leaf(2, Rational(1))}};
  PairedManifoldDescriptor s2 = gompf_invariants(g2a, 0, g2b, 0);
  CHECK(s2.euler_characteristic == 12);
  CHECK(s2.signature == 5);
  CHECK(s2.p1_tangent_first == 6);
  CHECK(s2.p1_tangent_second == 9);
  CHECK(s2.pontryagin_consistent());

  // mirroring the nonzero-signature construction: both bundles keep
  // nonzero Pontryagin numbers in the combined ledger
  PairedManifoldDescriptor m1{6, 4, 12, 0, {leaf(3, Rational(2))}};
  PairedManifoldDescriptor m2{8, 4, 0, 12, {leaf(3, Rational(7))}};
  PairedManifoldDescriptor s3 = gompf_invariants(m1, 0, m2, 0);
  CHECK(s3.signature == 8);
  CHECK(s3.p1_tangent_first != 0);
  CHECK(s3.p1_tangent_second != 0);
  CHECK(pasternack_obstruction(s3.p1_tangent_first, 2) == RiemannianPossible::No);
  CHECK(pasternack_obstruction(s3.p1_tangent_second, 2) == RiemannianPossible::No);

  // leftover leaves carry over, with the second side rescaled
  PairedManifoldDescriptor l1{4, 0, 0, 0, {leaf(2, Rational(1)), leaf(5, Rational(4))}};
  PairedManifoldDescriptor l2{4, 0, 0, 0, {leaf(2, Rational(3)), leaf(7, Rational(6))}};
  PairedManifoldDescriptor s4 = gompf_invariants(l1, 0, l2, 0);
  REQUIRE(s4.leaves.size() == 2);
  CHECK(s4.leaves[0].genus == 5);
  CHECK(s4.leaves[1].genus == 7);
  CHECK(s4.leaves[1].area == Scalar(Rational(2)));  // 6 * (1/3)
}

TEST_CASE("inconsistent ledgers are rejected") {
  PairedManifoldDescriptor bad{4, 2, 1, 1, {leaf(2, Rational(1))}};  // 1+1 != 6
  PairedManifoldDescriptor ok{4, 0, 0, 0, {leaf(2, Rational(1))}};
  CHECK(!bad.pontryagin_consistent());
  CHECK_THROWS_AS(gompf_invariants(bad, 0, ok, 0), std::invalid_argument);
  CHECK_THROWS_AS(gompf_invariants(ok, 2, ok, 0), std::invalid_argument);
}

TEST_CASE("vanishing criterion is one-directional") {
  CHECK(pasternack_obstruction(6, 2) == RiemannianPossible::No);
  CHECK(pasternack_obstruction(0, 2) == RiemannianPossible::Unknown);
  CHECK(pasternack_obstruction(6, 4) == RiemannianPossible::Unknown);
  CHECK(std::string(riemannian_possible_name(RiemannianPossible::No)) == "no");
  CHECK_THROWS_AS(pasternack_obstruction(1, 0), std::invalid_argument);
}
