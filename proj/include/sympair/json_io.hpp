#ifndef SYMPAIR_JSON_IO_HPP
#define SYMPAIR_JSON_IO_HPP

#include <json.hpp>

#include "sympair/boothbywang.hpp"
#include "sympair/coordforms.hpp"
#include "sympair/fourman.hpp"
#include "sympair/search.hpp"

namespace sympair {

/// Ordered JSON keeps key order stable, which the deterministic-output
/// contract of the command line relies on.
using Json = nlohmann::ordered_json;

/// Rejects documents whose "schema" field is present and not 1.
void require_schema(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json form_to_json(const ExteriorForm& f);
ExteriorForm form_from_json(const Json& j);

Json algebra_to_json(const LieAlgebra& g);
/// Accepts either an explicit bracket table or {"catalog": name} with
/// optional rational "params".
LieAlgebra algebra_from_json(const Json& j);

Json report_to_json(const PairReport& r);
Json jacobi_to_json(const JacobiReport& r);

Json gram_to_json(const WedgeGram& g);
Json signature_to_json(const SignatureResult& s);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int nvars);

Json polyform_to_json(const PolyForm& f);
PolyForm polyform_from_json(const Json& j);

Json polymap_to_json(const PolyMap& m);
PolyMap polymap_from_json(const Json& j);

Json descriptor_to_json(const PairedManifoldDescriptor& d);
PairedManifoldDescriptor descriptor_from_json(const Json& j);

Json bundle_class_to_json(const BundleClass& c);

}  // namespace sympair

#endif  // SYMPAIR_JSON_IO_HPP
