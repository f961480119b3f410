#pragma once

#include <json.hpp>

#include "latt/ideal.hpp"
#include "latt/lattice.hpp"
#include "latt/pl.hpp"
#include "latt/sublattice.hpp"
#include "latt/subspace.hpp"

namespace latt {

using Json = nlohmann::json; // std::map-backed: object keys dump in sorted order

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

/// Dense {label: "p/q", ...} object in the ambient label set.
Json coords_to_json(const std::vector<std::string>& labels, const RatVector& values);
RatVector coords_from_json(const std::vector<std::string>& labels, const Json& j);

/// Parses {"labels": [...], "basis": [[...], ...]} into a canonical span.
Subspace subspace_from_json(const Json& j);
Json subspace_to_json(const Subspace& s);

Json constraint_to_json(const std::vector<std::string>& labels, const Constraint& c);
Json constraint_to_json(const ConstraintSet& cs, const Constraint& c);
Json constraints_to_json(const ConstraintSet& cs);
Json constraints_to_json(const std::vector<std::string>& labels,
                         const std::vector<Constraint>& constraints);

Json ideal_to_json(const IdealDescriptor& j);

Json pl_to_json(const PLFunction& f);
PLFunction pl_from_json(const Json& j);

/// The canonical byte rendering used for every report and golden file.
std::string canonical_dump(const Json& j);

} // namespace latt
