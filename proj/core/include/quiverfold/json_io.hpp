#pragma once

#include <nlohmann/json.hpp>

#include "quiverfold/adhm.hpp"
#include "quiverfold/foldfix.hpp"
#include "quiverfold/partition.hpp"
#include "quiverfold/quiver.hpp"
#include "quiverfold/slodowy.hpp"

namespace qf {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted and
// byte-stable for equal values.
using Json = nlohmann::json;

// Rationals as "p/q" strings; other scalars as {"coeffs": ["p/q", ...], "order": N}.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"rows", "cols", "entries"} with entries row-major.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Partition& p);

// {"vertices", "arrows": [{"id", "src", "tgt", "bar"}], "orientation"}
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// {"vertex_perm", "arrow_perm", "period"}, permutations keyed by id.
Json to_json(const Quiver& q, const AdmAut& a);
AdmAut aut_from_json(const Quiver& q, const Json& j);

// {"quiver_ref", "v", "w", "field_order", "B", "Gamma", "Delta"}; maps are
// keyed by arrow or vertex id, v and w are objects keyed by vertex id.
Json to_json(const AdhmDatum& x, const std::string& quiver_ref);
AdhmDatum adhm_from_json(QuiverPtr q, const Json& j);

Json to_json(const SplitQuotient& sq, const Quiver& q);
Json to_json(const FoldContext& ctx);
Json to_json(const FoldContext& ctx, const Decomposition& d);
Decomposition decomposition_from_json(const FoldContext& ctx, const Json& j);

Json to_json(const Sl2Triple& t);
Json to_json(const BilinearForm& f);

}  // namespace qf
