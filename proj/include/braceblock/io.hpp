#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braceblock/bilinear.hpp"
#include "braceblock/brace.hpp"
#include "braceblock/catalog.hpp"
#include "braceblock/group.hpp"
#include "braceblock/normgraph.hpp"
#include "braceblock/operation.hpp"
#include "braceblock/quotient.hpp"
#include "braceblock/yang_baxter.hpp"

namespace braceblock {

using Json = nlohmann::json;

std::string_view library_version();

// Readers throw Error(ParseError) on malformed input and the usual
// validation errors on mathematically invalid input.

/// {"backend": "CayleyTable", "order": n, "table": [[...]]},
/// {"backend": "Heisenberg", "modulus": n},
/// {"backend": "Unitriangular", "size": m, "modulus": q},
/// {"backend": "Permutation", "degree": d, "generators": [[...]]}.
Json to_json(const FiniteGroup& group);
GroupPtr group_from_json(const Json& j);

/// Short names: "cN", "sN", "heisenberg" (needs modulus), "utM" (needs
/// modulus), "c9c3". Anything ending in ".json" is read as a group document.
GroupPtr group_from_spec(const std::string& name, std::uint32_t modulus = 0);

/// {"group": ..., "k": [indices], "a": [indices]}.
Json to_json(const CentralPair& pair);
PairPtr pair_from_json(const Json& j);

/// {"pair": ..., "coset_table": [...]}, indexed by coset order.
Json to_json(const QuotientEndo& endo);
QuotientEndo endo_from_json(const Json& j);
/// Same, against an existing pair (the embedded pair is ignored).
QuotientEndo endo_from_json(const PairPtr& pair, const Json& j);

/// {"pair": ..., "values": [[i, j, k], ...]} omitting identity values.
Json to_json(const CentralBilinearMap& alpha);
CentralBilinearMap bilinear_from_json(const Json& j);
CentralBilinearMap bilinear_from_json(const PairPtr& pair, const Json& j);

/// {"provenance": "...", "order": n, "table": [[...]]}.
Json to_json(const GroupOperation& op);
/// Explicit-provenance operation on `base` from a table document.
GroupOperation operation_from_json(const GroupPtr& base, const Json& j);

Json to_json(const GroupReport& report);
Json to_json(const BraceCheckReport& report);
Json to_json(const YBReport& report);

/// {"label", "carrier_size", "permutation": [...], "sigma": [[...]], "tau": [[...]]}
/// where permutation[x*n+y] = u*n+v for r(x,y) = (u,v), sigma[x][y] and tau[y][x].
Json to_json(const YBMap& r);
YBMap yb_map_from_json(const Json& j);

/// {"vertices": [{"index", "fingerprint", "generators"}], "edges": [[i, j]], "cliques": [[...]]}.
Json to_json(const NormalisingGraph& graph, const std::vector<std::vector<std::size_t>>& cliques);

Json to_json(const ExpectationResult& result);

}  // namespace braceblock
