#pragma once

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "grt/derivation.hpp"
#include "grt/ihara.hpp"
#include "grt/linalg.hpp"
#include "grt/malcev.hpp"
#include "grt/motivic.hpp"

namespace grt {

using Json = nlohmann::json;

/// Number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& z);
Json integer_list_json(const std::vector<Integer>& zs);

/// Arrays of arrays of "p/q" strings.
Json matrix_json(const RatMatrix& m);
Json matrix_json(const IntMatrix& m);

Json derivation_json(const Derivation& d);
Json ihara_basis_json(int degree, const std::vector<IharaElement>& basis);
Json congruence_json(const CongruenceReport& report);
Json freeness_json(const std::vector<FreenessRow>& rows);

Json profile_json(const NumberFieldProfile& profile);
/// {rows: [{degree, dim}]}
Json dimension_table_json(const DimensionTable& table);

Json filtration_json(const std::vector<FiltrationRow>& rows);

}  // namespace grt
