#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tate/bounded.hpp"
#include "tate/green.hpp"
#include "tate/laplacian.hpp"
#include "tate/matrix.hpp"
#include "tate/params.hpp"

namespace tate {

using Json = nlohmann::ordered_json;

Json params_json(const Params& params);
Json coset_json(const Coset& c);

// Canonical index labels: coset strings for level-k matrices.
std::vector<std::string> coset_order_labels(const Params& params);

// {"params": ..., "order": [...], "entries": [["num/den", ...], ...]}
Json matrix_json(const RationalMatrix& M, const Json& params, const std::vector<std::string>& order);

// header row of index labels, then one row of values per line
std::string matrix_csv(const RationalMatrix& M, const std::vector<std::string>& order);

Json green_json(const GreenTable& table);
// "row,col,value" triplets in canonical order
std::string green_csv(const GreenTable& table);

Json bounded_json(const BoundedValue& v);
Json spectrum_json(const Spectrum& s, const Params& params);

std::string format_double(double x);

}  // namespace tate
