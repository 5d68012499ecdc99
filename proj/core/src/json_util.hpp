#pragma once

#include "e6cs/lattice.hpp"
#include "e6cs/polynomial.hpp"

#include <json.hpp>

#include <string_view>

namespace e6cs::detail {

using ojson = nlohmann::ordered_json;

ojson vec_json(const Vec6& v);
Vec6 vec_from(const ojson& j);
ojson terms_json(const Polynomial& p);
Polynomial terms_from(const ojson& j);
ojson parse_json(std::string_view text);

}  // namespace e6cs::detail
