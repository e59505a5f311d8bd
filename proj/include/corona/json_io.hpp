// JSON interchange for matchings, roots, and field matrices.
//
// Counts serialize as decimal strings and rationals as "num/den" strings,
// because the values outgrow double-precision JSON numbers quickly.
#pragma once

#include <string>

#include "json.hpp"

#include "corona/fieldmat.hpp"
#include "corona/matchings.hpp"
#include "corona/roots.hpp"

namespace corona {
namespace json_io {

nlohmann::json matching_to_json(const matchings::Matching& s);
matchings::Matching matching_from_json(const nlohmann::json& j);

nlohmann::json root_to_json(const roots::AdmissibleRoot& r);
roots::AdmissibleRoot root_from_json(const nlohmann::json& j);

nlohmann::json rootset_to_json(const roots::RootSet& rs, int m, int n);
roots::RootSet rootset_from_json(const nlohmann::json& j, int* m = nullptr, int* n = nullptr);

nlohmann::json mat_to_json(const fieldmat::Mat& g);
fieldmat::Mat mat_from_json(const nlohmann::json& j);

std::string big_string(const BigInt& v);
std::string rat_string(const BigRat& v);  // "num/den", plain "num" for integers

}  // namespace json_io
}  // namespace corona
