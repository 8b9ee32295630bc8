/*
   Copyright 2026 The prmcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PRM_IO_HPP
#define PRM_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "prm/codes.hpp"
#include "prm/dimension.hpp"
#include "prm/gf.hpp"
#include "prm/minwt.hpp"
#include "prm/oracle.hpp"

namespace prm::io {

using nlohmann::json;

/// {"p", "e", "modulus": [c_0..c_e]}.
json to_json(const gf::Field& f);
/// Throws std::invalid_argument if the modulus is not the one this library
/// picks for GF(p^e).
gf::Field field_from_json(const json& j);

/// Header row of point tuples ("0:1:1"), then one row per basis monomial.
std::string to_csv(const codes::GeneratorMatrix& g);
/// {"family", "q", "order", "m", "points", "basis", "rows"}.
json to_json(const codes::GeneratorMatrix& g);

std::string point_label(const codes::Point& p);
std::string to_csv(const codes::Codeword& c);

/// Map weight -> count over the weights that occur; counts are strings.
json to_json(const oracle::WeightDistribution& d);
/// "weight,count" lines.
std::string to_csv(const oracle::WeightDistribution& d);

json to_json(const minwt::TSDecomp& ts);
json to_json(const dim::DimReport& r);
json to_json(const minwt::CountReport& r);
json to_json(const minwt::FiberReport& r);
json to_json(const minwt::TauReport& r);

inline std::string str(const BigInt& v) { return v.str(); }

}  // namespace prm::io

#endif  // PRM_IO_HPP
