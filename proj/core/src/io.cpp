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

#include "prm/io.hpp"

#include <stdexcept>

namespace prm::io {

json to_json(const gf::Field& f) {
    return {{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

gf::Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("e"))
        throw std::invalid_argument("field JSON needs integer members p and e");
    const auto f = gf::Field::make(j.at("p").get<unsigned>(), j.at("e").get<unsigned>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<unsigned>>() != f.modulus())
        throw std::invalid_argument("field JSON modulus differs from the canonical modulus of " + f.name());
    return f;
}

std::string point_label(const codes::Point& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(p[i]);
    }
    return s;
}

std::string to_csv(const codes::Codeword& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

std::string to_csv(const codes::GeneratorMatrix& g) {
    std::string out;
    for (std::size_t j = 0; j < g.points.size(); ++j) {
        if (j) out += ',';
        out += point_label(g.points[j]);
    }
    out += '\n';
    for (const auto& row : g.rows) out += to_csv(row) + '\n';
    return out;
}

json to_json(const codes::GeneratorMatrix& g) {
    json points = json::array();
    for (const auto& p : g.points.points) points.push_back(p);
    json basis = json::array();
    for (const auto& mono : g.basis) basis.push_back(poly::to_string(mono));
    return {{"family", codes::to_string(g.family)}, {"q", g.field.q()}, {"order", g.order}, {"m", g.m},
            {"points", points}, {"basis", basis}, {"rows", g.rows}};
}

json to_json(const oracle::WeightDistribution& d) {
    json out = json::object();
    for (std::size_t w = 0; w < d.counts.size(); ++w)
        if (d.counts[w] != 0) out[std::to_string(w)] = std::to_string(d.counts[w]);
    return out;
}

std::string to_csv(const oracle::WeightDistribution& d) {
    std::string out = "weight,count\n";
    for (std::size_t w = 0; w < d.counts.size(); ++w)
        if (d.counts[w] != 0) out += std::to_string(w) + ',' + std::to_string(d.counts[w]) + '\n';
    return out;
}

json to_json(const minwt::TSDecomp& ts) {
    return {{"t", ts.t}, {"s", ts.s}};
}

json to_json(const dim::DimReport& r) {
    json j{{"q", r.q},           {"d", r.d},           {"m", r.m},           {"alpha", str(r.alpha)},
           {"beta", str(r.beta)}, {"gamma", str(r.gamma)}, {"delta", str(r.delta)}, {"agree", r.agree}};
    j["rank"] = r.rank ? json(str(*r.rank)) : json(nullptr);
    return j;
}

json to_json(const minwt::CountReport& r) {
    json j{{"q", r.q},
           {"d", r.d},
           {"m", r.m},
           {"ts", to_json(r.ts)},
           {"distance", str(r.distance)},
           {"formula_count", str(r.formula_count)},
           {"alt_count", str(r.alt_count)},
           {"agree", r.agree}};
    if (r.brute_count) j["brute_count"] = str(*r.brute_count);
    if (r.brute_distance) j["brute_distance"] = str(*r.brute_distance);
    return j;
}

json to_json(const minwt::FiberReport& r) {
    return {{"check", "support_fiber"},
            {"q", r.q},
            {"d", r.d},
            {"m", r.m},
            {"ts", to_json(r.ts)},
            {"grassmannian_size", str(r.grassmannian_size)},
            {"j_size", str(r.j_size)},
            {"j_closed_form", str(r.j_closed_form)},
            {"fiber_min", r.fiber_min},
            {"fiber_max", r.fiber_max},
            {"expected_fiber", str(r.expected_fiber)},
            {"supports", r.supports},
            {"count", str(r.count)},
            {"formula_count", str(r.formula_count)},
            {"support_sizes_ok", r.support_sizes_ok},
            {"ok", r.ok}};
}

json to_json(const minwt::TauReport& r) {
    return {{"check", "tau_bijection"},
            {"q", r.q},
            {"d", r.d},
            {"m", r.m},
            {"ts", to_json(r.ts)},
            {"pairs", str(r.pairs)},
            {"pairs_closed_form", str(r.pairs_closed_form)},
            {"images", r.images},
            {"injective", r.injective},
            {"image_sizes_ok", r.image_sizes_ok},
            {"count", str(r.count)},
            {"formula_count", str(r.formula_count)},
            {"ok", r.ok}};
}

}  // namespace prm::io
