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

#ifndef PRM_CODES_HPP
#define PRM_CODES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prm/gf.hpp"
#include "prm/poly.hpp"

namespace prm::codes {

using Point = std::vector<gf::Elem>;
using Codeword = std::vector<gf::Elem>;

enum class PointKind { affine, projective };
enum class Family { rm, prm };

std::string to_string(Family f);
/// Accepts "rm" / "prm" (case-insensitive); throws std::invalid_argument.
Family parse_family(const std::string& s);

inline constexpr std::size_t default_point_guard = 100000;

/// Ordered coordinate list of a code. Projective lists hold the standard
/// representative of each point (last nonzero coordinate equal to 1); both
/// kinds are sorted lexicographically by canonical integers. Any other order
/// gives a permutation-equivalent code with the same parameters.
struct PointList {
    PointKind kind;
    gf::Field field;
    unsigned m;
    std::vector<Point> points;

    std::size_t size() const noexcept { return points.size(); }
    const Point& operator[](std::size_t i) const { return points[i]; }
    /// Index of a point given any representative; throws std::out_of_range.
    std::size_t index_of(std::span<const gf::Elem> p) const;
};

/// The p_m standard representatives of P^m(F_q). Throws std::length_error when
/// p_m exceeds the guard.
PointList projective_points(const gf::Field& f, unsigned m, std::size_t guard = default_point_guard);
/// The q^m points of F_q^m.
PointList affine_points(const gf::Field& f, unsigned m, std::size_t guard = default_point_guard);

/// Scales a nonzero vector so its last nonzero coordinate is 1.
Point standard_representative(const gf::Field& f, Point p);

struct GeneratorMatrix {
    Family family;
    gf::Field field;
    unsigned order;  // nu for RM, d for PRM
    unsigned m;
    PointList points;
    std::vector<poly::Monomial> basis;  // row i is the evaluation of basis[i]
    std::vector<Codeword> rows;

    std::size_t length() const noexcept { return points.size(); }
    std::size_t dimension() const noexcept { return rows.size(); }
};

/// Rows are the evaluations of the reduced monomials of degree <= nu.
/// Requires 0 <= nu <= m(q-1).
GeneratorMatrix rm_generator_matrix(const gf::Field& f, unsigned nu, unsigned m);

/// Rows are the evaluations of basis_C(q, d, m) at the projective points.
/// Requires 1 <= d <= m(q-1)+1.
GeneratorMatrix prm_generator_matrix(const gf::Field& f, unsigned d, unsigned m);

Codeword evaluate_on(const poly::Poly& f, const PointList& points);

std::size_t rank(const GeneratorMatrix& g);

/// The delta polynomial F_nu of degree d >= m(q-1)+1 for the nu-th point
/// (1-based) of `points`: F_nu(P_nu) = 1 and F_nu vanishes at every other point.
poly::Poly interpolation_poly(const gf::Field& f, unsigned d, unsigned m, std::size_t nu, const PointList& points);
poly::Poly interpolation_poly(const gf::Field& f, unsigned d, unsigned m, std::size_t nu);

std::size_t weight(std::span<const gf::Elem> c) noexcept;
std::vector<std::size_t> support(std::span<const gf::Elem> c);

}  // namespace prm::codes

#endif  // PRM_CODES_HPP
