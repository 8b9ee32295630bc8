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

#ifndef PRM_LINALG_HPP
#define PRM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "prm/gf.hpp"

namespace prm::linalg {

using Vector = std::vector<gf::Elem>;
using Matrix = std::vector<Vector>;  // row-major, all rows the same length

/// Reduced row echelon form in place; zero rows are dropped. Returns pivot columns.
std::vector<std::size_t> rref(const gf::Field& f, Matrix& rows);

std::size_t rank(const gf::Field& f, Matrix rows);

bool independent(const gf::Field& f, const Matrix& rows);

/// True iff v lies in the row space of `basis` (given in RREF with `pivots`).
bool in_row_space(const gf::Field& f, const Matrix& basis, const std::vector<std::size_t>& pivots, Vector v);

/// Every k-dimensional subspace of F_q^n as its unique RREF basis. The count is
/// the Gaussian binomial [n choose k]_q.
std::vector<Matrix> enumerate_subspaces(const gf::Field& f, std::size_t n, std::size_t k);

/// All q^n vectors of F_q^n in lexicographic order (coordinate 0 most significant).
std::vector<Vector> all_vectors(const gf::Field& f, std::size_t n);

}  // namespace prm::linalg

#endif  // PRM_LINALG_HPP
