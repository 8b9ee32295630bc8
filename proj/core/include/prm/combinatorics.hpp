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

#ifndef PRM_COMBINATORICS_HPP
#define PRM_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace prm {

using BigInt = boost::multiprecision::cpp_int;

namespace comb {

/// a(a-1)...(a-b+1)/b! for b >= 0 and 0 for b < 0, for every integer a.
/// Zero exactly when b < 0 or b > a >= 0. Symmetry C(a,b) = C(a,a-b) only
/// holds for a >= 0 or a < b < 0.
BigInt binomial(long long a, long long b);

/// Number of b-dimensional subspaces of F_q^a; 0 unless 0 <= b <= a.
BigInt gaussian_binomial(long long a, long long b, unsigned q);

/// 1 + q + ... + q^k for k >= 0, else 0 (points of P^k over F_q).
BigInt p_k(unsigned q, long long k);

/// Placements of a objects in n blocks with at most b per block, by
/// inclusion-exclusion: sum_j (-1)^j C(n,j) C(a-j(b+1)+n-1, a-j(b+1)).
BigInt bounded_compositions(long long a, long long n, long long b);

BigInt ipow(unsigned base, unsigned exp);

}  // namespace comb
}  // namespace prm

#endif  // PRM_COMBINATORICS_HPP
