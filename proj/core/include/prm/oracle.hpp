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

#ifndef PRM_ORACLE_HPP
#define PRM_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prm/codes.hpp"
#include "prm/gf.hpp"

namespace prm::oracle {

/// Thrown when q^k is above the enumeration guard.
class GuardExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

inline constexpr std::uint64_t default_guard = std::uint64_t{1} << 24;

struct WeightDistribution {
    std::size_t length = 0;
    std::size_t dimension = 0;       // rank of the input rows
    std::vector<std::uint64_t> counts;  // counts[w] = codewords of weight w, w = 0..length
    std::uint64_t total() const noexcept;
    /// Smallest nonzero weight; throws std::domain_error for the zero code.
    std::size_t min_distance() const;
    std::uint64_t min_weight_count() const { return counts.at(min_distance()); }
};

/// Exhaustive weight distribution of the row space of `rows` (any spanning
/// set; it is reduced to a basis first). Walks the q-ary Gray code so each
/// step adds one multiple of a basis row. `threads` = 0 picks the hardware
/// concurrency. Throws GuardExceeded when q^k > guard.
WeightDistribution weight_distribution(const gf::Field& f, const std::vector<codes::Codeword>& rows,
                                       std::uint64_t guard = default_guard, unsigned threads = 0);
WeightDistribution weight_distribution(const codes::GeneratorMatrix& g, std::uint64_t guard = default_guard,
                                       unsigned threads = 0);

/// Throws std::domain_error for the zero code.
std::size_t brute_min_distance(const codes::GeneratorMatrix& g, std::uint64_t guard = default_guard);

/// All codewords of minimum weight, sorted.
std::vector<codes::Codeword> brute_min_weight_words(const codes::GeneratorMatrix& g,
                                                    std::uint64_t guard = default_guard);

}  // namespace prm::oracle

#endif  // PRM_ORACLE_HPP
