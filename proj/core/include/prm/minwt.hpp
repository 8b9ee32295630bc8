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

#ifndef PRM_MINWT_HPP
#define PRM_MINWT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "prm/codes.hpp"
#include "prm/combinatorics.hpp"
#include "prm/gf.hpp"
#include "prm/poly.hpp"

namespace prm::minwt {

using codes::Family;

/// order = t(q-1) + s with 0 <= s < q-1, where order is nu for RM codes and
/// d-1 for PRM codes.
struct TSDecomp {
    unsigned t;
    unsigned s;
    friend bool operator==(const TSDecomp&, const TSDecomp&) = default;
};

/// Range-checked: RM needs 0 <= nu <= m(q-1), PRM needs 1 <= d <= m(q-1)+1.
TSDecomp ts_decompose(Family kind, unsigned q, long long order, long long m);

/// (q-s) q^(m-t-1) for RM_q(nu, m).
BigInt rm_min_distance(unsigned q, long long nu, long long m);
/// (q-s) q^(m-t-1) for PRM_q(d, m) with d-1 = t(q-1)+s.
BigInt prm_min_distance(unsigned q, long long d, long long m);
/// p_m - ceil((q-s) q^(m-t-1)): the largest possible number of projective
/// zeros of a nonzero projectively reduced form of degree d. Any d >= 1.
BigInt max_zero_bound(unsigned q, long long d, long long m);

/// X_t prod_{i<t} (X_i^{q-1} - X_t^{q-1}) prod_j (X_{t+1} - w_j X_t).
/// Needs exactly s distinct omegas.
poly::Poly canonical_min_poly(const gf::Field& f, unsigned d, unsigned m, const std::vector<gf::Elem>& omegas);

/// Parameters of a minimum-weight codeword.
///
/// PRM: homogeneous linear forms L_0..L_{t+1} (L_0..L_t when s = 0), each of
/// length m+1. RM: affine forms l_1..l_{t+1} (l_1..l_t when s = 0) given as
/// (constant, c_0, ..., c_{m-1}); it is their linear parts that must be
/// independent. omega0 is only used by RM witnesses.
struct MinWtWitness {
    Family kind = Family::prm;
    std::vector<std::vector<gf::Elem>> linear_forms;
    std::vector<gf::Elem> omegas;
    gf::Elem omega0 = 1;
};

/// Throws std::invalid_argument naming the violated witness condition.
void validate_witness(const MinWtWitness& w, const gf::Field& f, unsigned order, unsigned m);

/// L_t prod_{i<t} (L_t^{q-1} - L_i^{q-1}) prod_j (L_{t+1} - w_j L_t).
poly::Poly prm_witness_poly(const MinWtWitness& w, const gf::Field& f, unsigned d, unsigned m);
/// w_0 prod_{i<=t} (1 - l_i^{q-1}) prod_j (l_{t+1} - w_j), in m variables.
poly::Poly rm_witness_poly(const MinWtWitness& w, const gf::Field& f, unsigned nu, unsigned m);

/// Uniformly random valid witnesses (rejection sampling for independence).
MinWtWitness random_prm_witness(const gf::Field& f, unsigned d, unsigned m, std::mt19937_64& rng);
MinWtWitness random_rm_witness(const gf::Field& f, unsigned nu, unsigned m, std::mt19937_64& rng);

/// (q-1) q^t [m, t]_q M_s with M_s = C(q,s) [m-t, 1]_q for s > 0, else 1.
BigInt rm_min_weight_count(unsigned q, long long nu, long long m);
/// (q^{m+1}-1) [m, t]_q N_s with N_s = C(q,s) [m-t, 1]_q / (s+1) for s > 0,
/// else 1. Throws std::logic_error if the division is not exact.
BigInt prm_min_weight_count(unsigned q, long long d, long long m);
/// (q^{m+1}-1)(q^m-1) / ((q+1)(q-1)) [m-1, t]_q C(q+1, s+1); falls back to
/// prm_min_weight_count when s = 0.
BigInt prm_min_weight_count_alt(unsigned q, long long d, long long m);

struct CountReport {
    unsigned q;
    long long d, m;
    TSDecomp ts;
    BigInt distance;
    BigInt formula_count;
    BigInt alt_count;
    std::optional<BigInt> brute_count;
    std::optional<BigInt> brute_distance;
    bool agree;
};

/// Both count formulas, plus the exhaustive oracle when `with_oracle`.
/// Throws oracle::GuardExceeded if the code is too large to enumerate.
CountReport count_report(const gf::Field& f, long long d, long long m, bool with_oracle,
                         std::uint64_t oracle_guard = std::uint64_t{1} << 24);

inline constexpr std::uint64_t default_witness_guard = 10'000'000;

/// Number of ordered tuples of independent linear forms a witness enumeration visits.
BigInt witness_tuple_count(const gf::Field& f, unsigned d, unsigned m);

/// Every Ev(Q) over all witnesses (all independent ordered tuples of linear
/// forms, all s-subsets of omegas), deduplicated and sorted. Throws
/// std::length_error when the tuple count exceeds `guard`.
std::vector<codes::Codeword> enumerate_witness_codewords(const gf::Field& f, unsigned d, unsigned m,
                                                         std::uint64_t guard = default_witness_guard);

// ---------------------------------------------------------------------------
// Incidence checks behind the count formula.

inline constexpr std::uint64_t default_incidence_guard = 10'000'000;

/// s >= 1. Enumerates J = {(E, L_t, L_{t+1}, S)} over E in G_{m-t}(P^m),
/// L_t, L_{t+1} in R_1 and s-subsets S, keeping tuples with E not inside
/// V(L_t) and E cap V(L_t) not inside V(L_{t+1}), and groups them by their
/// support Psi.
struct FiberReport {
    unsigned q;
    long long d, m;
    TSDecomp ts;
    BigInt grassmannian_size;  // #E
    BigInt j_size;             // enumerated |J|
    BigInt j_closed_form;      // [m+1, m-t+1]_q (q^{m+1}-q^t)(q^{m+1}-q^{t+1}) C(q,s)
    std::size_t fiber_min = 0, fiber_max = 0;
    BigInt expected_fiber;     // (s+1)(q-1)^2 q^{2t+1}
    std::size_t supports = 0;  // |Phi(M)|
    BigInt count;              // (q-1) |Phi(M)|
    BigInt formula_count;
    bool support_sizes_ok = false;  // every support has size = minimum distance
    bool ok = false;
};

/// Throws std::invalid_argument when s = 0 (use tau_bijection_check) and
/// std::length_error when |Lambda| exceeds the guard.
FiberReport support_fiber_check(const gf::Field& f, unsigned d, unsigned m,
                                std::uint64_t guard = default_incidence_guard);

/// s = 0, t >= 1. Pairs (E, H) with E in G_{m-t}(P^m), H in G_{m-t-1}(P^m),
/// H inside E, mapped to E minus H.
struct TauReport {
    unsigned q;
    long long d, m;
    TSDecomp ts;
    BigInt pairs;
    BigInt pairs_closed_form;  // [m+1, m-t+1]_q [m-t+1, 1]_q
    std::size_t images = 0;
    bool injective = false;
    bool image_sizes_ok = false;
    BigInt count;  // (q-1) * pairs
    BigInt formula_count;
    bool ok = false;
};

TauReport tau_bijection_check(const gf::Field& f, unsigned d, unsigned m,
                              std::uint64_t guard = default_incidence_guard);

}  // namespace prm::minwt

#endif  // PRM_MINWT_HPP
