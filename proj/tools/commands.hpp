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

#ifndef PRM_TOOLS_COMMANDS_HPP
#define PRM_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prm/combinatorics.hpp"

namespace prm::cli {

enum class Format { json, csv };

/// Inclusive integer range; empty when lo > hi.
struct Range {
    long long lo = 0, hi = -1;
    bool empty() const noexcept { return lo > hi; }
};

/// "3", "1..4" or "2,3,5" (the last only for lists).
Range parse_range(const std::string& text);
std::vector<unsigned> parse_list(const std::string& text);

struct SweepConfig {
    std::vector<unsigned> qs{2, 3};
    Range m{1, 2};
    std::optional<Range> d;  // default: 1..m(q-1)+1 for each (q, m)
    std::uint64_t guard = std::uint64_t{1} << 24;
    Format format = Format::csv;
    bool with_rank = false;
    unsigned threads = 0;
};

/// Throws std::invalid_argument when a range leaves the valid parameters.
void validate(const SweepConfig& cfg);

/// The formulas the sweep checks against the oracle. Replaced in tests to
/// confirm that a wrong formula is caught.
struct Formulas {
    std::function<BigInt(unsigned, long long, long long)> alpha, beta, gamma, delta;
    std::function<BigInt(unsigned, long long, long long)> distance, count, count_alt;
    std::function<BigInt(unsigned, long long, long long)> rm_distance, rm_count;
    static Formulas library();
    /// Library formulas with one of them (by name) shifted by +1.
    static Formulas with_fault(const std::string& name);
};

struct VerifyLine {
    enum class Status { pass, fail, skipped } status;
    std::string check;   // e.g. "dimension", "count"
    std::string tuple;   // "q=3 m=2 d=4"
    std::string detail;  // conflicting values on failure, reason on skip
};

struct VerifyResult {
    std::vector<VerifyLine> lines;
    std::size_t passed = 0, failed = 0, skipped = 0;
};

VerifyResult run_verify(const SweepConfig& cfg, const Formulas& formulas = Formulas::library());
std::string format_line(const VerifyLine& l);

/// One table row per (q, m, d).
std::string run_table(const SweepConfig& cfg);

/// Full command-line entry point. Returns the process exit code: 0 success,
/// 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prm::cli

#endif  // PRM_TOOLS_COMMANDS_HPP
