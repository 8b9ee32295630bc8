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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "prm/codes.hpp"
#include "prm/dimension.hpp"
#include "prm/gf.hpp"
#include "prm/io.hpp"
#include "prm/minwt.hpp"
#include "prm/oracle.hpp"
#include "prm/poly.hpp"

namespace prm::cli {

namespace {

long long parse_int(const std::string& s) {
    long long v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

std::string tuple_label(unsigned q, long long m, const char* order_name, long long order) {
    return "q=" + std::to_string(q) + " m=" + std::to_string(m) + " " + order_name + "=" + std::to_string(order);
}

struct Tuple {
    codes::Family family;
    unsigned q;
    long long m, order;
};

std::vector<Tuple> tuples_of(const SweepConfig& cfg, bool with_rm) {
    std::vector<Tuple> out;
    for (unsigned q : cfg.qs)
        for (long long m = cfg.m.lo; m <= cfg.m.hi; ++m) {
            const Range d = cfg.d.value_or(Range{1, m * (q - 1) + 1});
            for (long long v = d.lo; v <= d.hi; ++v) out.push_back({codes::Family::prm, q, m, v});
            if (with_rm && !cfg.d)
                for (long long nu = 0; nu <= m * (q - 1); ++nu) out.push_back({codes::Family::rm, q, m, nu});
        }
    return out;
}

using Status = VerifyLine::Status;

class TupleChecker {
   public:
    TupleChecker(const Tuple& t, const SweepConfig& cfg, const Formulas& fm)
        : t_(t), cfg_(cfg), fm_(fm), f_(gf::Field::of_order(t.q)) {}

    std::vector<VerifyLine> run() {
        if (t_.family == codes::Family::prm)
            prm();
        else
            rm();
        return std::move(lines_);
    }

   private:
    void add(Status s, std::string check, std::string detail = {}) {
        const char* name = t_.family == codes::Family::prm ? "d" : "nu";
        lines_.push_back({s, std::move(check), tuple_label(t_.q, t_.m, name, t_.order), std::move(detail)});
    }
    void compare(const std::string& check, std::vector<std::pair<std::string, BigInt>> values) {
        bool same = true;
        for (const auto& v : values) same = same && v.second == values.front().second;
        std::string detail;
        if (!same)
            for (const auto& [k, v] : values) detail += (detail.empty() ? "" : " ") + k + "=" + v.str();
        add(same ? Status::pass : Status::fail, check, detail);
    }

    void prm() {
        const unsigned q = t_.q;
        const long long m = t_.m, d = t_.order;
        const BigInt alpha = fm_.alpha(q, d, m);
        compare("dimension", {{"alpha", alpha}, {"beta", fm_.beta(q, d, m)}, {"gamma", fm_.gamma(q, d, m)},
                              {"delta", fm_.delta(q, d, m)}});

        if (comb::p_k(q, m) > dim::default_rank_guard) {
            add(Status::skipped, "rank", "length above the rank guard");
            add(Status::skipped, "distance", "length above the rank guard");
            add(Status::skipped, "count", "length above the rank guard");
            add(Status::skipped, "witness-set", "length above the rank guard");
        } else {
            const auto g = codes::prm_generator_matrix(f_, static_cast<unsigned>(d), static_cast<unsigned>(m));
            compare("rank", {{"alpha", alpha}, {"rank", BigInt(codes::rank(g))}});
            oracle_checks(g);
        }
        incidence();
    }

    void oracle_checks(const codes::GeneratorMatrix& g) {
        const unsigned q = t_.q;
        const long long m = t_.m, d = t_.order;
        oracle::WeightDistribution dist;
        try {
            dist = oracle::weight_distribution(g, cfg_.guard, 1);
        } catch (const oracle::GuardExceeded& e) {
            add(Status::skipped, "distance", e.what());
            add(Status::skipped, "count", e.what());
            add(Status::skipped, "witness-set", e.what());
            return;
        }
        const std::size_t w = dist.min_distance();
        compare("distance", {{"formula", fm_.distance(q, d, m)}, {"oracle", BigInt(w)}});
        compare("count", {{"formula", fm_.count(q, d, m)},
                          {"alt", fm_.count_alt(q, d, m)},
                          {"oracle", BigInt(dist.counts[w])}});
        try {
            const auto witnesses = minwt::enumerate_witness_codewords(f_, static_cast<unsigned>(d),
                                                                      static_cast<unsigned>(m));
            const auto brute = oracle::brute_min_weight_words(g, cfg_.guard);
            if (witnesses == brute) {
                add(Status::pass, "witness-set");
            } else {
                std::vector<codes::Codeword> missing, extra;
                std::set_difference(brute.begin(), brute.end(), witnesses.begin(), witnesses.end(),
                                    std::back_inserter(missing));
                std::set_difference(witnesses.begin(), witnesses.end(), brute.begin(), brute.end(),
                                    std::back_inserter(extra));
                std::string detail = "witnesses=" + std::to_string(witnesses.size()) +
                                     " oracle=" + std::to_string(brute.size());
                if (!missing.empty()) detail += " first-missing=" + io::to_csv(missing.front());
                if (!extra.empty()) detail += " first-extra=" + io::to_csv(extra.front());
                add(Status::fail, "witness-set", detail);
            }
        } catch (const std::length_error& e) {
            add(Status::skipped, "witness-set", e.what());
        }
    }

    void incidence() {
        const auto ts = minwt::ts_decompose(codes::Family::prm, t_.q, t_.order, t_.m);
        const auto d = static_cast<unsigned>(t_.order);
        const auto m = static_cast<unsigned>(t_.m);
        try {
            if (ts.s > 0) {
                const auto r = minwt::support_fiber_check(f_, d, m);
                std::string detail;
                if (!r.ok)
                    detail = "J=" + r.j_size.str() + " closed-form=" + r.j_closed_form.str() +
                             " fibers=" + std::to_string(r.fiber_min) + ".." + std::to_string(r.fiber_max) +
                             " expected=" + r.expected_fiber.str() + " count=" + r.count.str() +
                             " formula=" + r.formula_count.str();
                add(r.ok ? Status::pass : Status::fail, "fiber", detail);
            } else if (ts.t >= 1) {
                const auto r = minwt::tau_bijection_check(f_, d, m);
                std::string detail;
                if (!r.ok)
                    detail = "pairs=" + r.pairs.str() + " images=" + std::to_string(r.images) +
                             " closed-form=" + r.pairs_closed_form.str() + " count=" + r.count.str() +
                             " formula=" + r.formula_count.str();
                add(r.ok ? Status::pass : Status::fail, "tau", detail);
            }
        } catch (const std::length_error& e) {
            add(Status::skipped, ts.s > 0 ? "fiber" : "tau", e.what());
        }
    }

    void rm() {
        const unsigned q = t_.q;
        const long long m = t_.m, nu = t_.order;
        const auto g = codes::rm_generator_matrix(f_, static_cast<unsigned>(nu), static_cast<unsigned>(m));
        oracle::WeightDistribution dist;
        try {
            dist = oracle::weight_distribution(g, cfg_.guard, 1);
        } catch (const oracle::GuardExceeded& e) {
            add(Status::skipped, "rm-distance", e.what());
            add(Status::skipped, "rm-count", e.what());
            return;
        }
        const std::size_t w = dist.min_distance();
        compare("rm-distance", {{"formula", fm_.rm_distance(q, nu, m)}, {"oracle", BigInt(w)}});
        compare("rm-count", {{"formula", fm_.rm_count(q, nu, m)}, {"oracle", BigInt(dist.counts[w])}});
    }

    Tuple t_;
    const SweepConfig& cfg_;
    const Formulas& fm_;
    gf::Field f_;
    std::vector<VerifyLine> lines_;
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    file << text;
}

std::string dump(const io::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long long v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::vector<unsigned> parse_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Range r = parse_range(item);
        if (r.lo < 0) throw std::invalid_argument("negative value in list '" + text + "'");
        for (long long v = r.lo; v <= r.hi; ++v) out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

void validate(const SweepConfig& cfg) {
    if (cfg.guard == 0) throw std::invalid_argument("guard must be positive");
    for (unsigned q : cfg.qs) gf::Field::of_order(q);
    if (cfg.m.empty()) return;
    if (cfg.m.lo < 1) throw std::invalid_argument("m must be at least 1");
    if (!cfg.d || cfg.d->empty()) return;
    for (unsigned q : cfg.qs)
        for (long long m = cfg.m.lo; m <= cfg.m.hi; ++m) {
            const long long top = m * (q - 1) + 1;
            if (cfg.d->lo < 1 || cfg.d->hi > top)
                throw std::invalid_argument("d range " + std::to_string(cfg.d->lo) + ".." + std::to_string(cfg.d->hi) +
                                            " leaves 1.." + std::to_string(top) + " for q=" + std::to_string(q) +
                                            " m=" + std::to_string(m));
        }
}

Formulas Formulas::library() {
    Formulas f;
    f.alpha = dim::dim_alpha;
    f.beta = dim::dim_beta;
    f.gamma = dim::dim_gamma;
    f.delta = dim::dim_delta;
    f.distance = minwt::prm_min_distance;
    f.count = minwt::prm_min_weight_count;
    f.count_alt = minwt::prm_min_weight_count_alt;
    f.rm_distance = minwt::rm_min_distance;
    f.rm_count = minwt::rm_min_weight_count;
    return f;
}

Formulas Formulas::with_fault(const std::string& name) {
    Formulas f = library();
    auto shift = [](auto fn) {
        return [fn](unsigned q, long long a, long long m) { return BigInt(fn(q, a, m) + 1); };
    };
    if (name == "alpha")
        f.alpha = shift(f.alpha);
    else if (name == "beta")
        f.beta = shift(f.beta);
    else if (name == "gamma")
        f.gamma = shift(f.gamma);
    else if (name == "delta")
        f.delta = shift(f.delta);
    else if (name == "distance")
        f.distance = shift(f.distance);
    else if (name == "count")
        f.count = shift(f.count);
    else if (name == "count_alt")
        f.count_alt = shift(f.count_alt);
    else if (name == "rm_distance")
        f.rm_distance = shift(f.rm_distance);
    else if (name == "rm_count")
        f.rm_count = shift(f.rm_count);
    else
        throw std::invalid_argument("unknown formula '" + name + "'");
    return f;
}

VerifyResult run_verify(const SweepConfig& cfg, const Formulas& formulas) {
    validate(cfg);
    const auto tuples = tuples_of(cfg, true);
    std::vector<std::vector<VerifyLine>> per_tuple(tuples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++)
            per_tuple[i] = TupleChecker(tuples[i], cfg, formulas).run();
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tuples.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    VerifyResult r;
    for (auto& lines : per_tuple)
        for (auto& l : lines) {
            if (l.status == Status::pass) ++r.passed;
            if (l.status == Status::fail) ++r.failed;
            if (l.status == Status::skipped) ++r.skipped;
            r.lines.push_back(std::move(l));
        }
    return r;
}

std::string format_line(const VerifyLine& l) {
    static const char* names[] = {"PASS", "FAIL", "SKIPPED"};
    std::string s = std::string(names[static_cast<int>(l.status)]) + " " + l.check + " " + l.tuple;
    if (!l.detail.empty()) s += ": " + l.detail;
    return s;
}

std::string run_table(const SweepConfig& cfg) {
    validate(cfg);
    io::json rows = io::json::array();
    std::string csv = "q,m,d,length,alpha,beta,gamma,delta,rank,distance,minwt_count,agree\n";
    for (const auto& t : tuples_of(cfg, false)) {
        const auto f = gf::Field::of_order(t.q);
        const auto r = dim::dim_report(f, t.order, t.m, cfg.with_rank);
        const BigInt length = comb::p_k(t.q, t.m);
        const BigInt dist = minwt::prm_min_distance(t.q, t.order, t.m);
        const BigInt count = minwt::prm_min_weight_count(t.q, t.order, t.m);
        const std::string rank = r.rank ? r.rank->str() : "";
        csv += std::to_string(t.q) + ',' + std::to_string(t.m) + ',' + std::to_string(t.order) + ',' + length.str() +
               ',' + r.alpha.str() + ',' + r.beta.str() + ',' + r.gamma.str() + ',' + r.delta.str() + ',' + rank +
               ',' + dist.str() + ',' + count.str() + ',' + (r.agree ? "true" : "false") + '\n';
        io::json j = io::to_json(r);
        j["length"] = length.str();
        j["distance"] = dist.str();
        j["minwt_count"] = count.str();
        rows.push_back(std::move(j));
    }
    return cfg.format == Format::csv ? csv : dump(rows);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Projective Reed-Muller code toolkit", "prmtool"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_text;
    std::string out_path;
    std::uint64_t guard = oracle::default_guard;
    std::uint64_t seed = 1;
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "Write output to this file");
    app.add_option("--guard", guard, "Largest number of codewords the oracle may enumerate")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for random witnesses");

    auto fmt = [&](Format fallback) {
        if (format_text.empty()) return fallback;
        return format_text == "json" ? Format::json : Format::csv;
    };

    // Shared sweep options.
    std::string q_text = "2,3", m_text = "1..2", d_text;
    bool with_rank = false;
    std::string fault;

    auto* table = app.add_subcommand("table", "Dimension, distance and count table");
    table->add_option("--q", q_text, "Field orders, e.g. 2,3,4");
    table->add_option("--m", m_text, "Range of m, e.g. 1..3");
    table->add_option("--d", d_text, "Range of d (default: every valid d)");
    table->add_flag("--rank", with_rank, "Also compute the generator matrix rank");

    auto* verify = app.add_subcommand("verify", "Check every formula against the exhaustive oracle");
    verify->add_option("--q", q_text, "Field orders");
    verify->add_option("--m", m_text, "Range of m");
    verify->add_option("--d", d_text, "Range of d (default: every valid d)");
    verify->add_option("--inject-fault", fault, "Shift one formula by +1")->group("");

    unsigned q = 2, m = 2;
    long long order = 1;
    std::string family_text = "prm";
    auto add_code_options = [&](CLI::App* sub, bool with_family) {
        sub->add_option("--q", q, "Field order")->required();
        sub->add_option("--m", m, "Projective dimension (affine dimension for RM)")->required();
        sub->add_option("--d,--order,--nu", order, "Code order")->required();
        if (with_family)
            sub->add_option("--family", family_text, "rm or prm")->check(CLI::IsMember({"rm", "prm"}, CLI::ignore_case));
    };

    auto* genmat = app.add_subcommand("genmat", "Generator matrix");
    add_code_options(genmat, true);

    std::string poly_text;
    auto* reduce = app.add_subcommand("reduce", "Projectively reduce a homogeneous polynomial");
    reduce->add_option("poly", poly_text, "Polynomial text, e.g. \"X0^3*X1^2*X2\"")->required();
    reduce->add_option("--q", q, "Field order")->required();
    reduce->add_option("--m", m, "Projective dimension")->required();

    auto* witness = app.add_subcommand("witness", "Random minimum-weight codeword and its polynomial");
    add_code_options(witness, true);

    bool with_oracle = false;
    auto* count = app.add_subcommand("count-minwt", "Count minimum-weight codewords");
    add_code_options(count, false);
    count->add_flag("--oracle", with_oracle, "Confirm by exhaustive enumeration");

    auto* fibers = app.add_subcommand("check-fibers", "Incidence check behind the count formula");
    add_code_options(fibers, false);

    auto* distribution = app.add_subcommand("distribution", "Exhaustive weight distribution");
    add_code_options(distribution, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        auto sweep = [&](Format fallback) {
            SweepConfig cfg;
            cfg.qs = parse_list(q_text);
            cfg.m = parse_range(m_text);
            if (!d_text.empty()) cfg.d = parse_range(d_text);
            cfg.guard = guard;
            cfg.format = fmt(fallback);
            cfg.with_rank = with_rank;
            return cfg;
        };

        if (table->parsed()) {
            emit(run_table(sweep(Format::csv)), out_path, out);
            return 0;
        }
        if (verify->parsed()) {
            const SweepConfig cfg = sweep(Format::csv);
            const auto r = run_verify(cfg, fault.empty() ? Formulas::library() : Formulas::with_fault(fault));
            std::string text;
            if (cfg.format == Format::json) {
                io::json lines = io::json::array();
                for (const auto& l : r.lines) lines.push_back(format_line(l));
                text = dump({{"lines", lines}, {"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}});
            } else {
                for (const auto& l : r.lines) text += format_line(l) + '\n';
                text += "summary: " + std::to_string(r.passed) + " passed, " + std::to_string(r.failed) +
                        " failed, " + std::to_string(r.skipped) + " skipped\n";
            }
            emit(text, out_path, out);
            return r.failed == 0 ? 0 : 1;
        }

        const gf::Field f = gf::Field::of_order(q);
        const codes::Family family = codes::parse_family(family_text);
        auto generator = [&] {
            if (order < 0) throw std::invalid_argument("order must be nonnegative");
            const auto o = static_cast<unsigned>(order);
            return family == codes::Family::prm ? codes::prm_generator_matrix(f, o, m)
                                                : codes::rm_generator_matrix(f, o, m);
        };

        if (genmat->parsed()) {
            const auto g = generator();
            emit(fmt(Format::csv) == Format::csv ? io::to_csv(g) : dump(io::to_json(g)), out_path, out);
        } else if (reduce->parsed()) {
            const auto p = poly::parse(poly_text, f, m + 1);
            if (!p.is_homogeneous(p.degree().value_or(0)))
                throw std::invalid_argument("projective reduction needs a homogeneous polynomial");
            emit(poly::to_string(poly::reduce_projective(p)) + '\n', out_path, out);
        } else if (witness->parsed()) {
            std::mt19937_64 rng(seed);
            const auto o = static_cast<unsigned>(std::max<long long>(order, 0));
            minwt::MinWtWitness w;
            poly::Poly F(f, 0);
            codes::Codeword c;
            if (family == codes::Family::prm) {
                minwt::ts_decompose(family, q, order, m);
                w = minwt::random_prm_witness(f, o, m, rng);
                F = minwt::prm_witness_poly(w, f, o, m);
                c = codes::evaluate_on(F, codes::projective_points(f, m));
            } else {
                minwt::ts_decompose(family, q, order, m);
                w = minwt::random_rm_witness(f, o, m, rng);
                F = minwt::rm_witness_poly(w, f, o, m);
                c = codes::evaluate_on(F, codes::affine_points(f, m));
            }
            if (fmt(Format::csv) == Format::csv) {
                emit(poly::to_string(F) + '\n' + io::to_csv(c) + '\n', out_path, out);
            } else {
                io::json j{{"family", codes::to_string(family)}, {"q", q},          {"order", order},
                           {"m", m},                             {"seed", seed},    {"polynomial", poly::to_string(F)},
                           {"linear_forms", w.linear_forms},     {"omegas", w.omegas}, {"codeword", c},
                           {"weight", codes::weight(c)}};
                if (family == codes::Family::rm) j["omega0"] = w.omega0;
                emit(dump(j), out_path, out);
            }
        } else if (count->parsed()) {
            emit(dump(io::to_json(minwt::count_report(f, order, m, with_oracle, guard))), out_path, out);
        } else if (fibers->parsed()) {
            if (order < 1) throw std::invalid_argument("PRM order must be at least 1");
            const auto ts = minwt::ts_decompose(codes::Family::prm, q, order, m);
            const auto o = static_cast<unsigned>(order);
            bool ok = true;
            if (ts.s > 0) {
                const auto r = minwt::support_fiber_check(f, o, m);
                ok = r.ok;
                emit(dump(io::to_json(r)), out_path, out);
            } else {
                const auto r = minwt::tau_bijection_check(f, o, m);
                ok = r.ok;
                emit(dump(io::to_json(r)), out_path, out);
            }
            return ok ? 0 : 1;
        } else if (distribution->parsed()) {
            const auto d = oracle::weight_distribution(generator(), guard);
            emit(fmt(Format::json) == Format::json ? dump(io::to_json(d)) : io::to_csv(d), out_path, out);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace prm::cli
