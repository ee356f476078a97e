// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion, all comparisons exact.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mspan/verifiers.hpp"
#include "oracles.hpp"

using namespace mspan;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects sub-check failures for one criterion and prints them indented.
class Criterion {
  public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (failures_ <= 10) {
                std::printf("    fail: %s\n", what.c_str());
            }
        }
    }

    bool report(double elapsed) const {
        const bool pass = failures_ == 0;
        std::printf("%s %s (%d checks, %d failed, %.2fs)\n", pass ? "PASS" : "FAIL", title_.c_str(), checks_,
                    failures_, elapsed);
        std::fflush(stdout);
        return pass;
    }

  private:
    std::string title_;
    int checks_ = 0;
    int failures_ = 0;
};

std::string show(const std::vector<ValueVector>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out += (i ? ", " : "") + pts[i].str();
    }
    return out + "}";
}

std::vector<ValueVector> points_of(const std::vector<ExtremeCertificate>& certs) {
    std::vector<ValueVector> out;
    for (const auto& c : certs) {
        out.push_back(c.point);
    }
    return out;
}

std::vector<ValueVector> predicted_intractable_front(int n) {
    std::vector<ValueVector> out;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        std::int64_t f1 = 0;
        std::int64_t f2 = n - 1;
        for (int i = 1; i <= n; ++i) {
            const std::int64_t p = std::int64_t{1} << i;
            if ((subset >> (i - 1)) & 1U) {
                f1 += p;
                f2 += p;
            } else {
                f2 += 2 * p;
            }
        }
        out.push_back({f1, Rational(f2)});
    }
    out.push_back({std::int64_t{1} << (n + 1), Rational(2)});
    out.push_back({(std::int64_t{1} << (n + 2)) - 2, Rational(1)});
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

BucoInstance random_buco(std::mt19937_64& rng, int n, std::int64_t max_entry) {
    std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
    std::vector<std::int64_t> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        c1[static_cast<std::size_t>(i)] = entry(rng);
        c2[static_cast<std::size_t>(i)] = entry(rng);
    }
    return BucoInstance(c1, c2);
}

// Instances solved in criteria 1 and 2, reused by 4(d).
std::vector<WeightedGraph> g_solved;

bool criterion_1() {
    Criterion c("1 intractable family: exact fronts for n in {2,3,4}, undirected and directed, < 5 s per n");
    const auto start = Clock::now();
    const std::vector<ValueVector> expected_n2{{0, Rational(13)}, {2, Rational(11)}, {4, Rational(9)},
                                        {6, Rational(7)},  {8, Rational(2)},  {14, Rational(1)}};
    for (const bool directed : {false, true}) {
        for (int n = 2; n <= 4; ++n) {
            const auto t0 = Clock::now();
            const WeightedGraph g = gen_intractable(n, directed);
            const ParetoFront front = enumerate_front(g);
            const double dt = seconds_since(t0);
            g_solved.push_back(g);
            const std::string tag = std::string(directed ? "directed" : "undirected") + " n=" + std::to_string(n);
            const auto expected = predicted_intractable_front(n);
            c.expect(front.points == expected,
                     tag + ": front " + show(front.points) + " != X-points plus {s,t} points " + show(expected));
            if (n == 2) {
                c.expect(front.points == expected_n2, tag + ": front " + show(front.points) + " != " + show(expected_n2));
            }
            c.expect(front.size() >= (std::size_t{1} << n), tag + ": fewer than 2^n points");
            const Report r = verify_intractable(n, directed);
            c.expect(r.pass, tag + ": verify_intractable failed: " + to_json(r).dump());
            c.expect(dt < 5.0, tag + ": took " + std::to_string(dt) + " s");
        }
    }
    return c.report(seconds_since(start));
}

bool criterion_2() {
    Criterion c("2 BUCO reduction: 60 random instances per orientation (n in {2,3,4}, entries <= 9), < 30 s");
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 3;
        const BucoInstance inst = random_buco(rng, n, 9);
        for (const bool directed : {false, true}) {
            const Report r = verify_buco_reduction(inst, directed);
            c.expect(r.pass, "instance " + io::to_json(inst).dump() + (directed ? " directed" : "") + ": " +
                                 to_json(r).dump());
            g_solved.push_back(gen_from_buco(inst, directed).graph);
        }
    }
    const double dt = seconds_since(start);
    c.expect(dt < 30.0, "took " + std::to_string(dt) + " s");
    return c.report(dt);
}

bool criterion_3() {
    Criterion c("3 Cai construction on the three-variable two-clause formula, < 10 s");
    const auto start = Clock::now();
    const CnfFormula cnf = parse_dimacs("p cnf 3 2\n-1 2 3 0\n1 2 -3 0\n");
    const Report r = verify_cai(cnf, {false, true, true});
    const auto& d = r.details;
    c.expect(r.pass, "verify_cai failed: " + to_json(r).dump());
    c.expect(d["vertices"] == 57, "|V| = " + d["vertices"].dump());
    c.expect(d["edges"] == 119, "|E| = " + d["edges"].dump());
    c.expect(d["K"] == 66, "K = " + d["K"].dump());
    c.expect(d["witness_value"] == io::to_json(ValueVector{66, Rational(2)}), "f(S_w) = " + d["witness_value"].dump());
    c.expect(d["full_value"] == io::to_json(ValueVector{119, Rational(1)}), "f(E) = " + d["full_value"].dump());
    c.expect(d["checks"]["single_removal_stretch_2"] == true, "single-edge removal stretch");
    c.expect(d["lambda_w_dot_witness"] == io::to_json(Rational(258)), "lambda_w . f(S_w) = " +
                                                                          d["lambda_w_dot_witness"].dump());
    c.expect(d["lambda_w_dot_full"] == io::to_json(Rational(301)), "lambda_w . f(E) = " + d["lambda_w_dot_full"].dump());
    const Lambda lam(Rational(2), Rational(63));
    c.expect(lam.apply({14 * 3 + 7 * 2, Rational(3)}) == Rational(301), "lambda_w . y_h != 301");
    const ForcedGadgetSummary gadget = forced_gadget_bruteforce();
    c.expect(gadget.every_minimum_contains_forced && gadget.min_two_spanner_size == 3,
             "a minimum 2-spanner of the gadget avoids the forced edge");
    const double dt = seconds_since(start);
    c.expect(dt < 10.0, "took " + std::to_string(dt) + " s");
    return c.report(dt);
}

bool criterion_4() {
    Criterion c("4 oracle equivalences (a) edge-restricted = all-pairs, (b) pruned = unpruned, (c) dp = brute, "
                "(d) dichotomic = hull");
    const auto start = Clock::now();
    std::mt19937_64 rng(4);

    // (a) 200 instances, <= 8 vertices, weights <= 5, |E| <= 10, every feasible spanner
    int spanners = 0;
    for (int trial = 0; trial < 200; ++trial) {
        oracle::RandomGraphSpec spec;
        spec.max_vertices = 8;
        spec.max_extra_edges = 10;
        spec.max_edges = 10;
        spec.max_c1 = 5;
        spec.max_c2 = 5;
        spec.directed = trial % 2 == 1;
        const WeightedGraph g = oracle::random_graph(rng, spec);
        c.expect(g.edge_count() <= 10, "instance too large");
        for (std::uint64_t mask = 0; mask <= oracle::full_mask(g); ++mask) {
            const EdgeSet s = oracle::to_edge_set(g, mask);
            if (!is_spanner(g, s)) {
                continue;
            }
            ++spanners;
            const ValueVector restricted = eval(g, s, EvalMode::EdgeRestricted);
            const ValueVector all = eval(g, s, EvalMode::AllPairs);
            const ValueVector reference = oracle::evaluate(g, mask);
            c.expect(restricted == all && all == reference,
                     "(a) trial " + std::to_string(trial) + " mask " + std::to_string(mask) + ": " +
                         restricted.str() + " / " + all.str() + " / " + reference.str());
        }
    }
    std::printf("    (a) compared %d feasible spanners\n", spanners);

    // (b) |E| <= 12, c1 in [-2, 5]
    for (int trial = 0; trial < 80; ++trial) {
        oracle::RandomGraphSpec spec;
        spec.max_vertices = 7;
        spec.max_extra_edges = 6;
        spec.min_c1 = -2;
        spec.directed = trial % 2 == 1;
        const WeightedGraph g = oracle::random_graph(rng, spec);
        const auto pruned = enumerate_front(g).points;
        const auto unpruned = oracle::unpruned_front(g);
        c.expect(pruned == unpruned, "(b) trial " + std::to_string(trial) + ": " + show(pruned) + " != " +
                                         show(unpruned));
    }

    // (c) n = 1..16
    for (int trial = 0; trial < 160; ++trial) {
        const int n = 1 + trial % 16;
        const BucoInstance inst = random_buco(rng, n, trial % 2 == 0 ? 9 : 100);
        c.expect(buco_dp(inst).points == buco_brute(inst).points, "(c) " + io::to_json(inst).dump());
    }

    // (d)
    for (const WeightedGraph& g : g_solved) {
        const auto hull = points_of(extreme_from_front(enumerate_front(g)));
        const auto dich = points_of(extreme_dichotomic(g));
        c.expect(hull == dich, "(d) " + show(hull) + " != " + show(dich));
    }
    c.expect(g_solved.size() == 6 + 120, "(d) instance set from criteria 1-2 incomplete");
    return c.report(seconds_since(start));
}

// All labelled connected simple graphs on n vertices with unit weights.
std::vector<WeightedGraph> all_unweighted_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    std::vector<WeightedGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1U) {
                edges.push_back({slots[i].first, slots[i].second, 1, 1});
            }
        }
        WeightedGraph g(false, n, std::move(edges));
        if (validate_instance(g).empty()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

bool criterion_5() {
    Criterion c("5 properties: dominance order, f2 monotone under edge addition, f2(E) = 1, |front| <= |E| unweighted");
    const auto start = Clock::now();
    std::mt19937_64 rng(5);

    std::uniform_int_distribution<std::int64_t> f1(-4, 4);
    std::uniform_int_distribution<std::int64_t> num(1, 8);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    auto draw = [&] { return ValueVector{f1(rng), Rational(num(rng), den(rng))}; };
    for (int i = 0; i < 20000; ++i) {
        const ValueVector a = draw(), b = draw(), d = draw();
        c.expect(!dominates(a, a), "irreflexivity " + a.str());
        c.expect(!(dominates(a, b) && dominates(b, a)), "asymmetry " + a.str() + " " + b.str());
        c.expect(!(dominates(a, b) && dominates(b, d)) || dominates(a, d),
                 "transitivity " + a.str() + " " + b.str() + " " + d.str());
    }

    for (int trial = 0; trial < 120; ++trial) {
        oracle::RandomGraphSpec spec;
        spec.max_vertices = 6;
        spec.max_extra_edges = 5;
        spec.min_c1 = -2;
        spec.directed = trial % 2 == 1;
        const WeightedGraph g = oracle::random_graph(rng, spec);
        c.expect(eval(g, g.all_edges()).f2 == Rational(1), "f2(E) != 1");
        for (std::uint64_t mask = 0; mask <= oracle::full_mask(g); ++mask) {
            const EdgeSet s = oracle::to_edge_set(g, mask);
            if (!is_spanner(g, s)) {
                continue;
            }
            const Rational base = eval(g, s).f2;
            c.expect(base >= Rational(1), "f2 below 1");
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (!s.contains(e)) {
                    EdgeSet bigger = s;
                    bigger.insert(e);
                    c.expect(eval(g, bigger).f2 <= base, "adding an edge raised f2");
                }
            }
        }
    }

    for (int n = 2; n <= 5; ++n) {
        for (const WeightedGraph& g : all_unweighted_graphs(n)) {
            const auto size = enumerate_front(g).size();
            c.expect(size <= static_cast<std::size_t>(g.edge_count()),
                     "|front| = " + std::to_string(size) + " > |E| = " + std::to_string(g.edge_count()));
        }
    }
    return c.report(seconds_since(start));
}

} // namespace

int main() {
    const std::vector<std::function<bool()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                      criterion_5};
    int failed = 0;
    for (const auto& run : criteria) {
        try {
            failed += run() ? 0 : 1;
        } catch (const std::exception& e) {
            std::printf("FAIL criterion aborted: %s\n", e.what());
            ++failed;
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
