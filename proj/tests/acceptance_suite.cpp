#include "acceptance_suite.hpp"

#include "goodman/annulus.hpp"
#include "goodman/braid.hpp"
#include "goodman/certify.hpp"
#include "goodman/graph.hpp"
#include "goodman/metric.hpp"
#include "goodman/profile.hpp"
#include "goodman/steadiness.hpp"
#include "raster_oracle.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <utility>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

namespace goodman {

namespace {

struct CriterionResult {
    bool pass = true;
    Json details = Json::object();

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details["failures"].push_back(what);
        }
    }
};

Scene sceneFile(const std::string& dir, const std::string& file) {
    return loadScene(dir + "/" + file);
}

// Criterion 1: bundled constant-slope curves are steady with zero violations
// over five hyperbolic monodromies.
CriterionResult constantSlopeSteadiness(const std::string& dir) {
    CriterionResult r;
    std::size_t curves = 0, steady = 0;
    for (const std::string& file :
         {"steady_lines_01.json", "steady_lines_02.json", "steady_lines_03.json",
          "steady_lines_04.json", "steady_lines_05.json"}) {
        const Scene scene = sceneFile(dir, file);
        const SuspensionFlow flow(scene.monodromy);
        for (const auto& spec : scene.curves) {
            ++curves;
            const auto report = checkSteadiness(flow, scene.buildCurve(spec.name));
            const bool ok =
                report.verdict == Verdict::Steady && report.violations.empty();
            if (ok) ++steady;
            r.require(ok, scene.name + "/" + spec.name + " not steady");
        }
    }
    r.require(curves == 20, "expected 20 bundled curves");
    r.details["curves"] = curves;
    r.details["steady"] = steady;
    return r;
}

// Criterion 2: one positive crossing breaks steadiness exactly at the
// inserted crossing; the mirrored negative crossing stays steady.
CriterionResult braidNecessity(const std::string& dir) {
    CriterionResult r;
    {
        const Scene scene = sceneFile(dir, "braid_positive.json");
        const SuspensionFlow flow(scene.monodromy);
        const auto& spec = scene.braids.at(0);
        const PLCurve braided =
            insertBraid(flow, scene.buildCurve(spec.base), spec.word, spec.width);
        const auto report = checkSteadiness(flow, braided);
        r.require(report.verdict == Verdict::Unsteady, "positive braid not unsteady");
        r.require(report.violations.size() == 1, "expected a single violation");
        if (report.violations.size() == 1) {
            r.require(report.violations[0].k == 0 &&
                          report.violations[0].point == mod1(braided.marked()[0].point),
                      "violation not at the inserted crossing");
        }
        r.details["positive_violations"] = report.violations.size();
    }
    {
        const Scene scene = sceneFile(dir, "braid_negative.json");
        const SuspensionFlow flow(scene.monodromy);
        const auto& spec = scene.braids.at(0);
        const PLCurve braided =
            insertBraid(flow, scene.buildCurve(spec.base), spec.word, spec.width);
        const auto report = checkSteadiness(flow, braided);
        r.require(report.verdict == Verdict::Steady, "negative braid not steady");
        r.details["negative_steady"] = report.verdict == Verdict::Steady;
    }
    return r;
}

// Criterion 3: the emitted perturbation radius is safe for 1000 random
// vertex moves and active at ten times the radius.
CriterionResult perturbationOpenness(const std::string& dir) {
    CriterionResult r;
    const Scene scene = sceneFile(dir, "perturbation_seed.json");
    const SuspensionFlow flow(scene.monodromy);
    const CurveSpec& spec = scene.curves.at(0);
    const PLCurve seed = scene.buildCurve(spec.name);
    const auto base = checkSteadiness(flow, seed);
    r.require(base.verdict == Verdict::Steady, "seed curve not steady");
    const double delta_star = base.delta_star;
    r.require(delta_star > 0, "seed emitted no perturbation radius");
    r.details["delta_star"] = delta_star;

    constexpr long long kDen = 1ll << 30;
    const auto snap = [&](double v) { return Rational(Int(std::llround(v * kDen)), Int(kDen)); };
    const auto perturbed = [&](const std::vector<Rational>& moves) {
        std::vector<Vec2Q> verts = spec.vertices;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            verts[i].x += moves[2 * i];
            verts[i].y += moves[2 * i + 1];
        }
        return PLCurve(std::move(verts), spec.cls);
    };

    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::size_t unsteady_within = 0;
    const std::size_t trials = 1000;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rational> moves;
        for (std::size_t i = 0; i < 2 * spec.vertices.size(); ++i)
            moves.push_back(snap(unit(rng) * delta_star));
        if (checkSteadiness(flow, perturbed(moves)).verdict != Verdict::Steady)
            ++unsteady_within;
    }
    r.require(unsteady_within == 0, "a perturbation inside the radius went unsteady");
    r.details["trials"] = trials;
    r.details["unsteady_within"] = unsteady_within;

    // Axis-aligned probes at ten times the radius; the radius is active when
    // at least one of them flips the verdict.
    std::size_t flips = 0, probes = 0;
    for (std::size_t i = 0; i < 2 * spec.vertices.size(); ++i)
        for (const int s : {1, -1}) {
            ++probes;
            std::vector<Rational> moves(2 * spec.vertices.size(), Rational(0));
            moves[i] = snap(s * 10.0 * delta_star);
            try {
                if (checkSteadiness(flow, perturbed(moves)).verdict != Verdict::Steady)
                    ++flips;
            } catch (const Error&) {
                ++flips;  // the verdict no longer holds in any form
            }
        }
    r.require(flips >= 1, "no probe at ten radii flipped the verdict");
    r.details["probes"] = probes;
    r.details["flips"] = flips;
    return r;
}

// Criterion 4: twisting in the predicted direction keeps every composed
// return map hyperbolic; one wrong-sign triple degenerates.
CriterionResult twistHyperbolicity(const std::string&) {
    CriterionResult r;
    const std::vector<Mat2Z> monodromies{
        Mat2Z{2, 1, 1, 1},     Mat2Z{1, 1, 1, 2}, Mat2Z{2, 3, 1, 2}, Mat2Z{3, 1, 2, 1},
        Mat2Z{3, 2, 1, 1},     Mat2Z{1, 2, 1, 3}, Mat2Z{5, 2, 2, 1}, Mat2Z{2, 5, 1, 3},
        Mat2Z{-2, -1, -1, -1}, Mat2Z{4, 1, 3, 1}};
    const std::vector<HomologyClass> classes{{1, 0}, {0, 1}, {1, 1},  {1, 2},
                                             {2, 1}, {1, -1}, {3, 1}, {1, 3}};
    std::size_t checked = 0, hyperbolic = 0;
    for (const auto& m : monodromies) {
        const SuspensionFlow flow(m);
        for (const auto& c : classes) {
            int s = predictedTwistSign(m, c);
            if (s == 0) s = 1;  // trace does not move; any direction works
            for (long long n = 1; n <= 20; ++n) {
                ++checked;
                if (composeReturnMap(flow, c, s * n).isHyperbolic()) ++hyperbolic;
            }
        }
    }
    r.require(hyperbolic == checked, "a predicted-sign twist lost hyperbolicity");
    r.details["checked"] = checked;
    r.details["hyperbolic"] = hyperbolic;

    // The wrong-sign exhibit: on the cat map the (1, 0) twist direction is
    // predicted negative, and one positive twist collapses the trace to 2.
    const SuspensionFlow cat(Mat2Z{2, 1, 1, 1});
    const Mat2Z wrong = composeReturnMap(cat, {1, 0}, 1);
    r.require(predictedTwistSign(cat.monodromy(), {1, 0}) == -1,
              "cat (1,0) predicted sign changed");
    r.require(!wrong.isHyperbolic(), "wrong-sign twist stayed hyperbolic");
    r.details["wrong_sign_trace"] = wrong.trace().convert_to<long long>();
    return r;
}

// Criterion 5: the bundled annulus certifies thinness at R = 64 and fails at
// R = 1, and certified cone widths collapse across twenty returns.
CriterionResult thinnessCertificate(const std::string& dir) {
    CriterionResult r;
    const Scene scene = sceneFile(dir, "cat_annulus.json");
    const SuspensionFlow flow(scene.monodromy);
    const auto& aspec = scene.annuli.at(0);
    const SurgeryAnnulus annulus =
        buildAnnulus(flow, scene.buildCurve(aspec.base), aspec.width,
                     ExtendedSlope::finite(QuadExt(aspec.transverse_slope)));
    const auto& pspec = scene.profiles.at(0);
    const SurgeryProfile profile =
        standardProfile(pspec.coefficient, pspec.delta, pspec.slope_bound);
    const Rational epsilon(1, 8);
    const auto cert = certifyThinness(flow, annulus, profile, epsilon);
    r.require(cert.certified, "thin profile failed to certify");
    r.require(cert.q_min > QuadExt(Rational(1) - epsilon), "q_min at most 1 - epsilon");
    r.require(cert.width_L_factor_max < 1.0, "width factor not below 1");
    r.details["q_min"] = cert.q_min.toDouble();
    r.details["width_L_factor_max"] = cert.width_L_factor_max;
    r.details["L"] = Json::array({numerator(cert.L).convert_to<long long>(),
                                  denominator(cert.L).convert_to<long long>()});

    const Scene shallow_scene = sceneFile(dir, "cat_annulus_shallow.json");
    const auto& sspec = shallow_scene.profiles.at(0);
    bool q_too_small = false;
    try {
        certifyThinness(flow, annulus,
                        standardProfile(sspec.coefficient, sspec.delta, sspec.slope_bound),
                        epsilon);
    } catch (const QTooSmall&) {
        q_too_small = true;
    }
    r.require(q_too_small, "shallow profile did not fail with QTooSmall");
    r.details["shallow_rejected"] = q_too_small;

    const int periods = 20;
    const auto widths = coneIterate(annulus, cert, 1.0, periods);
    bool decreasing = true;
    for (std::size_t i = 1; i < widths.size(); ++i)
        if (!(widths[i] < widths[i - 1])) decreasing = false;
    r.require(decreasing, "cone widths not strictly decreasing");
    const double lambda = flow.lambda().toDouble();
    const double ratio = widths.back() / widths.front();
    const double bound =
        2.0 * std::pow(lambda, -2.0 * periods * annulus.firstReturn());
    r.require(ratio < bound, "cone width ratio misses the transport bound");
    r.details["cone_ratio"] = ratio;
    r.details["cone_bound"] = bound;
    return r;
}

// Shared vertex sample for the two graph criteria: random bounded vertices,
// deterministic for the fixed seed, grown until the edge quota is met.
std::vector<Mat2Z> sampleVertices(long long entry_bound, std::size_t count,
                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> entry(-entry_bound, entry_bound);
    std::uniform_int_distribution<long long> lower(-entry_bound, -1);
    std::uniform_int_distribution<long long> shift(-2, 2);
    std::vector<Mat2Z> out;
    while (out.size() < count) {
        const long long a = entry(rng);
        const long long c = lower(rng);
        if (std::gcd(std::abs(a), std::abs(c)) != 1) continue;
        const long long n = -c;
        long long d = 0, b = 0;
        bool solved = false;
        for (d = -n; d <= n && !solved; ++d)
            if ((1 - a * d) % n == 0) {
                b = (1 - a * d) / n;
                solved = true;
            }
        if (!solved) continue;
        --d;  // the loop increments past the solution
        const long long k = shift(rng);
        Mat2Z v{Int(a), Int(b + k * a), Int(c), Int(d + k * c)};
        if (v.det() != 1 || v.c > -1) continue;
        out.push_back(v);
    }
    return out;
}

struct GraphSample {
    std::vector<GEdge> edges;
    std::size_t vertices = 0;
};

GraphSample collectGraphSample(const GraphSpec& spec) {
    std::mt19937_64 rng(20240817);
    GraphSample sample;
    // Grow the sample until the edge quota is safely met.
    while (sample.edges.size() < 10000 && sample.vertices < 8 * spec.sample_count) {
        const auto batch = sampleVertices(spec.entry_bound, spec.sample_count, rng);
        for (const auto& v : batch) {
            const auto local = neighbors(v, spec.witness_bound);
            sample.edges.insert(sample.edges.end(), local.begin(), local.end());
        }
        sample.vertices += batch.size();
    }
    return sample;
}

bool replayChain(const std::vector<GEdge>& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const GEdge& e = chain[i];
        const long long n = e.branch == TwistBranch::Positive ? 1 : -1;
        if (!(twistMatrix(e.witness, n) * e.source == e.target)) return false;
        if (i + 1 < chain.size() && !(chain[i + 1].source == e.target)) return false;
    }
    return true;
}

// Criterion 6: level monotonicity on a large random edge sample, pairwise
// connectivity of the level-1 box with replayed paths, and predecessor
// chains at every level from 2 to 10.
CriterionResult graphStructure(const std::string& dir, const GraphSample& sample) {
    CriterionResult r;
    const Scene scene = sceneFile(dir, "graph_box.json");
    const GraphSpec& spec = *scene.graph;

    r.require(sample.edges.size() >= 10000, "edge sample below quota");
    std::size_t monotone = 0;
    for (const auto& e : sample.edges)
        if (graphLevel(e.target) >= graphLevel(e.source)) ++monotone;
    r.require(monotone == sample.edges.size(), "an edge lowered the level");
    r.details["sampled_vertices"] = sample.vertices;
    r.details["sampled_edges"] = sample.edges.size();
    r.details["monotone_edges"] = monotone;

    const auto lib = verifyLevelMonotone(spec.sample_count, spec.entry_bound,
                                         spec.witness_bound);
    r.require(lib.pass, "library-level monotonicity sweep failed");
    r.details["library_edges"] = lib.edges_checked;

    const auto g1 = verifyG1Connected(10);
    r.require(g1.connected, "level-1 box not strongly connected");
    r.details["g1_vertices"] = g1.vertex_count;
    r.details["g1_max_path"] = g1.max_path_length;
    for (const auto& [from, to] : std::vector<std::pair<std::pair<long long, long long>,
                                                        std::pair<long long, long long>>>{
             {{-10, -10}, {10, 10}}, {{3, -7}, {-5, 2}}, {{0, 0}, {-9, 9}}}) {
        const auto path =
            g1Path(Int(from.first), Int(from.second), Int(to.first), Int(to.second));
        r.require(replayChain(path), "a level-1 path failed to replay");
    }

    // Predecessor chains: random vertices at levels 2 through 10, each chain
    // starting strictly below the vertex and replaying exactly onto it.
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> entry(-9, 9);
    std::uniform_int_distribution<long long> shift(-3, 3);
    std::size_t chains = 0;
    while (chains < 100) {
        const long long n = 2 + static_cast<long long>(chains % 9);
        const long long a = entry(rng);
        long long d = 0, b = 0;
        bool solved = false;
        for (d = -n; d <= n && !solved; ++d)
            if ((1 - a * d) % n == 0) {
                b = (1 - a * d) / n;
                solved = true;
            }
        if (!solved) continue;
        --d;
        const long long k = shift(rng);
        const Mat2Z v{Int(a), Int(b + k * a), Int(-n), Int(d - k * n)};
        if (v.det() != 1) continue;
        const auto chain = predecessorChain(v);
        bool ok = !chain.empty() && replayChain(chain) &&
                  chain.back().target == v &&
                  graphLevel(chain.front().source) < graphLevel(v);
        r.require(ok, "predecessor chain failed for " + v.str());
        if (!ok) break;
        ++chains;
    }
    r.details["predecessor_chains"] = chains;

    // Bundled reachability queries replay as explicit certificates.
    for (const auto& q : spec.queries) {
        const auto reach = reachable(q.source, q.target, q.witness_bound, q.depth_bound);
        if (q.name == "blocked") {
            r.require(!reach.found && reach.exhausted,
                      "blocked query unexpectedly found a path");
        } else {
            r.require(reach.found, "query '" + q.name + "' found no path");
            r.require(replayChain(reach.path), "query path failed to replay");
        }
    }
    return r;
}

// Criterion 7: every sampled edge target equals the twist of its source, by
// explicit matrix product, independent of the edge constructor.
CriterionResult edgeTwistConsistency(const GraphSample& sample) {
    CriterionResult r;
    std::size_t exact = 0;
    for (const auto& e : sample.edges) {
        const long long n = e.branch == TwistBranch::Positive ? 1 : -1;
        if (twistMatrix(e.witness, n) * e.source == e.target) ++exact;
    }
    r.require(exact == sample.edges.size(), "an edge product mismatch");
    r.details["edges_checked"] = sample.edges.size();
    r.details["exact_products"] = exact;
    return r;
}

// Criterion 8: orbit averaging of the flat seed metric produces verified
// expansion margins, nondecreasing in the averaging time.
CriterionResult metricAveraging(const std::string& dir) {
    CriterionResult r;
    const Scene scene = sceneFile(dir, "metric_grid.json");
    const SuspensionFlow flow(scene.monodromy);
    const MetricSpec& spec = *scene.metric;
    const auto seed = MetricSample::flatSeed(flow, static_cast<std::size_t>(spec.grid),
                                             static_cast<std::size_t>(spec.time_steps));
    const auto main = averageMetric(flow, seed, static_cast<double>(spec.horizon));
    r.require(main.lambda_bar >= 1.05, "averaged margin below 1.05");
    r.details["lambda_bar"] = main.lambda_bar;
    const double tol = numerator(scene.tolerance).convert_to<double>() /
                       denominator(scene.tolerance).convert_to<double>();
    double prev = 0;
    Json margins = Json::array();
    for (const double T : {2.0, 4.0, 8.0, 16.0}) {
        const auto avg = averageMetric(flow, seed, T);
        margins.push_back(avg.margin);
        r.require(avg.margin + tol >= prev, "margin decreased with longer averaging");
        prev = avg.margin;
    }
    r.details["margins"] = margins;
    return r;
}

// Criterion 9: the exact crossing enumeration agrees with the lattice
// brute-force counter on every bundled curve.
CriterionResult crossingOracle(const std::string& dir) {
    CriterionResult r;
    const Scene scene = sceneFile(dir, "crossing_pairs.json");
    const SuspensionFlow flow(scene.monodromy);
    const long long K = 5;
    Json counts = Json::object();
    for (const auto& spec : scene.curves) {
        const PLCurve c = scene.buildCurve(spec.name);
        const auto raster = rasterCrossingCounts(flow, c, c, K);
        const auto exact = enumerateCrossings(flow, c, c, K);
        std::vector<std::size_t> tally(static_cast<std::size_t>(K), 0);
        for (const auto& x : exact) ++tally[static_cast<std::size_t>(x.k - 1)];
        r.require(tally == raster, "count mismatch on curve " + spec.name);
        counts[spec.name] = tally;
    }
    r.details["counts"] = counts;
    return r;
}

Json criterionJson(int id, const std::string& name, const CriterionResult& r) {
    Json j;
    j["id"] = id;
    j["name"] = name;
    j["pass"] = r.pass;
    j["details"] = r.details;
    return j;
}

}  // namespace

AcceptanceOutcome runAcceptanceSuite(const std::string& scenes_dir, std::ostream& log) {
    AcceptanceOutcome outcome;
    outcome.report["tool"] = "goodman-lab 0.1.0";
    outcome.report["command"] = "accept";
    outcome.report["criteria"] = Json::array();
    bool all = true;

    const auto run = [&](int id, const std::string& name,
                         const std::function<CriterionResult()>& fn) -> CriterionResult {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.pass = false;
            r.details["exception"] = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        log << "criterion " << id << " " << name << ": " << (r.pass ? "PASS" : "FAIL")
            << " (" << secs << "s)\n";
        outcome.report["criteria"].push_back(criterionJson(id, name, r));
        all = all && r.pass;
        return r;
    };

    const auto c1 = run(1, "constant-slope steadiness",
                        [&] { return constantSlopeSteadiness(scenes_dir); });
    const auto c2 = run(2, "braid crossing necessity",
                        [&] { return braidNecessity(scenes_dir); });
    run(3, "perturbation openness", [&] { return perturbationOpenness(scenes_dir); });
    const auto c4 = run(4, "twist hyperbolicity",
                        [&] { return twistHyperbolicity(scenes_dir); });

    const auto c5 = run(5, "thinness certificate",
                        [&] { return thinnessCertificate(scenes_dir); });

    GraphSample sample;
    try {
        const Scene graph_scene = sceneFile(scenes_dir, "graph_box.json");
        sample = collectGraphSample(*graph_scene.graph);
    } catch (const std::exception&) {
        // graphStructure reports the failure through its own scene load
    }
    run(6, "graph level structure",
        [&] { return graphStructure(scenes_dir, sample); });
    run(7, "edge twist consistency", [&] { return edgeTwistConsistency(sample); });

    run(8, "metric averaging", [&] { return metricAveraging(scenes_dir); });
    const auto c9 = run(9, "crossing oracle agreement",
                        [&] { return crossingOracle(scenes_dir); });

    run(10, "report determinism", [&] {
        CriterionResult r;
        // Re-run the fast criteria and compare their serialized details
        // byte for byte against the first pass.
        const auto same = [](const CriterionResult& a, const CriterionResult& b) {
            return a.pass == b.pass && a.details.dump(2) == b.details.dump(2);
        };
        r.require(same(c1, constantSlopeSteadiness(scenes_dir)),
                  "criterion 1 report changed between runs");
        r.require(same(c2, braidNecessity(scenes_dir)),
                  "criterion 2 report changed between runs");
        r.require(same(c4, twistHyperbolicity(scenes_dir)),
                  "criterion 4 report changed between runs");
        r.require(same(c5, thinnessCertificate(scenes_dir)),
                  "criterion 5 report changed between runs");
        r.require(same(c9, crossingOracle(scenes_dir)),
                  "criterion 9 report changed between runs");
        r.details["recompared"] = Json::array({1, 2, 4, 5, 9});
        return r;
    });

    outcome.report["all_passed"] = all;
    outcome.all_passed = all;
    return outcome;
}

}  // namespace goodman
