#include "goodman/annulus.hpp"
#include "goodman/braid.hpp"
#include "goodman/certify.hpp"
#include "goodman/graph.hpp"
#include "goodman/metric.hpp"
#include "goodman/profile.hpp"
#include "goodman/report.hpp"
#include "goodman/scene.hpp"
#include "goodman/steadiness.hpp"

#include "CLI11.hpp"
#include "acceptance_suite.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace goodman;

// Exit codes: 0 verified, 1 violation found, 2 inconclusive, 3 input error.
constexpr int kVerified = 0;
constexpr int kViolation = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

struct Options {
    std::string scene;
    std::string out;
    std::string format = "json";
    long long bound = -1;
    unsigned long seed = 20240817;
    std::string tolerance;
};

void addCommon(CLI::App* cmd, Options& o) {
    cmd->add_option("--scene", o.scene, "scene file (or directory for accept)");
    cmd->add_option("--out", o.out, "output path; stdout when omitted");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--bound", o.bound, "command-specific search or scan bound");
    cmd->add_option("--seed", o.seed, "random seed for sampled sweeps");
    cmd->add_option("--tolerance", o.tolerance, "rational tolerance, e.g. 1/8");
}

Rational parseRational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw SceneError("tolerance: cannot parse '" + s + "' as a rational");
    }
}

Scene requireScene(const Options& o) {
    if (o.scene.empty()) throw SceneError("missing --scene");
    return loadScene(o.scene);
}

long long boundOr(const Options& o, long long fallback) {
    return o.bound >= 0 ? o.bound : fallback;
}

Json matrixJson(const Mat2Z& m) {
    auto cell = [](const Int& v) { return v.convert_to<long long>(); };
    return Json::array(
        {Json::array({cell(m.a), cell(m.b)}), Json::array({cell(m.c), cell(m.d)})});
}

Json classJson(const HomologyClass& c) {
    return Json::array({c.x.convert_to<long long>(), c.y.convert_to<long long>()});
}

Json pointJson(const Vec2Q& p) {
    return Json::array({rationalJson(p.x), rationalJson(p.y)});
}

Json slopeJson(const ExtendedSlope& s) {
    if (!s.isFinite()) return "inf";
    return quadextJson(s.value());
}

Json edgeJson(const GEdge& e) {
    return Json{{"source", matrixJson(e.source)},
                {"target", matrixJson(e.target)},
                {"witness", classJson(e.witness)},
                {"branch", e.branch == TwistBranch::Positive ? 1 : -1}};
}

Json violationJson(const Crossing& c) {
    return Json{{"k", c.k}, {"point", pointJson(c.point)}};
}

void emit(const Json& report, const Options& o) {
    writeOutput(dumpReport(report), o.out);
}

int cmdSteadiness(const Options& o) {
    const Scene scene = requireScene(o);
    const SuspensionFlow flow(scene.monodromy);
    Json report = baseReport("steadiness", scene);
    Json entries = Json::array();
    bool any_unsteady = false, any_inconclusive = false;
    for (const auto& spec : scene.curves) {
        Json entry{{"curve", spec.name}};
        try {
            const auto rep = checkSteadiness(flow, scene.buildCurve(spec.name));
            entry["verdict"] = rep.verdict == Verdict::Steady ? "steady" : "unsteady";
            entry["sign"] = rep.sign;
            entry["cutoff_K"] = rep.cutoff_K;
            entry["h"] = quadextJson(rep.h);
            entry["H"] = quadextJson(rep.H);
            entry["crossings_checked"] = rep.crossings_checked;
            entry["delta_star"] = rep.delta_star;
            Json viols = Json::array();
            for (const auto& v : rep.violations) viols.push_back(violationJson(v));
            entry["violations"] = viols;
            if (rep.verdict != Verdict::Steady) any_unsteady = true;
        } catch (const Error& e) {
            entry["error"] = e.what();
            any_inconclusive = true;
        }
        entries.push_back(entry);
    }
    report["curves"] = entries;
    emit(report, o);
    if (any_inconclusive) return kInconclusive;
    return any_unsteady ? kViolation : kVerified;
}

int cmdGeneric(const Options& o) {
    const Scene scene = requireScene(o);
    const SuspensionFlow flow(scene.monodromy);
    const long long bound = boundOr(o, 10);
    Json report = baseReport("generic", scene);
    report["period_bound"] = bound;
    Json entries = Json::array();
    bool any_witness = false;
    for (const auto& spec : scene.curves) {
        const auto rep = checkGeneric(flow, scene.buildCurve(spec.name), bound);
        Json entry{{"curve", spec.name}, {"generic", rep.generic}};
        if (rep.witness) {
            any_witness = true;
            entry["witness"] =
                Json{{"kind", rep.witness->kind == GenericWitness::Kind::ClosedOrbit
                                  ? "closed-orbit"
                                  : "slope-interval"},
                     {"turn_a", rep.witness->turn_a},
                     {"turn_b", rep.witness->turn_b},
                     {"k", rep.witness->k}};
        }
        entries.push_back(entry);
    }
    report["curves"] = entries;
    emit(report, o);
    return any_witness ? kViolation : kVerified;
}

int cmdBraid(const Options& o) {
    const Scene scene = requireScene(o);
    const SuspensionFlow flow(scene.monodromy);
    Json report = baseReport("braid", scene);
    Json entries = Json::array();
    bool any_unsteady = false;
    for (const auto& spec : scene.braids) {
        const PLCurve braided =
            insertBraid(flow, scene.buildCurve(spec.base), spec.word, spec.width);
        const auto rep = checkSteadiness(flow, braided);
        Json viols = Json::array();
        for (const auto& v : rep.violations) viols.push_back(violationJson(v));
        entries.push_back(
            Json{{"braid", spec.name},
                 {"class", classJson(braided.homologyClass())},
                 {"marked_crossings", braided.marked().size()},
                 {"verdict", rep.verdict == Verdict::Steady ? "steady" : "unsteady"},
                 {"violations", viols}});
        if (rep.verdict != Verdict::Steady) any_unsteady = true;
    }
    report["braids"] = entries;
    emit(report, o);
    return any_unsteady ? kViolation : kVerified;
}

SurgeryAnnulus buildFromSpec(const Scene& scene, const SuspensionFlow& flow,
                             const AnnulusSpec& spec) {
    return buildAnnulus(flow, scene.buildCurve(spec.base), spec.width,
                        ExtendedSlope::finite(QuadExt(spec.transverse_slope)));
}

int cmdAnnulus(const Options& o) {
    const Scene scene = requireScene(o);
    const SuspensionFlow flow(scene.monodromy);
    Json report = baseReport("annulus", scene);
    Json entries = Json::array();
    bool any_failed = false;
    for (const auto& spec : scene.annuli) {
        Json entry{{"annulus", spec.name}};
        try {
            const auto a = buildFromSpec(scene, flow, spec);
            entry["sign"] = a.sign();
            entry["first_return"] = a.firstReturn();
            entry["width"] = rationalJson(a.width());
            entry["leaf_slope"] = slopeJson(a.leafSlope());
            entry["transverse_slope"] = slopeJson(a.transverseSlope());
            entry["frame"] = Json{{"a", quadextJson(a.frame().a)},
                                  {"b", quadextJson(a.frame().b)},
                                  {"c", quadextJson(a.frame().c)},
                                  {"d", quadextJson(a.frame().d)}};
        } catch (const Error& e) {
            entry["error"] = e.what();
            any_failed = true;
        }
        entries.push_back(entry);
    }
    report["annuli"] = entries;
    emit(report, o);
    return any_failed ? kViolation : kVerified;
}

Json certificateJson(const ThinnessCertificate& c) {
    return Json{{"certified", c.certified},
                {"epsilon", rationalJson(c.epsilon)},
                {"delta", rationalJson(c.delta)},
                {"slope_bound", rationalJson(c.slope_bound)},
                {"q_min", quadextJson(c.q_min)},
                {"width_L_factor_max", c.width_L_factor_max},
                {"surgery_factor_max", c.surgery_factor_max},
                {"flow_factor", c.flow_factor},
                {"cu_translation_bound", c.cu_translation_bound},
                {"m_bar", c.m_bar},
                {"L", rationalJson(c.L)},
                {"pieces_checked", c.pieces_checked}};
}

int cmdCertify(const Options& o) {
    const Scene scene = requireScene(o);
    const SuspensionFlow flow(scene.monodromy);
    const Rational epsilon =
        o.tolerance.empty() ? Rational(1, 8) : parseRational(o.tolerance);
    Json report = baseReport("certify", scene);
    report["epsilon"] = rationalJson(epsilon);
    Json entries = Json::array();
    bool any_failed = false;
    for (const auto& aspec : scene.annuli) {
        const auto annulus = buildFromSpec(scene, flow, aspec);
        for (const auto& pspec : scene.profiles) {
            Json entry{{"annulus", aspec.name}, {"profile", pspec.name}};
            try {
                const auto profile =
                    standardProfile(pspec.coefficient, pspec.delta, pspec.slope_bound);
                entry["certificate"] =
                    certificateJson(certifyThinness(flow, annulus, profile, epsilon));
            } catch (const Error& e) {
                entry["error"] = e.what();
                any_failed = true;
            }
            entries.push_back(entry);
        }
    }
    report["certificates"] = entries;
    emit(report, o);
    return any_failed ? kViolation : kVerified;
}

int cmdCones(const Options& o) {
    const Scene scene = requireScene(o);
    const SuspensionFlow flow(scene.monodromy);
    const Rational epsilon =
        o.tolerance.empty() ? Rational(1, 8) : parseRational(o.tolerance);
    const int steps = static_cast<int>(boundOr(o, 20));
    Json report = baseReport("cones", scene);
    const auto& aspec = scene.annuli.at(0);
    const auto& pspec = scene.profiles.at(0);
    const auto annulus = buildFromSpec(scene, flow, aspec);
    const auto profile =
        standardProfile(pspec.coefficient, pspec.delta, pspec.slope_bound);
    const auto cert = certifyThinness(flow, annulus, profile, epsilon);
    const auto widths = coneIterate(annulus, cert, 1.0, steps);
    report["annulus"] = aspec.name;
    report["profile"] = pspec.name;
    report["certificate"] = certificateJson(cert);
    report["widths"] = widths;
    emit(report, o);
    return kVerified;
}

int cmdTwistScan(const Options& o) {
    const Scene scene = requireScene(o);
    const SuspensionFlow flow(scene.monodromy);
    const long long scan = boundOr(o, 20);
    bool all_hyperbolic = true;
    struct Row {
        HomologyClass cls;
        int sign;
        long long n;
        long long trace;
        bool hyperbolic;
    };
    std::vector<Row> rows;
    for (const auto& spec : scene.curves) {
        if (!spec.cls.isPrimitive()) continue;
        int s = predictedTwistSign(scene.monodromy, spec.cls);
        if (s == 0) s = 1;
        for (long long n = 1; n <= scan; ++n) {
            const Mat2Z m = composeReturnMap(flow, spec.cls, s * n);
            const bool hyp = m.isHyperbolic();
            rows.push_back({spec.cls, s, n, m.trace().convert_to<long long>(), hyp});
            if (!hyp) all_hyperbolic = false;
        }
    }
    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "class_x,class_y,sign,n,trace,hyperbolic\n";
        for (const auto& r : rows)
            csv << r.cls.x << "," << r.cls.y << "," << r.sign << "," << r.n << ","
                << r.trace << "," << (r.hyperbolic ? 1 : 0) << "\n";
        writeOutput(csv.str(), o.out);
    } else {
        Json report = baseReport("twist-scan", scene);
        Json entries = Json::array();
        for (const auto& r : rows)
            entries.push_back(Json{{"class", classJson(r.cls)},
                                   {"sign", r.sign},
                                   {"n", r.n},
                                   {"trace", r.trace},
                                   {"hyperbolic", r.hyperbolic}});
        report["rows"] = entries;
        emit(report, o);
    }
    return all_hyperbolic ? kVerified : kViolation;
}

const GraphSpec& requireGraph(const Scene& scene) {
    if (!scene.graph) throw SceneError("scene: no graph section");
    return *scene.graph;
}

int cmdGraphNeighbors(const Options& o) {
    const Scene scene = requireScene(o);
    const GraphSpec& spec = requireGraph(scene);
    const long long bound = boundOr(o, spec.witness_bound);
    Json report = baseReport("graph neighbors", scene);
    Json entries = Json::array();
    for (const auto& q : spec.queries) {
        Json edges = Json::array();
        for (const auto& e : neighbors(q.source, bound)) edges.push_back(edgeJson(e));
        entries.push_back(Json{{"query", q.name},
                               {"source", matrixJson(q.source)},
                               {"edges", edges}});
    }
    report["neighbors"] = entries;
    emit(report, o);
    return kVerified;
}

int cmdGraphReach(const Options& o) {
    const Scene scene = requireScene(o);
    const GraphSpec& spec = requireGraph(scene);
    Json report = baseReport("graph reach", scene);
    Json entries = Json::array();
    bool any_exhausted = false;
    for (const auto& q : spec.queries) {
        const auto rep = reachable(q.source, q.target, q.witness_bound, q.depth_bound);
        Json path = Json::array();
        for (const auto& e : rep.path) path.push_back(edgeJson(e));
        entries.push_back(Json{{"query", q.name},
                               {"found", rep.found},
                               {"exhausted", rep.exhausted},
                               {"expanded", rep.expanded},
                               {"path", path}});
        if (!rep.found) any_exhausted = true;
    }
    report["queries"] = entries;
    emit(report, o);
    return any_exhausted ? kInconclusive : kVerified;
}

int cmdGraphVerifyLemma(const Options& o) {
    const Scene scene = requireScene(o);
    const GraphSpec& spec = requireGraph(scene);
    const long long box = boundOr(o, 10);
    Json report = baseReport("graph verify-lemma", scene);
    const auto monotone = verifyLevelMonotone(spec.sample_count, spec.entry_bound,
                                              spec.witness_bound, o.seed);
    report["level_monotone"] = Json{{"pass", monotone.pass},
                                    {"vertices_sampled", monotone.vertices_sampled},
                                    {"edges_checked", monotone.edges_checked}};
    if (monotone.counterexample)
        report["level_monotone"]["counterexample"] = edgeJson(*monotone.counterexample);
    const auto g1 = verifyG1Connected(box);
    report["level_one_connectivity"] = Json{{"box", g1.box},
                                            {"connected", g1.connected},
                                            {"vertex_count", g1.vertex_count},
                                            {"max_path_length", g1.max_path_length}};
    emit(report, o);
    return monotone.pass && g1.connected ? kVerified : kViolation;
}

int cmdMetricAverage(const Options& o) {
    const Scene scene = requireScene(o);
    if (!scene.metric) throw SceneError("scene: no metric section");
    const SuspensionFlow flow(scene.monodromy);
    const MetricSpec& spec = *scene.metric;
    const auto seed = MetricSample::flatSeed(flow, static_cast<std::size_t>(spec.grid),
                                             static_cast<std::size_t>(spec.time_steps));
    const auto avg = averageMetric(flow, seed, static_cast<double>(spec.horizon));
    Json report = baseReport("metric-average", scene);
    report["grid"] = spec.grid;
    report["time_steps"] = spec.time_steps;
    report["horizon"] = spec.horizon;
    report["lambda_bar"] = avg.lambda_bar;
    report["margin"] = avg.margin;
    emit(report, o);
    return avg.margin > 0 ? kVerified : kViolation;
}

int cmdAccept(const Options& o) {
    std::string dir = o.scene;
    if (dir.empty()) {
        const char* env = std::getenv("GOODMAN_LAB_SCENES");
        dir = env ? env : "scenes";
    }
    const auto outcome = runAcceptanceSuite(dir, std::cerr);
    writeOutput(outcome.report.dump(2) + "\n", o.out);
    return outcome.all_passed ? kVerified : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checkers for horizontal surgery on suspension flows"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Options o;
    std::function<int()> action;
    const auto sub = [&](const std::string& name, const std::string& desc,
                         int (*fn)(const Options&)) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        addCommon(cmd, o);
        cmd->callback([&action, fn, &o] { action = [fn, &o] { return fn(o); }; });
        return cmd;
    };

    sub("steadiness", "check every scene curve for steadiness", cmdSteadiness);
    sub("generic", "check scene curves for generic turns", cmdGeneric);
    sub("braid", "insert scene braids and check steadiness", cmdBraid);
    sub("annulus", "build scene annuli and report their frames", cmdAnnulus);
    sub("certify", "certify thinness for every annulus and profile", cmdCertify);
    sub("cones", "iterate certified cone widths over returns", cmdCones);
    sub("twist-scan", "scan twisted return maps for hyperbolicity", cmdTwistScan);
    CLI::App* graph = app.add_subcommand("graph", "gluing graph queries");
    graph->require_subcommand(1);
    {
        CLI::App* cmd = graph->add_subcommand("neighbors", "edges from query sources");
        addCommon(cmd, o);
        cmd->callback([&] { action = [&o] { return cmdGraphNeighbors(o); }; });
        cmd = graph->add_subcommand("reach", "bounded reachability certificates");
        addCommon(cmd, o);
        cmd->callback([&] { action = [&o] { return cmdGraphReach(o); }; });
        cmd = graph->add_subcommand("verify-lemma", "level monotonicity and level-1 connectivity");
        addCommon(cmd, o);
        cmd->callback([&] { action = [&o] { return cmdGraphVerifyLemma(o); }; });
    }
    sub("metric-average", "orbit-average the flat seed metric", cmdMetricAverage);
    sub("accept", "run the acceptance battery over a scene directory", cmdAccept);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        return action ? action() : kInputError;
    } catch (const SceneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconclusive;
    }
}
