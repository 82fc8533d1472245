#pragma once

#include "goodman/algebra.hpp"
#include "goodman/plcurve.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace goodman {

using Json = nlohmann::ordered_json;

struct CurveSpec {
    std::string name;
    std::vector<Vec2Q> vertices;
    HomologyClass cls;
};

struct BraidSpec {
    std::string name;
    std::string base;
    std::vector<int> word;
    Rational width;
};

struct AnnulusSpec {
    std::string name;
    std::string base;
    Rational width;
    Rational transverse_slope;
};

struct ProfileSpec {
    std::string name;
    long long coefficient = 0;
    Rational delta;
    Rational slope_bound;
};

struct GraphQuery {
    std::string name;
    Mat2Z source, target;
    long long witness_bound = 2;
    long long depth_bound = 6;
};

struct GraphSpec {
    std::vector<GraphQuery> queries;
    long long entry_bound = 10;
    long long witness_bound = 3;
    std::size_t sample_count = 600;
};

struct MetricSpec {
    int grid = 16;
    int time_steps = 8;
    int horizon = 4;
};

// One self-contained problem instance: a suspension flow plus named curves,
// braid words, annuli, profiles, graph queries, and metric parameters. All
// rationals appear in the file as [numerator, denominator] integer pairs.
struct Scene {
    std::string name;
    Mat2Z monodromy;
    std::vector<CurveSpec> curves;
    std::vector<BraidSpec> braids;
    std::vector<AnnulusSpec> annuli;
    std::vector<ProfileSpec> profiles;
    std::optional<GraphSpec> graph;
    std::optional<MetricSpec> metric;
    Rational tolerance = Rational(1, 1000000);

    const CurveSpec& curve(const std::string& name) const;
    const BraidSpec& braid(const std::string& name) const;
    const AnnulusSpec& annulus(const std::string& name) const;
    const ProfileSpec& profile(const std::string& name) const;
    const GraphQuery& query(const std::string& name) const;

    PLCurve buildCurve(const std::string& name) const;
};

// Throws SceneError with a location on malformed input.
Scene parseScene(const Json& j);
Json sceneToJson(const Scene& scene);
Scene loadScene(const std::string& path);

}  // namespace goodman
