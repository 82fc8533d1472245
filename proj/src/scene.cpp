#include "goodman/scene.hpp"

#include "goodman/errors.hpp"

#include <fstream>
#include <limits>

namespace goodman {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SceneError("scene: " + where + ": " + what);
}

Int parseInt(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    fail(where, "expected an integer");
}

Rational parsePair(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected [numerator, denominator]");
    const Int num = parseInt(j[0], where);
    const Int den = parseInt(j[1], where);
    if (den == 0) fail(where, "zero denominator");
    return Rational(num, den);
}

Json pairJson(const Rational& r) {
    auto intJson = [](const Int& v) -> Json {
        if (v >= std::numeric_limits<long long>::min() &&
            v <= std::numeric_limits<long long>::max())
            return v.convert_to<long long>();
        return v.str();
    };
    return Json::array({intJson(numerator(r)), intJson(denominator(r))});
}

Mat2Z parseMatrix(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(where, "expected [[a,b],[c,d]]");
    return Mat2Z{parseInt(j[0][0], where), parseInt(j[0][1], where),
                 parseInt(j[1][0], where), parseInt(j[1][1], where)};
}

Json matrixJson(const Mat2Z& m) {
    auto cell = [](const Int& v) -> Json { return v.convert_to<long long>(); };
    return Json::array(
        {Json::array({cell(m.a), cell(m.b)}), Json::array({cell(m.c), cell(m.d)})});
}

HomologyClass parseClass(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
    return HomologyClass{parseInt(j[0], where), parseInt(j[1], where)};
}

template <typename T>
const T& lookup(const std::vector<T>& items, const std::string& name,
                const std::string& kind) {
    for (const auto& item : items)
        if (item.name == name) return item;
    throw SceneError("scene: no " + kind + " named '" + name + "'");
}

}  // namespace

const CurveSpec& Scene::curve(const std::string& n) const {
    return lookup(curves, n, "curve");
}
const BraidSpec& Scene::braid(const std::string& n) const {
    return lookup(braids, n, "braid");
}
const AnnulusSpec& Scene::annulus(const std::string& n) const {
    return lookup(annuli, n, "annulus");
}
const ProfileSpec& Scene::profile(const std::string& n) const {
    return lookup(profiles, n, "profile");
}
const GraphQuery& Scene::query(const std::string& n) const {
    if (!graph) throw SceneError("scene: no graph section");
    return lookup(graph->queries, n, "graph query");
}

PLCurve Scene::buildCurve(const std::string& n) const {
    const CurveSpec& spec = curve(n);
    return PLCurve(spec.vertices, spec.cls);
}

Scene parseScene(const Json& j) {
    Scene scene;
    if (!j.is_object()) fail("root", "expected an object");
    scene.name = j.value("name", std::string("unnamed"));
    if (!j.contains("flow") || !j["flow"].contains("monodromy"))
        fail("flow", "missing monodromy");
    scene.monodromy = parseMatrix(j["flow"]["monodromy"], "flow.monodromy");
    scene.monodromy.requireDet(1);

    for (const Json& c : j.value("curves", Json::array())) {
        CurveSpec spec;
        spec.name = c.at("name").get<std::string>();
        const std::string where = "curve '" + spec.name + "'";
        for (const Json& v : c.at("vertices")) {
            if (!v.is_array() || v.size() != 2) fail(where, "vertex must be [x, y]");
            spec.vertices.push_back(
                {parsePair(v[0], where + ".x"), parsePair(v[1], where + ".y")});
        }
        spec.cls = parseClass(c.at("class"), where + ".class");
        scene.curves.push_back(std::move(spec));
    }

    for (const Json& b : j.value("braids", Json::array())) {
        BraidSpec spec;
        spec.name = b.at("name").get<std::string>();
        const std::string where = "braid '" + spec.name + "'";
        spec.base = b.at("base").get<std::string>();
        for (const Json& w : b.at("word")) spec.word.push_back(w.get<int>());
        spec.width = parsePair(b.at("width"), where + ".width");
        scene.braids.push_back(std::move(spec));
    }

    for (const Json& a : j.value("annuli", Json::array())) {
        AnnulusSpec spec;
        spec.name = a.at("name").get<std::string>();
        const std::string where = "annulus '" + spec.name + "'";
        spec.base = a.at("base").get<std::string>();
        spec.width = parsePair(a.at("width"), where + ".width");
        spec.transverse_slope = parsePair(a.at("transverse_slope"), where + ".slope");
        scene.annuli.push_back(std::move(spec));
    }

    for (const Json& p : j.value("profiles", Json::array())) {
        ProfileSpec spec;
        spec.name = p.at("name").get<std::string>();
        const std::string where = "profile '" + spec.name + "'";
        spec.coefficient = p.at("coefficient").get<long long>();
        spec.delta = parsePair(p.at("delta"), where + ".delta");
        spec.slope_bound = parsePair(p.at("slope_bound"), where + ".slope_bound");
        scene.profiles.push_back(std::move(spec));
    }

    if (j.contains("graph")) {
        GraphSpec g;
        const Json& gj = j["graph"];
        g.entry_bound = gj.value("entry_bound", 10);
        g.witness_bound = gj.value("witness_bound", 3);
        g.sample_count = gj.value("sample_count", 600);
        for (const Json& q : gj.value("queries", Json::array())) {
            GraphQuery query;
            query.name = q.at("name").get<std::string>();
            const std::string where = "graph query '" + query.name + "'";
            query.source = parseMatrix(q.at("source"), where + ".source");
            query.target = parseMatrix(q.at("target"), where + ".target");
            query.witness_bound = q.value("witness_bound", 2);
            query.depth_bound = q.value("depth_bound", 6);
            g.queries.push_back(std::move(query));
        }
        scene.graph = std::move(g);
    }

    if (j.contains("metric")) {
        MetricSpec m;
        m.grid = j["metric"].value("grid", 16);
        m.time_steps = j["metric"].value("time_steps", 8);
        m.horizon = j["metric"].value("horizon", 4);
        scene.metric = m;
    }

    if (j.contains("tolerance"))
        scene.tolerance = parsePair(j["tolerance"], "tolerance");
    return scene;
}

Json sceneToJson(const Scene& scene) {
    Json j;
    j["name"] = scene.name;
    j["flow"] = Json{{"monodromy", matrixJson(scene.monodromy)}};
    if (!scene.curves.empty()) {
        Json arr = Json::array();
        for (const auto& c : scene.curves) {
            Json verts = Json::array();
            for (const auto& v : c.vertices)
                verts.push_back(Json::array({pairJson(v.x), pairJson(v.y)}));
            arr.push_back(Json{{"name", c.name},
                               {"vertices", verts},
                               {"class",
                                Json::array({c.cls.x.convert_to<long long>(),
                                             c.cls.y.convert_to<long long>()})}});
        }
        j["curves"] = arr;
    }
    if (!scene.braids.empty()) {
        Json arr = Json::array();
        for (const auto& b : scene.braids)
            arr.push_back(Json{{"name", b.name},
                               {"base", b.base},
                               {"word", b.word},
                               {"width", pairJson(b.width)}});
        j["braids"] = arr;
    }
    if (!scene.annuli.empty()) {
        Json arr = Json::array();
        for (const auto& a : scene.annuli)
            arr.push_back(Json{{"name", a.name},
                               {"base", a.base},
                               {"width", pairJson(a.width)},
                               {"transverse_slope", pairJson(a.transverse_slope)}});
        j["annuli"] = arr;
    }
    if (!scene.profiles.empty()) {
        Json arr = Json::array();
        for (const auto& p : scene.profiles)
            arr.push_back(Json{{"name", p.name},
                               {"coefficient", p.coefficient},
                               {"delta", pairJson(p.delta)},
                               {"slope_bound", pairJson(p.slope_bound)}});
        j["profiles"] = arr;
    }
    if (scene.graph) {
        Json g;
        g["entry_bound"] = scene.graph->entry_bound;
        g["witness_bound"] = scene.graph->witness_bound;
        g["sample_count"] = scene.graph->sample_count;
        Json queries = Json::array();
        for (const auto& q : scene.graph->queries)
            queries.push_back(Json{{"name", q.name},
                                   {"source", matrixJson(q.source)},
                                   {"target", matrixJson(q.target)},
                                   {"witness_bound", q.witness_bound},
                                   {"depth_bound", q.depth_bound}});
        g["queries"] = queries;
        j["graph"] = g;
    }
    if (scene.metric) {
        j["metric"] = Json{{"grid", scene.metric->grid},
                           {"time_steps", scene.metric->time_steps},
                           {"horizon", scene.metric->horizon}};
    }
    j["tolerance"] = pairJson(scene.tolerance);
    return j;
}

Scene loadScene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SceneError("scene: cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SceneError("scene: " + path + ": " + e.what());
    }
    return parseScene(j);
}

}  // namespace goodman
