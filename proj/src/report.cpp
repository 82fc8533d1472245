#include "goodman/report.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace goodman {

Json rationalJson(const Rational& r) {
    auto intJson = [](const Int& v) -> Json {
        if (v >= std::numeric_limits<long long>::min() &&
            v <= std::numeric_limits<long long>::max())
            return v.convert_to<long long>();
        return v.str();
    };
    return Json::array({intJson(numerator(r)), intJson(denominator(r))});
}

Json quadextJson(const QuadExt& v) {
    return Json{{"exact", v.str()}, {"approx", v.toDouble()}};
}

std::string sceneHash(const Scene& scene) {
    const std::string bytes = sceneToJson(scene).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

Json baseReport(const std::string& command, const Scene& scene) {
    Json j;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["scene"] = scene.name;
    j["scene_hash"] = sceneHash(scene);
    return j;
}

std::string dumpReport(const Json& report) { return report.dump(2) + "\n"; }

void writeOutput(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + out_path);
    out << text;
}

}  // namespace goodman
