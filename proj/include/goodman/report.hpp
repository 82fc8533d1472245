#pragma once

#include "goodman/quadext.hpp"
#include "goodman/scene.hpp"

#include <string>

namespace goodman {

inline constexpr const char* kToolVersion = "goodman-lab 0.1.0";

// Rationals serialize as [numerator, denominator] so exactness survives the
// round trip; field elements carry their exact string plus a double reading.
Json rationalJson(const Rational& r);
Json quadextJson(const QuadExt& v);

// Stable 64-bit FNV-1a hash of a scene's canonical serialization, printed as
// hex. Reports embed it so results can be tied to inputs.
std::string sceneHash(const Scene& scene);

// Common report envelope: command name, tool version, scene name and hash.
Json baseReport(const std::string& command, const Scene& scene);

// Canonical textual form of a report: two-space indentation and a trailing
// newline, byte-stable for identical content.
std::string dumpReport(const Json& report);

// Writes to the path, or to stdout when the path is empty.
void writeOutput(const std::string& text, const std::string& out_path);

}  // namespace goodman
