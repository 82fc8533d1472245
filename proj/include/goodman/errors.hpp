#pragma once

#include <stdexcept>
#include <string>

namespace goodman {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimitiveClass : Error {
    explicit NonPrimitiveClass(const std::string& w) : Error(w) {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w) : Error(w) {}
};
struct ZeroDirection : Error {
    explicit ZeroDirection(const std::string& w) : Error(w) {}
};
struct EscapedQuadrant : Error {
    explicit EscapedQuadrant(const std::string& w) : Error(w) {}
};
struct NoSignChange : Error {
    explicit NoSignChange(const std::string& w) : Error(w) {}
};
struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string& w) : Error(w) {}
};
struct TTooSmall : Error {
    explicit TTooSmall(const std::string& w) : Error(w) {}
};
struct TangentToFoliation : Error {
    explicit TangentToFoliation(const std::string& w) : Error(w) {}
};
struct NonTransverseOverlap : Error {
    explicit NonTransverseOverlap(const std::string& w) : Error(w) {}
};
struct MixedSign : Error {
    explicit MixedSign(const std::string& w) : Error(w) {}
};
struct NotEmbedded : Error {
    explicit NotEmbedded(const std::string& w) : Error(w) {}
};
struct LeafUnsteady : Error {
    explicit LeafUnsteady(const std::string& w) : Error(w) {}
};
struct TubeTooWide : Error {
    explicit TubeTooWide(const std::string& w) : Error(w) {}
};
struct DegenerateFrame : Error {
    explicit DegenerateFrame(const std::string& w) : Error(w) {}
};
struct QTooSmall : Error {
    explicit QTooSmall(const std::string& w) : Error(w) {}
};
struct WidthNotContracting : Error {
    explicit WidthNotContracting(const std::string& w) : Error(w) {}
};
struct EpsilonInfeasible : Error {
    explicit EpsilonInfeasible(const std::string& w) : Error(w) {}
};
struct UnsupportedTime : Error {
    explicit UnsupportedTime(const std::string& w) : Error(w) {}
};
struct BoxTooSmall : Error {
    explicit BoxTooSmall(const std::string& w) : Error(w) {}
};
struct SceneError : Error {
    explicit SceneError(const std::string& w) : Error(w) {}
};

}  // namespace goodman
