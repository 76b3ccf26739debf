// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace holefill {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mesh construction / topology violations.
struct MeshError : Error {
    using Error::Error;
};

struct IndexOutOfRange : MeshError {
    int face = -1;
    IndexOutOfRange(int face_, const std::string& msg) : MeshError(msg), face(face_) {}
};

struct InvalidFace : MeshError {
    int face = -1;
    InvalidFace(int face_, const std::string& msg) : MeshError(msg), face(face_) {}
};

struct DuplicateFace : MeshError {
    int face = -1;
    DuplicateFace(int face_, const std::string& msg) : MeshError(msg), face(face_) {}
};

struct NonManifoldEdge : MeshError {
    int va = -1, vb = -1;
    int face_count = 0;
    NonManifoldEdge(int a, int b, int count, const std::string& msg)
        : MeshError(msg), va(a), vb(b), face_count(count) {}
};

struct DegenerateBoundary : MeshError {
    int vertex = -1;
    DegenerateBoundary(int v, const std::string& msg) : MeshError(msg), vertex(v) {}
};

struct DegenerateFace : MeshError {
    int face = -1;
    DegenerateFace(int face_, const std::string& msg) : MeshError(msg), face(face_) {}
};

// IO failures. line is 1-based for text formats, byte offset for binary.
struct ParseError : Error {
    long line = 0;
    ParseError(long line_, const std::string& msg) : Error(msg), line(line_) {}
};

struct UnsupportedElement : ParseError {
    using ParseError::ParseError;
};

struct IOError : Error {
    using Error::Error;
};

// Geometry / algorithm failures.
struct ZeroVector : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct EarClipFailure : Error {
    using Error::Error;
};

struct InvalidChord : Error {
    using Error::Error;
};

// Raised by ring advancement when fewer than 3 points remain or no inward
// progress is possible; callers treat it as "close the front now".
struct FrontCollapse : Error {
    using Error::Error;
};

struct PunchBreaksManifold : Error {
    using Error::Error;
};

struct EmptyMesh : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace holefill
