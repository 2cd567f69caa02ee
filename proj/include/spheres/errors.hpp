#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace spheres {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

struct LetterOutOfRange : Error { using Error::Error; };
struct NonReducedWord : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct ZeroClass : Error { using Error::Error; };
struct EmptySupport : Error { using Error::Error; };
struct WeightOverflow : Error { using Error::Error; };
struct BrokenPath : Error { using Error::Error; };
struct LimitExceeded : Error { using Error::Error; };

// Precondition failure of a disjointness procedure. `which` is the offending
// argument position, 0 or 1.
struct NotEmbeddable : Error {
    int which;
    NotEmbeddable(int which_, const std::string& message) : Error(message), which(which_) {}
};

struct NotEmbeddableInM : Error {
    int which;
    NotEmbeddableInM(int which_, const std::string& message) : Error(message), which(which_) {}
};

// Rejected input document. `code` is a stable machine-readable tag, `path` a
// JSON-pointer-like location of the offending element.
struct ParseError : Error {
    std::string code;
    std::string path;
    ParseError(std::string code_, std::string path_, const std::string& message)
        : Error(message), code(std::move(code_)), path(std::move(path_)) {}
};

}  // namespace spheres
