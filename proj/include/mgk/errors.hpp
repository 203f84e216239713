#pragma once

#include <stdexcept>
#include <string>

namespace mgk {

// Base class for all recoverable pipeline errors. The CLI maps these to
// exit code 2; clean negative results (failed verification, non-converged
// refinement) are reported as values, not thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error { public: using Error::Error; };
class SelfLoop : public Error { public: using Error::Error; };
class DuplicateVertexPosition : public Error { public: using Error::Error; };

class MalformedCoordinate : public Error { public: using Error::Error; };
class MergeAmbiguity : public Error { public: using Error::Error; };
class NoEdges : public Error { public: using Error::Error; };
class NonPositiveScale : public Error { public: using Error::Error; };

class FormatError : public Error {
public:
    FormatError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class DegenerateConfiguration : public Error { public: using Error::Error; };
class WrongClass : public Error { public: using Error::Error; };
class DegenerateFramework : public Error { public: using Error::Error; };
class IsomorphismTimeout : public Error { public: using Error::Error; };

} // namespace mgk
