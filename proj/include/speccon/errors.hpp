#pragma once

#include <stdexcept>
#include <string>

namespace speccon {

// Typed failures thrown across the library. Each maps to one contract
// violation so callers (and the CLI) can report the failing stage precisely.

struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct TooFewSamples : std::runtime_error {
    explicit TooFewSamples(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteInput : std::runtime_error {
    explicit NonFiniteInput(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct TooShort : std::runtime_error {
    explicit TooShort(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyPanel : std::runtime_error {
    explicit EmptyPanel(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyBand : std::runtime_error {
    explicit EmptyBand(const std::string& what) : std::runtime_error(what) {}
};

struct SingularInput : std::runtime_error {
    explicit SingularInput(const std::string& what) : std::runtime_error(what) {}
};

struct BadDelta : std::runtime_error {
    explicit BadDelta(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyGrid : std::runtime_error {
    explicit EmptyGrid(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateData : std::runtime_error {
    explicit DegenerateData(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteSample : std::runtime_error {
    explicit NonFiniteSample(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentTrialLength : std::runtime_error {
    explicit InconsistentTrialLength(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace speccon
