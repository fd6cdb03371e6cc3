#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

// Base class for all failures raised by the library. The CLI maps these to
// exit codes; everything not listed below is an input/validation error.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (number grammar, spectrum/state files).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct EmptyList : Error {
    explicit EmptyList(const std::string& what) : Error(what) {}
};

struct NonPositiveEntry : Error {
    explicit NonPositiveEntry(const std::string& what) : Error(what) {}
};

struct InvalidTolerance : Error {
    explicit InvalidTolerance(const std::string& what) : Error(what) {}
};

struct DegenerateSpectrum : Error {
    explicit DegenerateSpectrum(const std::string& what) : Error(what) {}
};

struct UnsortedSpectrum : Error {
    explicit UnsortedSpectrum(const std::string& what) : Error(what) {}
};

struct AllZeroAmplitudes : Error {
    explicit AllZeroAmplitudes(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

// Two states do not share the same reduced spectrum.
struct SpectrumMismatch : Error {
    explicit SpectrumMismatch(const std::string& what) : Error(what) {}
};

// A sign flip can be absorbed as a lattice phase only when N is even.
struct OddModulusSignFlip : Error {
    explicit OddModulusSignFlip(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// A requested enumeration or scan exceeds the configured cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct NonFiniteTime : Error {
    explicit NonFiniteTime(const std::string& what) : Error(what) {}
};

// SVG torus export needs exactly two free phases (D = 3).
struct DimensionUnsupported : Error {
    explicit DimensionUnsupported(const std::string& what) : Error(what) {}
};

}  // namespace qtorus
