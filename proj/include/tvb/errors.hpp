#pragma once

#include <stdexcept>
#include <string>

namespace tvb {

// Input text could not be read as a bundle description at all.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input parsed but violates a structural requirement (fan geometry,
// filtration shape, argument preconditions).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filtration data is structurally fine but admits no equivariant
// splitting on some maximal cone.
struct IncompatibleFiltrations : std::runtime_error {
    explicit IncompatibleFiltrations(const std::string& what) : std::runtime_error(what) {}
};

// A consistency check that should hold for every valid input failed.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tvb
