#ifndef CHROMATICA_ERRORS_HPP
#define CHROMATICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chromatica {

// Enumeration caps exceeded (vertex/edge limits, isomorphism size limit).
struct unsupported_size_error : std::runtime_error {
    explicit unsupported_size_error(const std::string& what) : std::runtime_error(what) {}
};

// A graph-family constructor was given parameters outside the family.
struct invalid_family_error : std::invalid_argument {
    explicit invalid_family_error(const std::string& what) : std::invalid_argument(what) {}
};

// A t-refined coloring count failed its symmetry verification; the message
// carries the witness partition and the two coefficient polynomials.
struct not_symmetric_error : std::runtime_error {
    explicit not_symmetric_error(const std::string& what) : std::runtime_error(what) {}
};

// A case analysis inside a tableau map ran out of cases.
struct incomplete_case_error : std::logic_error {
    explicit incomplete_case_error(const std::string& what) : std::logic_error(what) {}
};

// Input data contradicts itself (e.g. a coefficient that must be divisible
// by a factorial is not).
struct inconsistent_input_error : std::runtime_error {
    explicit inconsistent_input_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chromatica

#endif
