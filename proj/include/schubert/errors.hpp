#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Requested ambient dimension (or derived size) beyond the 64-bit subset encoding.
class unsupported_size_error : public std::invalid_argument {
public:
    explicit unsupported_size_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation was asked to run past its configured scale bound.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// The target set is not S_r for any r, so it carries no differential coefficient.
class invalid_cover_error : public std::invalid_argument {
public:
    explicit invalid_cover_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A graded complex whose differentials do not compose to zero.
class invalid_complex_error : public std::invalid_argument {
public:
    explicit invalid_complex_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact integer arithmetic exceeded every available width; the result was never wrapped.
class arithmetic_overflow_error : public std::runtime_error {
public:
    explicit arithmetic_overflow_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schubert
