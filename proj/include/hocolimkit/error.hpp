// error.hpp
//
// Exception types shared by every hocolimkit module.

#ifndef HOCOLIMKIT_ERROR_HPP
#define HOCOLIMKIT_ERROR_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace hocolimkit
{

using Index = std::size_t;
inline constexpr Index npos = std::numeric_limits<Index>::max();

/// Base of all library errors.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: duplicate ids, missing composites, relation pairs across
/// degrees, missing extra-degeneracy levels.
class SchemaError : public Error
{
public:
    explicit SchemaError(std::string const& what)
        : Error("schema error: " + what) {}
};

/// A construction was asked for degrees its inputs do not store.
class CapError : public Error
{
public:
    explicit CapError(std::string const& what)
        : Error("cap error: " + what) {}
};

/// Structurally well-formed input that violates a mathematical contract
/// (simplicial identities, non-commuting chain maps, non-functorial data).
class InputError : public Error
{
public:
    explicit InputError(std::string const& what)
        : Error("input error: " + what) {}
};

} // namespace hocolimkit

#endif // HOCOLIMKIT_ERROR_HPP
