#pragma once

#include <stdexcept>
#include <string>

namespace lsq {

/// Operands built over different variable sets, malformed face sets, etc.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Caller supplied an out-of-range index, a bad parameter, or an unparsable string.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed its configured bound.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold was observed to fail.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require_capacity(bool ok, const std::string& what, long long value, long long bound)
{
    if (!ok) {
        throw CapacityError(what + " = " + std::to_string(value) + " exceeds the bound " +
                            std::to_string(bound));
    }
}

} // namespace lsq
