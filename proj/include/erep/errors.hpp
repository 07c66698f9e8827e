#pragma once

#include <stdexcept>
#include <string>

namespace erep {

// Base for everything thrown by this library, so callers can catch one type.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-contract inputs: bad constants, mismatched list
// lengths, empty percentile input, unreadable config values.
class invalid_input_error : public error {
public:
    using error::error;
};

// A numeric argument outside its allowed interval (e.g. speed past the cap).
class domain_error : public error {
public:
    using error::error;
};

// Demand cannot be met even by the top MCS row at fair share.
class infeasible_demand_error : public error {
public:
    using error::error;
};

// Transmit-power escalation hit the cap with the sphere intersection still empty.
class no_intersection_error : public error {
public:
    using error::error;
};

// An operation that needs a non-empty voxel region or slice got an empty one.
class empty_region_error : public error {
public:
    using error::error;
};

// File read/write failures; message carries the path.
class io_error : public error {
public:
    using error::error;
};

} // namespace erep
