#pragma once

#include <stdexcept>
#include <string>

namespace fillplan {

/// A fill-rate ratio whose denominator (expected demand) is zero.
class undefined_ratio_error : public std::domain_error {
public:
    explicit undefined_ratio_error(const std::string& what) : std::domain_error(what) {}
};

/// A cycle plan that is not a valid partition of the horizon.
class invalid_plan_error : public std::invalid_argument {
public:
    explicit invalid_plan_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input file violates the instance/plan schema.
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

/// Problem size exceeds an explicit enumeration cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal iteration failed to converge.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fillplan
