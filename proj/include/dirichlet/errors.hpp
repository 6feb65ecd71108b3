#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet {

/// Argument outside an operation's mathematical domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An argument that must be invertible modulo k shares a factor with k.
class not_a_unit_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A search or table would exceed the configured desk-scale limits.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dirichlet
