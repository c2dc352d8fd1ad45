#pragma once

#include <stdexcept>
#include <string>

namespace dsform {

/// Malformed sequence or matrix text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Construction parameters that cannot produce a witness at this scale.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search request beyond the default desk-scale limits.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dsform
