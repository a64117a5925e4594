#pragma once

#include <stdexcept>

namespace movcone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Contract violation in a geometric operation (dimension mismatch,
/// non-member query, cone with lineality where a pointed cone is required).
struct DomainError : Error {
    using Error::Error;
};

// Dataset loading taxonomy: malformed text, bad shape, bad semantics.
struct ParseError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace movcone
