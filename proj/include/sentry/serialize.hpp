#pragma once

#include <iosfwd>

#include "sentry/oracle.hpp"

namespace sentry {

// Versioned text container for a built oracle. Loading a file with a
// mismatched magic/version line fails loudly; writes are byte-deterministic
// for identical inputs.
void write_oracle(std::ostream& out, const FullOracle& oracle);
FullOracle read_oracle(std::istream& in);

struct OracleFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sentry
