#pragma once

#include <stdexcept>

namespace chabauty {

/// A check that the mathematics says cannot fail did fail: a counting bug,
/// a corrupted fixture, or a refuted statement. Distinct from bad input,
/// which is reported with std::invalid_argument.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chabauty
