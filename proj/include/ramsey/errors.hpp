#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Domain preconditions that callers can violate. The kind is part of the
// contract so callers (and tests) can distinguish failures without parsing
// messages.
class DomainError : public std::invalid_argument {
public:
    enum class Kind {
        EmptyInput,
        EntryBelowTwo,
        EntryBelowThree,
        SignatureTooShort,
        FewerThanTwoEntries,
        RTooSmall,
        KTooSmall,
        LengthMismatch,
        PartSumMismatch,
        NegativePart,
    };

    DomainError(Kind kind, const std::string& message)
        : std::invalid_argument(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace ramsey
