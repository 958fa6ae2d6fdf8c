#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chainform {

// Domain errors carry a stable kind tag; what() starts with the tag so the
// CLI can surface error names verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CHAINFORM_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& detail) : Error(#Name, detail) {}   \
    }

CHAINFORM_DEFINE_ERROR(NotGraded);
CHAINFORM_DEFINE_ERROR(NoUniqueBounds);
CHAINFORM_DEFINE_ERROR(CycleDetected);
CHAINFORM_DEFINE_ERROR(DuplicateCover);
CHAINFORM_DEFINE_ERROR(NotComparable);
CHAINFORM_DEFINE_ERROR(OutOfRange);
CHAINFORM_DEFINE_ERROR(WeightMismatch);
CHAINFORM_DEFINE_ERROR(NotSymmetric);
CHAINFORM_DEFINE_ERROR(NotRelativeRLabeled);
CHAINFORM_DEFINE_ERROR(NotContained);
CHAINFORM_DEFINE_ERROR(TooLong);
CHAINFORM_DEFINE_ERROR(OutOfBounds);
CHAINFORM_DEFINE_ERROR(BasisMismatch);
CHAINFORM_DEFINE_ERROR(ParseError);
CHAINFORM_DEFINE_ERROR(IoError);
CHAINFORM_DEFINE_ERROR(MaxRankExceeded);

#undef CHAINFORM_DEFINE_ERROR

}  // namespace chainform
