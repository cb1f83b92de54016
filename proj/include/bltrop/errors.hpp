#pragma once

#include <stdexcept>
#include <string>

namespace bltrop {

/// Base class for all recoverable domain errors.  The `name()` tag is
/// stable and machine-readable; the CLI maps any DomainError to exit
/// code 2 and echoes the tag verbatim.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define BLTROP_DEFINE_ERROR(Tag)                                   \
    class Tag : public DomainError {                               \
    public:                                                        \
        explicit Tag(const std::string& what = #Tag)               \
            : DomainError(#Tag, what) {}                           \
    }

BLTROP_DEFINE_ERROR(DivisionByZero);
BLTROP_DEFINE_ERROR(BackendMismatch);
BLTROP_DEFINE_ERROR(UnsupportedExtension);
BLTROP_DEFINE_ERROR(PrecisionExceeded);
BLTROP_DEFINE_ERROR(AllInfinite);
BLTROP_DEFINE_ERROR(DegenerateConfiguration);
BLTROP_DEFINE_ERROR(LowerDimensionalCell);
BLTROP_DEFINE_ERROR(SigmaVanishes);
BLTROP_DEFINE_ERROR(InvalidPluecker);
BLTROP_DEFINE_ERROR(UnsupportedBoundaryLine);
BLTROP_DEFINE_ERROR(NotContained);
BLTROP_DEFINE_ERROR(FewerThanTwoMembers);
BLTROP_DEFINE_ERROR(InvalidParameters);

#undef BLTROP_DEFINE_ERROR

} // namespace bltrop
