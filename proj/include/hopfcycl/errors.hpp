#ifndef HOPFCYCL_ERRORS_HPP
#define HOPFCYCL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfcycl {

enum class Errc {
    RingMismatch,
    NotAUnit,
    UnsupportedRing,
    NotAField,
    NotAComplex,
    IndexOutOfRange,
    RingWithoutRationals,
    InvalidCharacter,
    PreconditionFailed,
    MissingRootOfUnity,
    NegativePartialSum,
    ParseError,
    UnsupportedCombination,
    ResourceCap,
    InvalidInput,
};

const char* errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` says which contract was broken.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace hopfcycl

#endif
