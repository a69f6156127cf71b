#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace frft {

/// Stable process exit codes exposed by the CLI. Library errors carry the
/// code they map to so the front end never has to guess.
enum class ErrorCode : int {
    Usage = 1,
    Parse = 2,
    LengthMismatch = 3,
    BranchUnsupported = 4,
    SpectralNull = 5,
    Verification = 6,
    Io = 7,
};

class FrftError : public std::runtime_error {
public:
    FrftError(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct InvalidLength : FrftError {
    explicit InvalidLength(const std::string& msg) : FrftError(ErrorCode::Usage, msg) {}
};

/// The angle sits so close to a multiple of pi that cot(alpha) is meaningless,
/// yet it matches neither delta branch under the classification tolerance.
struct NearSingularAngle : FrftError {
    explicit NearSingularAngle(const std::string& msg) : FrftError(ErrorCode::Usage, msg) {}
};

struct IndexOutOfRange : FrftError {
    explicit IndexOutOfRange(const std::string& msg) : FrftError(ErrorCode::Usage, msg) {}
};

struct AllocationFailure : FrftError {
    explicit AllocationFailure(const std::string& msg) : FrftError(ErrorCode::Usage, msg) {}
};

struct LengthMismatch : FrftError {
    explicit LengthMismatch(const std::string& msg)
        : FrftError(ErrorCode::LengthMismatch, msg) {}
};

/// Operation requires the generic branch; the quadratic phase rate is
/// undefined at delta-branch angles.
struct BranchUnsupported : FrftError {
    explicit BranchUnsupported(const std::string& msg)
        : FrftError(ErrorCode::BranchUnsupported, msg) {}
};

struct ParseError : FrftError {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : FrftError(ErrorCode::Parse, msg), line(line), column(column) {}

    std::size_t line = 0;
    std::size_t column = 0;
};

struct IoError : FrftError {
    explicit IoError(const std::string& msg) : FrftError(ErrorCode::Io, msg) {}
};

/// Equalization hit channel coefficients below the null threshold. Carries
/// every offending bin; no regularized estimate is substituted.
struct SpectralNull : FrftError {
    SpectralNull(const std::string& msg, std::vector<std::size_t> bins)
        : FrftError(ErrorCode::SpectralNull, msg), bins(std::move(bins)) {}

    std::vector<std::size_t> bins;
};

} // namespace frft
