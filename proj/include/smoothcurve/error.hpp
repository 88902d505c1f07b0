#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smoothcurve {

enum class ErrorCode {
    EmptyInput,
    LengthMismatch,
    NonFinite,
    NotIncreasing,
    EmptyResult,
    TooFewPoints,
    TooManyBins,
    EmptyWindow,
    RankDeficient,
    InsufficientData,
    DegreesOfFreedomExhausted,
    NearSingularWeight,
    SpanTooSmall,
    AllWeightsZero,
    InvalidSpec,
    NonUniformSpacing,
    SeriesTooShort,
    InvalidKnots,
    WouldEmpty,
    ZeroTwist,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooManyBins: return "TooManyBins";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::DegreesOfFreedomExhausted: return "DegreesOfFreedomExhausted";
    case ErrorCode::NearSingularWeight: return "NearSingularWeight";
    case ErrorCode::SpanTooSmall: return "SpanTooSmall";
    case ErrorCode::AllWeightsZero: return "AllWeightsZero";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NonUniformSpacing: return "NonUniformSpacing";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::InvalidKnots: return "InvalidKnots";
    case ErrorCode::WouldEmpty: return "WouldEmpty";
    case ErrorCode::ZeroTwist: return "ZeroTwist";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library. The code is stable and testable;
/// the message carries context for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

    /// Same code, message prefixed with the pipeline stage that raised it.
    Error in_stage(std::string_view stage) const
    {
        return Error(code_, std::string(stage) + ": " + detail_message());
    }

private:
    std::string detail_message() const
    {
        std::string_view full = what();
        const auto prefix = to_string(code_).size() + 2;
        return std::string(full.size() >= prefix ? full.substr(prefix) : full);
    }

    ErrorCode code_;
};

}  // namespace smoothcurve
