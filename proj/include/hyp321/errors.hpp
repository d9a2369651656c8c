#pragma once

#include <stdexcept>
#include <string>

namespace hyp321 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HYP321_ERROR(Name)                     \
    struct Name : Error {                      \
        using Error::Error;                    \
    }

HYP321_ERROR(PoleError);
HYP321_ERROR(UnboundSymbol);
HYP321_ERROR(NonIntegerSumBound);
HYP321_ERROR(IndexCapture);
HYP321_ERROR(DivergentSeries);
HYP321_ERROR(LowerPole);
HYP321_ERROR(NoConvergence);
HYP321_ERROR(SchemaVersionMismatch);
HYP321_ERROR(InsufficientSamples);
HYP321_ERROR(SingularRecursionPath);
HYP321_ERROR(AnchorPole);
HYP321_ERROR(GammaPole);
HYP321_ERROR(ExceptionalCase);
HYP321_ERROR(NoConvergentCheck);

#undef HYP321_ERROR

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                     : what),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace hyp321
