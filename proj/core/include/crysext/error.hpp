#pragma once

#include <stdexcept>
#include <string>

namespace crysext {

enum class ErrorKind {
    invalid_argument,
    not_in_fil,
    invalid_weight,
    inertially_incompatible,
    determinant_mismatch,
    no_valid_pairs,
    invalid_pair,
    inadmissible_lambda,
    shift_sum_exceeds_e,
    shift_negative_exponent,
    budget_exceeded,
    internal,
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind()` lets callers
// (the CLI in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace crysext
