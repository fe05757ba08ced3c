#pragma once

#include <stdexcept>
#include <string>

namespace fairdea {

enum class Errc {
    malformed_row,
    domain_violation,
    duplicate_id,
    unknown_group,
    empty_input,
    infeasible_moments,
    missing_group,
    quota_exceeds_group,
    rank_deficient,
    separation,
    fold_too_small,
    missing_column,
    group_too_small,
    empty_group,
    alpha_out_of_range,
    degenerate_sample,
    bootstrap_degenerate,
    numerical_failure,
    bad_config,
    io_error,
};

const char* errc_name(Errc code);

/// Library-wide exception; `code` identifies the failure class, the
/// message carries the context (row index, column name, group, ...).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace fairdea
