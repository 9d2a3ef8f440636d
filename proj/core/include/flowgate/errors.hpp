// Copyright 2026 the flowgate authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flowgate {

/// Everything that can go wrong across the runtime, with one code per
/// distinct failure so callers can branch without string matching.
enum class Errc {
    // manifest / label grammar
    syntax_error,
    invalid_label,
    undeclared_label,
    duplicate_label,
    duplicate_rule,
    filter_on_non_network_sink,
    filter_has_query,

    // URL normalization
    unsupported_scheme,
    empty_host,
    invalid_host,
    malformed_port,
    credentials_in_url,

    // runtime / sandbox
    handle_unknown,
    unknown_qm,
    duplicate_qm,
    qm_panicked,
    context_escaped,

    // sensitive store
    duplicate_field,
    unknown_field,

    // trusted API
    policy_violation,
    transport_error,
    invalid_destination,

    // scenario driver
    scenario_error,
};

std::string_view errc_name(Errc code);

class FlowError : public std::runtime_error {
public:
    FlowError(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    FlowError(Errc code, const std::string& message, int line, int column)
        : std::runtime_error(format_located(message, line, column)),
          code_(code), line_(line), column_(column) {}

    Errc code() const noexcept { return code_; }

    // 1-based source position for parse errors; 0 when not applicable.
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format_located(const std::string& message, int line, int column);

    Errc code_;
    int line_ = 0;
    int column_ = 0;
};

}  // namespace flowgate
