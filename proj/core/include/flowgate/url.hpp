// Copyright 2026 the flowgate authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace flowgate {

/// An http(s) URL after normalization: lowercase scheme and host, explicit
/// port, dot-segment-free path, fragment stripped, query preserved.
struct NormalizedUrl {
    std::string scheme;  // "http" or "https"
    std::string host;    // lowercase, no trailing dot
    uint16_t port = 0;   // always explicit (http->80, https->443)
    std::string path;    // begins with "/", no "." or ".." segments
    std::string query;   // without the leading "?", empty if absent

    /// `scheme://host:port/path[?query]`. Feeding the result back through
    /// normalize_url yields the same value.
    std::string render() const;

    bool operator==(const NormalizedUrl&) const = default;
};

/// Normalizes a raw URL string.
///
/// Rejects (FlowError): schemes other than http/https, empty or non-DNS/
/// non-IPv4 hosts, ports outside [1, 65535] or non-numeric, and URLs
/// carrying userinfo -- credential-bearing URLs are refused outright.
NormalizedUrl normalize_url(std::string_view raw);

/// True iff `prefix` covers `path` on a path-segment boundary:
/// "/a" covers "/a" and "/a/b" but not "/ab".
bool path_prefix_matches(const std::string& prefix, const std::string& path);

}  // namespace flowgate
