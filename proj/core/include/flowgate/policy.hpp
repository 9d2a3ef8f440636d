// Copyright 2026 the flowgate authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flowgate/labels.hpp"
#include "flowgate/url.hpp"

namespace flowgate {

/// A sensitive sink. The registered set is fixed: NETWORK and SMS.
/// NETWORK is the only sink that accepts a URL filter.
class SinkKind {
public:
    static SinkKind network() { return SinkKind("NETWORK"); }
    static SinkKind sms() { return SinkKind("SMS"); }

    /// Resolves a sink by name; nullopt when the name is not registered.
    static std::optional<SinkKind> from_name(std::string_view name);

    const std::string& name() const noexcept { return name_; }
    bool is_network() const noexcept { return name_ == "NETWORK"; }

    auto operator<=>(const SinkKind&) const = default;

private:
    explicit SinkKind(std::string name) : name_(std::move(name)) {}
    std::string name_;
};

/// Endpoint filter for NETWORK rules: exact scheme+host+port equality plus
/// segment-boundary path-prefix matching.
struct UrlFilter {
    std::string scheme;
    std::string host;
    uint16_t port = 0;
    std::string path_prefix;

    /// Builds a filter from a URL string via normalize_url. Filter URLs
    /// with a query are rejected: the matcher ignores queries, and a
    /// constraint that silently does not constrain would widen the policy.
    static UrlFilter from_url(std::string_view raw);

    std::string render() const;

    bool operator==(const UrlFilter&) const = default;
};

/// True iff the filter covers the normalized URL.
bool filter_matches(const UrlFilter& filter, const NormalizedUrl& url);

/// One allow-rule: data under `label` may flow to `sink`, optionally
/// restricted to endpoints covered by `filter` (NETWORK only; an
/// unfiltered NETWORK rule covers any URL).
struct FlowRule {
    TaintLabel label;
    SinkKind sink;
    std::optional<UrlFilter> filter;

    bool operator==(const FlowRule&) const = default;
};

/// Parsed app manifest: the app id, its declared labels, and its allow
/// rules in declaration order. Immutable after parsing.
struct Manifest {
    std::string app_id;
    std::set<TaintLabel> declared_labels;
    std::vector<FlowRule> rules;

    bool declares(const TaintLabel& label) const { return declared_labels.count(label) != 0; }

    bool operator==(const Manifest&) const = default;
};

/// A sink access attempt as seen by the policy checker.
struct SinkRequest {
    SinkKind sink;
    std::optional<NormalizedUrl> url;  // present exactly when sink is NETWORK
    TaintSet taints;

    static SinkRequest network(NormalizedUrl url, TaintSet taints) {
        return SinkRequest{SinkKind::network(), std::move(url), std::move(taints)};
    }
    static SinkRequest sms(TaintSet taints) {
        return SinkRequest{SinkKind::sms(), std::nullopt, std::move(taints)};
    }
};

enum class DenyReason {
    no_rule_for_sink,
    url_filter_mismatch,
};

std::string_view deny_reason_name(DenyReason reason);

/// Per-label outcome: the first matching rule, or why the label failed.
using LabelVerdict = std::variant<FlowRule, DenyReason>;

/// Verdict for a whole request: allowed iff every label in the request's
/// taint set matched a rule.
struct Decision {
    bool allowed = false;
    std::map<TaintLabel, LabelVerdict> per_label;
};

// --- operations -----------------------------------------------------------

/// Parses the line-oriented manifest grammar:
///
///     app <app-id>                      (exactly once, first)
///     label <name>
///     allow <name> -> <SINK>
///     allow <name> -> NETWORK url <url>
///
/// `#` starts a comment; blank lines are ignored; labels must be declared
/// before rules that use them. Errors carry 1-based line/column.
Manifest parse_manifest(std::string_view text);

/// Canonical writer: app line, labels sorted by name, rules in declaration
/// order with URLs printed normalized. parse_manifest(render_manifest(m)) == m.
std::string render_manifest(const Manifest& manifest);

/// Decides a sink request against the manifest. For each label in the
/// request's taints, rules are searched in declaration order for one with
/// an equal label, equal sink, and (for NETWORK) a filter covering the
/// URL; an unfiltered NETWORK rule covers any URL. Requests with empty
/// taint sets are always allowed. Pure function.
Decision check_flow(const Manifest& manifest, const SinkRequest& request);

/// Install-time listing of all declared flows: a `flows for <app-id>:`
/// header, then one line per rule in declaration order.
std::string disclosure_report(const Manifest& manifest);

}  // namespace flowgate
