// Copyright 2026 the flowgate authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>

#include "flowgate/errors.hpp"

namespace flowgate {

/// Identity of a piece of sensitive data: (app id, label name).
///
/// App ids are reverse-DNS style with at least two segments
/// (`com.example.smartapp`); label names are single identifiers
/// (`Taint_UI`). Both are validated at construction; comparison is exact,
/// case-sensitive string comparison. The text form used in manifests,
/// reports and logs is `appId/name`.
class TaintLabel {
public:
    TaintLabel(std::string app_id, std::string name);

    /// Parses the `appId/name` text form.
    static TaintLabel from_text(std::string_view text);

    static bool valid_app_id(std::string_view app_id);
    static bool valid_name(std::string_view name);

    const std::string& app_id() const noexcept { return app_id_; }
    const std::string& name() const noexcept { return name_; }

    std::string to_text() const { return app_id_ + "/" + name_; }

    auto operator<=>(const TaintLabel&) const = default;

private:
    std::string app_id_;
    std::string name_;
};

/// A finite set of taint labels, propagated by union. Immutable value in
/// spirit: the mutating operations build new states monotonically and the
/// type is cheap to copy and safe to share across threads.
class TaintSet {
public:
    TaintSet() = default;
    TaintSet(std::initializer_list<TaintLabel> labels) : labels_(labels) {}

    bool empty() const noexcept { return labels_.empty(); }
    std::size_t size() const noexcept { return labels_.size(); }
    bool contains(const TaintLabel& label) const { return labels_.count(label) != 0; }

    void insert(const TaintLabel& label) { labels_.insert(label); }
    TaintSet& operator|=(const TaintSet& other);

    bool subset_of(const TaintSet& other) const;

    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

    /// Comma-joined `appId/name` forms in lexicographic order.
    std::string to_text() const;

    bool operator==(const TaintSet&) const = default;

private:
    std::set<TaintLabel> labels_;
};

/// Set union; commutative, associative, idempotent.
TaintSet taint_union(const TaintSet& a, const TaintSet& b);

/// Unreadable reference to a quarantine-module result. Carries the taint
/// set of the computation that produced it; the payload itself lives in
/// the owning runtime's handle table and is reachable only through an
/// in-sandbox declassification. Handles are plain values: copying one
/// copies the reference, never the payload.
class OpaqueHandle {
public:
    /// 32 lowercase hex chars (128-bit random token), unique per runtime.
    const std::string& id() const noexcept { return id_; }

    /// Taints recorded at creation. The authoritative copy lives in the
    /// runtime (see Runtime::handle_taints, which also checks liveness).
    const TaintSet& taints() const noexcept { return taints_; }

    bool operator==(const OpaqueHandle& other) const { return id_ == other.id_; }

private:
    friend class Runtime;
    OpaqueHandle(std::string id, TaintSet taints)
        : id_(std::move(id)), taints_(std::move(taints)) {}

    std::string id_;
    TaintSet taints_;
};

}  // namespace flowgate
