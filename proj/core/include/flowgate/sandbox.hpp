// Copyright 2026 the flowgate authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "flowgate/labels.hpp"
#include "flowgate/value.hpp"

namespace flowgate {

class Runtime;
class SensitiveStore;
class SandboxContext;
struct SinkAttempt;

/// One positional argument to a quarantine module: either a plain
/// serializable value or an opaque handle to a prior QM result.
class QmArg {
public:
    static QmArg plain(Value value) { return QmArg(std::move(value)); }
    static QmArg handle(OpaqueHandle h) { return QmArg(std::move(h)); }

    bool is_handle() const noexcept { return std::holds_alternative<OpaqueHandle>(arg_); }
    const Value& value() const { return std::get<Value>(arg_); }
    const OpaqueHandle& handle_ref() const { return std::get<OpaqueHandle>(arg_); }

private:
    explicit QmArg(Value v) : arg_(std::move(v)) {}
    explicit QmArg(OpaqueHandle h) : arg_(std::move(h)) {}
    std::variant<Value, OpaqueHandle> arg_;
};

/// A quarantine module body. Handle arguments arrive declassified; the
/// context is live only for the duration of the call.
using QmFn = std::function<Value(SandboxContext&, const std::vector<Value>&)>;

namespace detail {

/// Shared state behind a SandboxContext. Lives as long as any copy of the
/// context does, but turns dead the moment the owning qm_call returns.
struct ContextState {
    ContextState(std::string id, TaintSet seed, Runtime* rt)
        : sandbox_id(std::move(id)), acquired(std::move(seed)), runtime(rt) {}

    const std::string sandbox_id;
    std::atomic<bool> live{true};
    TaintSet acquired;  // grows monotonically; guarded by mu
    Runtime* const runtime;
    mutable std::mutex mu;

    void require_live(const char* operation) const;
    void absorb(const TaintSet& taints);
    TaintSet snapshot() const;
};

}  // namespace detail

/// Execution capability handed to a QM body. Copies may escape the call,
/// but every privileged operation on an escaped copy fails with
/// ContextEscaped. Only Runtime::qm_call creates live contexts.
class SandboxContext {
public:
    const std::string& sandbox_id() const { return state_->sandbox_id; }
    bool live() const { return state_->live.load(); }

    /// Union of handle-argument taints plus everything acquired so far
    /// through declassification and trusted reads.
    TaintSet acquired_taints() const { return state_->snapshot(); }

private:
    friend class Runtime;
    friend class SensitiveStore;
    friend Value declassify_in_sandbox(SandboxContext& ctx, const OpaqueHandle& handle);
    friend SinkAttempt network_post(SandboxContext& ctx, const std::vector<QmArg>& payload,
                                    const std::string& url);
    friend SinkAttempt sms_send(SandboxContext& ctx, const std::vector<QmArg>& payload,
                                const std::string& number);

    explicit SandboxContext(std::shared_ptr<detail::ContextState> state)
        : state_(std::move(state)) {}

    std::shared_ptr<detail::ContextState> state_;
};

/// Reads a handle's payload from inside a running QM. The context absorbs
/// the handle's taints. Fails with ContextEscaped outside the dynamic
/// extent of a qm_call and with HandleUnknown for foreign/unknown handles.
Value declassify_in_sandbox(SandboxContext& ctx, const OpaqueHandle& handle);

}  // namespace flowgate
