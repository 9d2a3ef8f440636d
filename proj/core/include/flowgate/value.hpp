// Copyright 2026 the flowgate authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>

namespace flowgate {

// Every QM input and output crosses the sandbox boundary as one canonical
// serializable form: a UTF-8 JSON value. Object keys are emitted sorted, so
// canonical_bytes is deterministic for equal values.
using Value = nlohmann::json;

inline std::string canonical_bytes(const Value& v) { return v.dump(); }

}  // namespace flowgate
