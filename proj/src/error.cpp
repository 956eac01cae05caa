/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"

namespace splforge {

std::string_view errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownFeature: return "UnknownFeature";
    case ErrorCode::DuplicateDecision: return "DuplicateDecision";
    case ErrorCode::ExactBoundExceeded: return "ExactBoundExceeded";
    case ErrorCode::RootRemoved: return "RootRemoved";
    case ErrorCode::MissingBinding: return "MissingBinding";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::NonUtf8Input: return "NonUtf8Input";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace splforge
