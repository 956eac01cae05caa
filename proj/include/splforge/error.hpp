/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_ERROR_HPP
#define SPLFORGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace splforge {

enum class ErrorCode {
  InvalidModel,
  InvalidArgument,
  UnknownFeature,
  DuplicateDecision,
  ExactBoundExceeded,
  RootRemoved,
  MissingBinding,
  InvalidConfiguration,
  Syntax,
  NonUtf8Input,
  Io,
};

std::string_view errorCodeName(ErrorCode code) noexcept;

/// Base exception for every domain failure raised by the library.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace splforge

#endif  // SPLFORGE_ERROR_HPP
