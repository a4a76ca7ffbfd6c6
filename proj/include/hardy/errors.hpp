// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef HARDY_ERRORS_HPP
#define HARDY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardy {

// Values mirror afd_status in afd/afd.h.
enum class ErrorCode {
  Dimension = 1,
  Domain = 2,
  DegenerateInput = 3,
  LinearDependence = 4,
  DictionaryExhausted = 5,
  NearZeroBoundary = 6,
  IndexOutOfRange = 7,
  InvalidSpec = 8,
  IllConditioned = 9,
  Io = 10,
  Parse = 11,
  InvalidArgument = 12,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hardy

#endif  // HARDY_ERRORS_HPP
