// base/error.h
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The geoasr Authors.
//
// Error reporting helpers used throughout the library.

#ifndef GEOASR_BASE_ERROR_H_
#define GEOASR_BASE_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace geoasr {

// Streamed message builder that throws on destruction.  Usage:
//   GEOASR_CHECK(order >= 1) << "order must be positive, got " << order;
class ErrorStream {
 public:
  ErrorStream() = default;
  [[noreturn]] void Throw() const { throw std::runtime_error(os_.str()); }

  template <typename T>
  ErrorStream &operator<<(const T &v) {
    os_ << v;
    return *this;
  }

 private:
  std::ostringstream os_;
};

namespace internal {
struct Thrower {
  [[noreturn]] void operator&(const ErrorStream &s) { s.Throw(); }
};
}  // namespace internal

}  // namespace geoasr

#define GEOASR_ERROR() \
  ::geoasr::internal::Thrower() & ::geoasr::ErrorStream()

#define GEOASR_CHECK(cond) \
  if (cond) {              \
  } else                   \
    GEOASR_ERROR() << "check failed (" #cond "): "

#endif  // GEOASR_BASE_ERROR_H_
