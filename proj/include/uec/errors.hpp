// errors.hpp
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

#ifndef UEC_ERRORS_HPP_
#define UEC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace uec {

// Raised when a bitstream or container file cannot be decoded: bad magic,
// truncation, rank fields out of range, nonzero padding.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive engine is asked for an instance beyond its
// enumeration guard.
class InstanceTooLargeError : public std::runtime_error {
 public:
  explicit InstanceTooLargeError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace uec

#endif  // UEC_ERRORS_HPP_
