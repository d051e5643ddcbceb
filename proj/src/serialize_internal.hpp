// Copyright 2026 The htcut Authors.
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

#ifndef HTCUT_SRC_SERIALIZE_INTERNAL_HPP_
#define HTCUT_SRC_SERIALIZE_INTERNAL_HPP_

#include <cstdio>
#include <string>

namespace htcut::detail {

// Reals in every text output use 17 significant digits.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace htcut::detail

#endif  // HTCUT_SRC_SERIALIZE_INTERNAL_HPP_
