// Copyright 2026 The relstate authors
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

#pragma once

#include <string>

namespace relstate {

/// Shortest decimal string that parses back to exactly the same double
/// (std::to_chars general form). Used everywhere a double is printed, so
/// emitted files are byte-stable across runs and platforms.
std::string format_double(double x);

} // namespace relstate
