/*
   Copyright 2026 The casinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <utility>

#include "polynomial.hpp"
#include "report.hpp"

namespace casinv::detail {

inline std::string n_label(std::size_t n) { return "n=" + std::to_string(n); }

/// Exact comparison; both sides are recorded when they differ.
template <class T>
CheckEntry check_equal(std::string name, const T& lhs, const T& rhs) {
    CheckEntry e;
    e.name = std::move(name);
    e.status = (lhs == rhs) ? Status::Pass : Status::Fail;
    if (e.status == Status::Fail) {
        e.lhs = to_text(lhs);
        e.rhs = to_text(rhs);
    }
    return e;
}

inline CheckEntry skipped(std::string name, std::string why) {
    return {std::move(name), Status::SkippedDegenerate, "", "", std::move(why)};
}

}  // namespace casinv::detail
