/* Copyright 2026 The idring Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "idring/idr.hpp"

namespace idring {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Free: return "free";
        case Mode::QRespecting: return "q";
        case Mode::Multiplicative: return "ida";
    }
    return "?";
}

Mode parse_mode(std::string_view s) {
    if (s == "free") return Mode::Free;
    if (s == "q") return Mode::QRespecting;
    if (s == "ida") return Mode::Multiplicative;
    throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected free, q or ida)");
}

template class IdrElem<RationalBase>;
template class IdrElem<TrivialBase>;
template class IdrElem<LaurentBase>;
template class Idr<RationalBase>;
template class Idr<TrivialBase>;
template class Idr<LaurentBase>;
template class ModelMap<RationalBase>;
template class ModelMap<TrivialBase>;
template class ModelMap<LaurentBase>;

}  // namespace idring
