// Copyright 2026 The cvexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvexact/target.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

namespace cvexact {

NOPoly TargetGate::hamiltonian() const {
    std::vector<ModePower> f;
    for (const auto &[mode, fac] : exponents) {
        auto e = static_cast<std::uint16_t>(fac.power);
        f.push_back(fac.basis == Basis::Position ? ModePower{mode, e, 0} : ModePower{mode, 0, e});
    }
    return NOPoly::term(Monomial(std::move(f)));
}

std::uint32_t TargetGate::n_modes() const {
    return exponents.empty() ? 0 : exponents.rbegin()->first + 1;
}

int TargetGate::total_degree() const {
    int d = 0;
    for (const auto &[m, f] : exponents) d += f.power;
    return d;
}

std::string TargetGate::describe() const {
    std::ostringstream os;
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, strength);
    os << "t=" << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    for (const auto &[mode, f] : exponents) {
        os << ' ' << (f.basis == Basis::Position ? 'X' : 'P') << '[' << mode << ']';
        if (f.power != 1) os << '^' << f.power;
    }
    return os.str();
}

}  // namespace cvexact
