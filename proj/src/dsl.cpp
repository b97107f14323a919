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

#include "cvexact/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "cvexact/errors.hpp"

namespace cvexact {

namespace {

std::vector<std::string> tokenize(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            flush();
        } else if (c == '+') {
            // "t=1e+3" keeps its sign; a free-standing '+' separates terms.
            if (!cur.empty() && (cur.back() == 'e' || cur.back() == 'E') && cur.rfind("t=", 0) == 0) {
                cur += c;
            } else {
                flush();
                out.emplace_back("+");
            }
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

double parse_strength(const std::string &tok) {
    const std::string num = tok.substr(2);
    double v = 0;
    auto res = std::from_chars(num.data(), num.data() + num.size(), v);
    if (num.empty() || res.ec != std::errc() || res.ptr != num.data() + num.size() || !std::isfinite(v)) {
        throw ParseError("bad strength '" + tok + "'");
    }
    return v;
}

}  // namespace

std::vector<TargetGate> parse_terms(const std::string &text) {
    static const std::regex factor_re(R"(([XP])\[(\d+)\](?:\^(\d+))?)");
    std::optional<double> strength;
    std::vector<std::map<std::uint32_t, Factor>> terms(1);
    bool expect_factor = false;  // set right after '+'
    for (const auto &tok : tokenize(text)) {
        if (tok.rfind("t=", 0) == 0) {
            if (strength) throw ParseError("strength given twice");
            strength = parse_strength(tok);
            continue;
        }
        if (tok == "+") {
            if (terms.back().empty()) throw ParseError("empty term before '+'");
            terms.emplace_back();
            expect_factor = true;
            continue;
        }
        std::smatch m;
        if (!std::regex_match(tok, m, factor_re)) throw ParseError("unexpected token '" + tok + "'");
        unsigned long mode = 0, power = 1;
        try {
            mode = std::stoul(m[2].str());
            if (m[3].matched) power = std::stoul(m[3].str());
        } catch (const std::exception &) {
            throw ParseError("number out of range in '" + tok + "'");
        }
        if (mode > std::numeric_limits<std::uint16_t>::max()) throw ParseError("mode index too large in '" + tok + "'");
        if (power < 1 || power > 64) throw ParseError("exponent must be in 1..64 in '" + tok + "'");
        const Basis b = m[1].str() == "X" ? Basis::Position : Basis::Momentum;
        auto &term = terms.back();
        if (term.count(static_cast<std::uint32_t>(mode))) {
            throw ParseError("mode " + std::to_string(mode) + " appears twice in one term");
        }
        term[static_cast<std::uint32_t>(mode)] = {static_cast<int>(power), b};
        expect_factor = false;
    }
    if (!strength) throw ParseError("missing strength 't=<float>'");
    if (expect_factor) throw ParseError("trailing '+'");
    std::vector<TargetGate> out;
    for (auto &t : terms) out.push_back({std::move(t), *strength});
    return out;
}

TargetGate parse_target(const std::string &text) {
    auto terms = parse_terms(text);
    if (terms.size() != 1) {
        throw ParseError("expected a single product term, got " + std::to_string(terms.size()) +
                         " (sums need --trotter K)");
    }
    return terms.front();
}

std::string format_target(const TargetGate &t) { return t.describe(); }

std::vector<std::string> preset_names() {
    return {"bose-hubbard-dipole", "bose-hubbard-tunneling", "cross-kerr", "pca-rotation",
            "matrix-inversion",    "pde-cubic",              "pde-quartic", "montecarlo:<n>"};
}

std::string preset_spec(const std::string &name) {
    static const std::map<std::string, std::string> table = {
        {"bose-hubbard-dipole", "t=1 X[0]^2 X[1]^2"},
        {"bose-hubbard-tunneling", "t=1 X[0] X[1]^3"},
        {"cross-kerr", "t=1 X[0]^2 X[1]^2"},
        {"pca-rotation", "t=1 X[0] X[1] X[2]"},
        {"matrix-inversion", "t=1 X[0] X[1] X[2] X[3]"},
        {"pde-cubic", "t=1 X[0] X[1] X[2]"},
        {"pde-quartic", "t=1 X[0]^2 X[1] X[2]"},
    };
    if (auto it = table.find(name); it != table.end()) return it->second;
    const std::string mc = "montecarlo:";
    if (name.rfind(mc, 0) == 0) {
        const std::string n = name.substr(mc.size());
        int v = 0;
        auto res = std::from_chars(n.data(), n.data() + n.size(), v);
        if (n.empty() || res.ec != std::errc() || res.ptr != n.data() + n.size() || v < 1 || v > 64) {
            throw ParseError("montecarlo:<n> needs a positive integer n, got '" + n + "'");
        }
        return "t=1 X[0]^" + std::to_string(v) + " P[1] P[2] P[3]";
    }
    throw ParseError("unknown preset '" + name + "'");
}

}  // namespace cvexact
