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

#include "cvexact/circuit_tools.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "cvexact/errors.hpp"

namespace cvexact {

namespace {

// One left-to-right sweep with a stack; returns true if anything changed.
bool peephole(std::vector<Gate> &gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    bool changed = false;
    for (const Gate &g : gates) {
        if (!g.is_fourier() && std::abs(g.strength()) < kZeroStrength) {
            changed = true;
            continue;
        }
        if (!out.empty() && out.back().same_generator(g)) {
            Gate &top = out.back();
            if (g.is_fourier()) {
                if (top.fourier_power() == -g.fourier_power()) {
                    out.pop_back();
                    changed = true;
                    continue;
                }
            } else {
                const double s = top.strength() + g.strength();
                changed = true;
                if (std::abs(s) < kZeroStrength) {
                    out.pop_back();
                } else {
                    top = top.with_strength(s);
                }
                continue;
            }
        }
        out.push_back(g);
    }
    gates = std::move(out);
    return changed;
}

// Greedy interval colouring of ancilla live ranges. Ancillas enter and leave
// in the vacuum-independent sense that the circuit acts as identity on them
// overall, so two ancillas whose gate ranges do not overlap can share a mode.
bool reuse_ancillas(GateSeq &seq) {
    if (seq.ancilla_modes.empty()) return false;
    std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> live;
    for (auto a : seq.ancilla_modes) live[a];
    std::map<std::uint32_t, bool> seen;
    for (std::size_t i = 0; i < seq.gates.size(); ++i) {
        for (auto m : seq.gates[i].modes()) {
            auto it = live.find(m);
            if (it == live.end()) continue;
            if (!seen[m]) {
                it->second.first = i;
                seen[m] = true;
            }
            it->second.second = i;
        }
    }
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::uint32_t>> order;
    for (auto a : seq.ancilla_modes) {
        if (seen[a]) order.push_back({live[a], a});
    }
    std::sort(order.begin(), order.end());
    std::vector<std::size_t> reg_end;  // last gate index using each register
    std::uint32_t max_mode = seq.n_target_modes;
    for (const auto &g : seq.gates) {
        for (auto m : g.modes()) max_mode = std::max(max_mode, m + 1);
    }
    std::vector<std::uint32_t> mode_map(max_mode);
    for (std::uint32_t m = 0; m < max_mode; ++m) mode_map[m] = m;
    for (const auto &[range, a] : order) {
        std::size_t r = 0;
        while (r < reg_end.size() && reg_end[r] >= range.first) ++r;
        if (r == reg_end.size()) reg_end.push_back(range.second);
        reg_end[r] = range.second;
        mode_map[a] = seq.n_target_modes + static_cast<std::uint32_t>(r);
    }
    std::vector<std::uint32_t> new_ancillas;
    for (std::size_t r = 0; r < reg_end.size(); ++r) {
        new_ancillas.push_back(seq.n_target_modes + static_cast<std::uint32_t>(r));
    }
    bool changed = new_ancillas != seq.ancilla_modes;
    for (auto a : seq.ancilla_modes) changed |= mode_map[a] != a;
    if (!changed) return false;
    std::map<const NOPoly *, Gate> cache;
    for (auto &g : seq.gates) {
        if (g.is_fourier()) {
            g = g.renamed(mode_map);
            continue;
        }
        auto it = cache.find(&g.generator());
        if (it == cache.end()) {
            it = cache.emplace(&g.generator(), g.renamed(mode_map)).first;
        }
        Gate r = it->second.with_strength(g.strength());
        r.set_provenance(g.provenance());
        g = std::move(r);
    }
    seq.ancilla_modes = std::move(new_ancillas);
    return true;
}

const char *kind_name(UniversalKind k) {
    switch (k) {
        case UniversalKind::X1: return "x1";
        case UniversalKind::X2: return "x2";
        case UniversalKind::X3: return "x3";
        case UniversalKind::XX: return "xx";
    }
    return "?";
}

}  // namespace

GateSeq optimize(const GateSeq &seq) {
    GateSeq out = seq;
    while (true) {
        bool changed = false;
        while (peephole(out.gates)) changed = true;
        changed |= reuse_ancillas(out);
        if (!changed) break;
    }
    return out;
}

std::size_t count_gates(const GateSeq &seq, bool exclude_fourier) {
    if (!exclude_fourier) return seq.gates.size();
    return static_cast<std::size_t>(std::count_if(seq.gates.begin(), seq.gates.end(),
                                                  [](const Gate &g) { return !g.is_fourier(); }));
}

nlohmann::json serialize(const GateSeq &seq) {
    nlohmann::json gates = nlohmann::json::array();
    for (auto it = seq.gates.rbegin(); it != seq.gates.rend(); ++it) {
        const Gate &g = *it;
        nlohmann::json rec;
        if (g.is_fourier()) {
            rec["kind"] = "fourier";
            rec["modes"] = {g.fourier_mode()};
            rec["strength"] = std::numbers::pi / 2;
            rec["dagger"] = g.fourier_power() < 0;
        } else {
            auto kind = g.universal_kind();
            if (!kind) {
                throw std::invalid_argument("serialize: gate outside the universal set: " +
                                            to_string(g.generator()));
            }
            rec["kind"] = kind_name(*kind);
            auto ms = g.universal_modes();
            if (*kind != UniversalKind::XX) ms.resize(1);
            rec["modes"] = ms;
            rec["strength"] = g.strength();
            rec["dagger"] = false;
        }
        rec["provenance"] = g.provenance();
        gates.push_back(std::move(rec));
    }
    return {{"version", 1},
            {"modes", seq.n_target_modes},
            {"ancillas", seq.ancilla_modes},
            {"gates", std::move(gates)}};
}

GateSeq deserialize(const nlohmann::json &doc) {
    auto fail = [](const std::string &what) { throw SchemaViolation("circuit document: " + what); };
    auto is_index = [](const nlohmann::json &j) {
        return j.is_number_integer() && j.get<std::int64_t>() >= 0 &&
               j.get<std::int64_t>() <= std::numeric_limits<std::uint32_t>::max();
    };
    if (!doc.is_object()) fail("not an object");
    for (const char *key : {"version", "modes", "ancillas", "gates"}) {
        if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");
    }
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1) {
        fail("unsupported version");
    }
    if (!is_index(doc["modes"])) fail("'modes' must be a non-negative integer");
    if (!doc["ancillas"].is_array() || !doc["gates"].is_array()) fail("'ancillas'/'gates' must be arrays");
    GateSeq seq;
    seq.n_target_modes = doc["modes"].get<std::uint32_t>();
    for (const auto &a : doc["ancillas"]) {
        if (!is_index(a)) fail("ancilla indices must be non-negative integers");
        seq.ancilla_modes.push_back(a.get<std::uint32_t>());
    }
    static const std::map<std::string, UniversalKind> kinds = {
        {"x1", UniversalKind::X1}, {"x2", UniversalKind::X2},
        {"x3", UniversalKind::X3}, {"xx", UniversalKind::XX}};
    std::vector<Gate> applied;
    for (const auto &rec : doc["gates"]) {
        if (!rec.is_object()) fail("gate record must be an object");
        if (!rec.contains("kind") || !rec["kind"].is_string()) fail("gate record lacks 'kind'");
        if (!rec.contains("modes") || !rec["modes"].is_array()) fail("gate record lacks 'modes'");
        std::vector<std::uint32_t> modes;
        for (const auto &m : rec["modes"]) {
            if (!is_index(m)) fail("mode indices must be non-negative integers");
            modes.push_back(m.get<std::uint32_t>());
        }
        const std::string kind = rec["kind"].get<std::string>();
        std::string prov;
        if (rec.contains("provenance")) {
            if (!rec["provenance"].is_string()) fail("'provenance' must be a string");
            prov = rec["provenance"].get<std::string>();
        }
        bool dagger = false;
        if (rec.contains("dagger")) {
            if (!rec["dagger"].is_boolean()) fail("'dagger' must be a boolean");
            dagger = rec["dagger"].get<bool>();
        }
        if (kind == "fourier") {
            if (modes.size() != 1) fail("fourier gate takes one mode");
            applied.push_back(Gate::fourier(modes[0], dagger ? -1 : 1, prov));
            continue;
        }
        auto it = kinds.find(kind);
        if (it == kinds.end()) fail("unknown gate kind '" + kind + "'");
        if (!rec.contains("strength") || !rec["strength"].is_number()) fail("gate lacks 'strength'");
        const double s = rec["strength"].get<double>();
        const std::size_t want = it->second == UniversalKind::XX ? 2 : 1;
        if (modes.size() != want) fail("wrong number of modes for kind '" + kind + "'");
        if (want == 2 && modes[0] == modes[1]) fail("xx gate needs distinct modes");
        Gate g = Gate::universal(it->second, modes[0], modes.back(), s, prov);
        applied.push_back(dagger ? g.inverse() : g);
    }
    seq.gates.assign(applied.rbegin(), applied.rend());
    return seq;
}

nlohmann::json report_to_json(const DecompReport &r) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto &e : r.recursion_trace) trace.push_back({{"label", e.label}, {"depth", e.depth}});
    nlohmann::json j = {{"route", r.route},
                        {"n_gates_total", r.n_gates_total},
                        {"n_gates_nonfourier", r.n_gates_nonfourier},
                        {"n_gates_preopt", r.n_gates_preopt},
                        {"n_ancillas", r.n_ancillas},
                        {"max_depth", r.max_depth},
                        {"recursion_trace", std::move(trace)}};
    j["residual_symbolic"] = r.residual_symbolic >= 0 ? nlohmann::json(r.residual_symbolic) : nlohmann::json(nullptr);
    j["symbolic_method"] = r.symbolic_method.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.symbolic_method);
    j["residual_numeric"] = r.residual_numeric ? nlohmann::json(*r.residual_numeric) : nlohmann::json(nullptr);
    j["phase_offset"] = r.phase_offset ? nlohmann::json(*r.phase_offset) : nlohmann::json(nullptr);
    return j;
}

std::string report_to_text(const DecompReport &r) {
    std::ostringstream os;
    os << "route:                " << r.route << "\n"
       << "gates (non-Fourier):  " << r.n_gates_nonfourier << "\n"
       << "gates (all):          " << r.n_gates_total << "\n"
       << "gates before optimize (non-Fourier): " << r.n_gates_preopt << "\n"
       << "ancillas:             " << r.n_ancillas << "\n"
       << "recursion depth:      " << r.max_depth << "\n";
    if (r.residual_symbolic >= 0) {
        os << "symbolic residual:    " << r.residual_symbolic;
        if (!r.symbolic_method.empty()) os << " (" << r.symbolic_method << ")";
        os << "\n";
    }
    if (r.residual_numeric) os << "numeric error:        " << *r.residual_numeric << "\n";
    if (r.phase_offset) os << "phase offset:         " << *r.phase_offset << "\n";
    // Collapse the trace to counts per (label, depth) so large circuits stay readable.
    std::map<std::pair<int, std::string>, int> tally;
    for (const auto &e : r.recursion_trace) ++tally[{e.depth, e.label}];
    if (!tally.empty()) {
        os << "identities applied:\n";
        for (const auto &[key, n] : tally) {
            os << "  " << std::string(static_cast<std::size_t>(2 * key.first), ' ') << key.second
               << " x" << n << " (depth " << key.first << ")\n";
        }
    }
    return os.str();
}

}  // namespace cvexact
