#include "fallcolor/coloring.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "fallcolor/errors.hpp"

namespace fallcolor {

namespace {

void require_matching_length(const Graph& g, const Coloring& f) {
    if (static_cast<int>(f.colors.size()) != g.vertex_count())
        throw InvalidArgument("coloring length " + std::to_string(f.colors.size()) +
                              " does not match vertex count " + std::to_string(g.vertex_count()));
}

uint64_t color_bit(int c) { return uint64_t{1} << c; }

} // namespace

Coloring Coloring::from_vector(std::vector<int> c) {
    int k = 0;
    for (int x : c) {
        if (x < 0) throw InvalidArgument("negative color id");
        k = std::max(k, x + 1);
    }
    return Coloring(std::move(c), k);
}

bool is_proper(const Graph& g, const Coloring& f) {
    require_matching_length(g, f);
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool mono = false;
        g.neighbors(u).for_each([&](int v) {
            if (f.colors[static_cast<size_t>(u)] == f.colors[static_cast<size_t>(v)]) mono = true;
        });
        if (mono) return false;
    }
    return true;
}

bool is_colorful(const Graph& g, const Coloring& f, int v) {
    require_matching_length(g, f);
    if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("vertex out of range: " + std::to_string(v));
    if (f.k > 64) {
        std::vector<bool> seen(static_cast<size_t>(f.k), false);
        auto mark = [&](int u) {
            int c = f.colors[static_cast<size_t>(u)];
            if (c >= 0 && c < f.k) seen[static_cast<size_t>(c)] = true;
        };
        mark(v);
        g.neighbors(v).for_each(mark);
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
    uint64_t seen = color_bit(f.colors[static_cast<size_t>(v)]);
    g.neighbors(v).for_each([&](int u) { seen |= color_bit(f.colors[static_cast<size_t>(u)]); });
    const uint64_t all = (f.k == 64) ? ~uint64_t{0} : color_bit(f.k) - 1;
    return (seen & all) == all;
}

bool is_fall(const Graph& g, const Coloring& f) {
    require_matching_length(g, f);
    if (f.k < 1) return false;
    for (int c : f.colors)
        if (c < 0 || c >= f.k) return false;
    std::vector<bool> used(static_cast<size_t>(f.k), false);
    for (int c : f.colors) used[static_cast<size_t>(c)] = true;
    if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return false;
    if (!is_proper(g, f)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_colorful(g, f, v)) return false;
    return true;
}

bool FallReport::contains(int k) const {
    return std::binary_search(fall_set.begin(), fall_set.end(), k);
}

std::string to_json_string(const FallReport& report, bool one_based) {
    nlohmann::ordered_json j;
    j["fall_set"] = report.fall_set;
    j["chi_f"] = report.chi_f ? nlohmann::ordered_json(*report.chi_f) : nlohmann::ordered_json(nullptr);
    j["psi_f"] = report.psi_f ? nlohmann::ordered_json(*report.psi_f) : nlohmann::ordered_json(nullptr);
    auto witnesses = nlohmann::ordered_json::object();
    for (const auto& [k, coloring] : report.witnesses) {
        std::vector<int> colors = coloring.colors;
        if (one_based)
            for (int& c : colors) ++c;
        witnesses[std::to_string(k)] = colors;
    }
    j["witnesses"] = std::move(witnesses);
    j["undecided"] = report.undecided;
    return j.dump();
}

} // namespace fallcolor
