#include "phg/text_format.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace phg {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    std::string text(buf);
    if (text == "-0") text = "0";
    return text;
}

std::string pattern_string(const PhotonPattern& pattern, int vertex_count) {
    std::vector<std::string> slots(vertex_count, "-");
    for (const auto& inc : pattern) {
        if (inc.vertex < 0 || inc.vertex >= vertex_count)
            throw std::invalid_argument("pattern vertex out of range");
        if (slots[inc.vertex] != "-")
            throw std::invalid_argument("pattern holds more than one photon per path");
        slots[inc.vertex] =
            inc.mode <= 9 ? std::to_string(inc.mode) : "[" + std::to_string(inc.mode) + "]";
    }
    std::string text;
    for (const auto& s : slots) text += s;
    return text;
}

std::vector<std::string> state_table(const QuantumState& state, int vertex_count) {
    std::vector<std::string> lines;
    lines.reserve(state.terms.size());
    for (const auto& [pattern, amp] : state.terms) {
        lines.push_back(pattern_string(pattern, vertex_count) + " " + format_number(amp.real()) +
                        " " + format_number(amp.imag()));
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace phg
