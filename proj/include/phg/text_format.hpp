#pragma once

#include <string>
#include <vector>

#include "phg/quantum_state.hpp"

namespace phg {

// 10 significant digits, "-0" normalized to "0".
std::string format_number(double value);

// One character per vertex in declaration order: the mode digit where the
// pattern holds a photon, '-' where it does not. Modes above 9 are written
// as "[n]".
std::string pattern_string(const PhotonPattern& pattern, int vertex_count);

// Lines "pattern re im", sorted lexicographically by pattern string.
std::vector<std::string> state_table(const QuantumState& state, int vertex_count);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace phg
