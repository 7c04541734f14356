#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ising {

/// One committed spin flip.
struct FlipEvent {
    double time;
    std::int32_t atom;

    friend bool operator==(const FlipEvent&, const FlipEvent&) = default;
};

/// Time-ordered flips of one subsystem within a window.
using History = std::vector<FlipEvent>;

/// One flip in the merged full-lattice trajectory.
struct GlobalEvent {
    double time;
    std::int32_t pe;
    std::int32_t atom;

    friend bool operator==(const GlobalEvent&, const GlobalEvent&) = default;
};

using GlobalHistory = std::vector<GlobalEvent>;

/// Ordering used everywhere ties must break deterministically.
inline bool event_order(const GlobalEvent& a, const GlobalEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.pe != b.pe) return a.pe < b.pe;
    return a.atom < b.atom;
}

struct CompareReport {
    bool equal = true;
    std::size_t first_mismatch = 0;
    std::string reason;
};

/// Histories are equal iff lengths match, (pe, atom) sequences match, and
/// times agree within `time_tolerance` relative error (0 means bit-exact).
CompareReport compare_histories(const GlobalHistory& a, const GlobalHistory& b, double time_tolerance);

/// Plain-text fixture format, one event per line: time pe atom.
void write_history(std::ostream& out, const GlobalHistory& history);
void write_history_file(const std::string& path, const GlobalHistory& history);
GlobalHistory read_history(std::istream& in);
GlobalHistory read_history_file(const std::string& path);

} // namespace ising
