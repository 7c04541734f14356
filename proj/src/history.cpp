#include "ising/history.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ising/errors.hpp"

namespace ising {

namespace {
constexpr const char* kFormatTag = "# ising-history v1";
} // namespace

CompareReport compare_histories(const GlobalHistory& a, const GlobalHistory& b, double time_tolerance) {
    CompareReport report;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].pe != b[i].pe || a[i].atom != b[i].atom) {
            report.equal = false;
            report.first_mismatch = i;
            std::ostringstream msg;
            msg << "event " << i << ": (pe " << a[i].pe << ", atom " << a[i].atom
                << ") vs (pe " << b[i].pe << ", atom " << b[i].atom << ")";
            report.reason = msg.str();
            return report;
        }
        bool time_ok;
        if (time_tolerance == 0.0) {
            time_ok = a[i].time == b[i].time;
        } else {
            const double scale = std::max(std::fabs(a[i].time), std::fabs(b[i].time));
            time_ok = std::fabs(a[i].time - b[i].time) <= time_tolerance * scale;
        }
        if (!time_ok) {
            report.equal = false;
            report.first_mismatch = i;
            std::ostringstream msg;
            msg.precision(17);
            msg << "event " << i << ": time " << a[i].time << " vs " << b[i].time;
            report.reason = msg.str();
            return report;
        }
    }
    if (a.size() != b.size()) {
        report.equal = false;
        report.first_mismatch = n;
        std::ostringstream msg;
        msg << "length " << a.size() << " vs " << b.size();
        report.reason = msg.str();
    }
    return report;
}

void write_history(std::ostream& out, const GlobalHistory& history) {
    out << kFormatTag << "\n";
    char line[96];
    for (const GlobalEvent& e : history) {
        // %.17g round-trips doubles exactly.
        std::snprintf(line, sizeof line, "%.17g %d %d\n", e.time, e.pe, e.atom);
        out << line;
    }
}

void write_history_file(const std::string& path, const GlobalHistory& history) {
    std::ofstream out(path);
    if (!out)
        throw SimError("cannot open history file for writing: " + path);
    write_history(out, history);
}

GlobalHistory read_history(std::istream& in) {
    GlobalHistory history;
    std::string line;
    bool saw_tag = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (line == kFormatTag)
                saw_tag = true;
            continue;
        }
        GlobalEvent e{};
        if (std::sscanf(line.c_str(), "%lg %d %d", &e.time, &e.pe, &e.atom) != 3)
            throw SimError("malformed history line: " + line);
        history.push_back(e);
    }
    if (!saw_tag && !history.empty())
        throw SimError("history file missing format tag");
    return history;
}

GlobalHistory read_history_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SimError("cannot open history file: " + path);
    return read_history(in);
}

} // namespace ising
