#include "stefan/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stefan {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail_line(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line, const std::string& key) {
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    const auto r = std::from_chars(first, last, out);
    if (r.ec != std::errc{} || r.ptr != last)
        fail_line(line, "value of '" + key + "' is not a number: '" + v + "'");
    return out;
}

int parse_int(const std::string& v, int line, const std::string& key) {
    int out = 0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    const auto r = std::from_chars(first, last, out);
    if (r.ec != std::errc{} || r.ptr != last)
        fail_line(line, "value of '" + key + "' is not an integer: '" + v + "'");
    return out;
}

std::vector<Knot> parse_knots(const std::string& v, int line) {
    std::vector<Knot> knots;
    std::istringstream ss(v);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
        pair = trim(pair);
        const auto colon = pair.find(':');
        if (colon == std::string::npos)
            fail_line(line, "knot '" + pair + "' is not of the form x:value");
        knots.push_back({parse_double(trim(pair.substr(0, colon)), line, "knots"),
                         parse_double(trim(pair.substr(colon + 1)), line, "knots")});
    }
    if (knots.empty()) fail_line(line, "knots list is empty");
    return knots;
}

}  // namespace

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::self_similar: return "self_similar";
        case Scenario::lower: return "lower";
        case Scenario::upper: return "upper";
        case Scenario::custom: return "custom";
    }
    return "?";
}

RunSpec parse_config(const std::string& text) {
    RunSpec spec;
    bool have_h = false, have_knots = false;
    std::set<std::string> seen;

    std::istringstream ss(text);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) fail_line(line, "expected key=value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail_line(line, "empty key");
        if (!seen.insert(key).second) fail_line(line, "duplicate key '" + key + "'");

        if (key == "scenario") {
            if (value == "self_similar") spec.scenario = Scenario::self_similar;
            else if (value == "lower") spec.scenario = Scenario::lower;
            else if (value == "upper") spec.scenario = Scenario::upper;
            else if (value == "custom") spec.scenario = Scenario::custom;
            else fail_line(line, "unknown scenario '" + value + "'");
        } else if (key == "h") {
            spec.h = parse_double(value, line, key);
            have_h = true;
        } else if (key == "N") {
            spec.N = parse_int(value, line, key);
        } else if (key == "dtau") {
            spec.dtau = parse_double(value, line, key);
        } else if (key == "tau_end") {
            spec.tau_end = parse_double(value, line, key);
        } else if (key == "stride") {
            spec.stride = parse_int(value, line, key);
        } else if (key == "knots") {
            spec.knots = parse_knots(value, line);
            have_knots = true;
        } else {
            fail_line(line, "unknown key '" + key + "'");
        }
    }

    if (!have_h) throw std::invalid_argument("h is required");
    if (!(spec.h > 0.0)) throw std::invalid_argument("h must be positive");
    if (spec.N < 8) throw std::invalid_argument("N must be at least 8");
    if (!(spec.dtau > 0.0)) throw std::invalid_argument("dtau must be positive");
    if (!(spec.tau_end > 0.0)) throw std::invalid_argument("tau_end must be positive");
    if (spec.stride < 1) throw std::invalid_argument("stride must be positive");
    if (spec.scenario == Scenario::custom && !have_knots)
        throw std::invalid_argument("scenario custom requires knots");
    if (have_knots && spec.scenario == Scenario::self_similar)
        throw std::invalid_argument("scenario self_similar does not take knots");
    if (have_knots) validate(spec_initial_data(spec));
    return spec;
}

InitialData spec_initial_data(const RunSpec& spec) {
    if (spec.knots.empty()) return make_ramp(0.5, 1.0);
    InitialData d;
    d.knots = spec.knots;
    d.b0 = spec.knots.back().x;
    d.M = 0.0;
    for (std::size_t i = 1; i < spec.knots.size(); ++i) {
        const double slope = (spec.knots[i].v - spec.knots[i - 1].v) /
                             (spec.knots[i].x - spec.knots[i - 1].x);
        d.M = std::fmax(d.M, std::abs(slope));
    }
    return d;
}

}  // namespace stefan
