#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "board.hpp"
#include "ca.hpp"
#include "rule.hpp"
#include "tape.hpp"

namespace blockca {

// Tape line format: `origin=<int> left=<0|1> right=<0|1> core=<bitstring>`,
// empty core allowed.
inline std::string tape_to_string(const Tape& t) {
    std::string core;
    core.reserve(t.core().size());
    for (size_t i = 0; i < t.core().size(); ++i) core.push_back(t.core().get(i) ? '1' : '0');
    return "origin=" + std::to_string(t.origin()) + " left=" + std::to_string(int(t.left_fill())) +
           " right=" + std::to_string(int(t.right_fill())) + " core=" + core;
}

namespace detail {

inline std::string expect_key(std::istringstream& in, const std::string& key) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("tape line: missing field '" + key + "'");
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw std::invalid_argument("tape line: expected '" + key + "=', got '" + tok + "'");
    return tok.substr(eq + 1);
}

inline int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("invalid integer for " + what + ": '" + s + "'");
    }
}

inline bool parse_bit(const std::string& s, const std::string& what) {
    if (s == "0") return false;
    if (s == "1") return true;
    throw std::invalid_argument("invalid bit for " + what + ": '" + s + "'");
}

}  // namespace detail

inline Tape parse_tape(const std::string& line) {
    std::istringstream in(line);
    int64_t origin = detail::parse_int(detail::expect_key(in, "origin"), "origin");
    bool lf = detail::parse_bit(detail::expect_key(in, "left"), "left");
    bool rf = detail::parse_bit(detail::expect_key(in, "right"), "right");
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("tape line: missing field 'core'");
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != "core")
        throw std::invalid_argument("tape line: expected 'core=', got '" + tok + "'");
    std::string bits = tok.substr(eq + 1);
    BitVec core(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw std::invalid_argument("tape line: core must be a bitstring");
        core.set(i, bits[i] == '1');
    }
    return Tape(origin, std::move(core), lf, rf);
}

// Board file: a params line (`gamma=.. left=.. right=.. block=..`) followed by
// one tape line for the terminal row.
inline std::string board_to_string(const Board& b) {
    return b.params.to_string() + "\n" + tape_to_string(b.level0) + "\n";
}

inline Board parse_board(std::istream& in) {
    std::string params_line, tape_line;
    if (!std::getline(in, params_line)) throw std::invalid_argument("board: missing params line");
    if (!std::getline(in, tape_line)) throw std::invalid_argument("board: missing tape line");
    std::istringstream pin(params_line);
    int64_t gamma = detail::parse_int(detail::expect_key(pin, "gamma"), "gamma");
    int64_t left = detail::parse_int(detail::expect_key(pin, "left"), "left");
    int64_t right = detail::parse_int(detail::expect_key(pin, "right"), "right");
    int64_t block = detail::parse_int(detail::expect_key(pin, "block"), "block");
    return Board{RuleParams(gamma, left, right, block), parse_tape(tape_line)};
}

// CSV export: header row of column coordinates, then one row per time step in
// ascending t.
inline void write_csv(std::ostream& os, const Diagram& d, int64_t xmin, int64_t xmax) {
    os << "t";
    for (int64_t x = xmin; x <= xmax; ++x) os << "," << x;
    os << "\n";
    for (int64_t t = 0; t <= d.steps(); ++t) {
        os << t;
        for (int64_t x = xmin; x <= xmax; ++x) os << "," << int(d.cell(x, t));
        os << "\n";
    }
}

}  // namespace blockca
