// Copyright 2026 The HADOF Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

// Plain-text QUBO format:
//
//   qubo <n>
//   <i> <j> <value>
//   ...
//
// Indices are 0-based with i <= j. Values use shortest round-trip decimal
// formatting. Lines starting with '#' (after optional whitespace) and blank
// lines are ignored.

#include <charconv>
#include <optional>
#include <type_traits>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hadof/qubo.hpp"

namespace hadof {

class ParseError : public std::runtime_error {
 public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

 private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

template <class T>
bool parse_number(std::string_view token, T& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if constexpr (std::is_floating_point_v<T>) {
        if (first != last && *first == '+') ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace detail

inline QuboMatrix parse_qubo(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::optional<QuboMatrix> q;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = detail::split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;

        if (!q) {
            std::size_t n = 0;
            if (tokens.size() != 2 || tokens[0] != "qubo" || !detail::parse_number(tokens[1], n))
                throw ParseError(line_no, "expected header 'qubo <n>'");
            if (n == 0) throw ParseError(line_no, "variable count must be positive");
            q.emplace(n);
            continue;
        }

        std::size_t i = 0, j = 0;
        double value = 0.0;
        if (tokens.size() != 3 || !detail::parse_number(tokens[0], i) ||
            !detail::parse_number(tokens[1], j) || !detail::parse_number(tokens[2], value))
            throw ParseError(line_no, "expected '<i> <j> <value>'");
        if (i >= q->size() || j >= q->size())
            throw ParseError(line_no, "index out of range for n = " + std::to_string(q->size()));
        if (j < i) throw ParseError(line_no, "lower-triangular entry (j < i)");
        if (q->contains(i, j))
            throw ParseError(line_no, "duplicate entry (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ")");
        q->set(i, j, value);
    }
    if (!q) throw ParseError(line_no, "missing header 'qubo <n>'");
    return std::move(*q);
}

inline std::string serialize_qubo(const QuboMatrix& q) {
    std::string out = "qubo " + std::to_string(q.size()) + "\n";
    q.for_each([&](std::size_t i, std::size_t j, double v) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += ' ';
        out += detail::format_double(v);
        out += '\n';
    });
    return out;
}

inline QuboMatrix read_qubo_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_qubo(ss.str());
}

inline void write_qubo_file(const std::string& path, const QuboMatrix& q) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_qubo(q);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hadof
