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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadof/qubo.hpp"

namespace hadof {

/// Bitstring form of an assignment: character a is variable a ('0' or '1'),
/// so variable 0 is leftmost.
inline std::string to_bitstring(std::span<const std::uint8_t> x) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) s[i] = '1';
    return s;
}

inline Assignment from_bitstring(const std::string& s) {
    Assignment x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("from_bitstring: invalid character in '" + s + "'");
        x[i] = s[i] == '1';
    }
    return x;
}

/// Multiset of equal-width bitstrings with counts. Samples added with
/// add_draw() also keep their draw order, which aggregation relies on.
class SampleSet {
 public:
    explicit SampleSet(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t total() const { return total_; }
    bool empty() const { return total_ == 0; }
    std::size_t distinct() const { return counts_.size(); }

    const std::map<std::string, std::size_t>& counts() const { return counts_; }

    std::size_t count(const std::string& bits) const {
        auto it = counts_.find(bits);
        return it == counts_.end() ? 0 : it->second;
    }

    /// Adds an unordered observation with multiplicity.
    void add(const std::string& bits, std::size_t multiplicity = 1) {
        check_width(bits);
        if (multiplicity == 0) return;
        counts_[bits] += multiplicity;
        total_ += multiplicity;
    }

    /// Adds one observation and records it in the draw list.
    void add_draw(const std::string& bits) {
        add(bits, 1);
        draws_.push_back(bits);
    }

    /// Draws in the order they were made; empty if none were recorded.
    const std::vector<std::string>& draws() const { return draws_; }

    /// Most frequent bitstring; ties go to the lexicographically smallest.
    const std::string& modal() const {
        if (counts_.empty()) throw std::logic_error("SampleSet::modal: empty sample set");
        auto best = counts_.begin();
        for (auto it = counts_.begin(); it != counts_.end(); ++it)
            if (it->second > best->second) best = it;
        return best->first;
    }

    /// Count-weighted frequency of '1' at each position.
    std::vector<double> bit_frequencies() const {
        if (empty()) throw std::invalid_argument("bit_frequencies: empty sample set");
        std::vector<double> ones(width_, 0.0);
        for (const auto& [bits, c] : counts_)
            for (std::size_t i = 0; i < width_; ++i)
                if (bits[i] == '1') ones[i] += static_cast<double>(c);
        for (auto& v : ones) v /= static_cast<double>(total_);
        return ones;
    }

    friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
    void check_width(const std::string& bits) const {
        if (bits.size() != width_)
            throw std::invalid_argument("SampleSet: bitstring '" + bits + "' has width " +
                                        std::to_string(bits.size()) + ", expected " +
                                        std::to_string(width_));
    }

    std::size_t width_;
    std::map<std::string, std::size_t> counts_;
    std::vector<std::string> draws_;
    std::size_t total_ = 0;
};

}  // namespace hadof
