#pragma once

#include "chordtd/error.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace chordtd {

/// Reduced word in a free group. Letter +i is generator i-1, letter -i its inverse.
class FreeWord {
public:
    FreeWord() = default;
    static FreeWord generator(int index, int power = 1) {
        FreeWord w;
        const int letter = power > 0 ? index + 1 : -(index + 1);
        for (int i = 0; i < std::abs(power); ++i) w.push(letter);
        return w;
    }
    static FreeWord from_letters(const std::vector<int>& letters) {
        FreeWord w;
        for (int l : letters) w.push(l);
        return w;
    }

    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool identity() const { return letters_.empty(); }

    FreeWord inverse() const {
        FreeWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
        return w;
    }
    friend FreeWord operator*(FreeWord a, const FreeWord& b) {
        for (int l : b.letters_) a.push(l);
        return a;
    }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    /// Shortlex order.
    friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    void push(int letter) {
        if (!letters_.empty() && letters_.back() == -letter) letters_.pop_back();
        else letters_.push_back(letter);
    }
    std::vector<int> letters_;
};

/// Named generators; words print as "x y^-1 x^2" and the identity as "".
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

    int rank() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    int index_or_add(const std::string& name) {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it != names_.end()) return static_cast<int>(it - names_.begin());
        names_.push_back(name);
        return rank() - 1;
    }

    /// Parses a whitespace-separated token list; new generator names are appended.
    FreeWord parse(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string token;
        FreeWord w;
        while (in >> token) {
            const auto caret = token.find('^');
            const std::string name = token.substr(0, caret);
            if (name.empty() || !valid_name(name)) fail(ErrorCode::InvalidInput, "bad generator in word token '" + token + "'");
            int power = 1;
            if (caret != std::string::npos) {
                const std::string exp = token.substr(caret + 1);
                char* end = nullptr;
                const long p = std::strtol(exp.c_str(), &end, 10);
                if (exp.empty() || *end != '\0' || p == 0 || p > 64 || p < -64)
                    fail(ErrorCode::InvalidInput, "bad exponent in word token '" + token + "'");
                power = static_cast<int>(p);
            }
            w = w * FreeWord::generator(index_or_add(name), power);
        }
        return w;
    }

    std::string format(const FreeWord& w) const {
        std::string out;
        const auto& ls = w.letters();
        for (std::size_t i = 0; i < ls.size();) {
            std::size_t j = i;
            while (j < ls.size() && ls[j] == ls[i]) ++j;
            const int power = static_cast<int>(j - i) * (ls[i] > 0 ? 1 : -1);
            if (!out.empty()) out += ' ';
            out += names_.at(static_cast<std::size_t>(std::abs(ls[i]) - 1));
            if (power != 1) out += "^" + std::to_string(power);
            i = j;
        }
        return out;
    }

private:
    static bool valid_name(const std::string& s) {
        if (!std::isalpha(static_cast<unsigned char>(s.front())) && s.front() != '_') return false;
        return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    }
    std::vector<std::string> names_;
};

/// All reduced words of length <= max_length over `rank` generators, shortlex order.
inline std::vector<FreeWord> words_up_to(int rank, int max_length) {
    std::vector<FreeWord> out{FreeWord{}};
    std::size_t frontier = 0;
    for (int len = 1; len <= max_length && rank > 0; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = frontier; i < end; ++i)
            for (int g = 0; g < rank; ++g)
                for (int sign : {1, -1}) {
                    const int letter = sign * (g + 1);
                    const auto& base = out[i].letters();
                    if (!base.empty() && base.back() == -letter) continue;
                    auto letters = base;
                    letters.push_back(letter);
                    out.push_back(FreeWord::from_letters(letters));
                }
        frontier = end;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace chordtd
