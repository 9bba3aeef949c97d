#include "arbor/permutation.hpp"

#include "arbor/error.hpp"

#include <cctype>
#include <numeric>

namespace arbor {

namespace {

void validate_word(const std::vector<int>& word) {
    const int m = static_cast<int>(word.size());
    std::vector<char> seen(m + 1, 0);
    for (int letter : word) {
        if (letter < 1 || letter > m)
            throw InvalidPermutationError("letter " + std::to_string(letter) +
                                          " outside {1.." + std::to_string(m) + "}");
        if (seen[letter])
            throw InvalidPermutationError("repeated letter " + std::to_string(letter));
        seen[letter] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    validate_word(word_);
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> word;
    if (text.empty() || text == "e") return Permutation(std::move(word));
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string_view piece = text.substr(pos, comma - pos);
            if (piece.empty())
                throw ParseError("empty entry in permutation word");
            int value = 0;
            for (char c : piece) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("invalid character in permutation word: \"" +
                                     std::string(1, c) + "\"");
                value = value * 10 + (c - '0');
            }
            word.push_back(value);
            pos = comma + 1;
            if (comma == text.size()) break;
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("invalid character in permutation word: \"" +
                                 std::string(1, c) + "\"");
            word.push_back(c - '0');
        }
    }
    return Permutation(std::move(word));
}

Permutation Permutation::identity(int m) {
    std::vector<int> word(m);
    std::iota(word.begin(), word.end(), 1);
    return Permutation(std::move(word));
}

std::string Permutation::str() const {
    if (word_.empty()) return "e";
    const bool single_digits = size() <= 9;
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!single_digits && i > 0) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

}  // namespace arbor
