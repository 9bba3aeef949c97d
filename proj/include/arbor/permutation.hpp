#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace arbor {

// A permutation of {1..m} written as a word; m = 0 is the empty word.
class Permutation {
public:
    Permutation() = default;  // empty word
    explicit Permutation(std::vector<int> word);

    // Accepts a run of digits ("213") or comma-separated integers
    // ("2,13,1,..."), the latter required once letters reach 10.
    static Permutation parse(std::string_view text);
    static Permutation identity(int m);

    const std::vector<int>& word() const& { return word_; }
    std::vector<int> word() && { return std::move(word_); }
    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }

    // Digit run when all letters are single-digit, comma-separated
    // otherwise; the empty word prints as "e".
    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.word_ == b.word_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.word_ < b.word_;
    }

private:
    std::vector<int> word_;
};

}  // namespace arbor
