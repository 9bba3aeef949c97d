#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace arbor {

// Address of a node inside a binary tree: the sequence of left/right steps
// from the root, stored as a string over {'L','R'}.  The empty sequence is
// the root.
class NodeAddress {
public:
    NodeAddress() = default;
    explicit NodeAddress(std::string_view path);

    static NodeAddress root() { return NodeAddress(); }

    NodeAddress child(char side) const;
    NodeAddress left() const { return child('L'); }
    NodeAddress right() const { return child('R'); }
    NodeAddress parent() const;

    bool is_root() const { return path_.empty(); }
    int depth() const { return static_cast<int>(path_.size()); }
    const std::string& path() const { return path_; }

    // "root" for the empty address, the raw path otherwise.
    std::string display() const;

    auto operator<=>(const NodeAddress&) const = default;

private:
    std::string path_;
};

}  // namespace arbor
