#include "arbor/address.hpp"

#include "arbor/error.hpp"

namespace arbor {

NodeAddress::NodeAddress(std::string_view path) : path_(path) {
    for (char c : path_) {
        if (c != 'L' && c != 'R')
            throw ParseError("node address may only contain 'L' and 'R': \"" + path_ + "\"");
    }
}

NodeAddress NodeAddress::child(char side) const {
    if (side != 'L' && side != 'R') throw Error("child side must be 'L' or 'R'");
    NodeAddress result;
    result.path_ = path_ + side;
    return result;
}

NodeAddress NodeAddress::parent() const {
    if (is_root()) throw Error("the root address has no parent");
    NodeAddress result;
    result.path_ = path_.substr(0, path_.size() - 1);
    return result;
}

std::string NodeAddress::display() const { return is_root() ? "root" : path_; }

}  // namespace arbor
