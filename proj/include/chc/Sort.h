#pragma once

#include <cstdint>
#include <string>

namespace chc {

enum class SortKind { Bool, Int, Real, BitVec, Array };

/// Interned sort handle. Equality is pointer equality; two sorts built the
/// same way are the same object.
class Sort {
public:
    struct Node {
        SortKind kind;
        unsigned width = 0;       // BitVec
        const Node* index = nullptr; // Array
        const Node* elem = nullptr;  // Array
    };

    Sort() : node_(nullptr) {}

    static Sort boolSort();
    static Sort intSort();
    static Sort realSort();
    static Sort bitVec(unsigned width); // width >= 1
    static Sort array(Sort index, Sort elem);

    SortKind kind() const { return node_->kind; }
    bool isBool() const { return node_->kind == SortKind::Bool; }
    bool isInt() const { return node_->kind == SortKind::Int; }
    bool isReal() const { return node_->kind == SortKind::Real; }
    bool isBitVec() const { return node_->kind == SortKind::BitVec; }
    bool isArray() const { return node_->kind == SortKind::Array; }
    bool isArith() const { return isInt() || isReal(); }

    unsigned bvWidth() const;
    Sort arrayIndex() const;
    Sort arrayElem() const;

    bool valid() const { return node_ != nullptr; }
    std::string str() const; // SMT-LIB concrete syntax

    bool operator==(const Sort& o) const { return node_ == o.node_; }
    bool operator!=(const Sort& o) const { return node_ != o.node_; }
    bool operator<(const Sort& o) const { return node_ < o.node_; }

    const Node* raw() const { return node_; }

private:
    explicit Sort(const Node* n) : node_(n) {}
    const Node* node_;
};

} // namespace chc
