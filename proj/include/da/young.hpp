#pragma once

#include <string>
#include <utility>
#include <vector>

#include "da/rational.hpp"

namespace da {

// An integer partition with weakly decreasing positive parts. Boxes are
// addressed (row, col), 0-based; the content of box (i, j) is j - i.
struct YoungDiagram {
    std::vector<int> parts;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> p) : parts(std::move(p)) {}

    int boxes() const {
        int t = 0;
        for (int p : parts) t += p;
        return t;
    }
    int rows() const { return (int)parts.size(); }
    int row(int i) const { return i < rows() ? parts[i] : 0; }
    bool empty() const { return parts.empty(); }

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.parts == b.parts;
    }
    friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) {
        return !(a == b);
    }
    // Order by box count, then lexicographically on parts.
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
        if (a.boxes() != b.boxes()) return a.boxes() < b.boxes();
        return a.parts < b.parts;
    }

    std::string str() const;
};

struct Box {
    int row, col;  // 0-based
    int content() const { return col - row; }
    friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
};

std::vector<Box> addable_boxes(const YoungDiagram& y);
std::vector<Box> removable_boxes(const YoungDiagram& y);
YoungDiagram add_box(const YoungDiagram& y, const Box& b);
YoungDiagram remove_box(const YoungDiagram& y, const Box& b);

long hook_length(const YoungDiagram& y, int i, int j);

// Number of standard Young tableaux of shape y.
mpz_class hook_dim(const YoungDiagram& y);

// All partitions of k.
std::vector<YoungDiagram> partitions_of(int k);

}  // namespace da
