#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace da {

enum class Family { partition, half, brauer, walled, symmetric };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Identifies one algebra in the toolkit: P_n(d), P_{n-1/2}(d), B_n(d),
// B_{r,s}(d) or C[S_n]. `n` is always the column count; for the half
// partition algebra P_{n-1/2}(d) that means `n` columns with the last one
// vertically connected.
struct AlgebraId {
    Family fam{Family::partition};
    int n{0};
    int r{0}, s{0};  // walled only, r + s == n

    friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
        return a.fam == b.fam && a.n == b.n && a.r == b.r && a.s == b.s;
    }
    friend bool operator<(const AlgebraId& a, const AlgebraId& b) {
        if (a.fam != b.fam) return a.fam < b.fam;
        if (a.n != b.n) return a.n < b.n;
        if (a.r != b.r) return a.r < b.r;
        return a.s < b.s;
    }
    std::string str() const;
};

// A set partition of the vertices 1..2n arranged in two rows of n columns.
// Vertex i <= n is column i of the top row; vertex n+j is column j of the
// bottom row. Blocks are kept canonical: each block ascending, blocks sorted
// by their minimum.
struct Diagram {
    Family fam{Family::partition};
    int n{0};
    int r{0}, s{0};
    std::vector<std::vector<int>> blocks;

    int top(int col) const { return col; }
    int bot(int col) const { return n + col; }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.fam == b.fam && a.n == b.n && a.r == b.r && a.s == b.s && a.blocks == b.blocks;
    }
    friend bool operator<(const Diagram& a, const Diagram& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.fam != b.fam) return a.fam < b.fam;
        if (a.r != b.r) return a.r < b.r;
        if (a.s != b.s) return a.s < b.s;
        return a.blocks < b.blocks;
    }
    std::string str() const;
};

struct CompositionResult {
    Diagram diagram;
    int removed_components{0};
};

// Validates the set partition and the family constraint, and canonicalizes.
// Throws std::invalid_argument on malformed input.
Diagram make_diagram(const AlgebraId& id, std::vector<std::vector<int>> blocks);

// Stacks a over b (a's bottom row glued to b's top row), contracts the middle
// row, and counts the removed interior components.
CompositionResult compose(const Diagram& a, const Diagram& b);

int cc(const Diagram& d);
int propagating_number(const Diagram& d);

// Finest common coarsening of the two partitions on the same vertex set.
Diagram join(const Diagram& a, const Diagram& b);

// Exchanges the two rows (vertex i <-> n+i).
Diagram involution(const Diagram& d);

enum class GenKind { s, p, b, e, f };

// The standard generator diagrams: swaps s_i, points p_i, bridges b_i,
// Brauer contractions e_i, and the walled contraction f_i between column i
// and column s+i.
Diagram generator(const AlgebraId& id, GenKind kind, int i);
Diagram identity_diagram(const AlgebraId& id);

// Complete duplicate-free diagram basis of the algebra. Throws if the count
// would exceed `cap`.
std::vector<Diagram> enumerate_basis(const AlgebraId& id, long cap = 100000);

// Left-right mirror (column j -> n+1-j); maps B_{r,s}(d) onto B_{s,r}(d).
Diagram mirror(const Diagram& d);
AlgebraId mirror(const AlgebraId& id);

bool family_constraint_ok(const Diagram& d, std::string* why = nullptr);

std::string diagram_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

}  // namespace da
