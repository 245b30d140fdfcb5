#include "da/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace da {

std::string family_name(Family f) {
    switch (f) {
        case Family::partition: return "partition";
        case Family::half: return "half";
        case Family::brauer: return "brauer";
        case Family::walled: return "walled";
        case Family::symmetric: return "symmetric";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "partition") return Family::partition;
    if (s == "half") return Family::half;
    if (s == "brauer") return Family::brauer;
    if (s == "walled") return Family::walled;
    if (s == "symmetric") return Family::symmetric;
    throw std::invalid_argument("unknown family: " + s);
}

std::string AlgebraId::str() const {
    std::ostringstream os;
    switch (fam) {
        case Family::partition: os << "P_" << n; break;
        case Family::half: os << "P_" << n << "-1/2"; break;
        case Family::brauer: os << "B_" << n; break;
        case Family::walled: os << "B_" << r << "," << s; break;
        case Family::symmetric: os << "S_" << n; break;
    }
    return os.str();
}

std::string Diagram::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << ",";
        os << "{";
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) os << ",";
            os << blocks[b][i];
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> canonical_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

std::vector<std::vector<int>> blocks_from_uf(UnionFind& uf, const std::vector<int>& vertices,
                                             const std::vector<int>& relabel) {
    // vertices: uf indices to keep; relabel: uf index -> output vertex label.
    std::vector<std::vector<int>> grouped;
    std::vector<int> root_slot(uf.parent.size(), -1);
    for (int v : vertices) {
        int r = uf.find(v);
        if (root_slot[r] < 0) {
            root_slot[r] = (int)grouped.size();
            grouped.emplace_back();
        }
        grouped[root_slot[r]].push_back(relabel[v]);
    }
    return canonical_blocks(std::move(grouped));
}

bool on_left(const Diagram& d, int v) {
    int col = v <= d.n ? v : v - d.n;
    return col <= d.r;
}

}  // namespace

bool family_constraint_ok(const Diagram& d, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    switch (d.fam) {
        case Family::partition:
            return true;
        case Family::half: {
            for (const auto& b : d.blocks) {
                bool has_top = std::find(b.begin(), b.end(), d.n) != b.end();
                bool has_bot = std::find(b.begin(), b.end(), 2 * d.n) != b.end();
                if (has_top || has_bot) {
                    if (has_top && has_bot) return true;
                    return fail("half family: last column must be vertically connected");
                }
            }
            return fail("half family: last column missing");
        }
        case Family::brauer:
            for (const auto& b : d.blocks)
                if (b.size() != 2) return fail("brauer family: block of size != 2");
            return true;
        case Family::walled: {
            if (d.r + d.s != d.n) return fail("walled family: wall does not match n");
            for (const auto& b : d.blocks) {
                if (b.size() != 2) return fail("walled family: block of size != 2");
                bool same_side = on_left(d, b[0]) == on_left(d, b[1]);
                bool same_row = (b[0] <= d.n) == (b[1] <= d.n);
                if (same_side && same_row) return fail("walled family: same-side block in one row");
                if (!same_side && !same_row)
                    return fail("walled family: cross-wall block must stay in one row");
            }
            return true;
        }
        case Family::symmetric:
            for (const auto& b : d.blocks) {
                if (b.size() != 2) return fail("symmetric family: block of size != 2");
                if ((b[0] <= d.n) == (b[1] <= d.n))
                    return fail("symmetric family: block must pair top with bottom");
            }
            return true;
    }
    return true;
}

Diagram make_diagram(const AlgebraId& id, std::vector<std::vector<int>> blocks) {
    Diagram d;
    d.fam = id.fam;
    d.n = id.n;
    d.r = id.r;
    d.s = id.s;
    std::vector<int> seen(2 * id.n + 1, 0);
    int total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("make_diagram: empty block");
        for (int v : b) {
            if (v < 1 || v > 2 * id.n) throw std::invalid_argument("make_diagram: vertex out of range");
            if (seen[v]++) throw std::invalid_argument("make_diagram: repeated vertex");
            ++total;
        }
    }
    if (total != 2 * id.n) throw std::invalid_argument("make_diagram: vertices not covered");
    d.blocks = canonical_blocks(std::move(blocks));
    std::string why;
    if (!family_constraint_ok(d, &why)) throw std::invalid_argument("make_diagram: " + why);
    return d;
}

CompositionResult compose(const Diagram& a, const Diagram& b) {
    if (a.n != b.n || a.fam != b.fam || a.r != b.r || a.s != b.s)
        throw std::invalid_argument("compose: mismatched diagrams");
    int n = a.n;
    // Index space: 0..n-1 final top, n..2n-1 middle, 2n..3n-1 final bottom.
    UnionFind uf(3 * n);
    auto idx_a = [&](int v) { return v <= n ? v - 1 : v - 1; };          // a: top->0.., bottom->n..
    auto idx_b = [&](int v) { return v <= n ? n + v - 1 : 2 * n + v - n - 1; };  // b: top->middle
    for (const auto& blk : a.blocks)
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(idx_a(blk[0]), uf.find(idx_a(blk[i])));
    for (const auto& blk : b.blocks)
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(idx_b(blk[0]), uf.find(idx_b(blk[i])));

    std::vector<int> keep;
    std::vector<int> relabel(3 * n, 0);
    for (int i = 0; i < n; ++i) {
        keep.push_back(i);
        relabel[i] = i + 1;
    }
    for (int i = 0; i < n; ++i) {
        keep.push_back(2 * n + i);
        relabel[2 * n + i] = n + i + 1;
    }

    std::vector<char> root_touches_boundary(3 * n, 0);
    for (int v : keep) root_touches_boundary[uf.find(v)] = 1;
    int removed = 0;
    for (int i = n; i < 2 * n; ++i)
        if (uf.find(i) == i && !root_touches_boundary[i]) ++removed;

    CompositionResult res;
    res.diagram.fam = a.fam;
    res.diagram.n = n;
    res.diagram.r = a.r;
    res.diagram.s = a.s;
    res.diagram.blocks = blocks_from_uf(uf, keep, relabel);
    res.removed_components = removed;
    return res;
}

int cc(const Diagram& d) { return (int)d.blocks.size(); }

int propagating_number(const Diagram& d) {
    int pn = 0;
    for (const auto& b : d.blocks) {
        bool has_top = b.front() <= d.n;
        bool has_bot = b.back() > d.n;
        if (!(has_top && has_bot)) continue;
        if (d.fam == Family::half) {
            // The block joining the last column's two vertices is not counted.
            if (std::find(b.begin(), b.end(), d.n) != b.end()) continue;
        }
        ++pn;
    }
    return pn;
}

Diagram join(const Diagram& a, const Diagram& b) {
    if (a.n != b.n) throw std::invalid_argument("join: mismatched n");
    int n = a.n;
    UnionFind uf(2 * n);
    for (const auto& blk : a.blocks)
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0] - 1, blk[i] - 1);
    for (const auto& blk : b.blocks)
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0] - 1, blk[i] - 1);
    std::vector<int> keep(2 * n), relabel(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        keep[i] = i;
        relabel[i] = i + 1;
    }
    Diagram d;
    d.fam = Family::partition;  // join of partitions is a plain partition
    d.n = n;
    d.blocks = blocks_from_uf(uf, keep, relabel);
    return d;
}

Diagram involution(const Diagram& d) {
    std::vector<std::vector<int>> blocks = d.blocks;
    for (auto& b : blocks)
        for (auto& v : b) v = v <= d.n ? v + d.n : v - d.n;
    Diagram r = d;
    r.blocks = canonical_blocks(std::move(blocks));
    return r;
}

Diagram identity_diagram(const AlgebraId& id) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= id.n; ++i) blocks.push_back({i, id.n + i});
    return make_diagram(id, std::move(blocks));
}

Diagram generator(const AlgebraId& id, GenKind kind, int i) {
    int n = id.n;
    auto strand_blocks = [&](std::vector<int> skip) {
        std::vector<std::vector<int>> blocks;
        for (int c = 1; c <= n; ++c)
            if (std::find(skip.begin(), skip.end(), c) == skip.end()) blocks.push_back({c, n + c});
        return blocks;
    };
    switch (kind) {
        case GenKind::s: {
            if (i < 1 || i >= n) throw std::invalid_argument("generator s_i: index out of range");
            auto blocks = strand_blocks({i, i + 1});
            blocks.push_back({i, n + i + 1});
            blocks.push_back({i + 1, n + i});
            return make_diagram(id, std::move(blocks));
        }
        case GenKind::p: {
            if (i < 1 || i > n) throw std::invalid_argument("generator p_i: index out of range");
            auto blocks = strand_blocks({i});
            blocks.push_back({i});
            blocks.push_back({n + i});
            return make_diagram(id, std::move(blocks));
        }
        case GenKind::b: {
            if (i < 1 || i >= n) throw std::invalid_argument("generator b_i: index out of range");
            auto blocks = strand_blocks({i, i + 1});
            blocks.push_back({i, i + 1, n + i, n + i + 1});
            return make_diagram(id, std::move(blocks));
        }
        case GenKind::e: {
            if (i < 1 || i >= n) throw std::invalid_argument("generator e_i: index out of range");
            auto blocks = strand_blocks({i, i + 1});
            blocks.push_back({i, i + 1});
            blocks.push_back({n + i, n + i + 1});
            return make_diagram(id, std::move(blocks));
        }
        case GenKind::f: {
            if (id.fam != Family::walled) throw std::invalid_argument("generator f_i needs a wall");
            if (i < 1 || i > id.r || id.s + i > n)
                throw std::invalid_argument("generator f_i: index out of range");
            int j = id.s + i;
            auto blocks = strand_blocks({i, j});
            blocks.push_back({i, j});
            blocks.push_back({n + i, n + j});
            return make_diagram(id, std::move(blocks));
        }
    }
    throw std::invalid_argument("generator: bad kind");
}

namespace {

void enumerate_set_partitions(int m, const std::function<void(const std::vector<int>&)>& emit) {
    // Restricted growth strings over m symbols.
    std::vector<int> rgs(m, 0), maxv(m, 0);
    while (true) {
        emit(rgs);
        int i = m - 1;
        for (; i > 0; --i) {
            if (rgs[i] <= maxv[i - 1]) break;
        }
        if (i == 0) return;
        ++rgs[i];
        for (int j = i + 1; j < m; ++j) rgs[j] = 0;
        for (int j = i; j < m; ++j) maxv[j] = std::max(maxv[j - 1], rgs[j]);
    }
}

void enumerate_matchings(std::vector<int>& pool, std::vector<std::pair<int, int>>& acc,
                         const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (pool.empty()) {
        emit(acc);
        return;
    }
    int a = pool.front();
    for (size_t k = 1; k < pool.size(); ++k) {
        int b = pool[k];
        std::vector<int> rest;
        for (size_t j = 1; j < pool.size(); ++j)
            if (j != k) rest.push_back(pool[j]);
        acc.emplace_back(a, b);
        enumerate_matchings(rest, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Diagram> enumerate_basis(const AlgebraId& id, long cap) {
    std::vector<Diagram> out;
    int n = id.n;
    auto push = [&](std::vector<std::vector<int>> blocks) {
        Diagram d;
        d.fam = id.fam;
        d.n = n;
        d.r = id.r;
        d.s = id.s;
        d.blocks = canonical_blocks(std::move(blocks));
        if (!family_constraint_ok(d)) return;
        if ((long)out.size() >= cap) throw std::runtime_error("enumerate_basis: cap exceeded");
        out.push_back(std::move(d));
    };

    switch (id.fam) {
        case Family::partition:
        case Family::half: {
            enumerate_set_partitions(2 * n, [&](const std::vector<int>& rgs) {
                int parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
                std::vector<std::vector<int>> blocks(parts);
                for (int v = 0; v < 2 * n; ++v) blocks[rgs[v]].push_back(v + 1);
                push(std::move(blocks));
            });
            break;
        }
        case Family::brauer:
        case Family::walled:
        case Family::symmetric: {
            std::vector<int> pool(2 * n);
            std::iota(pool.begin(), pool.end(), 1);
            std::vector<std::pair<int, int>> acc;
            enumerate_matchings(pool, acc, [&](const std::vector<std::pair<int, int>>& pairs) {
                std::vector<std::vector<int>> blocks;
                for (auto [a, b] : pairs) blocks.push_back({a, b});
                push(std::move(blocks));
            });
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram mirror(const Diagram& d) {
    std::vector<std::vector<int>> blocks = d.blocks;
    for (auto& b : blocks)
        for (auto& v : b) {
            int col = v <= d.n ? v : v - d.n;
            int flipped = d.n + 1 - col;
            v = v <= d.n ? flipped : d.n + flipped;
        }
    Diagram m = d;
    std::swap(m.r, m.s);
    m.blocks = canonical_blocks(std::move(blocks));
    return m;
}

AlgebraId mirror(const AlgebraId& id) {
    AlgebraId m = id;
    std::swap(m.r, m.s);
    return m;
}

std::string diagram_json(const Diagram& d) {
    nlohmann::json j;
    j["family"] = family_name(d.fam);
    j["n"] = d.n;
    if (d.fam == Family::walled) j["wall"] = {d.r, d.s};
    j["blocks"] = d.blocks;
    return j.dump();
}

Diagram diagram_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    AlgebraId id;
    id.fam = family_from_name(j.at("family").get<std::string>());
    id.n = j.at("n").get<int>();
    if (j.contains("wall")) {
        id.r = j["wall"][0].get<int>();
        id.s = j["wall"][1].get<int>();
    }
    return make_diagram(id, j.at("blocks").get<std::vector<std::vector<int>>>());
}

}  // namespace da
