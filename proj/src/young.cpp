#include "da/young.hpp"

#include <algorithm>
#include <sstream>

namespace da {

std::string YoungDiagram::str() const {
    if (parts.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

std::vector<Box> addable_boxes(const YoungDiagram& y) {
    std::vector<Box> out;
    int r = y.rows();
    for (int i = 0; i <= r; ++i) {
        int len = y.row(i);
        int above = i == 0 ? -1 : y.row(i - 1);
        if (i == 0 || len < above) out.push_back({i, len});
    }
    return out;
}

std::vector<Box> removable_boxes(const YoungDiagram& y) {
    std::vector<Box> out;
    int r = y.rows();
    for (int i = 0; i < r; ++i) {
        int len = y.row(i);
        int below = y.row(i + 1);
        if (len > below) out.push_back({i, len - 1});
    }
    return out;
}

YoungDiagram add_box(const YoungDiagram& y, const Box& b) {
    YoungDiagram z = y;
    if (b.row == z.rows())
        z.parts.push_back(1);
    else
        z.parts[b.row] += 1;
    return z;
}

YoungDiagram remove_box(const YoungDiagram& y, const Box& b) {
    YoungDiagram z = y;
    z.parts[b.row] -= 1;
    if (z.parts[b.row] == 0) z.parts.erase(z.parts.begin() + b.row);
    return z;
}

long hook_length(const YoungDiagram& y, int i, int j) {
    long arm = y.row(i) - j - 1;
    long leg = 0;
    for (int k = i + 1; k < y.rows(); ++k)
        if (y.row(k) > j) ++leg;
    return arm + leg + 1;
}

mpz_class hook_dim(const YoungDiagram& y) {
    mpz_class denom = 1;
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.row(i); ++j) denom *= hook_length(y, i, j);
    return factorial(y.boxes()) / denom;
}

namespace {

void gen_parts(int remaining, int maxpart, std::vector<int>& acc,
               std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen_parts(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int k) {
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    gen_parts(k, k == 0 ? 1 : k, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace da
