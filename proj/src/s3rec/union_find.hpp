#pragma once

#include <numeric>
#include <vector>

namespace s3rec {

class UnionFind {
public:
    explicit UnionFind(int n = 0) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    // Dense class labels 0..k-1 in order of first appearance; returns k.
    int labels(std::vector<int>& out)
    {
        const int n = static_cast<int>(parent_.size());
        out.assign(n, -1);
        std::vector<int> root_label(n, -1);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            int r = find(i);
            if (root_label[r] < 0) root_label[r] = next++;
            out[i] = root_label[r];
        }
        return next;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

// Union-find that also tracks a Z/2 relation between each element and its
// root. unite() returns false when the requested parity contradicts the
// existing one.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n = 0) : parent_(n), parity_(n, 0)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // Root of x; `parity` receives the parity of x relative to the root.
    int find(int x, int& parity)
    {
        int p = 0;
        int r = x;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // path compression
        int acc = p;
        while (parent_[x] != x) {
            int next = parent_[x];
            int old = parity_[x];
            parent_[x] = r;
            parity_[x] = acc;
            acc ^= old;
            x = next;
        }
        parity = p;
        return r;
    }

    bool unite(int a, int b, int relative_parity)
    {
        int pa = 0, pb = 0;
        int ra = find(a, pa);
        int rb = find(b, pb);
        if (ra == rb) return (pa ^ pb) == relative_parity;
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ relative_parity;
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

}  // namespace s3rec
