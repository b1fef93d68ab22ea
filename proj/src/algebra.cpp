#include "ats/algebra.hpp"

#include <algorithm>

namespace ats {

std::string BasisElement::label() const {
    switch (kind) {
        case BasisKind::Idem: return "e_" + std::to_string(src);
        case BasisKind::Arrow:
            return "a(" + std::to_string(src) + "->" + std::to_string(tgt) + ")";
        case BasisKind::Loop: return "c_" + std::to_string(src);
    }
    return "?";
}

int Algebra::arrow_index(int s, int t) const {
    for (int b = inst.n; b < static_cast<int>(basis.size()); ++b) {
        if (basis[b].kind != BasisKind::Arrow) break;
        if (basis[b].src == s && basis[b].tgt == t) return b;
    }
    return -1;
}

int Algebra::loop_index(int v) const {
    for (int b = dim() - 1; b >= 0; --b) {
        if (basis[b].kind != BasisKind::Loop) break;
        if (basis[b].src == v) return b;
    }
    return -1;
}

namespace {

// Product of two basis paths under the defining relations.  Apply q first.
int basis_product(const Algebra& a, int p, int q) {
    const BasisElement& x = a.basis[p];
    const BasisElement& y = a.basis[q];
    if (x.src != y.tgt) return -1;
    if (x.kind == BasisKind::Idem) return q;
    if (y.kind == BasisKind::Idem) return p;
    // Both non-trivial; any composite of path length >= 3 vanishes.
    if (x.path_len() + y.path_len() >= 3) return -1;
    // Arrow * arrow: path y.src -> y.tgt -> x.tgt.
    if (x.tgt != y.src) return -1;  // three distinct vertices: first relation
    // Back-and-forth at y.src: loop there, dead if special.
    return a.loop_index(y.src);
}

}  // namespace

Algebra build_algebra(const ValidatedInstance& inst) {
    Algebra a;
    a.inst = inst;
    a.quiver = doubled_quiver(inst);
    for (int v = 1; v <= inst.n; ++v)
        a.basis.push_back({BasisKind::Idem, v, v});
    for (const auto& [s, t] : a.quiver.arrows)
        a.basis.push_back({BasisKind::Arrow, s, t});
    for (int v = 1; v <= inst.n; ++v)
        if (!inst.is_special(v)) a.basis.push_back({BasisKind::Loop, v, v});

    int d = a.dim();
    a.mult.assign(d, std::vector<int>(d, -1));
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) a.mult[p][q] = basis_product(a, p, q);
    return a;
}

LinComb normal_form(const Algebra& a, const std::vector<std::pair<int, int>>& word,
                    int base_vertex) {
    if (word.empty()) {
        if (base_vertex < 1 || base_vertex > a.inst.n)
            throw NonComposable("empty word needs a base vertex in 1..n");
        return LinComb::single(a.idem_index(base_vertex));
    }
    int cur = -1;
    for (const auto& [s, t] : word) {
        int arr = a.arrow_index(s, t);
        if (arr < 0) throw NonComposable("no arrow " + std::to_string(s) + "->" + std::to_string(t));
        if (cur < 0) {
            cur = arr;
            continue;
        }
        if (a.basis[cur].tgt != s)
            throw NonComposable("word is not a path at arrow " + std::to_string(s) + "->" +
                                std::to_string(t));
        cur = a.mult[arr][cur];  // next arrow acts after what we have so far
        if (cur < 0) return LinComb{};
    }
    return LinComb::single(cur);
}

LinComb multiply(const Algebra& a, const LinComb& x, const LinComb& y) {
    LinComb r;
    for (const auto& [p, cx] : x.coeff)
        for (const auto& [q, cy] : y.coeff) {
            int b = a.mult[p][q];
            if (b < 0) continue;
            long long& c = r.coeff[b];
            c += cx * cy;
            if (c == 0) r.coeff.erase(b);
        }
    return r;
}

int hom_dim(const Algebra& a, int l, int k) {
    int count = 0;
    for (const auto& b : a.basis)
        if (b.src == k && b.tgt == l) ++count;
    return count;
}

IntMat cartan_matrix(const Algebra& a) {
    int n = a.inst.n;
    IntMat c(n, n);
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) c.at(s - 1, t - 1) = hom_dim(a, s, t);
    return c;
}

}  // namespace ats
