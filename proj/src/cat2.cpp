#include "ats/cat2.hpp"

#include <algorithm>
#include <functional>

namespace ats {

OneMorphism compose(const Algebra& a, const OneMorphism& f, const OneMorphism& g) {
    int n = a.inst.n;
    OneMorphism r;
    r.id_mult = f.id_mult * g.id_mult;
    r.f = IntMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.f.at(i, j) = f.id_mult * g.f.at(i, j) + f.f.at(i, j) * g.id_mult;
    IntMat h = cartan_matrix(a);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (f.f.at(i, j) == 0) continue;
            for (int k = 0; k < n; ++k) {
                long long w = h.at(j, k);
                if (w == 0) continue;
                for (int l = 0; l < n; ++l)
                    r.f.at(i, l) += f.f.at(i, j) * w * g.f.at(k, l);
            }
        }
    return r;
}

namespace {

std::vector<MorLabel> all_labels(int n) {
    std::vector<MorLabel> labels;
    labels.push_back({true, 0, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) labels.push_back({false, i, j});
    return labels;
}

// One-step preorders from composition multiplicities.  The 1-morphism set is
// closed under composition up to direct sums, so no closure iteration is
// needed.  K runs over the identity and all F_ab.
std::vector<std::vector<MorLabel>> classes_of(
    const std::vector<MorLabel>& labels,
    const std::function<bool(const MorLabel&, const MorLabel&)>& leq) {
    int m = static_cast<int>(labels.size());
    std::vector<std::vector<MorLabel>> out;
    std::vector<bool> used(m, false);
    for (int i = 0; i < m; ++i) {
        if (used[i]) continue;
        std::vector<MorLabel> cls;
        for (int j = i; j < m; ++j) {
            if (used[j]) continue;
            if (leq(labels[j], labels[i]) && leq(labels[i], labels[j])) {
                cls.push_back(labels[j]);
                used[j] = true;
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

CellStructure cells(const Algebra& a) {
    int n = a.inst.n;
    IntMat h = cartan_matrix(a);
    auto labels = all_labels(n);

    // supp(K o G) for indecomposables: 1 o G = G; F_ab o 1 = F_ab;
    // F_ab o F_ij = h(b,i) F_aj.
    auto left_leq = [&](const MorLabel& x, const MorLabel& g) {
        if (x == g) return true;  // K = identity
        if (g.ident || x.ident) return false;
        // x = F_aj with j = g.j, reachable iff some b has h(b, g.i) > 0.
        if (x.j != g.j) return false;
        for (int b = 1; b <= n; ++b)
            if (h.at(b - 1, g.i - 1) > 0) return true;
        return false;
    };
    auto right_leq = [&](const MorLabel& x, const MorLabel& g) {
        if (x == g) return true;
        if (g.ident || x.ident) return false;
        if (x.i != g.i) return false;
        for (int b = 1; b <= n; ++b)
            if (h.at(g.j - 1, b - 1) > 0) return true;
        return false;
    };
    auto two_leq = [&](const MorLabel& x, const MorLabel& g) {
        if (x == g) return true;
        if (g.ident || x.ident) return false;
        return true;  // any F reaches any F: h has positive diagonal
    };

    CellStructure cs;
    cs.left_cells = classes_of(labels, left_leq);
    cs.right_cells = classes_of(labels, right_leq);
    cs.two_sided_cells = classes_of(labels, two_leq);
    return cs;
}

std::vector<std::vector<IntMat>> cell_rep_matrices(const Algebra& a) {
    int n = a.inst.n;
    IntMat h = cartan_matrix(a);
    std::vector<std::vector<IntMat>> out(n, std::vector<IntMat>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            IntMat m(n, n);
            for (int t = 0; t < n; ++t) m.at(i, t) = h.at(k, t);
            out[i][k] = std::move(m);
        }
    return out;
}

CandidateRep cell_rep_candidate(const Algebra& a) {
    int n = a.inst.n;
    CandidateRep rep;
    rep.r = n;
    rep.cartanB = cartan_matrix(a);
    rep.m.assign(n, std::vector<IntMat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat e(n, n);
            e.at(i, j) = 1;
            rep.m[i][j] = std::move(e);
        }
    return rep;
}

IntMat rep_matrix(const CandidateRep& rep, int i, int j) {
    return rep.m[i][j] * rep.cartanB;
}

IntMat matrix_of(const Algebra& a, const OneMorphism& h, const CandidateRep& rep) {
    int n = a.inst.n;
    IntMat out = IntMat::identity(rep.r).scaled(h.id_mult);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (h.f.at(i, j) == 0) continue;
            out = out + rep_matrix(rep, i, j).scaled(h.f.at(i, j));
        }
    return out;
}

}  // namespace ats
