#include "ats/modules.hpp"

#include <algorithm>
#include <random>

namespace ats {

namespace {

std::vector<int> left_projective_basis(const Algebra& a, int i) {
    std::vector<int> idx;  // global basis indices of Ae_i: paths starting at i
    for (int b = 0; b < a.dim(); ++b)
        if (a.basis[b].src == i) idx.push_back(b);
    return idx;
}

std::vector<int> right_projective_basis(const Algebra& a, int i) {
    std::vector<int> idx;  // e_iA: paths ending at i
    for (int b = 0; b < a.dim(); ++b)
        if (a.basis[b].tgt == i) idx.push_back(b);
    return idx;
}

}  // namespace

Module projective_module(const Algebra& a, int i) {
    Module m;
    m.n = a.inst.n;
    auto idx = left_projective_basis(a, i);
    std::vector<int> pos(a.dim(), -1);
    for (size_t p = 0; p < idx.size(); ++p) {
        m.grade.push_back(a.basis[idx[p]].tgt);
        pos[idx[p]] = static_cast<int>(p);
    }
    int d = m.dim();
    for (const auto& [s, t] : a.quiver.arrows) {
        IntMat mat(d, d);
        int ar = a.arrow_index(s, t);
        for (int c = 0; c < d; ++c) {
            int prod = a.mult[ar][idx[c]];
            if (prod >= 0) mat.at(pos[prod], c) = 1;
        }
        m.action[{s, t}] = std::move(mat);
    }
    return m;
}

Module injective_module(const Algebra& a, int i) {
    // Dual of the right projective e_iA.  Dual basis vector b* sits at
    // grade source(b); arrow u->w sends b* to the sum of c* with c.a = b.
    Module m;
    m.n = a.inst.n;
    auto idx = right_projective_basis(a, i);
    std::vector<int> pos(a.dim(), -1);
    for (size_t p = 0; p < idx.size(); ++p) {
        m.grade.push_back(a.basis[idx[p]].src);
        pos[idx[p]] = static_cast<int>(p);
    }
    int d = m.dim();
    for (const auto& [s, t] : a.quiver.arrows) {
        IntMat mat(d, d);
        int ar = a.arrow_index(s, t);
        for (int c = 0; c < d; ++c) {
            int prod = a.mult[idx[c]][ar];
            if (prod >= 0) mat.at(c, pos[prod]) = 1;
        }
        m.action[{s, t}] = std::move(mat);
    }
    return m;
}

Module simple_module(const Algebra& a, int i) {
    Module m;
    m.n = a.inst.n;
    m.grade.push_back(i);
    for (const auto& ar : a.quiver.arrows) m.action[ar] = IntMat(1, 1);
    return m;
}

bool relations_annihilate(const Algebra& a, const Module& m) {
    int d = m.dim();
    // Grading respected.
    for (const auto& [arrow, mat] : m.action)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (mat.at(r, c) != 0 &&
                    (m.grade[c] != arrow.first || m.grade[r] != arrow.second))
                    return false;
    const auto& inst = a.inst;
    auto act = [&](int s, int t) -> const IntMat& { return m.action.at({s, t}); };
    // Composites through three distinct vertices vanish.
    for (int v2 = 1; v2 <= inst.n; ++v2)
        for (int v1 : inst.adj[v2])
            for (int v3 : inst.adj[v2]) {
                if (v1 == v3) continue;
                if (!(act(v2, v3) * act(v1, v2)).is_zero()) return false;
            }
    // All loops at a vertex agree; loops at special leaves vanish.
    for (int v = 1; v <= inst.n; ++v) {
        IntMat loop;
        bool have = false;
        for (int u : inst.adj[v]) {
            IntMat l = act(u, v) * act(v, u);
            if (inst.is_special(v)) {
                if (!l.is_zero()) return false;
            } else if (!have) {
                loop = std::move(l);
                have = true;
            } else if (l != loop) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Graded subspace: one echelonized row basis per grade.  Rows live in the
// full coordinate space but are supported on a single grade.
struct Graded {
    std::map<int, RatMat> comp;

    int dim_at(int v) const {
        auto it = comp.find(v);
        return it == comp.end() ? 0 : it->second.rows;
    }
    int total() const {
        int t = 0;
        for (const auto& [v, m] : comp) t += m.rows;
        return t;
    }
};

Graded span_rows(const Module& mod, const std::vector<std::pair<int, RatMat>>& rows) {
    // rows: (grade, 1 x dim row vector)
    std::map<int, std::vector<const RatMat*>> by_grade;
    for (const auto& [g, r] : rows) by_grade[g].push_back(&r);
    Graded out;
    for (auto& [g, vecs] : by_grade) {
        RatMat stack(static_cast<int>(vecs.size()), mod.dim());
        for (size_t i = 0; i < vecs.size(); ++i)
            for (int c = 0; c < mod.dim(); ++c) stack.at(static_cast<int>(i), c) = vecs[i]->at(0, c);
        int rank = echelonize(stack);
        if (rank == 0) continue;
        RatMat trimmed(rank, mod.dim());
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < mod.dim(); ++c) trimmed.at(r, c) = stack.at(r, c);
        out.comp[g] = std::move(trimmed);
    }
    return out;
}

Graded radical_of(const Module& mod, const Graded& sub) {
    std::vector<std::pair<int, RatMat>> images;
    for (const auto& [arrow, mat] : mod.action) {
        auto it = sub.comp.find(arrow.first);
        if (it == sub.comp.end()) continue;
        RatMat img = it->second * to_rat(mat).transposed();  // rows times M^T
        for (int r = 0; r < img.rows; ++r) {
            RatMat row(1, img.cols);
            for (int c = 0; c < img.cols; ++c) row.at(0, c) = img.at(r, c);
            images.push_back({arrow.second, std::move(row)});
        }
    }
    return span_rows(mod, images);
}

}  // namespace

LoewyReport loewy_report(const Module& m) {
    LoewyReport rep;
    // Start from the full space.
    std::vector<std::pair<int, RatMat>> units;
    for (int b = 0; b < m.dim(); ++b) {
        RatMat row(1, m.dim());
        row.at(0, b) = 1;
        units.push_back({m.grade[b], std::move(row)});
    }
    Graded cur = span_rows(m, units);
    while (cur.total() > 0) {
        Graded next = radical_of(m, cur);
        std::map<int, int> layer;
        for (int v = 1; v <= m.n; ++v) {
            int d = cur.dim_at(v) - next.dim_at(v);
            if (d > 0) layer[v] = d;
        }
        rep.layers.push_back(std::move(layer));
        cur = std::move(next);
    }
    rep.loewy_length = static_cast<int>(rep.layers.size());
    if (!rep.layers.empty()) rep.top = rep.layers.front();

    // Socle: per grade, joint kernel of all arrows leaving that grade.
    auto dv = m.dim_vector();
    for (int v = 1; v <= m.n; ++v) {
        if (dv[v] == 0) continue;
        std::vector<int> cols;
        for (int b = 0; b < m.dim(); ++b)
            if (m.grade[b] == v) cols.push_back(b);
        std::vector<const IntMat*> mats;
        for (const auto& [arrow, mat] : m.action)
            if (arrow.first == v) mats.push_back(&mat);
        RatMat sys(static_cast<int>(mats.size()) * m.dim(), static_cast<int>(cols.size()));
        int row = 0;
        for (const IntMat* mat : mats) {
            for (int r = 0; r < m.dim(); ++r, ++row)
                for (size_t ci = 0; ci < cols.size(); ++ci)
                    sys.at(row, static_cast<int>(ci)) = static_cast<long>(mat->at(r, cols[ci]));
        }
        int nullity = static_cast<int>(cols.size()) - (mats.empty() ? 0 : rank_of(sys));
        if (nullity > 0) rep.socle[v] = nullity;
    }
    return rep;
}

HomSpace hom_space(const Module& m, const Module& n) {
    // Unknowns: entries phi[i][j] with grade_N(i) == grade_M(j).
    int dm = m.dim(), dn = n.dim();
    std::vector<std::pair<int, int>> unk;
    std::vector<std::vector<int>> unk_at(dn, std::vector<int>(dm, -1));
    for (int i = 0; i < dn; ++i)
        for (int j = 0; j < dm; ++j)
            if (n.grade[i] == m.grade[j]) {
                unk_at[i][j] = static_cast<int>(unk.size());
                unk.push_back({i, j});
            }
    int u = static_cast<int>(unk.size());
    int neq = static_cast<int>(m.action.size()) * dn * dm;
    RatMat sys(neq, u);
    int row = 0;
    for (const auto& [arrow, am] : m.action) {
        const IntMat& an = n.action.at(arrow);
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j, ++row) {
                // (phi * A_M)_{ij} - (A_N * phi)_{ij} = 0
                for (int k = 0; k < dm; ++k)
                    if (am.at(k, j) != 0 && unk_at[i][k] >= 0)
                        sys.at(row, unk_at[i][k]) += static_cast<long>(am.at(k, j));
                for (int k = 0; k < dn; ++k)
                    if (an.at(i, k) != 0 && unk_at[k][j] >= 0)
                        sys.at(row, unk_at[k][j]) -= static_cast<long>(an.at(i, k));
            }
    }
    RatMat null = nullspace(sys);
    HomSpace hs;
    hs.dim = null.rows;
    for (int r = 0; r < null.rows; ++r) {
        RatMat phi(dn, dm);
        for (int c = 0; c < u; ++c) phi.at(unk[c].first, unk[c].second) = null.at(r, c);
        hs.basis.push_back(std::move(phi));
    }
    return hs;
}

Tri is_isomorphic(const Module& m, const Module& n) {
    if (m.dim() != n.dim() || m.n != n.n) return Tri::No;
    if (m.dim_vector() != n.dim_vector()) return Tri::No;
    LoewyReport lm = loewy_report(m), ln = loewy_report(n);
    if (lm.layers != ln.layers || lm.socle != ln.socle || lm.top != ln.top) return Tri::No;
    if (m.dim() == 0) return Tri::Yes;

    HomSpace hs = hom_space(m, n);
    if (hs.dim == 0) return Tri::No;
    for (const auto& phi : hs.basis)
        if (is_invertible(phi)) return Tri::Yes;

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 64; ++trial) {
        RatMat phi(n.dim(), m.dim());
        for (const auto& b : hs.basis) phi = phi + b.scaled(Rat(coeff(rng)));
        if (is_invertible(phi)) return Tri::Yes;
    }
    if (hs.dim <= 3) {
        std::vector<int> c(hs.dim, -3);
        while (true) {
            RatMat phi(n.dim(), m.dim());
            for (int i = 0; i < hs.dim; ++i) phi = phi + hs.basis[i].scaled(Rat(c[i]));
            if (is_invertible(phi)) return Tri::Yes;
            int i = 0;
            while (i < hs.dim && c[i] == 3) c[i++] = -3;
            if (i == hs.dim) break;
            ++c[i];
        }
        // Exhausted the small-coefficient cube; invariants agree, so we
        // cannot honestly answer "no".
        return Tri::Inconclusive;
    }
    return Tri::Inconclusive;
}

Tri is_self_injective(const Algebra& a) {
    int n = a.inst.n;
    std::vector<Module> inj;
    for (int j = 1; j <= n; ++j) inj.push_back(injective_module(a, j));
    bool any_inconclusive = false;
    for (int i = 1; i <= n; ++i) {
        Module p = projective_module(a, i);
        bool found = false;
        bool inconclusive = false;
        for (int j = 0; j < n; ++j) {
            Tri t = is_isomorphic(p, inj[j]);
            if (t == Tri::Yes) { found = true; break; }
            if (t == Tri::Inconclusive) inconclusive = true;
        }
        if (!found) {
            if (inconclusive) any_inconclusive = true;
            else return Tri::No;
        }
    }
    return any_inconclusive ? Tri::Inconclusive : Tri::Yes;
}

int tensor_dim(const Algebra& a, int j, int k) {
    auto xs = right_projective_basis(a, j);  // e_jA
    auto ys = left_projective_basis(a, k);   // Ae_k
    int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
    std::vector<int> xpos(a.dim(), -1), ypos(a.dim(), -1);
    for (int p = 0; p < nx; ++p) xpos[xs[p]] = p;
    for (int p = 0; p < ny; ++p) ypos[ys[p]] = p;
    int ambient = nx * ny;
    std::vector<RatMat> rels;
    for (int xi = 0; xi < nx; ++xi)
        for (int yi = 0; yi < ny; ++yi)
            for (int b = 0; b < a.dim(); ++b) {
                int xa = a.mult[xs[xi]][b];  // x.a
                int ay = a.mult[b][ys[yi]];  // a.y
                RatMat row(1, ambient);
                if (xa >= 0) row.at(0, xpos[xa] * ny + yi) += 1;
                if (ay >= 0) row.at(0, xi * ny + ypos[ay]) -= 1;
                if (!row.is_zero()) rels.push_back(std::move(row));
            }
    RatMat sys(static_cast<int>(rels.size()), ambient);
    for (size_t r = 0; r < rels.size(); ++r)
        for (int c = 0; c < ambient; ++c) sys.at(static_cast<int>(r), c) = rels[r].at(0, c);
    return ambient - rank_of(sys);
}

}  // namespace ats
