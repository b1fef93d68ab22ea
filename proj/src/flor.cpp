#include "ats/flor.hpp"

#include <algorithm>
#include <numeric>

namespace ats {

std::optional<Rat> quasi_idempotent_scalar(const RatMat& m) {
    if (m.rows != m.cols) return std::nullopt;
    if (m.is_zero()) return Rat(1);
    RatMat sq = m * m;
    Rat lambda;
    bool found = false;
    for (size_t i = 0; i < m.a.size() && !found; ++i)
        if (m.a[i] != 0) {
            lambda = sq.a[i] / m.a[i];
            found = true;
        }
    if (lambda <= 0) return std::nullopt;
    if (sq != m.scaled(lambda)) return std::nullopt;
    return lambda;
}

namespace {

RatMat submatrix(const RatMat& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
    RatMat s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            s.at(static_cast<int>(r), static_cast<int>(c)) = m.at(rows[r], cols[c]);
    return s;
}

bool rank_one_idempotent(const RatMat& j) {
    if (j.trace() != 1) return false;
    for (const auto& x : j.a)
        if (x < 0) return false;
    for (int r1 = 0; r1 < j.rows; ++r1)
        for (int r2 = r1 + 1; r2 < j.rows; ++r2)
            for (int c1 = 0; c1 < j.cols; ++c1)
                for (int c2 = c1 + 1; c2 < j.cols; ++c2)
                    if (j.at(r1, c1) * j.at(r2, c2) != j.at(r1, c2) * j.at(r2, c1))
                        return false;
    return j * j == j;
}

}  // namespace

FlorForm flor_decompose(const RatMat& m) {
    for (const auto& x : m.a)
        if (x < 0) throw NotIdempotent("matrix has a negative entry");
    auto lambda = quasi_idempotent_scalar(m);
    if (!lambda)
        throw NotIdempotent("matrix is not quasi-idempotent with positive scalar");
    int n = m.rows;
    RatMat e = m.scaled(1 / *lambda);

    FlorForm form;
    form.lambda = *lambda;
    std::vector<bool> in_core(n, false);
    for (int i = 0; i < n; ++i)
        if (e.at(i, i) > 0) in_core[i] = true;
    auto row_zero = [&](int i) {
        for (int c = 0; c < n; ++c)
            if (e.at(i, c) != 0) return false;
        return true;
    };
    auto col_zero = [&](int i) {
        for (int r = 0; r < n; ++r)
            if (e.at(r, i) != 0) return false;
        return true;
    };
    std::vector<int> core_unsorted;
    for (int i = 0; i < n; ++i) {
        if (in_core[i]) {
            core_unsorted.push_back(i);
        } else if (row_zero(i)) {
            form.last_block.push_back(i);  // both-zero indices land here too
        } else if (col_zero(i)) {
            form.first_block.push_back(i);
        } else {
            throw NotIdempotent("index " + std::to_string(i) +
                                " has zero diagonal but nonzero row and column");
        }
    }

    // Core classes: connected components of the positivity graph on the core.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s : core_unsorted) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : core_unsorted)
                if (comp[v] < 0 && (e.at(u, v) > 0 || e.at(v, u) > 0)) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    form.core_classes.assign(ncomp, {});
    for (int v : core_unsorted) form.core_classes[comp[v]].push_back(v);
    for (auto& cls : form.core_classes) std::sort(cls.begin(), cls.end());
    std::sort(form.core_classes.begin(), form.core_classes.end());
    for (const auto& cls : form.core_classes)
        form.core.insert(form.core.end(), cls.begin(), cls.end());

    form.AJ = submatrix(e, form.first_block, form.core);
    form.J = submatrix(e, form.core, form.core);
    form.JB = submatrix(e, form.core, form.last_block);

    if (!verify_flor(m, form))
        throw NotIdempotent("block identities fail; input violates the hypothesis");
    return form;
}

bool verify_flor(const RatMat& m, const FlorForm& form) {
    if (m.rows != m.cols) return false;
    int n = m.rows;
    for (const auto& x : m.a)
        if (x < 0) return false;
    if (form.lambda <= 0) return false;
    if (m * m != m.scaled(form.lambda)) return false;
    RatMat e = m.scaled(1 / form.lambda);

    // The three blocks partition the index set.
    std::vector<int> owner(n, -1);
    auto claim = [&](const std::vector<int>& idx) {
        for (int i : idx) {
            if (i < 0 || i >= n || owner[i] >= 0) return false;
            owner[i] = 0;
        }
        return true;
    };
    if (!claim(form.first_block) || !claim(form.core) || !claim(form.last_block))
        return false;
    for (int i = 0; i < n; ++i)
        if (owner[i] < 0) return false;

    // Core classes partition the core.
    std::vector<int> flat;
    for (const auto& cls : form.core_classes)
        flat.insert(flat.end(), cls.begin(), cls.end());
    std::vector<int> core_sorted = form.core, flat_sorted = flat;
    std::sort(core_sorted.begin(), core_sorted.end());
    std::sort(flat_sorted.begin(), flat_sorted.end());
    if (core_sorted != flat_sorted) return false;
    if (std::adjacent_find(flat_sorted.begin(), flat_sorted.end()) != flat_sorted.end())
        return false;

    for (int i : form.core)
        if (e.at(i, i) <= 0) return false;

    // Zero pattern of the permuted matrix.
    for (int c : form.first_block)
        for (int r = 0; r < n; ++r)
            if (e.at(r, c) != 0) return false;
    for (int r : form.last_block)
        for (int c = 0; c < n; ++c)
            if (e.at(r, c) != 0) return false;

    // Stored blocks must match the matrix.
    if (form.AJ != submatrix(e, form.first_block, form.core)) return false;
    if (form.J != submatrix(e, form.core, form.core)) return false;
    if (form.JB != submatrix(e, form.core, form.last_block)) return false;

    // J is a direct sum over the classes of rank-one nonnegative idempotents.
    std::vector<int> cls_of(n, -1);
    for (size_t k = 0; k < form.core_classes.size(); ++k)
        for (int v : form.core_classes[k]) cls_of[v] = static_cast<int>(k);
    for (int u : form.core)
        for (int v : form.core)
            if (cls_of[u] != cls_of[v] && e.at(u, v) != 0) return false;
    for (const auto& cls : form.core_classes)
        if (!rank_one_idempotent(submatrix(e, cls, cls))) return false;

    // Idempotent block identities: AJ.J = AJ, J.JB = JB, top-right = AJ.JB.
    if (!(form.AJ * form.J == form.AJ)) return false;
    if (!(form.J * form.JB == form.JB)) return false;
    if (submatrix(e, form.first_block, form.last_block) != form.AJ * form.JB) return false;
    return true;
}

}  // namespace ats
