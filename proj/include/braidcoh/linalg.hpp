#pragma once
// Exact elimination. Over GF(p) a sparse incremental echelon form (vectors are
// fed shortest first, a cheap Markowitz-style ordering). Q uses the same path:
// the structure matrices are sparse with small entries, and a dense Bareiss copy
// was orders of magnitude slower at d = 6.
#include <algorithm>
#include <numeric>
#include <optional>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "tensorcalc.hpp"

namespace braidcoh {

template <class F>
using SparseVec = std::vector<std::pair<size_t, typename F::value_type>>;

// column-stored matrix over F
template <class F>
struct FlatMatrix {
    F field;
    size_t rows = 0, cols = 0;
    std::vector<SparseVec<F>> col;

    FlatMatrix(F f, size_t r, size_t c) : field(std::move(f)), rows(r), cols(c), col(c) {}

    bool is_zero() const
    {
        for (auto& c : col)
            if (!c.empty()) return false;
        return true;
    }
    size_t nnz() const
    {
        size_t n = 0;
        for (auto& c : col) n += c.size();
        return n;
    }
};

// out = a + s*b
template <class F>
SparseVec<F> axpy(const F& f, const SparseVec<F>& a, const typename F::value_type& s, const SparseVec<F>& b)
{
    SparseVec<F> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            auto v = f.mul(s, b[j].second);
            if (!f.is_zero(v)) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            auto v = f.add(a[i].second, f.mul(s, b[j].second));
            if (!f.is_zero(v)) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
SparseVec<F> matvec(const FlatMatrix<F>& A, const SparseVec<F>& x)
{
    const F& f = A.field;
    auto& acc = detail::accumulator<F>();
    acc.reserve(f, A.rows);
    for (auto& [j, xv] : x)
        for (auto& [r, v] : A.col[j]) acc.add(f, static_cast<uint32_t>(r), f.mul(v, xv));
    auto c = acc.drain(f);
    SparseVec<F> out;
    out.reserve(c.size());
    for (auto& [r, v] : c) out.emplace_back(r, v);
    return out;
}

template <class F>
FlatMatrix<F> matmul(const FlatMatrix<F>& A, const FlatMatrix<F>& B)
{
    if (A.cols != B.rows) fail(ErrorKind::ShapeMismatch, "matrix product of incompatible shapes");
    FlatMatrix<F> C(A.field, A.rows, B.cols);
    for (size_t j = 0; j < B.cols; ++j) C.col[j] = matvec(A, B.col[j]);
    return C;
}

// Incremental echelon basis. Each stored vector has leading coefficient 1 and a
// distinct leading index. With tags on, every stored vector remembers which
// combination of inserted vectors produced it.
template <class F>
class Echelon {
public:
    using V = typename F::value_type;

    explicit Echelon(F f, bool track = false) : f_(std::move(f)), track_(track) {}

    size_t rank() const { return basis_.size(); }

    // inserts v (tagged as input number id); returns true if it was independent.
    // If dependent and tracking, kernel() receives the relation.
    bool insert(SparseVec<F> v, size_t id = 0)
    {
        SparseVec<F> tag;
        if (track_) tag.emplace_back(id, f_.one());
        reduce_lead(v, tag);
        if (v.empty()) {
            if (track_) kernel_.push_back(std::move(tag));
            return false;
        }
        V inv = f_.inv(v.front().second);
        for (auto& e : v) e.second = f_.mul(e.second, inv);
        if (track_)
            for (auto& e : tag) e.second = f_.mul(e.second, inv);
        lead_[v.front().first] = basis_.size();
        basis_.push_back(std::move(v));
        tags_.push_back(std::move(tag));
        return true;
    }

    // reduces every coordinate that sits on a pivot; the remainder is a canonical
    // representative modulo the span. comb collects b = span-part + remainder with
    // span-part = sum comb_k * inserted_k (requires tracking).
    SparseVec<F> full_reduce(SparseVec<F> v, SparseVec<F>* comb = nullptr) const
    {
        SparseVec<F> tag;
        size_t pos = 0;
        while (pos < v.size()) {
            auto it = lead_.find(v[pos].first);
            if (it == lead_.end()) {
                ++pos;
                continue;
            }
            V c = v[pos].second;
            size_t key = v[pos].first;
            v = axpy(f_, v, f_.neg(c), basis_[it->second]);
            if (track_ && comb) tag = axpy(f_, tag, c, tags_[it->second]);
            // entries before pos are untouched since the pivot leads at key
            pos = std::lower_bound(v.begin(), v.end(), key, [](const auto& e, size_t k) { return e.first < k; }) - v.begin();
        }
        if (comb) *comb = std::move(tag);
        return v;
    }

    bool contains(const SparseVec<F>& v) const { return full_reduce(v).empty(); }

    const std::vector<SparseVec<F>>& kernel() const { return kernel_; }

private:
    void reduce_lead(SparseVec<F>& v, SparseVec<F>& tag) const
    {
        while (!v.empty()) {
            auto it = lead_.find(v.front().first);
            if (it == lead_.end()) return;
            V c = f_.neg(v.front().second);
            v = axpy(f_, v, c, basis_[it->second]);
            if (track_) tag = axpy(f_, tag, c, tags_[it->second]);
        }
    }

    F f_;
    bool track_;
    std::unordered_map<size_t, size_t> lead_;
    std::vector<SparseVec<F>> basis_;
    std::vector<SparseVec<F>> tags_;
    std::vector<SparseVec<F>> kernel_;
};

template <class F>
size_t rank(const FlatMatrix<F>& A)
{
    std::vector<size_t> order(A.cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return A.col[a].size() < A.col[b].size(); });
    Echelon<F> E(A.field);
    for (size_t j : order) E.insert(A.col[j]);
    return E.rank();
}

template <class F>
std::pair<size_t, size_t> rank_and_nullity(const FlatMatrix<F>& A)
{
    size_t r = rank(A);
    return {r, A.cols - r};
}

template <class F>
FlatMatrix<F> to_flat(const TensorMap<F>& f)
{
    FlatMatrix<F> A(f.field(), f.rows(), f.cols());
    for (size_t j = 0; j < f.cols(); ++j)
        f.for_col(j, [&](uint32_t r, const auto& v) { A.col[j].emplace_back(r, v); });
    return A;
}

template <class F>
std::pair<size_t, size_t> rank_and_nullity(const TensorMap<F>& f) { return rank_and_nullity(to_flat(f)); }

// basis of the kernel of A
template <class F>
std::vector<SparseVec<F>> nullspace(const FlatMatrix<F>& A)
{
    Echelon<F> E(A.field, true);
    for (size_t j = 0; j < A.cols; ++j) E.insert(A.col[j], j);
    auto k = E.kernel();
    for (auto& v : k) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return k;
}

template <class F>
struct SolveResult {
    bool solvable = false;
    SparseVec<F> x;         // A x = b when solvable
    SparseVec<F> residual;  // b reduced modulo im A; nonzero iff unsolvable
    size_t rank = 0;
};

template <class F>
SolveResult<F> solve(const FlatMatrix<F>& A, const SparseVec<F>& b)
{
    Echelon<F> E(A.field, true);
    for (size_t j = 0; j < A.cols; ++j) E.insert(A.col[j], j);
    SolveResult<F> out;
    out.rank = E.rank();
    SparseVec<F> comb;
    out.residual = E.full_reduce(b, &comb);
    out.solvable = out.residual.empty();
    if (out.solvable) {
        std::sort(comb.begin(), comb.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
        out.x = std::move(comb);
    }
    return out;
}

template <class F>
bool in_column_span(const FlatMatrix<F>& A, const SparseVec<F>& b)
{
    Echelon<F> E(A.field);
    for (auto& c : A.col) E.insert(c);
    return E.contains(b);
}

} // namespace braidcoh
