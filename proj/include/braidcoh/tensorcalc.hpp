#pragma once
// Linear maps V^{(x)n} -> V^{(x)m} as matrices with d^m rows and d^n columns.
//
// Basis convention: e_{i1} (x) ... (x) e_{in} has index i1*d^{n-1} + ... + in,
// the leftmost factor is most significant. For d=2, n=3:
//
//   index  0   1   2   3   4   5   6   7
//   word  000 001 010 011 100 101 110 111
//
// so tensor(f, g) is the Kronecker product with f as the outer block.
//
// Storage is compressed by column. A map whose fill exceeds 25% is kept dense
// (column-major) instead; both layouts expose the same for_col visitor.
#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "exactfield.hpp"

namespace braidcoh {

inline size_t ipow(size_t d, unsigned n)
{
    size_t r = 1;
    for (unsigned k = 0; k < n; ++k) {
        if (r > (size_t(1) << 32) / (d ? d : 1)) fail(ErrorKind::ShapeMismatch, "tensor power too large");
        r *= d;
    }
    if (r > (size_t(1) << 32)) fail(ErrorKind::ShapeMismatch, "tensor power too large");
    return r;
}

inline std::vector<unsigned> decode_index(size_t idx, unsigned d, unsigned n)
{
    std::vector<unsigned> w(n);
    for (unsigned k = n; k-- > 0;) {
        w[k] = static_cast<unsigned>(idx % d);
        idx /= d;
    }
    return w;
}

inline size_t encode_index(const std::vector<unsigned>& w, unsigned d)
{
    size_t r = 0;
    for (unsigned x : w) r = r * d + x;
    return r;
}

inline size_t reverse_index(size_t idx, unsigned d, unsigned n)
{
    size_t r = 0;
    for (unsigned k = 0; k < n; ++k) {
        r = r * d + idx % d;
        idx /= d;
    }
    return r;
}

template <class F>
class TensorMap {
public:
    using V = typename F::value_type;
    using Entry = std::pair<uint32_t, V>;
    using Column = std::vector<Entry>;

    TensorMap() : f_(make_default()) {}
    TensorMap(F f, unsigned d, unsigned dom, unsigned cod)
        : f_(std::move(f)), d_(d), dom_(dom), cod_(cod), rows_(ipow(d, cod)), cols_(ipow(d, dom)),
          ptr_(cols_ + 1, 0)
    {
        if (d == 0) fail(ErrorKind::ShapeMismatch, "base dimension must be positive");
    }

    // columns must be sorted by row with no zero values
    static TensorMap from_columns(F f, unsigned d, unsigned dom, unsigned cod, std::vector<Column>&& cols)
    {
        TensorMap m(std::move(f), d, dom, cod);
        if (cols.size() != m.cols_) fail(ErrorKind::ShapeMismatch, "column count");
        m.finalize(std::move(cols));
        return m;
    }

    // duplicate positions are summed
    static TensorMap from_triplets(F f, unsigned d, unsigned dom, unsigned cod,
                                   std::vector<std::tuple<size_t, size_t, V>> trip)
    {
        TensorMap m(f, d, dom, cod);
        std::sort(trip.begin(), trip.end(), [](const auto& a, const auto& b) {
            return std::get<1>(a) != std::get<1>(b) ? std::get<1>(a) < std::get<1>(b)
                                                    : std::get<0>(a) < std::get<0>(b);
        });
        std::vector<Column> cols(m.cols_);
        for (auto& [r, c, v] : trip) {
            if (r >= m.rows_ || c >= m.cols_) fail(ErrorKind::ShapeMismatch, "entry outside the matrix");
            auto& col = cols[c];
            if (!col.empty() && col.back().first == r) col.back().second = f.add(col.back().second, v);
            else col.emplace_back(static_cast<uint32_t>(r), v);
        }
        for (auto& col : cols)
            col.erase(std::remove_if(col.begin(), col.end(), [&](const Entry& e) { return f.is_zero(e.second); }),
                      col.end());
        m.finalize(std::move(cols));
        return m;
    }

    const F& field() const { return f_; }
    unsigned d() const { return d_; }
    unsigned dom() const { return dom_; }
    unsigned cod() const { return cod_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_dense() const { return dense_; }
    size_t nnz() const { return nnz_; }
    bool is_zero() const { return nnz_ == 0; }

    template <class Fn>
    void for_col(size_t j, Fn&& fn) const
    {
        if (dense_) {
            const V* base = dval_.data() + j * rows_;
            for (size_t r = 0; r < rows_; ++r)
                if (!f_.is_zero(base[r])) fn(static_cast<uint32_t>(r), base[r]);
        } else {
            for (size_t k = ptr_[j]; k < ptr_[j + 1]; ++k) fn(idx_[k], val_[k]);
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (size_t j = 0; j < cols_; ++j) for_col(j, [&](uint32_t r, const V& v) { fn(size_t(r), j, v); });
    }

    V at(size_t r, size_t c) const
    {
        if (r >= rows_ || c >= cols_) fail(ErrorKind::ShapeMismatch, "index outside the matrix");
        if (dense_) return dval_[c * rows_ + r];
        auto b = idx_.begin() + ptr_[c], e = idx_.begin() + ptr_[c + 1];
        auto it = std::lower_bound(b, e, static_cast<uint32_t>(r));
        if (it != e && *it == r) return val_[it - idx_.begin()];
        return f_.zero();
    }

    Column column(size_t j) const
    {
        Column c;
        for_col(j, [&](uint32_t r, const V& v) { c.emplace_back(r, v); });
        return c;
    }

private:
    static F make_default()
    {
        if constexpr (std::is_default_constructible_v<F>) return F();
        else return F(2);
    }

    void finalize(std::vector<Column>&& cols)
    {
        nnz_ = 0;
        for (auto& c : cols) nnz_ += c.size();
        double cells = double(rows_) * double(cols_);
        if (double(nnz_) * 4.0 > cells && cells <= double(1u << 26)) {
            dense_ = true;
            dval_.assign(rows_ * cols_, f_.zero());
            for (size_t j = 0; j < cols_; ++j)
                for (auto& [r, v] : cols[j]) dval_[j * rows_ + r] = v;
            ptr_.clear();
            return;
        }
        ptr_.assign(cols_ + 1, 0);
        idx_.reserve(nnz_);
        val_.reserve(nnz_);
        for (size_t j = 0; j < cols_; ++j) {
            for (auto& [r, v] : cols[j]) {
                idx_.push_back(r);
                val_.push_back(std::move(v));
            }
            ptr_[j + 1] = idx_.size();
        }
    }

    F f_;
    unsigned d_ = 1, dom_ = 0, cod_ = 0;
    size_t rows_ = 1, cols_ = 1;
    bool dense_ = false;
    size_t nnz_ = 0;
    std::vector<size_t> ptr_;
    std::vector<uint32_t> idx_;
    std::vector<V> val_;
    std::vector<V> dval_;
};

namespace detail {

// sparse accumulator reused across calls on the same thread
template <class F>
struct Accumulator {
    using V = typename F::value_type;
    std::vector<V> acc;
    std::vector<char> mark;
    std::vector<uint32_t> touched;

    void reserve(const F& f, size_t n)
    {
        if (acc.size() < n) {
            acc.resize(n, f.zero());
            mark.resize(n, 0);
        }
    }
    void add(const F& f, uint32_t r, const V& v)
    {
        if (!mark[r]) {
            mark[r] = 1;
            acc[r] = v;
            touched.push_back(r);
        } else {
            acc[r] = f.add(acc[r], v);
        }
    }
    typename TensorMap<F>::Column drain(const F& f)
    {
        std::sort(touched.begin(), touched.end());
        typename TensorMap<F>::Column out;
        out.reserve(touched.size());
        for (uint32_t r : touched) {
            if (!f.is_zero(acc[r])) out.emplace_back(r, acc[r]);
            mark[r] = 0;
            acc[r] = f.zero();
        }
        touched.clear();
        return out;
    }
};

template <class F>
Accumulator<F>& accumulator()
{
    thread_local Accumulator<F> a;
    return a;
}

template <class F>
void check_compatible(const TensorMap<F>& f, const TensorMap<F>& g)
{
    if (!(f.field().spec() == g.field().spec()))
        fail(ErrorKind::FieldMismatch, f.field().spec().name() + " vs " + g.field().spec().name());
    if (f.d() != g.d()) fail(ErrorKind::ShapeMismatch, "base dimensions differ");
}

} // namespace detail

template <class F>
TensorMap<F> zero_map(const F& f, unsigned d, unsigned dom, unsigned cod)
{
    return TensorMap<F>::from_columns(f, d, dom, cod, std::vector<typename TensorMap<F>::Column>(ipow(d, dom)));
}

template <class F>
TensorMap<F> identity(const F& f, unsigned d, unsigned n)
{
    size_t N = ipow(d, n);
    std::vector<typename TensorMap<F>::Column> cols(N);
    for (size_t j = 0; j < N; ++j) cols[j].emplace_back(static_cast<uint32_t>(j), f.one());
    return TensorMap<F>::from_columns(f, d, n, n, std::move(cols));
}

// fg as juxtaposition: apply g first
template <class F>
TensorMap<F> compose(const TensorMap<F>& f, const TensorMap<F>& g)
{
    detail::check_compatible(f, g);
    if (g.cod() != f.dom())
        fail(ErrorKind::ArityMismatch, "compose: g has codomain arity " + std::to_string(g.cod()) +
                                           ", f has domain arity " + std::to_string(f.dom()));
    const F& fld = f.field();
    auto& A = detail::accumulator<F>();
    A.reserve(fld, f.rows());
    std::vector<typename TensorMap<F>::Column> cols(g.cols());
    for (size_t j = 0; j < g.cols(); ++j) {
        g.for_col(j, [&](uint32_t k, const auto& gv) {
            f.for_col(k, [&](uint32_t r, const auto& fv) { A.add(fld, r, fld.mul(fv, gv)); });
        });
        cols[j] = A.drain(fld);
    }
    return TensorMap<F>::from_columns(fld, f.d(), g.dom(), f.cod(), std::move(cols));
}

template <class F>
TensorMap<F> tensor(const TensorMap<F>& f, const TensorMap<F>& g)
{
    detail::check_compatible(f, g);
    const F& fld = f.field();
    size_t gr = g.rows(), gc = g.cols();
    std::vector<typename TensorMap<F>::Column> cols(f.cols() * gc);
    std::vector<typename TensorMap<F>::Column> gcols(gc);
    for (size_t jg = 0; jg < gc; ++jg) gcols[jg] = g.column(jg);
    for (size_t jf = 0; jf < f.cols(); ++jf) {
        auto fcol = f.column(jf);
        for (size_t jg = 0; jg < gc; ++jg) {
            auto& out = cols[jf * gc + jg];
            out.reserve(fcol.size() * gcols[jg].size());
            for (auto& [rf, vf] : fcol)
                for (auto& [rg, vg] : gcols[jg]) out.emplace_back(static_cast<uint32_t>(rf * gr + rg), fld.mul(vf, vg));
        }
    }
    return TensorMap<F>::from_columns(fld, f.d(), f.dom() + g.dom(), f.cod() + g.cod(), std::move(cols));
}

template <class F>
TensorMap<F> linear_combination(const TensorMap<F>& f, const typename F::value_type& a, const TensorMap<F>& g,
                                const typename F::value_type& b)
{
    detail::check_compatible(f, g);
    if (f.dom() != g.dom() || f.cod() != g.cod()) fail(ErrorKind::ShapeMismatch, "sum of maps with different arities");
    const F& fld = f.field();
    auto& A = detail::accumulator<F>();
    A.reserve(fld, f.rows());
    std::vector<typename TensorMap<F>::Column> cols(f.cols());
    for (size_t j = 0; j < f.cols(); ++j) {
        f.for_col(j, [&](uint32_t r, const auto& v) { A.add(fld, r, fld.mul(a, v)); });
        g.for_col(j, [&](uint32_t r, const auto& v) { A.add(fld, r, fld.mul(b, v)); });
        cols[j] = A.drain(fld);
    }
    return TensorMap<F>::from_columns(fld, f.d(), f.dom(), f.cod(), std::move(cols));
}

template <class F>
TensorMap<F> scale(const TensorMap<F>& f, const typename F::value_type& a)
{
    const F& fld = f.field();
    std::vector<typename TensorMap<F>::Column> cols(f.cols());
    if (!fld.is_zero(a))
        for (size_t j = 0; j < f.cols(); ++j)
            f.for_col(j, [&](uint32_t r, const auto& v) { cols[j].emplace_back(r, fld.mul(a, v)); });
    return TensorMap<F>::from_columns(fld, f.d(), f.dom(), f.cod(), std::move(cols));
}

template <class F>
TensorMap<F> operator*(const TensorMap<F>& f, const TensorMap<F>& g) { return compose(f, g); }
template <class F>
TensorMap<F> operator+(const TensorMap<F>& f, const TensorMap<F>& g)
{
    return linear_combination(f, f.field().one(), g, f.field().one());
}
template <class F>
TensorMap<F> operator-(const TensorMap<F>& f, const TensorMap<F>& g)
{
    return linear_combination(f, f.field().one(), g, f.field().neg(f.field().one()));
}
template <class F>
TensorMap<F> operator-(const TensorMap<F>& f) { return scale(f, f.field().neg(f.field().one())); }

// tp(a, b, c) = a (x) b (x) c
template <class F, class... Rest>
TensorMap<F> tp(const TensorMap<F>& a, const Rest&... rest)
{
    if constexpr (sizeof...(rest) == 0) return a;
    else return tensor(a, tp(rest...));
}

// perm[k] is the 1-based position that slot k+1 is sent to
template <class F>
TensorMap<F> permutation_map(const F& f, unsigned d, const std::vector<unsigned>& perm)
{
    unsigned n = static_cast<unsigned>(perm.size());
    std::vector<char> seen(n, 0);
    for (unsigned x : perm) {
        if (x < 1 || x > n || seen[x - 1]) fail(ErrorKind::InvalidPermutation, "not a bijection on 1..n");
        seen[x - 1] = 1;
    }
    size_t N = ipow(d, n);
    std::vector<typename TensorMap<F>::Column> cols(N);
    std::vector<unsigned> out(n);
    for (size_t j = 0; j < N; ++j) {
        auto w = decode_index(j, d, n);
        for (unsigned k = 0; k < n; ++k) out[perm[k] - 1] = w[k];
        cols[j].emplace_back(static_cast<uint32_t>(encode_index(out, d)), f.one());
    }
    return TensorMap<F>::from_columns(f, d, n, n, std::move(cols));
}

template <class F>
TensorMap<F> flip(const F& f, unsigned d) { return permutation_map(f, d, {2, 1}); }

// sigma_{n,i} = 1^{i-1} (x) R (x) 1^{n-i-1}
template <class F>
TensorMap<F> sigma(const TensorMap<F>& R, unsigned n, unsigned i)
{
    if (R.dom() != 2 || R.cod() != 2) fail(ErrorKind::ArityMismatch, "sigma needs a 2->2 map");
    if (i < 1 || i + 1 > n) fail(ErrorKind::PositionOutOfRange, "sigma position " + std::to_string(i) + " on " + std::to_string(n) + " strands");
    const F& f = R.field();
    return tp(identity(f, R.d(), i - 1), R, identity(f, R.d(), n - i - 1));
}

// P_cod f P_dom with P the order-reversing permutation
template <class F>
TensorMap<F> mirror(const TensorMap<F>& f)
{
    std::vector<typename TensorMap<F>::Column> cols(f.cols());
    for (size_t j = 0; j < f.cols(); ++j) {
        auto& c = cols[reverse_index(j, f.d(), f.dom())];
        f.for_col(j, [&](uint32_t r, const auto& v) {
            c.emplace_back(static_cast<uint32_t>(reverse_index(r, f.d(), f.cod())), v);
        });
        std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return TensorMap<F>::from_columns(f.field(), f.d(), f.dom(), f.cod(), std::move(cols));
}

struct MapDifference {
    bool equal = true;
    size_t row = 0, col = 0;
};

template <class F>
MapDifference first_difference(const TensorMap<F>& f, const TensorMap<F>& g)
{
    detail::check_compatible(f, g);
    if (f.dom() != g.dom() || f.cod() != g.cod()) fail(ErrorKind::ShapeMismatch, "maps of different shape");
    const F& fld = f.field();
    for (size_t j = 0; j < f.cols(); ++j) {
        auto a = f.column(j), b = g.column(j);
        size_t n = std::min(a.size(), b.size());
        for (size_t k = 0; k < n; ++k)
            if (a[k].first != b[k].first || !fld.eq(a[k].second, b[k].second))
                return {false, std::min(a[k].first, b[k].first), j};
        if (a.size() != b.size()) return {false, a.size() > n ? a[n].first : b[n].first, j};
    }
    return {};
}

template <class F>
bool map_equal(const TensorMap<F>& f, const TensorMap<F>& g) { return first_difference(f, g).equal; }

template <class F>
std::vector<typename F::value_type> apply(const TensorMap<F>& f, const std::vector<typename F::value_type>& v)
{
    if (v.size() != f.cols()) fail(ErrorKind::ShapeMismatch, "vector length does not match the domain");
    const F& fld = f.field();
    std::vector<typename F::value_type> out(f.rows(), fld.zero());
    for (size_t j = 0; j < f.cols(); ++j) {
        if (fld.is_zero(v[j])) continue;
        f.for_col(j, [&](uint32_t r, const auto& x) { out[r] = fld.add(out[r], fld.mul(x, v[j])); });
    }
    return out;
}

template <class F>
TensorMap<F> basis_image(const F& f, unsigned d, const std::vector<unsigned>& word)
{
    // the map k -> V^{(x)n} picking out one basis vector, mostly for tests
    std::vector<typename TensorMap<F>::Column> cols(1);
    cols[0].emplace_back(static_cast<uint32_t>(encode_index(word, d)), f.one());
    return TensorMap<F>::from_columns(f, d, 0, static_cast<unsigned>(word.size()), std::move(cols));
}

template <class F, class Rng>
TensorMap<F> random_map(const F& f, unsigned d, unsigned dom, unsigned cod, Rng& rng, double density = 1.0)
{
    size_t R = ipow(d, cod), C = ipow(d, dom);
    std::vector<typename TensorMap<F>::Column> cols(C);
    for (size_t j = 0; j < C; ++j)
        for (size_t r = 0; r < R; ++r) {
            if (density < 1.0 && double(rng() % 1000000) >= density * 1e6) continue;
            auto v = f.random(rng);
            if (!f.is_zero(v)) cols[j].emplace_back(static_cast<uint32_t>(r), v);
        }
    return TensorMap<F>::from_columns(f, d, dom, cod, std::move(cols));
}

// flattened (row-major) sparse vector of a map, the coordinates used by all cochain spaces
template <class F>
std::vector<std::pair<size_t, typename F::value_type>> flatten(const TensorMap<F>& f, size_t offset = 0)
{
    std::vector<std::pair<size_t, typename F::value_type>> out;
    out.reserve(f.nnz());
    f.for_each([&](size_t r, size_t c, const auto& v) { out.emplace_back(offset + r * f.cols() + c, v); });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

template <class F>
TensorMap<F> unflatten(const F& f, unsigned d, unsigned dom, unsigned cod,
                       const std::vector<std::pair<size_t, typename F::value_type>>& v, size_t offset = 0)
{
    size_t C = ipow(d, dom), R = ipow(d, cod);
    std::vector<std::tuple<size_t, size_t, typename F::value_type>> trip;
    for (auto& [k, x] : v) {
        if (k < offset || k >= offset + R * C) continue;
        size_t local = k - offset;
        trip.emplace_back(local / C, local % C, x);
    }
    return TensorMap<F>::from_triplets(f, d, dom, cod, std::move(trip));
}

} // namespace braidcoh
