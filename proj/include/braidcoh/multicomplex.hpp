#pragma once
// The bigraded multicomplex K^{s,t} = Hom(V^{s+t}, V^{|t|+1}) with d1 of
// bidegree (1,0) and d2 of bidegree (2,-1), the total differential, the
// lambda constraints and a comparison with the explicit low-degree
// differentials.
//
// With n = s+t and q = |t|+1:
//   d1 = d10 + sum_{i<rho} (-1)^i psi(1^{i-1} x mu x 1^{n-i}) + (-1)^rho d1rho
//   d10   = (1^{q-1} x mu) s_{q-1}..s_1 (1 x psi)              on q+1 strands
//   d1rho = (1^{q-1} x mu)(psi x 1) s_n..s_rho                  on n+1 strands
//   rho = n-q+2 for t <= 0, n-q+1 for t > 0
//   d2 = (-1)^n sum_{i=1}^{rho} (-1)^i (a_i - b_i), rho = q (q+1 on the diagonal)
//   a_i = s_{i-1}..s_1 (1 x phi) s_1..s_{n-i+1}
//   b_i = s_i..s_q (phi x 1) s_n..s_{n-i+2}
// Left chains act on the q+1 output strands, right chains on the n+1 inputs.
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "complexes.hpp"

namespace braidcoh {

struct Cell {
    int s = 0, t = 0;
    unsigned n() const { return static_cast<unsigned>(s + t); }
    unsigned q() const { return static_cast<unsigned>(t < 0 ? -t : t) + 1; }
    bool operator==(const Cell&) const = default;
};

inline bool cell_nonzero(int s, int t) { return s > 0 && s + t >= (t < 0 ? -t : t) + 1 && s > t; }
inline bool cell_nonzero(const Cell& c) { return cell_nonzero(c.s, c.t); }

// nonzero cells of total degree N, by increasing s
inline std::vector<Cell> cells_of_degree(int N)
{
    std::vector<Cell> out;
    for (int s = 1; s <= 2 * N; ++s)
        if (cell_nonzero(s, N - s)) out.push_back({s, N - s});
    return out;
}

inline size_t cell_dim(unsigned d, const Cell& c) { return ipow(d, c.n()) * ipow(d, c.q()); }

template <class F>
class Multicomplex {
public:
    using TM = TensorMap<F>;

    explicit Multicomplex(const Complexes<F>& C) : C_(C) {}

    const Complexes<F>& complexes() const { return C_; }

    TM d1(const Cell& c, const TM& x) const { return d1_on(C_.ops(), c, x); }
    TM d2(const Cell& c, const TM& x) const { return d2_on(C_.ops(), c, x); }

    // same formulas on the mirror algebra
    TM d1_mirror(const Cell& c, const TM& x) const { return d1_on(C_.mirror_ops(), c, x); }

    // columns: cells of degree N by increasing s; rows: cells of degree N+1
    FlatMatrix<F> total_differential(int N) const
    {
        auto src = cells_of_degree(N), dst = cells_of_degree(N + 1);
        unsigned d = C_.algebra().d;
        std::vector<Block> sb, db;
        for (auto& c : src) sb.push_back(block_of(c));
        for (auto& c : dst) db.push_back(block_of(c));
        return matrix_of_linear(C_.algebra().field, d, sb, cochain_dim(d, db), [&](const Cochain<F>& x) {
            Cochain<F> out;
            for (auto& c : dst) out.push_back(C_.ops().zero(c.n(), c.q()));
            for (size_t k = 0; k < src.size(); ++k) {
                if (x[k].is_zero()) continue;
                Cell c = src[k];
                for (size_t j = 0; j < dst.size(); ++j) {
                    if (dst[j] == Cell{c.s + 1, c.t}) out[j] = out[j] + d1(c, x[k]);
                    if (dst[j] == Cell{c.s + 2, c.t - 1} && c.t < 1) out[j] = out[j] + d2(c, x[k]);
                }
            }
            return out;
        });
    }

    static Block block_of(const Cell& c)
    {
        return {"K^{" + std::to_string(c.s) + "," + std::to_string(c.t) + "}", c.n(), c.q()};
    }

private:
    void need_cell(const Cell& c) const
    {
        if (!cell_nonzero(c))
            fail(ErrorKind::CellOutOfRange, "K^{" + std::to_string(c.s) + "," + std::to_string(c.t) + "} is zero");
    }

    TM d1_on(const Ops<F>& o, const Cell& c, const TM& psi) const
    {
        need_cell(c);
        unsigned n = c.n(), q = c.q();
        expect_shape(psi, n, q, "multicomplex cochain");
        if (!cell_nonzero(c.s + 1, c.t) || psi.is_zero()) return o.zero(n + 1, q);
        const auto& I1 = o.I(1);
        auto top = tp(o.I(q - 1), o.mu());
        int rho = c.t > 0 ? int(n) - int(q) + 1 : int(n) - int(q) + 2;
        TermSum<F> s(o, n + 1, q);
        s.add(+1, top * o.desc(q + 1, int(q) - 1, 1) * tp(I1, psi));
        for (int i = 1; i < rho; ++i) s.add((i % 2) ? -1 : +1, psi * o.mu_at(n + 1, unsigned(i)));
        s.add((rho % 2) ? -1 : +1, top * tp(psi, I1) * o.desc(n + 1, int(n), rho));
        return s.take();
    }

    TM d2_on(const Ops<F>& o, const Cell& c, const TM& phi) const
    {
        need_cell(c);
        unsigned n = c.n(), q = c.q();
        expect_shape(phi, n, q, "multicomplex cochain");
        if (c.t >= 1 || phi.is_zero()) return o.zero(n + 1, c.t >= 1 ? unsigned(c.t) : q + 1);
        const auto& I1 = o.I(1);
        auto left = tp(I1, phi), right = tp(phi, I1);
        int rho = n == q ? int(q) + 1 : int(q);
        int N = int(n), Q = int(q);
        TermSum<F> s(o, n + 1, q + 1);
        int g = (n % 2) ? -1 : +1;
        for (int i = 1; i <= rho; ++i) {
            int sg = g * ((i % 2) ? -1 : +1);
            s.add(sg, o.desc(q + 1, i - 1, 1) * left * o.asc(n + 1, 1, N - i + 1));
            s.add(-sg, o.asc(q + 1, i, Q) * right * o.desc(n + 1, N, N - i + 2));
        }
        return s.take();
    }

    const Complexes<F>& C_;
};

// ---------------------------------------------------------------- squares

struct CellResidual {
    Cell cell;
    std::string which; // "d1d1", "d2d2" or "d1d2+d2d1"
    size_t rank = 0;
};

template <class F>
FlatMatrix<F> cell_operator(const Multicomplex<F>& M, const Cell& c, size_t rows,
                            const std::function<Cochain<F>(const TensorMap<F>&)>& fn)
{
    const auto& A = M.complexes().algebra();
    return matrix_of_linear(A.field, A.d, {Multicomplex<F>::block_of(c)}, rows,
                            [&](const Cochain<F>& x) { return fn(x[0]); });
}

// residual ranks of d1^2, d2^2 and the anticommutator on every cell of degree N
template <class F>
std::vector<CellResidual> cell_squares(const Multicomplex<F>& M, int N)
{
    std::vector<CellResidual> out;
    unsigned d = M.complexes().algebra().d;
    for (auto c : cells_of_degree(N)) {
        size_t r11 = ipow(d, c.n() + 2) * ipow(d, c.q());
        auto m11 = cell_operator<F>(M, c, r11, [&](const TensorMap<F>& x) {
            Cell c1{c.s + 1, c.t};
            if (!cell_nonzero(c1)) return Cochain<F>{M.complexes().ops().zero(c.n() + 2, c.q())};
            return Cochain<F>{M.d1(c1, M.d1(c, x))};
        });
        out.push_back({c, "d1d1", rank(m11)});
        if (c.t < 1) {
            Cell c2{c.s + 2, c.t - 1};
            size_t r22 = ipow(d, c.n() + 2) * ipow(d, c2.q() + 1);
            auto m22 = cell_operator<F>(M, c, r22, [&](const TensorMap<F>& x) { return Cochain<F>{M.d2(c2, M.d2(c, x))}; });
            out.push_back({c, "d2d2", rank(m22)});
            Cell c3{c.s + 3, c.t - 1};
            size_t r12 = ipow(d, c.n() + 2) * ipow(d, c3.q());
            auto m12 = cell_operator<F>(M, c, r12, [&](const TensorMap<F>& x) {
                auto a = M.d2(Cell{c.s + 1, c.t}, M.d1(c, x));
                auto b = M.d1(c2, M.d2(c, x));
                if (!cell_nonzero(c.s + 1, c.t)) a = M.complexes().ops().zero(b.dom(), b.cod());
                return Cochain<F>{a + b};
            });
            out.push_back({c, "d1d2+d2d1", rank(m12)});
        }
    }
    return out;
}

// rank of the total differential squared from degree N to N+2. Only
// meaningful in characteristic 2 unless the experiment flag is set.
template <class F>
size_t boundary_square_rank(const Multicomplex<F>& M, int N, bool experiment_odd_char = false)
{
    if (M.complexes().algebra().field.characteristic() != 2 && !experiment_odd_char)
        fail(ErrorKind::CharacteristicNot2, "the total differential squares to zero only in characteristic 2");
    return rank(matmul(M.total_differential(N + 1), M.total_differential(N)));
}

// ---------------------------------------------------------------- lambda

template <class F>
struct LambdaValues {
    TensorMap<F> lambda2;          // 2 -> 1
    TensorMap<F> lambda3_yi, lambda3_iy; // 3 -> 2
};

template <class F>
LambdaValues<F> lambda_constraints(const Complexes<F>& C, const TensorMap<F>& psi, const TensorMap<F>& phi,
                                   const TensorMap<F>& alpha, const TensorMap<F>& alphap, const TensorMap<F>& beta,
                                   const TensorMap<F>& tau)
{
    const auto& o = C.ops();
    return {lambda2_BC(o, phi, psi), delta3_BC_YI(o, alpha, beta, tau), delta3_BC_IY(o, alphap, beta, tau)};
}

// ---------------------------------------------------------------- reconciliation

struct ReconcileBlock {
    Cell cell;
    std::string explicit_name;
    bool matched = false;
    int sign = +1;           // multicomplex block = sign * explicit block
    std::string note;
};

struct ReconcileDegree {
    int degree = 0;
    std::vector<std::string> inputs;  // input cell names, in order
    std::vector<int> input_signs;     // sign applied to each input
    std::vector<ReconcileBlock> blocks;
    bool matched() const
    {
        for (auto& b : blocks)
            if (!b.matched) return false;
        return true;
    }
};

namespace detail {

// For every assignment of input signs, every target block must equal +-1 times
// its explicit counterpart as a full matrix. The first consistent assignment
// (in lexicographic order with + before -) is reported.
template <class F>
ReconcileDegree reconcile_search(const Complexes<F>& C, int degree, const std::vector<Cell>& in_cells,
                                 const std::vector<Cell>& out_cells,
                                 const std::vector<std::string>& names,
                                 const std::vector<std::string>& notes,
                                 const std::function<Cochain<F>(const Cochain<F>&)>& mc,
                                 const std::function<Cochain<F>(const Cochain<F>&)>& ex)
{
    const auto& A = C.algebra();
    std::vector<Block> src;
    for (auto& c : in_cells) src.push_back(Multicomplex<F>::block_of(c));
    auto mats_of = [&](const std::function<Cochain<F>(const Cochain<F>&)>& fn, size_t k) {
        const auto& c = out_cells[k];
        return matrix_of_linear(A.field, A.d, src, cell_dim(A.d, c), [&](const Cochain<F>& x) {
            return Cochain<F>{fn(x)[k]};
        });
    };
    size_t K = in_cells.size();
    std::vector<FlatMatrix<F>> E, Mm;
    for (size_t k = 0; k < out_cells.size(); ++k) {
        E.push_back(mats_of(ex, k));
        Mm.push_back(mats_of(mc, k));
    }
    // scale the column blocks of each multicomplex matrix by the input signs
    std::vector<size_t> start;
    size_t off = 0;
    for (auto& b : src) {
        start.push_back(off);
        off += block_size(A.d, b);
    }
    auto block_of_col = [&](size_t j) {
        size_t k = 0;
        while (k + 1 < K && j >= start[k + 1]) ++k;
        return k;
    };
    auto equal_scaled = [&](const FlatMatrix<F>& X, const FlatMatrix<F>& Y, const std::vector<int>& sg, int out) {
        const F& f = A.field;
        for (size_t j = 0; j < X.cols; ++j) {
            auto s = f.from_int(sg[block_of_col(j)] * out);
            const auto& a = X.col[j];
            const auto& b = Y.col[j];
            if (a.size() != b.size()) return false;
            for (size_t t = 0; t < a.size(); ++t)
                if (a[t].first != b[t].first || !f.eq(f.mul(s, a[t].second), b[t].second)) return false;
        }
        return true;
    };
    ReconcileDegree best;
    best.degree = degree;
    for (auto& c : in_cells) best.inputs.push_back(Multicomplex<F>::block_of(c).name);
    size_t best_count = 0;
    bool first = true;
    for (unsigned mask = 0; mask < (1u << K); ++mask) {
        std::vector<int> sg(K);
        for (size_t k = 0; k < K; ++k) sg[k] = (mask >> k) & 1 ? -1 : +1;
        ReconcileDegree cur;
        cur.degree = degree;
        cur.inputs = best.inputs;
        cur.input_signs = sg;
        size_t count = 0;
        for (size_t k = 0; k < out_cells.size(); ++k) {
            ReconcileBlock b{out_cells[k], names[k], false, +1, notes[k]};
            for (int out : {+1, -1}) {
                if (equal_scaled(Mm[k], E[k], sg, out)) {
                    b.matched = true;
                    b.sign = out;
                    break;
                }
            }
            count += b.matched;
            cur.blocks.push_back(b);
        }
        if (first || count > best_count) {
            best = cur;
            best_count = count;
            first = false;
        }
        if (count == out_cells.size()) break;
    }
    return best;
}

} // namespace detail

// Degrees 1-3. Degree 3 adds the mirror image of d1 on K^{2,1} applied to the
// YI input to recover delta^{3,2}; the report says so in the block note.
template <class F>
std::vector<ReconcileDegree> reconcile_low_degree(const Multicomplex<F>& M)
{
    const auto& C = M.complexes();
    const auto& o = C.ops();
    std::vector<ReconcileDegree> out;

    {
        std::vector<Cell> in = {{1, 0}}, tg = {{2, 0}, {3, -1}};
        out.push_back(detail::reconcile_search<F>(
            C, 1, in, tg, {"delta1_H", "delta1_YB"}, {"", ""},
            [&](const Cochain<F>& x) { return Cochain<F>{M.d1(in[0], x[0]), M.d2(in[0], x[0])}; },
            [&](const Cochain<F>& x) { return Cochain<F>{delta1_H(o, x[0]), delta1_YB(o, x[0])}; }));
    }
    {
        // K^{2,0} holds the 2->1 cochain, K^{3,-1} the 2->2 one
        std::vector<Cell> in = {{2, 0}, {3, -1}}, tg = {{3, 0}, {4, -1}, {5, -2}};
        out.push_back(detail::reconcile_search<F>(
            C, 2, in, tg, {"delta2_H", "delta2_YI", "delta2_YB"}, {"", "", ""},
            [&](const Cochain<F>& x) {
                return Cochain<F>{M.d1(in[0], x[0]), M.d2(in[0], x[0]) + M.d1(in[1], x[1]), M.d2(in[1], x[1])};
            },
            [&](const Cochain<F>& x) {
                return Cochain<F>{delta2_H(o, x[0]), delta2_YI(o, x[1], x[0]), delta2_YB(o, x[1])};
            }));
    }
    {
        // inputs: alpha' (IY), gamma (3->1), alpha (YI), beta (3->3)
        std::vector<Cell> in = {{2, 1}, {3, 0}, {4, -1}, {5, -2}};
        std::vector<Cell> tg = {{3, 1}, {4, 0}, {5, -1}, {6, -2}, {7, -3}};
        out.push_back(detail::reconcile_search<F>(
            C, 3, in, tg, {"delta32_YI", "delta3_H", "delta33_YI", "delta31_YI", "delta3_YB"},
            {"d1 on K^{2,1} plus the mirror of d1 on K^{2,1} applied to the YI input", "", "", "", ""},
            [&](const Cochain<F>& x) {
                auto completion = mirror(M.d1_mirror(in[0], mirror(x[2])));
                return Cochain<F>{M.d1(in[0], x[0]) + completion, M.d1(in[1], x[1]),
                                  M.d1(in[2], x[2]) + M.d2(in[1], x[1]), M.d1(in[3], x[3]) + M.d2(in[2], x[2]),
                                  M.d2(in[3], x[3])};
            },
            [&](const Cochain<F>& x) {
                return Cochain<F>{delta32_YI(o, x[2], x[0]), delta3_H(o, x[1]), delta33_YI(o, x[2], x[1]),
                                  delta31_YI(o, x[3], x[2]), delta_n_YB(o, 3, x[3])};
            }));
    }
    return out;
}

// the K^{2,1} block alone, without the mirror completion, for the report
template <class F>
bool k21_matches_without_completion(const Multicomplex<F>& M)
{
    const auto& C = M.complexes();
    const auto& o = C.ops();
    std::vector<Cell> in = {{2, 1}, {4, -1}}, tg = {{3, 1}};
    auto r = detail::reconcile_search<F>(
        C, 3, in, tg, {"delta32_YI"}, {""},
        [&](const Cochain<F>& x) { return Cochain<F>{M.d1(in[0], x[0])}; },
        [&](const Cochain<F>& x) { return Cochain<F>{delta32_YI(o, x[1], x[0])}; });
    return r.matched();
}

} // namespace braidcoh
