#pragma once
// Cochain complexes of a braided algebra: Hochschild (H), Yang-Baxter (YB),
// Yang-Baxter-Hochschild (YBH) and braided commutative (BC), as explicit
// differentials on tuples of tensor maps plus their flattened matrices.
//
// Composition order follows the usual juxtaposition: in "(1 x mu)(R x 1)" the
// right factor is applied first. Signs and arity fixes that deviate from the
// printed formulas are listed in active_resolutions().
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace braidcoh {

// Structural maps of one algebra with cached sigma insertions and chains.
// Safe to share between threads.
template <class F>
class Ops {
public:
    using TM = TensorMap<F>;

    explicit Ops(const BraidedAlgebra<F>& A) : A_(A) {}

    const BraidedAlgebra<F>& algebra() const { return A_; }
    const F& field() const { return A_.field; }
    unsigned d() const { return A_.d; }
    const TM& mu() const { return A_.mu; }
    const TM& R() const { return A_.R; }

    const TM& I(unsigned n) const
    {
        return cached(key('I', n, 0, 0), [&] { return identity(A_.field, A_.d, n); });
    }
    // sigma_{n,i} = 1^{i-1} (x) R (x) 1^{n-i-1}
    const TM& sig(unsigned n, unsigned i) const
    {
        return cached(key('s', n, i, 0), [&] { return sigma(A_.R, n, i); });
    }
    // 1^{i-1} (x) mu (x) 1^{n-i-1} : n -> n-1
    const TM& mu_at(unsigned n, unsigned i) const
    {
        if (i < 1 || i + 1 > n) fail(ErrorKind::PositionOutOfRange, "mu position");
        return cached(key('m', n, i, 0), [&] { return tp(I(i - 1), A_.mu, I(n - i - 1)); });
    }
    // sigma_hi sigma_{hi-1} ... sigma_lo on n strands (identity when hi < lo)
    const TM& desc(unsigned n, int hi, int lo) const
    {
        if (hi < lo) return I(n);
        return cached(key('d', n, static_cast<unsigned>(hi), static_cast<unsigned>(lo)), [&] {
            TM r = sig(n, static_cast<unsigned>(hi));
            for (int k = hi - 1; k >= lo; --k) r = r * sig(n, static_cast<unsigned>(k));
            return r;
        });
    }
    // sigma_lo sigma_{lo+1} ... sigma_hi on n strands (identity when hi < lo)
    const TM& asc(unsigned n, int lo, int hi) const
    {
        if (hi < lo) return I(n);
        return cached(key('a', n, static_cast<unsigned>(lo), static_cast<unsigned>(hi)), [&] {
            TM r = sig(n, static_cast<unsigned>(lo));
            for (int k = lo + 1; k <= hi; ++k) r = r * sig(n, static_cast<unsigned>(k));
            return r;
        });
    }

    TM zero(unsigned dom, unsigned cod) const { return zero_map(A_.field, A_.d, dom, cod); }
    typename F::value_type sgn(int s) const { return A_.field.from_int(s); }

private:
    using Key = std::tuple<char, unsigned, unsigned, unsigned>;
    static Key key(char c, unsigned a, unsigned b, unsigned e) { return {c, a, b, e}; }

    template <class Make>
    const TM& cached(const Key& k, Make&& make) const
    {
        {
            std::lock_guard<std::mutex> g(m_);
            auto it = cache_.find(k);
            if (it != cache_.end()) return it->second;
        }
        TM v = make();
        std::lock_guard<std::mutex> g(m_);
        return cache_.emplace(k, std::move(v)).first->second;
    }

    const BraidedAlgebra<F>& A_;
    mutable std::mutex m_;
    mutable std::map<Key, TM> cache_;
};

// signed sum of terms, each built lazily
template <class F>
class TermSum {
public:
    TermSum(const Ops<F>& o, unsigned dom, unsigned cod) : o_(o), acc_(o.zero(dom, cod)) {}
    void add(int sign, const TensorMap<F>& t)
    {
        acc_ = linear_combination(acc_, o_.field().one(), t, o_.sgn(sign));
    }
    TensorMap<F> take() { return std::move(acc_); }

private:
    const Ops<F>& o_;
    TensorMap<F> acc_;
};

template <class F>
void expect_shape(const TensorMap<F>& m, unsigned dom, unsigned cod, const char* what)
{
    if (m.dom() != dom || m.cod() != cod)
        fail(ErrorKind::ShapeMismatch, std::string(what) + ": expected " + std::to_string(dom) + "->" +
                                           std::to_string(cod) + ", got " + std::to_string(m.dom()) + "->" +
                                           std::to_string(m.cod()));
}

// ---------------------------------------------------------------- Hochschild

template <class F>
TensorMap<F> delta1_H(const Ops<F>& o, const TensorMap<F>& f)
{
    expect_shape(f, 1, 1, "delta1_H");
    const auto& I1 = o.I(1);
    TermSum<F> s(o, 2, 1);
    if (f.is_zero()) return s.take();
    s.add(+1, o.mu() * tp(f, I1));
    s.add(+1, o.mu() * tp(I1, f));
    s.add(-1, f * o.mu());
    return s.take();
}

template <class F>
TensorMap<F> delta2_H(const Ops<F>& o, const TensorMap<F>& p)
{
    expect_shape(p, 2, 1, "delta2_H");
    const auto& I1 = o.I(1);
    TermSum<F> s(o, 3, 1);
    if (p.is_zero()) return s.take();
    s.add(+1, o.mu() * tp(p, I1));
    s.add(+1, p * o.mu_at(3, 1));
    s.add(-1, o.mu() * tp(I1, p));
    s.add(-1, p * o.mu_at(3, 2));
    return s.take();
}

// the standard sign pattern, which is what the multicomplex t = 0 row produces
template <class F>
TensorMap<F> hochschild_standard(const Ops<F>& o, unsigned n, const TensorMap<F>& x)
{
    expect_shape(x, n, 1, "Hochschild cochain");
    const auto& I1 = o.I(1);
    TermSum<F> s(o, n + 1, 1);
    if (x.is_zero()) return s.take();
    s.add(+1, o.mu() * tp(I1, x));
    for (unsigned i = 1; i <= n; ++i) s.add((i % 2) ? -1 : +1, x * o.mu_at(n + 1, i));
    s.add((n % 2) ? +1 : -1, o.mu() * tp(x, I1));
    return s.take();
}

template <class F>
TensorMap<F> delta3_H(const Ops<F>& o, const TensorMap<F>& g)
{
    expect_shape(g, 3, 1, "delta3_H");
    return hochschild_standard(o, 3, g);
}

// degree n Hochschild differential with the explicit low-degree sign choices
template <class F>
TensorMap<F> delta_H(const Ops<F>& o, unsigned n, const TensorMap<F>& x)
{
    if (n == 1) return delta1_H(o, x);
    if (n == 2) return delta2_H(o, x);
    return hochschild_standard(o, n, x);
}

// ---------------------------------------------------------------- Yang-Baxter

template <class F>
TensorMap<F> delta1_YB(const Ops<F>& o, const TensorMap<F>& f)
{
    expect_shape(f, 1, 1, "delta1_YB");
    const auto& I1 = o.I(1);
    TermSum<F> s(o, 2, 2);
    if (f.is_zero()) return s.take();
    s.add(+1, o.R() * tp(f, I1));
    s.add(+1, o.R() * tp(I1, f));
    s.add(-1, tp(f, I1) * o.R());
    s.add(-1, tp(I1, f) * o.R());
    return s.take();
}

template <class F>
TensorMap<F> delta2_YB(const Ops<F>& o, const TensorMap<F>& p)
{
    expect_shape(p, 2, 2, "delta2_YB");
    const auto& I1 = o.I(1);
    const auto& R1 = o.sig(3, 1);
    const auto& R2 = o.sig(3, 2);
    TermSum<F> s(o, 3, 3);
    if (p.is_zero()) return s.take();
    auto p1 = tp(p, I1), p2 = tp(I1, p);
    s.add(+1, R1 * R2 * p1);
    s.add(+1, R1 * p2 * R1);
    s.add(+1, p1 * R2 * R1);
    s.add(-1, R2 * R1 * p2);
    s.add(-1, R2 * p1 * R2);
    s.add(-1, p2 * R1 * R2);
    return s.take();
}

// d^n_YB = sum_{i=1}^{n+1} (-1)^{i+1} d_{YB,i}, with
// d_{YB,i}(phi) = s_{i-1}..s_1 (1 x phi) s_1..s_{n-i+1} - s_i..s_n (phi x 1) s_n..s_{n-i+2}
template <class F>
TensorMap<F> delta_n_YB(const Ops<F>& o, unsigned n, const TensorMap<F>& phi)
{
    if (n < 1) fail(ErrorKind::UnsupportedDegree, "YB degree must be positive");
    expect_shape(phi, n, n, "delta_n_YB");
    const auto& I1 = o.I(1);
    unsigned m = n + 1;
    TermSum<F> s(o, m, m);
    if (phi.is_zero()) return s.take();
    auto left = tp(I1, phi), right = tp(phi, I1);
    int N = static_cast<int>(n);
    for (int i = 1; i <= N + 1; ++i) {
        int sign = (i % 2) ? +1 : -1;
        s.add(sign, o.desc(m, i - 1, 1) * left * o.asc(m, 1, N - i + 1));
        s.add(-sign, o.asc(m, i, N) * right * o.desc(m, N, N - i + 2));
    }
    return s.take();
}

// ---------------------------------------------------------------- YBH / BC degree 2

template <class F>
TensorMap<F> delta2_YI(const Ops<F>& o, const TensorMap<F>& phi, const TensorMap<F>& psi)
{
    expect_shape(phi, 2, 2, "delta2_YI phi");
    expect_shape(psi, 2, 1, "delta2_YI psi");
    const auto& I1 = o.I(1);
    const auto& R1 = o.sig(3, 1);
    const auto& R2 = o.sig(3, 2);
    TermSum<F> s(o, 3, 2);
    if (!psi.is_zero()) {
        s.add(+1, tp(I1, psi) * R1 * R2);
        s.add(-1, o.R() * tp(psi, I1));
    }
    if (!phi.is_zero()) {
        s.add(+1, tp(I1, o.mu()) * tp(phi, I1) * R2);
        s.add(+1, tp(I1, o.mu()) * R1 * tp(I1, phi));
        s.add(-1, phi * o.mu_at(3, 1));
    }
    return s.take();
}

template <class F>
TensorMap<F> delta2_IY(const Ops<F>& o, const TensorMap<F>& phi, const TensorMap<F>& psi)
{
    expect_shape(phi, 2, 2, "delta2_IY phi");
    expect_shape(psi, 2, 1, "delta2_IY psi");
    const auto& I1 = o.I(1);
    const auto& R1 = o.sig(3, 1);
    const auto& R2 = o.sig(3, 2);
    TermSum<F> s(o, 3, 2);
    if (!psi.is_zero()) {
        s.add(+1, tp(psi, I1) * R2 * R1);
        s.add(-1, o.R() * tp(I1, psi));
    }
    if (!phi.is_zero()) {
        s.add(+1, tp(o.mu(), I1) * tp(I1, phi) * R1);
        s.add(+1, tp(o.mu(), I1) * R2 * tp(phi, I1));
        s.add(-1, phi * o.mu_at(3, 2));
    }
    return s.take();
}

// BC component: mu phi + psi R - psi
template <class F>
TensorMap<F> lambda2_BC(const Ops<F>& o, const TensorMap<F>& phi, const TensorMap<F>& psi)
{
    expect_shape(phi, 2, 2, "BC phi");
    expect_shape(psi, 2, 1, "BC psi");
    TermSum<F> s(o, 2, 1);
    if (!phi.is_zero()) s.add(+1, o.mu() * phi);
    if (!psi.is_zero()) {
        s.add(+1, psi * o.R());
        s.add(-1, psi);
    }
    return s.take();
}

// ---------------------------------------------------------------- degree 3

// YI part, 4 -> 3: beta = 3->3 block, alpha = YI 3->2 block
template <class F>
TensorMap<F> delta31_YI(const Ops<F>& o, const TensorMap<F>& beta, const TensorMap<F>& alpha)
{
    expect_shape(beta, 3, 3, "delta31 beta");
    expect_shape(alpha, 3, 2, "delta31 alpha");
    const auto& I1 = o.I(1);
    const auto& I2 = o.I(2);
    TermSum<F> s(o, 4, 3);
    if (!alpha.is_zero()) {
        auto a1 = tp(alpha, I1), a2 = tp(I1, alpha);
        s.add(+1, o.sig(3, 2) * a1 * o.sig(4, 3));
        s.add(+1, a2 * o.sig(4, 1) * o.sig(4, 2) * o.sig(4, 3));
        s.add(-1, o.sig(3, 1) * o.sig(3, 2) * a1);
        s.add(-1, o.sig(3, 1) * a2 * o.sig(4, 1) * o.sig(4, 2));
    }
    if (!beta.is_zero()) {
        const auto& m3 = o.mu_at(4, 3);
        s.add(+1, m3 * o.sig(4, 2) * o.sig(4, 1) * tp(I1, beta));
        s.add(+1, m3 * tp(beta, I1) * o.sig(4, 3) * o.sig(4, 2));
        s.add(-1, beta * o.mu_at(4, 1));
    }
    (void)I2;
    return s.take();
}

// YI part, 4 -> 2: alpha = YI block, alphap = IY block
template <class F>
TensorMap<F> delta32_YI(const Ops<F>& o, const TensorMap<F>& alpha, const TensorMap<F>& alphap)
{
    expect_shape(alpha, 3, 2, "delta32 alpha");
    expect_shape(alphap, 3, 2, "delta32 alpha'");
    const auto& I1 = o.I(1);
    auto mu1 = tp(o.mu(), I1), mu2 = tp(I1, o.mu());
    TermSum<F> s(o, 4, 2);
    if (!alphap.is_zero()) {
        s.add(+1, alphap * o.mu_at(4, 1));
        s.add(-1, mu2 * o.sig(3, 1) * tp(I1, alphap));
        s.add(-1, mu2 * tp(alphap, I1) * o.sig(4, 3) * o.sig(4, 2));
    }
    if (!alpha.is_zero()) {
        s.add(+1, mu1 * o.sig(3, 2) * tp(alpha, I1));
        s.add(+1, mu1 * tp(I1, alpha) * o.sig(4, 1) * o.sig(4, 2));
        s.add(-1, alpha * o.mu_at(4, 3));
    }
    return s.take();
}

// YI part, 4 -> 2: alpha = YI block, gamma = 3->1 block
template <class F>
TensorMap<F> delta33_YI(const Ops<F>& o, const TensorMap<F>& alpha, const TensorMap<F>& gamma)
{
    expect_shape(alpha, 3, 2, "delta33 alpha");
    expect_shape(gamma, 3, 1, "delta33 gamma");
    const auto& I1 = o.I(1);
    auto mu2 = tp(I1, o.mu());
    TermSum<F> s(o, 4, 2);
    if (!gamma.is_zero()) {
        s.add(+1, o.R() * tp(gamma, I1));
        s.add(-1, tp(I1, gamma) * o.sig(4, 1) * o.sig(4, 2) * o.sig(4, 3));
    }
    if (!alpha.is_zero()) {
        s.add(-1, alpha * o.mu_at(4, 2));
        s.add(-1, mu2 * o.sig(3, 1) * tp(I1, alpha));
        s.add(+1, alpha * o.mu_at(4, 1));
        s.add(+1, mu2 * tp(alpha, I1) * o.sig(4, 3));
    }
    return s.take();
}

// IY parts by the mirror rule, evaluated on the mirror algebra
template <class F>
TensorMap<F> delta31_IY(const Ops<F>& om, const TensorMap<F>& beta, const TensorMap<F>& alphap)
{
    return mirror(delta31_YI(om, -mirror(beta), mirror(alphap)));
}
template <class F>
TensorMap<F> delta32_IY(const Ops<F>& om, const TensorMap<F>& alphap, const TensorMap<F>& alpha)
{
    return mirror(delta32_YI(om, mirror(alphap), mirror(alpha)));
}
template <class F>
TensorMap<F> delta33_IY(const Ops<F>& om, const TensorMap<F>& alphap, const TensorMap<F>& gamma)
{
    return mirror(delta33_YI(om, mirror(alphap), -mirror(gamma)));
}

// BC blocks of degree 3 -> 4; the 2->1 slot is tau
template <class F>
TensorMap<F> delta3_BC_YI(const Ops<F>& o, const TensorMap<F>& alpha, const TensorMap<F>& beta, const TensorMap<F>& tau)
{
    expect_shape(alpha, 3, 2, "BC:YI alpha");
    expect_shape(beta, 3, 3, "BC:YI beta");
    expect_shape(tau, 2, 1, "BC:YI tau");
    const auto& I1 = o.I(1);
    TermSum<F> s(o, 3, 2);
    if (!alpha.is_zero()) {
        s.add(+1, alpha * o.sig(3, 1));
        s.add(-1, alpha);
    }
    if (!tau.is_zero()) {
        s.add(+1, o.R() * tp(tau, I1));
        s.add(-1, tp(I1, tau) * o.sig(3, 1) * o.sig(3, 2));
    }
    if (!beta.is_zero()) s.add(-1, tp(I1, o.mu()) * beta);
    return s.take();
}

template <class F>
TensorMap<F> delta3_BC_IY(const Ops<F>& o, const TensorMap<F>& alphap, const TensorMap<F>& beta, const TensorMap<F>& tau)
{
    expect_shape(alphap, 3, 2, "BC:IY alpha'");
    expect_shape(beta, 3, 3, "BC:IY beta");
    expect_shape(tau, 2, 1, "BC:IY tau");
    const auto& I1 = o.I(1);
    TermSum<F> s(o, 3, 2);
    if (!beta.is_zero()) s.add(+1, tp(o.mu(), I1) * beta);
    if (!alphap.is_zero()) {
        s.add(+1, alphap * o.sig(3, 2));
        s.add(-1, alphap);
    }
    if (!tau.is_zero()) {
        s.add(+1, o.R() * tp(I1, tau));
        s.add(-1, tp(tau, I1) * o.sig(3, 2) * o.sig(3, 1));
    }
    return s.take();
}

// degree-4 candidate block, characteristic 2 only:
// Phi = BC:YI block (3->2), Psi = YI 4->3 block, Sigma = YB 4->4 block
template <class F>
TensorMap<F> delta41_BC(const Ops<F>& o, const TensorMap<F>& Phi, const TensorMap<F>& Psi, const TensorMap<F>& Sigma)
{
    if (o.field().characteristic() != 2)
        fail(ErrorKind::CharacteristicNot2, "the degree-4 block is only a differential in characteristic 2");
    expect_shape(Phi, 3, 2, "delta41 Phi");
    expect_shape(Psi, 4, 3, "delta41 Psi");
    expect_shape(Sigma, 4, 4, "delta41 Sigma");
    const auto& I1 = o.I(1);
    TermSum<F> s(o, 4, 3);
    if (!Phi.is_zero()) {
        auto p1 = tp(Phi, I1), p2 = tp(I1, Phi);
        s.add(+1, o.sig(3, 1) * o.sig(3, 2) * p1);
        s.add(+1, o.sig(3, 1) * p2 * o.sig(4, 1) * o.sig(4, 2));
        s.add(-1, o.sig(3, 2) * p1 * o.sig(4, 3));
        s.add(-1, p2 * o.sig(4, 1) * o.sig(4, 2) * o.sig(4, 3));
    }
    if (!Psi.is_zero()) {
        s.add(-1, Psi);
        s.add(-1, Psi * o.sig(4, 1));
    }
    if (!Sigma.is_zero()) s.add(+1, o.mu_at(4, 3) * Sigma);
    return s.take();
}

// ---------------------------------------------------------------- graded cochains

enum class Theory { Hochschild, YB, YBH, BC };

inline const char* theory_name(Theory t)
{
    switch (t) {
    case Theory::Hochschild: return "H";
    case Theory::YB: return "YB";
    case Theory::YBH: return "YBH";
    case Theory::BC: return "BC";
    }
    return "?";
}

inline Theory theory_parse(const std::string& s)
{
    std::string l;
    for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (l == "h" || l == "hochschild") return Theory::Hochschild;
    if (l == "yb") return Theory::YB;
    if (l == "ybh") return Theory::YBH;
    if (l == "bc") return Theory::BC;
    fail(ErrorKind::ParseError, "theory must be one of h, yb, ybh, bc");
}

struct Block {
    std::string name;
    unsigned dom, cod;
};

// Component order of each cochain group. YBH degree 3 is [YB, YI, IY, H];
// BC degree 3 is [YB, IY, YI, H, BC]; degree 4 lists the YBH blocks, then the
// two BC blocks. BC degree 5 is the single block hit by the degree-4 candidate.
inline std::vector<Block> cochain_shape(Theory t, unsigned n)
{
    if (n == 0) fail(ErrorKind::UnsupportedDegree, "cochains start in degree 1");
    switch (t) {
    case Theory::Hochschild: return {{"H", n, 1}};
    case Theory::YB: return {{"YB", n, n}};
    case Theory::YBH:
    case Theory::BC:
        if (n == 1) return {{"C1", 1, 1}};
        if (n == 2) return {{"YB", 2, 2}, {"H", 2, 1}};
        if (n == 3) {
            if (t == Theory::YBH) return {{"YB", 3, 3}, {"YI", 3, 2}, {"IY", 3, 2}, {"H", 3, 1}};
            return {{"YB", 3, 3}, {"IY", 3, 2}, {"YI", 3, 2}, {"H", 3, 1}, {"BC", 2, 1}};
        }
        if (n == 4) {
            std::vector<Block> b = {{"YB", 4, 4},   {"YI31", 4, 3}, {"YI32", 4, 2}, {"YI33", 4, 2},
                                    {"IY31", 4, 3}, {"IY32", 4, 2}, {"IY33", 4, 2}, {"H", 4, 1}};
            if (t == Theory::BC) {
                b.push_back({"BC:YI", 3, 2});
                b.push_back({"BC:IY", 3, 2});
            }
            return b;
        }
        if (n == 5 && t == Theory::BC) return {{"D41", 4, 3}};
        break;
    }
    fail(ErrorKind::UnsupportedDegree, std::string(theory_name(t)) + " cochains in degree " + std::to_string(n));
}

inline size_t block_size(unsigned d, const Block& b) { return ipow(d, b.dom) * ipow(d, b.cod); }

inline size_t cochain_dim(unsigned d, const std::vector<Block>& shape)
{
    size_t n = 0;
    for (auto& b : shape) n += block_size(d, b);
    return n;
}

template <class F>
using Cochain = std::vector<TensorMap<F>>;

template <class F>
Cochain<F> zero_cochain(const Ops<F>& o, const std::vector<Block>& shape)
{
    Cochain<F> c;
    for (auto& b : shape) c.push_back(o.zero(b.dom, b.cod));
    return c;
}

template <class F>
void check_cochain(const Cochain<F>& c, const std::vector<Block>& shape)
{
    if (c.size() != shape.size()) fail(ErrorKind::ShapeMismatch, "wrong number of cochain components");
    for (size_t k = 0; k < c.size(); ++k) expect_shape(c[k], shape[k].dom, shape[k].cod, shape[k].name.c_str());
}

template <class F>
SparseVec<F> flatten_cochain(const Cochain<F>& c)
{
    SparseVec<F> out;
    size_t off = 0;
    for (auto& m : c) {
        auto v = flatten(m, off);
        out.insert(out.end(), v.begin(), v.end());
        off += m.rows() * m.cols();
    }
    return out;
}

template <class F>
Cochain<F> unflatten_cochain(const F& f, unsigned d, const std::vector<Block>& shape, const SparseVec<F>& v)
{
    Cochain<F> c;
    size_t off = 0;
    for (auto& b : shape) {
        c.push_back(unflatten(f, d, b.dom, b.cod, v, off));
        off += block_size(d, b);
    }
    return c;
}

// Matrix of a linear map given on tuples of tensor maps: column j is the image
// of the j-th unit cochain. Columns are independent and built in parallel.
template <class F, class Fn>
FlatMatrix<F> matrix_of_linear(const F& f, unsigned d, const std::vector<Block>& src, size_t rows, Fn&& fn)
{
    size_t cols = cochain_dim(d, src);
    FlatMatrix<F> M(f, rows, cols);
    std::vector<size_t> start;
    size_t off = 0;
    for (auto& b : src) {
        start.push_back(off);
        off += block_size(d, b);
    }
    parallel_for(cols, [&](size_t j) {
        size_t k = 0;
        while (k + 1 < src.size() && j >= start[k + 1]) ++k;
        size_t local = j - start[k];
        size_t bc = ipow(d, src[k].dom);
        Cochain<F> c;
        for (size_t b = 0; b < src.size(); ++b) {
            if (b == k)
                c.push_back(TensorMap<F>::from_triplets(f, d, src[b].dom, src[b].cod, {{local / bc, local % bc, f.one()}}));
            else
                c.push_back(zero_map(f, d, src[b].dom, src[b].cod));
        }
        auto v = flatten_cochain(fn(c));
        if (!v.empty() && v.back().first >= rows) fail(ErrorKind::ShapeMismatch, "image longer than the row count");
        M.col[j] = std::move(v);
    });
    return M;
}

// Differentials of one algebra; holds the structural caches for A and its mirror.
template <class F>
class Complexes {
public:
    explicit Complexes(const BraidedAlgebra<F>& A) : A_(A), Am_(mirror_algebra(A)), o_(A_), om_(Am_) {}

    const Ops<F>& ops() const { return o_; }
    const Ops<F>& mirror_ops() const { return om_; }
    const BraidedAlgebra<F>& algebra() const { return A_; }

    static bool supported(Theory t, unsigned n, uint64_t characteristic)
    {
        if (n == 0) return false;
        if (t == Theory::Hochschild || t == Theory::YB) return true;
        if (n <= 3) return true;
        return t == Theory::BC && n == 4 && characteristic == 2;
    }

    // delta^n : C^n -> C^{n+1}
    Cochain<F> delta(Theory t, unsigned n, const Cochain<F>& c) const
    {
        if (!supported(t, n, A_.field.characteristic()))
            fail(n == 4 && t == Theory::BC ? ErrorKind::CharacteristicNot2 : ErrorKind::UnsupportedDegree,
                 std::string(theory_name(t)) + " differential in degree " + std::to_string(n));
        check_cochain(c, cochain_shape(t, n));
        switch (t) {
        case Theory::Hochschild: return {delta_H(o_, n, c[0])};
        case Theory::YB: return {delta_n_YB(o_, n, c[0])};
        case Theory::YBH:
        case Theory::BC: break;
        }
        if (n == 1) return {delta1_YB(o_, c[0]), delta1_H(o_, c[0])};
        if (n == 2) {
            const auto &phi = c[0], &psi = c[1];
            auto yb = delta2_YB(o_, phi), yi = delta2_YI(o_, phi, psi), iy = delta2_IY(o_, phi, psi);
            auto h = delta2_H(o_, psi);
            if (t == Theory::YBH) return {yb, yi, iy, h};
            return {yb, iy, yi, h, lambda2_BC(o_, phi, psi)};
        }
        if (n == 3) {
            if (t == Theory::YBH) return delta3_YBH(c[0], c[1], c[2], c[3]);
            const auto &beta = c[0], &alphap = c[1], &alpha = c[2], &gamma = c[3], &tau = c[4];
            auto out = delta3_YBH(beta, alpha, alphap, gamma);
            out.push_back(delta3_BC_YI(o_, alpha, beta, tau));
            out.push_back(delta3_BC_IY(o_, alphap, beta, tau));
            return out;
        }
        // BC degree 4 in characteristic 2
        return {delta41_BC(o_, c[8], c[1], c[0])};
    }

    Cochain<F> delta3_YBH(const TensorMap<F>& beta, const TensorMap<F>& alpha, const TensorMap<F>& alphap,
                          const TensorMap<F>& gamma) const
    {
        return {delta_n_YB(o_, 3, beta),
                delta31_YI(o_, beta, alpha),
                delta32_YI(o_, alpha, alphap),
                delta33_YI(o_, alpha, gamma),
                delta31_IY(om_, beta, alphap),
                delta32_IY(om_, alphap, alpha),
                delta33_IY(om_, alphap, gamma),
                delta3_H(o_, gamma)};
    }

    // columns index C^n, rows index C^{n+1}, both in cochain_shape order
    FlatMatrix<F> differential_matrix(Theory t, unsigned n) const
    {
        if (!supported(t, n, A_.field.characteristic()))
            fail(n == 4 && t == Theory::BC ? ErrorKind::CharacteristicNot2 : ErrorKind::UnsupportedDegree,
                 std::string(theory_name(t)) + " differential in degree " + std::to_string(n));
        auto src = cochain_shape(t, n);
        auto dst = cochain_shape(t, n + 1);
        return matrix_of_linear(A_.field, A_.d, src, cochain_dim(A_.d, dst),
                                [&](const Cochain<F>& c) { return delta(t, n, c); });
    }

private:
    BraidedAlgebra<F> A_, Am_;
    Ops<F> o_, om_;
};

struct CohomologyReport {
    std::string theory;
    unsigned degree = 0;
    size_t dim_cochain = 0;
    size_t rank_delta_prev = 0;
    size_t nullity_delta = 0;
    size_t dim_H = 0;
};

// dim H^n = nullity(delta^n) - rank(delta^{n-1}); im in ker is verified first
template <class F>
CohomologyReport cohomology_dim(const Complexes<F>& C, Theory t, unsigned n)
{
    uint64_t ch = C.algebra().field.characteristic();
    if (!Complexes<F>::supported(t, n, ch) || (t == Theory::BC && n == 4))
        fail(ErrorKind::UnsupportedDegree, std::string(theory_name(t)) + " cohomology in degree " + std::to_string(n));
    CohomologyReport rep;
    rep.theory = theory_name(t);
    rep.degree = n;
    rep.dim_cochain = cochain_dim(C.algebra().d, cochain_shape(t, n));
    auto Dn = C.differential_matrix(t, n);
    rep.nullity_delta = Dn.cols - rank(Dn);
    if (n >= 2) {
        auto Dp = C.differential_matrix(t, n - 1);
        if (!matmul(Dn, Dp).is_zero())
            fail(ErrorKind::ComplexPropertyViolated,
                 std::string(theory_name(t)) + ": delta^" + std::to_string(n) + " delta^" + std::to_string(n - 1) + " != 0");
        rep.rank_delta_prev = rank(Dp);
    }
    rep.dim_H = rep.nullity_delta - rep.rank_delta_prev;
    return rep;
}

struct Resolution {
    std::string id;
    std::string text;
};

// every reading that differs from the literal printed formulas
inline std::vector<Resolution> active_resolutions()
{
    return {
        {"bc-degree2", "BC component of delta2 is mu phi + psi R - psi (the printed R psi does not type-check)"},
        {"bc-degree3-slot", "the 2->1 argument of the degree-3 BC blocks is tau"},
        {"yb-general", "general YB differential used exactly as printed; equals the explicit degree 1 and 2 formulas"},
        {"yi31", "delta^{3,1}_YI uses (R x 1)(1 x R)(alpha x 1) for the sixth term; signs + + + + - - -"},
        {"yi32", "delta^{3,2}_YI terms 3 and 6 arity-corrected: (mu x 1)(1 x alpha)(R x 1 x 1)(1 x R x 1) and (1 x mu)(alpha' x 1)(1 x 1 x R)(1 x R x 1)"},
        {"yi33", "delta^{3,3}_YI uses the printed formula with gamma replaced by -gamma"},
        {"iy-mirror", "IY degree-3 blocks: M d31(A^m; -M beta, M alpha'), M d32(A^m; M alpha', M alpha), M d33(A^m; M alpha', -M gamma)"},
        {"c4-bc", "C^4_BC carries both BC:YI and BC:IY blocks (3->2 each)"},
        {"hochschild-3", "delta3_H is the standard Hochschild differential"},
        {"upsilon", "Upsilon_r = sum psi_i phi_j; its sign in the obstruction identity is s = +1"},
        {"lambda", "mu_p in Lambda_r is the coefficient psi_p"},
        {"delta41", "degree-4 candidate read with Phi = BC:YI block, Psi = YI31 block, Sigma = YB block"},
        {"mc-d10-sign", "multicomplex d_{1,0} enters with sign +1 for every t (the printed (-1)^t breaks d1^2 = 0 in odd characteristic)"},
        {"mc-rho", "multicomplex d1 uses rho = n-q+2 for t <= 0 and rho = n-q+1 for t > 0"},
        {"mc-arity", "multicomplex d_{1,0}: (1^{q-1} x mu) and chain to sigma_{q+1,q-1}; middle terms psi(1^{i-1} x mu x 1^{n-i})"},
        {"mc-d2-left", "multicomplex d2: left sigma chains act on the q+1 output strands"},
        {"hopf-zeta", "Psi zeta terms use (1 x Delta) zeta and (1 x zeta) Delta (operator-side reading; the (Delta x 1)/(zeta x 1) reading also passes, mixed readings fail)"},
        {"hopf-sweedler", "adjoint R uses y1 (x) y2 (x) y3 = (Delta x 1) Delta y (equal to (1 x Delta) Delta by coassociativity) and the grouping S(y2) (x y3)"},
    };
}

} // namespace braidcoh
