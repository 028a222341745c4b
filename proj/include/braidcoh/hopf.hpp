#pragma once
// Finite-dimensional Hopf algebras, the adjoint R-matrix, normalized Hopf
// 2-cocycles (xi, zeta), the deformed antipode S' and the map Psi into BC
// 2-cocycles.
//
// A Hopf 2-cocycle is taken operationally: (mu + h xi, Delta + h zeta) is a
// bialgebra modulo h^2. Sweedler triples use (Delta x 1) Delta. In Psi, the
// zeta terms use (1 x Delta) zeta and (1 x zeta) Delta.
#include <string>
#include <vector>

#include "complexes.hpp"

namespace braidcoh {

template <class F>
struct HopfAlgebra {
    F field;
    unsigned d = 0;
    TensorMap<F> mu;    // 2 -> 1
    TensorMap<F> eta;   // 0 -> 1
    TensorMap<F> Delta; // 1 -> 2
    TensorMap<F> eps;   // 1 -> 0
    TensorMap<F> S;     // 1 -> 1

    HopfAlgebra(F f, unsigned dim, TensorMap<F> m, TensorMap<F> e, TensorMap<F> D, TensorMap<F> c, TensorMap<F> s)
        : field(std::move(f)), d(dim), mu(std::move(m)), eta(std::move(e)), Delta(std::move(D)), eps(std::move(c)),
          S(std::move(s))
    {
        auto need = [&](const TensorMap<F>& x, unsigned dom, unsigned cod, const char* what) {
            if (x.d() != d || x.dom() != dom || x.cod() != cod)
                fail(ErrorKind::ShapeMismatch, std::string(what) + " has the wrong shape");
        };
        need(mu, 2, 1, "mu");
        need(eta, 0, 1, "eta");
        need(Delta, 1, 2, "Delta");
        need(eps, 1, 0, "eps");
        need(S, 1, 1, "S");
    }

    TensorMap<F> id(unsigned n) const { return identity(field, d, n); }
    TensorMap<F> tau() const { return flip(field, d); }
};

// k[G]: Delta g = g (x) g, eps g = 1, S g = g^{-1}
template <class F>
HopfAlgebra<F> group_hopf(const GroupTable& G, const F& f)
{
    G.validate();
    unsigned d = G.order();
    using T = std::tuple<size_t, size_t, typename F::value_type>;
    std::vector<T> D, e, s;
    for (unsigned g = 0; g < d; ++g) {
        D.emplace_back(size_t(g) * d + g, g, f.one());
        e.emplace_back(0, g, f.one());
        s.emplace_back(G.inverse(g), g, f.one());
    }
    return HopfAlgebra<F>(f, d, linearize_binary(f, d, G.mul), group_unit(f, G),
                          TensorMap<F>::from_triplets(f, d, 1, 2, D), TensorMap<F>::from_triplets(f, d, 1, 0, e),
                          TensorMap<F>::from_triplets(f, d, 1, 1, s));
}

template <class F>
AxiomReport check_hopf(const HopfAlgebra<F>& H)
{
    auto I1 = H.id(1), I0 = H.id(0);
    const auto &mu = H.mu, &eta = H.eta, &D = H.Delta, &eps = H.eps, &S = H.S;
    auto mid = tp(I1, H.tau(), I1);
    AxiomReport rep;
    auto add = [&](const char* name, const TensorMap<F>& l, const TensorMap<F>& r) {
        rep.results.push_back(compare_sides(name, l, r));
    };
    add("assoc", mu * tp(mu, I1), mu * tp(I1, mu));
    add("unit_left", mu * tp(eta, I1), I1);
    add("unit_right", mu * tp(I1, eta), I1);
    add("coassoc", tp(D, I1) * D, tp(I1, D) * D);
    add("counit_left", tp(eps, I1) * D, I1);
    add("counit_right", tp(I1, eps) * D, I1);
    add("compat", D * mu, tp(mu, mu) * mid * tp(D, D));
    add("counit_mult", eps * mu, tp(eps, eps));
    add("unit_comult", D * eta, tp(eta, eta));
    add("counit_unit", eps * eta, I0);
    add("antipode_right", mu * tp(I1, S) * D, eta * eps);
    add("antipode_left", mu * tp(S, I1) * D, eta * eps);
    return rep;
}

namespace detail {

// y (x) ... -> y1 (x) inner(S(y2) (x) x (x) y3) built from pieces that Psi
// replaces one at a time: inner (3->1), the triple coproduct (1->3) and S.
template <class F>
TensorMap<F> adjoint_composite(const HopfAlgebra<F>& H, const TensorMap<F>& inner, const TensorMap<F>& Delta3,
                               const TensorMap<F>& S)
{
    auto I1 = H.id(1), I2 = H.id(2);
    // x (x) y1 (x) y2 (x) y3 -> y1 (x) y2 (x) x (x) y3
    auto P = permutation_map(H.field, H.d, {3, 1, 2, 4});
    return tp(I1, inner) * tp(I1, S, I2) * P * tp(I1, Delta3);
}

template <class F>
TensorMap<F> triple_coproduct(const HopfAlgebra<F>& H)
{
    return tp(H.Delta, H.id(1)) * H.Delta;
}

} // namespace detail

// R(x (x) y) = y1 (x) S(y2) x y3
template <class F>
BraidedAlgebra<F> adjoint_r_matrix(const HopfAlgebra<F>& H)
{
    auto rep = check_hopf(H);
    if (!rep.passed()) {
        std::string bad;
        for (auto& r : rep.results)
            if (!r.passed) bad += (bad.empty() ? "" : ", ") + r.axiom;
        fail(ErrorKind::HopfAxiomsFail, "Hopf axioms fail: " + bad);
    }
    auto inner = H.mu * tp(H.id(1), H.mu);
    auto R = detail::adjoint_composite(H, inner, detail::triple_coproduct(H), H.S);
    return BraidedAlgebra<F>(H.field, H.d, H.mu, R, H.eta);
}

template <class F>
struct HopfTwoCochain {
    TensorMap<F> xi;   // 2 -> 1
    TensorMap<F> zeta; // 1 -> 2
};

template <class F>
struct DeformedAntipode {
    TensorMap<F> s_prime; // 1 -> 1
};

namespace detail {

template <class F>
void check_cochain_shape(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c)
{
    expect_shape(c.xi, 2, 1, "xi");
    expect_shape(c.zeta, 1, 2, "zeta");
    if (c.xi.d() != H.d || c.zeta.d() != H.d) fail(ErrorKind::ShapeMismatch, "cochain dimension");
}

// the h^1 parts of associativity, coassociativity and bialgebra compatibility,
// each as LHS - RHS
template <class F>
std::vector<TensorMap<F>> first_order_defects(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c)
{
    auto I1 = H.id(1);
    const auto &mu = H.mu, &D = H.Delta, &xi = c.xi, &ze = c.zeta;
    auto mid = tp(I1, H.tau(), I1);
    auto a = mu * tp(xi, I1) + xi * tp(mu, I1) - mu * tp(I1, xi) - xi * tp(I1, mu);
    auto b = tp(D, I1) * ze + tp(ze, I1) * D - tp(I1, D) * ze - tp(I1, ze) * D;
    auto cc = ze * mu + D * xi - (tp(xi, mu) + tp(mu, xi)) * mid * tp(D, D) -
              tp(mu, mu) * mid * (tp(ze, D) + tp(D, ze));
    return {a, b, cc};
}

template <class F>
std::vector<TensorMap<F>> normalization_defects(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c)
{
    auto I1 = H.id(1);
    return {c.xi * tp(H.eta, I1), c.xi * tp(I1, H.eta), tp(H.eps, I1) * c.zeta, tp(I1, H.eps) * c.zeta};
}

} // namespace detail

template <class F>
AxiomReport check_hopf_2cocycle(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c)
{
    detail::check_cochain_shape(H, c);
    auto defects = detail::first_order_defects(H, c);
    const char* names[] = {"hochschild", "cohochschild", "compat"};
    AxiomReport rep;
    for (size_t k = 0; k < 3; ++k)
        rep.results.push_back(compare_sides(names[k], defects[k], zero_map(H.field, H.d, defects[k].dom(), defects[k].cod())));
    return rep;
}

template <class F>
bool normalize_check(const HopfTwoCochain<F>& c, const HopfAlgebra<F>& H)
{
    detail::check_cochain_shape(H, c);
    for (auto& m : detail::normalization_defects(H, c))
        if (!m.is_zero()) return false;
    return true;
}

namespace detail {

// h^1 parts of mu^(1 x S^) Delta^ = eta eps and mu^(S^ x 1) Delta^ = eta eps, as
// maps of S' (linear part) and the constant part
template <class F>
std::pair<TensorMap<F>, TensorMap<F>> antipode_linear(const HopfAlgebra<F>& H, const TensorMap<F>& sp)
{
    auto I1 = H.id(1);
    return {H.mu * tp(I1, sp) * H.Delta, H.mu * tp(sp, I1) * H.Delta};
}

template <class F>
std::pair<TensorMap<F>, TensorMap<F>> antipode_constant(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c)
{
    auto I1 = H.id(1);
    return {c.xi * tp(I1, H.S) * H.Delta + H.mu * tp(I1, H.S) * c.zeta,
            c.xi * tp(H.S, I1) * H.Delta + H.mu * tp(H.S, I1) * c.zeta};
}

} // namespace detail

// true iff both first-order antipode identities hold for S'
template <class F>
bool antipode_identities_hold(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c, const DeformedAntipode<F>& sp)
{
    auto [l1, l2] = detail::antipode_linear(H, sp.s_prime);
    auto [c1, c2] = detail::antipode_constant(H, c);
    return (l1 + c1).is_zero() && (l2 + c2).is_zero();
}

// Solves both identities jointly; the solution must exist and be unique.
template <class F>
DeformedAntipode<F> solve_deformed_antipode(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c)
{
    detail::check_cochain_shape(H, c);
    unsigned d = H.d;
    std::vector<Block> src = {{"S'", 1, 1}};
    auto A = matrix_of_linear(H.field, d, src, 2 * size_t(d) * d, [&](const Cochain<F>& x) {
        auto [l1, l2] = detail::antipode_linear(H, x[0]);
        return Cochain<F>{l1, l2};
    });
    auto [c1, c2] = detail::antipode_constant(H, c);
    auto b = flatten_cochain(Cochain<F>{-c1, -c2});
    auto sol = solve(A, b);
    if (!sol.solvable) fail(ErrorKind::NoSolution, "no S' solves the first-order antipode identities");
    if (sol.rank < size_t(d) * d) fail(ErrorKind::NonUnique, "the first-order antipode identities do not determine S'");
    return {unflatten(H.field, d, 1, 1, sol.x)};
}

// Psi_zeta(xi): five substitutions into the adjoint composite
template <class F>
std::pair<TensorMap<F>, TensorMap<F>> psi_map(const HopfAlgebra<F>& H, const HopfTwoCochain<F>& c,
                                              const DeformedAntipode<F>& sp)
{
    detail::check_cochain_shape(H, c);
    expect_shape(sp.s_prime, 1, 1, "S'");
    if (!check_hopf_2cocycle(H, c).passed()) fail(ErrorKind::ValidationFailed, "(xi, zeta) is not a Hopf 2-cocycle");
    if (!normalize_check(c, H)) fail(ErrorKind::ValidationFailed, "(xi, zeta) is not normalized");
    if (!antipode_identities_hold(H, c, sp)) fail(ErrorKind::ValidationFailed, "S' does not solve the antipode identities");
    auto I1 = H.id(1);
    auto inner = H.mu * tp(I1, H.mu);
    auto D3 = detail::triple_coproduct(H);
    TensorMap<F> phi = detail::adjoint_composite(H, H.mu * tp(I1, c.xi), D3, H.S);
    phi = phi + detail::adjoint_composite(H, c.xi * tp(I1, H.mu), D3, H.S);
    phi = phi + detail::adjoint_composite(H, inner, tp(I1, H.Delta) * c.zeta, H.S);
    phi = phi + detail::adjoint_composite(H, inner, tp(I1, c.zeta) * H.Delta, H.S);
    phi = phi + detail::adjoint_composite(H, inner, D3, sp.s_prime);
    return {phi, c.xi};
}

// Linear system whose kernel is the space of normalized Hopf 2-cocycles.
// Columns index (xi, zeta) flattened in that order.
template <class F>
FlatMatrix<F> hopf_cocycle_system(const HopfAlgebra<F>& H)
{
    unsigned d = H.d;
    std::vector<Block> src = {{"xi", 2, 1}, {"zeta", 1, 2}};
    size_t rows = ipow(d, 4) + ipow(d, 4) + ipow(d, 4) + 4 * size_t(d) * d;
    return matrix_of_linear(H.field, d, src, rows, [&](const Cochain<F>& x) {
        HopfTwoCochain<F> c{x[0], x[1]};
        auto out = detail::first_order_defects(H, c);
        for (auto& m : detail::normalization_defects(H, c)) out.push_back(m);
        return out;
    });
}

template <class F>
std::vector<HopfTwoCochain<F>> normalized_cocycle_basis(const HopfAlgebra<F>& H)
{
    std::vector<Block> src = {{"xi", 2, 1}, {"zeta", 1, 2}};
    std::vector<HopfTwoCochain<F>> out;
    for (auto& v : nullspace(hopf_cocycle_system(H))) {
        auto c = unflatten_cochain(H.field, H.d, src, v);
        out.push_back({c[0], c[1]});
    }
    return out;
}

// the cocycle of the change of basis 1 + h f, for f with f eta = 0 and eps f = 0
template <class F>
HopfTwoCochain<F> coboundary_cocycle(const HopfAlgebra<F>& H, const TensorMap<F>& f)
{
    expect_shape(f, 1, 1, "f");
    auto I1 = H.id(1);
    auto xi = H.mu * tp(f, I1) + H.mu * tp(I1, f) - f * H.mu;
    auto zeta = H.Delta * f - tp(f, I1) * H.Delta - tp(I1, f) * H.Delta;
    return {xi, zeta};
}

// Everything the Psi pipeline asserts about one cocycle.
template <class F>
struct PsiAnalysis {
    DeformedAntipode<F> sp;
    TensorMap<F> phi, psi;
    bool antipode_ok = false;
    bool in_z2_bc = false;
    bool xi_cobounded = false;     // xi in im delta1_H
    bool class_nonzero = false;    // (phi, psi) not in im delta1_BC
};

template <class F>
PsiAnalysis<F> analyze_cocycle(const HopfAlgebra<F>& H, const Complexes<F>& C, const HopfTwoCochain<F>& c)
{
    PsiAnalysis<F> a{solve_deformed_antipode(H, c), {}, {}, false, false, false, false};
    a.antipode_ok = antipode_identities_hold(H, c, a.sp);
    std::tie(a.phi, a.psi) = psi_map(H, c, a.sp);
    auto out = C.delta(Theory::BC, 2, {a.phi, a.psi});
    a.in_z2_bc = true;
    for (auto& m : out) a.in_z2_bc = a.in_z2_bc && m.is_zero();
    a.xi_cobounded = in_column_span(C.differential_matrix(Theory::Hochschild, 1), flatten(c.xi));
    a.class_nonzero = !in_column_span(C.differential_matrix(Theory::BC, 1), flatten_cochain(Cochain<F>{a.phi, a.psi}));
    return a;
}

} // namespace braidcoh
