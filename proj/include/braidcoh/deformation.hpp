#pragma once
// Truncated deformations mu_N = sum psi_i h^i, R_N = sum phi_i h^i over
// k[h]/(h^{N+1}), the obstruction cochains of an order-r extension, and the
// linear extension step.
//
// Two independent paths are kept on purpose: check_deformation expands every
// axiom as a polynomial in h by brute force, while the extension system is
// assembled from delta2 plus the obstruction formulas. They must agree.
#include <string>
#include <tuple>
#include <vector>

#include "complexes.hpp"

namespace braidcoh {

template <class F>
struct TruncatedDeformation {
    BraidedAlgebra<F> base;
    std::vector<TensorMap<F>> psi; // psi[0] = mu
    std::vector<TensorMap<F>> phi; // phi[0] = R

    explicit TruncatedDeformation(BraidedAlgebra<F> A) : base(std::move(A)), psi{base.mu}, phi{base.R} {}

    unsigned order() const { return static_cast<unsigned>(psi.size()) - 1; }

    void push(TensorMap<F> phi_next, TensorMap<F> psi_next)
    {
        expect_shape(phi_next, 2, 2, "phi");
        expect_shape(psi_next, 2, 1, "psi");
        phi.push_back(std::move(phi_next));
        psi.push_back(std::move(psi_next));
    }

    void validate() const
    {
        if (psi.size() != phi.size() || psi.empty()) fail(ErrorKind::ShapeMismatch, "coefficient lists differ in length");
        if (!map_equal(psi[0], base.mu) || !map_equal(phi[0], base.R))
            fail(ErrorKind::ShapeMismatch, "order-0 coefficients must be the base structure");
        for (size_t k = 0; k < psi.size(); ++k) {
            expect_shape(psi[k], 2, 1, "psi");
            expect_shape(phi[k], 2, 2, "phi");
        }
    }
};

// order-1 deformation with the given first-order coefficients
template <class F>
TruncatedDeformation<F> first_order(const BraidedAlgebra<F>& A, const TensorMap<F>& phi1, const TensorMap<F>& psi1)
{
    TruncatedDeformation<F> D(A);
    D.push(phi1, psi1);
    return D;
}

// random element of Z^2 (BC or YBH) as (phi, psi); seeded by the caller's rng
template <class F, class Rng>
std::pair<TensorMap<F>, TensorMap<F>> random_two_cocycle(const Complexes<F>& C, Theory t, Rng& rng)
{
    const auto& A = C.algebra();
    const F& f = A.field;
    auto Z = nullspace(C.differential_matrix(t, 2));
    SparseVec<F> v;
    for (auto& z : Z) v = axpy(f, v, f.random(rng), z);
    auto x = unflatten_cochain(f, A.d, cochain_shape(t, 2), v);
    return {x[0], x[1]};
}

// ---------------------------------------------------------------- h-polynomials

// coefficient lists truncated at a fixed order; zero coefficients are skipped
template <class F>
struct Poly {
    std::vector<TensorMap<F>> c;
};

namespace detail {

template <class F>
Poly<F> constant_poly(const TensorMap<F>& m, unsigned N)
{
    Poly<F> p;
    p.c.push_back(m);
    for (unsigned k = 1; k <= N; ++k) p.c.push_back(zero_map(m.field(), m.d(), m.dom(), m.cod()));
    return p;
}

template <class F, class Op>
Poly<F> poly_product(const Poly<F>& a, const Poly<F>& b, Op&& op)
{
    unsigned N = static_cast<unsigned>(a.c.size()) - 1;
    Poly<F> out;
    for (unsigned k = 0; k <= N; ++k) {
        auto shape = op(a.c[0], b.c[0]);
        TensorMap<F> acc = zero_map(shape.field(), shape.d(), shape.dom(), shape.cod());
        for (unsigned i = 0; i <= k; ++i) {
            if (a.c[i].is_zero() || b.c[k - i].is_zero()) continue;
            acc = acc + op(a.c[i], b.c[k - i]);
        }
        out.c.push_back(std::move(acc));
    }
    return out;
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b)
{
    return poly_product(a, b, [](const TensorMap<F>& x, const TensorMap<F>& y) { return compose(x, y); });
}

template <class F>
Poly<F> operator^(const Poly<F>& a, const Poly<F>& b)
{
    return poly_product(a, b, [](const TensorMap<F>& x, const TensorMap<F>& y) { return tensor(x, y); });
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b)
{
    Poly<F> out;
    for (size_t k = 0; k < a.c.size(); ++k) out.c.push_back(a.c[k] - b.c[k]);
    return out;
}

} // namespace detail

struct AxiomDefect {
    std::string axiom;
    unsigned degree;
};

// LHS - RHS of each deformed axiom as an h-polynomial, coefficients 0..order
template <class F>
std::vector<std::pair<std::string, Poly<F>>> deformation_defects(const TruncatedDeformation<F>& D, bool require_bc)
{
    using detail::operator*;
    using detail::operator^;
    using detail::operator-;
    D.validate();
    unsigned N = D.order();
    Poly<F> mu{D.psi}, R{D.phi};
    auto one = detail::constant_poly(D.base.id(1), N);
    std::vector<std::pair<std::string, Poly<F>>> out;
    out.emplace_back("assoc", mu * (mu ^ one) - mu * (one ^ mu));
    auto R1 = R ^ one, R2 = one ^ R;
    out.emplace_back("ybe", R1 * R2 * R1 - R2 * R1 * R2);
    out.emplace_back("yi", (one ^ mu) * R1 * R2 - R * (mu ^ one));
    out.emplace_back("iy", (mu ^ one) * R2 * R1 - R * (one ^ mu));
    if (require_bc) out.emplace_back("bc", mu * R - mu);
    return out;
}

// every coefficient 0..N of every axiom must vanish; failures are named
// "<axiom>@h^<k>"
template <class F>
AxiomReport check_deformation(const TruncatedDeformation<F>& D, bool require_bc)
{
    AxiomReport rep;
    for (auto& [name, p] : deformation_defects(D, require_bc))
        for (size_t k = 0; k < p.c.size(); ++k) {
            const auto& m = p.c[k];
            rep.results.push_back(compare_sides(name + "@h^" + std::to_string(k), m,
                                                zero_map(m.field(), m.d(), m.dom(), m.cod())));
        }
    return rep;
}

// ---------------------------------------------------------------- obstructions

template <class F>
struct ObstructionSet {
    unsigned r = 0;
    TensorMap<F> theta;              // 3 -> 3
    TensorMap<F> xi_yi, xi_iy;       // 3 -> 2
    TensorMap<F> omega_yi, omega_iy; // 3 -> 2
    TensorMap<F> lambda;             // 3 -> 1
    TensorMap<F> upsilon;            // 2 -> 1
};

// triples (i, j, k) with i + j + k = r and no entry equal to r
inline std::vector<std::tuple<unsigned, unsigned, unsigned>> gamma_set(unsigned r)
{
    std::vector<std::tuple<unsigned, unsigned, unsigned>> g;
    for (unsigned i = 0; i <= r; ++i)
        for (unsigned j = 0; i + j <= r; ++j) {
            unsigned k = r - i - j;
            if (i != r && j != r && k != r) g.emplace_back(i, j, k);
        }
    return g;
}

// uses coefficients of index < r only, so r may exceed the order by one
template <class F>
ObstructionSet<F> obstructions(const TruncatedDeformation<F>& D, unsigned r)
{
    D.validate();
    if (r < 1 || r > D.order() + 1)
        fail(ErrorKind::DegreeOutOfRange, "obstruction degree " + std::to_string(r) + " for an order-" +
                                              std::to_string(D.order()) + " deformation");
    const auto& A = D.base;
    const F& f = A.field;
    unsigned d = A.d;
    auto I1 = A.id(1);
    const auto &ps = D.psi, &ph = D.phi;
    ObstructionSet<F> O{r,
                        zero_map(f, d, 3, 3),
                        zero_map(f, d, 3, 2),
                        zero_map(f, d, 3, 2),
                        zero_map(f, d, 3, 2),
                        zero_map(f, d, 3, 2),
                        zero_map(f, d, 3, 1),
                        zero_map(f, d, 2, 1)};
    for (auto [i, j, k] : gamma_set(r)) {
        O.theta = O.theta + tp(ph[i], I1) * tp(I1, ph[j]) * tp(ph[k], I1) - tp(I1, ph[i]) * tp(ph[j], I1) * tp(I1, ph[k]);
        O.xi_yi = O.xi_yi + tp(I1, ps[i]) * tp(ph[j], I1) * tp(I1, ph[k]);
        O.xi_iy = O.xi_iy + tp(ps[i], I1) * tp(I1, ph[j]) * tp(ph[k], I1);
        if (k != 0) continue;
        O.omega_yi = O.omega_yi + ph[i] * tp(ps[j], I1);
        O.omega_iy = O.omega_iy + ph[i] * tp(I1, ps[j]);
        O.lambda = O.lambda + ps[i] * tp(ps[j], I1) - ps[i] * tp(I1, ps[j]);
        O.upsilon = O.upsilon + ps[i] * ph[j];
    }
    return O;
}

// sign of the Upsilon slot in the obstruction identity
inline constexpr int upsilon_sign = +1;

// (Theta, Xi^IY - Omega^IY, Xi^YI - Omega^YI, Lambda, s Upsilon) in BC degree-3
// order, or the YBH order [Theta, YI, IY, Lambda] without the BC slot
template <class F>
Cochain<F> obstruction_cochain(const ObstructionSet<F>& O, bool bc, int s = upsilon_sign)
{
    auto yi = O.xi_yi - O.omega_yi, iy = O.xi_iy - O.omega_iy;
    if (!bc) return {O.theta, yi, iy, O.lambda};
    return {O.theta, iy, yi, O.lambda, scale(O.upsilon, O.upsilon.field().from_int(s))};
}

// ---------------------------------------------------------------- extension

template <class F>
struct ExtensionCheck {
    AxiomReport equations;  // delta2 x + obstruction = 0, one entry per component
    AxiomReport deformation; // check_deformation on the appended data
    bool passed() const { return equations.passed(); }
};

// The order-(n+1) system for candidate (phi_next, psi_next), cross-checked
// against the direct expansion. Disagreement is an internal error.
template <class F>
ExtensionCheck<F> check_extension_system(const Complexes<F>& C, const TruncatedDeformation<F>& D,
                                         const TensorMap<F>& phi_next, const TensorMap<F>& psi_next, bool require_bc)
{
    unsigned r = D.order() + 1;
    auto O = obstructions(D, r);
    auto b = obstruction_cochain(O, require_bc);
    Theory t = require_bc ? Theory::BC : Theory::YBH;
    auto lhs = C.delta(t, 2, {phi_next, psi_next});
    auto shape = cochain_shape(t, 3);
    ExtensionCheck<F> out;
    for (size_t k = 0; k < lhs.size(); ++k) {
        auto m = lhs[k] + b[k];
        out.equations.results.push_back(
            compare_sides(shape[k].name, m, zero_map(m.field(), m.d(), m.dom(), m.cod())));
    }
    auto E = D;
    E.push(phi_next, psi_next);
    out.deformation = check_deformation(E, require_bc);
    if (out.equations.passed() != out.deformation.passed())
        fail(ErrorKind::ValidationFailed, "extension equations and the direct expansion disagree at order " + std::to_string(r));
    return out;
}

template <class F>
struct ExtensionResult {
    bool extended = false;
    TruncatedDeformation<F> deformation; // order n+1 when extended, the input otherwise
    Cochain<F> obstruction;              // right-hand side, degree-3 shape
    SparseVec<F> class_witness;          // obstruction reduced modulo im delta2; nonzero iff stuck
};

// Solves delta2(phi, psi) = -obstruction. The solution is whatever the
// elimination order picks first; no gauge is fixed.
template <class F>
ExtensionResult<F> extend_deformation(const Complexes<F>& C, const TruncatedDeformation<F>& D, bool require_bc)
{
    if (!check_deformation(D, require_bc).passed())
        fail(ErrorKind::InvalidBase, "input is not a valid order-" + std::to_string(D.order()) + " deformation");
    Theory t = require_bc ? Theory::BC : Theory::YBH;
    auto O = obstructions(D, D.order() + 1);
    auto b = obstruction_cochain(O, require_bc);
    auto M = C.differential_matrix(t, 2);
    Cochain<F> nb;
    for (auto& m : b) nb.push_back(-m);
    auto sol = solve(M, flatten_cochain(nb));
    ExtensionResult<F> res{false, D, b, sol.residual};
    if (!sol.solvable) {
        // re-check by rank: b outside the image raises the rank
        FlatMatrix<F> aug = M;
        aug.cols += 1;
        aug.col.push_back(flatten_cochain(nb));
        if (rank(aug) != rank(M) + 1) fail(ErrorKind::ValidationFailed, "obstruction witness does not raise the rank");
        return res;
    }
    const auto& A = C.algebra();
    auto x = unflatten_cochain(A.field, A.d, cochain_shape(t, 2), sol.x);
    res.deformation.push(x[0], x[1]);
    if (!check_deformation(res.deformation, require_bc).passed())
        fail(ErrorKind::ValidationFailed, "extended deformation does not verify");
    res.extended = true;
    return res;
}

} // namespace braidcoh
