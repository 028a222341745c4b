#pragma once
// Braided algebras (V, mu, R), their axiom checkers and the example families:
// group algebras with conjugation, MCQ linearizations, Wada braidings.
#include <optional>
#include <string>
#include <vector>

#include "tensorcalc.hpp"

namespace braidcoh {

template <class F>
struct BraidedAlgebra {
    F field;
    unsigned d = 0;
    TensorMap<F> mu;                  // 2 -> 1
    TensorMap<F> R;                   // 2 -> 2
    std::optional<TensorMap<F>> unit; // 0 -> 1

    BraidedAlgebra(F f, unsigned dim, TensorMap<F> m, TensorMap<F> r, std::optional<TensorMap<F>> u = std::nullopt)
        : field(std::move(f)), d(dim), mu(std::move(m)), R(std::move(r)), unit(std::move(u))
    {
        validate_shapes();
    }

    TensorMap<F> id(unsigned n) const { return identity(field, d, n); }

    void validate_shapes() const
    {
        auto need = [&](const TensorMap<F>& m, unsigned dom, unsigned cod, const char* what) {
            if (m.d() != d || m.dom() != dom || m.cod() != cod)
                fail(ErrorKind::ShapeMismatch, std::string(what) + " has the wrong shape");
            if (!(m.field().spec() == field.spec())) fail(ErrorKind::FieldMismatch, what);
        };
        need(mu, 2, 1, "mu");
        need(R, 2, 2, "R");
        if (unit) need(*unit, 0, 1, "unit");
    }
};

// (mu tau, tau R tau): the mirror algebra; mirroring swaps YI and IY
template <class F>
BraidedAlgebra<F> mirror_algebra(const BraidedAlgebra<F>& A)
{
    return BraidedAlgebra<F>(A.field, A.d, mirror(A.mu), mirror(A.R), A.unit);
}

// ---------------------------------------------------------------- reports

struct Witness {
    size_t input = 0;                 // column index of the basis input
    std::vector<unsigned> word;       // same, as a multi-index
    size_t row = 0;                   // first output coordinate where the sides differ
    std::vector<unsigned> row_word;
    std::string lhs, rhs;             // the two values at (row, input)
};

struct AxiomResult {
    std::string axiom;
    bool passed = true;
    std::optional<Witness> witness;
};

struct AxiomReport {
    std::vector<AxiomResult> results;

    bool passed() const
    {
        for (auto& r : results)
            if (!r.passed) return false;
        return true;
    }
    const AxiomResult* find(const std::string& name) const
    {
        for (auto& r : results)
            if (r.axiom == name) return &r;
        return nullptr;
    }
    void merge(const AxiomReport& o) { results.insert(results.end(), o.results.begin(), o.results.end()); }
};

template <class F>
AxiomResult compare_sides(const std::string& name, const TensorMap<F>& lhs, const TensorMap<F>& rhs)
{
    AxiomResult res{name, true, std::nullopt};
    auto diff = first_difference(lhs, rhs);
    if (diff.equal) return res;
    res.passed = false;
    Witness w;
    w.input = diff.col;
    w.word = decode_index(diff.col, lhs.d(), lhs.dom());
    w.row = diff.row;
    w.row_word = decode_index(diff.row, lhs.d(), lhs.cod());
    w.lhs = lhs.field().str(lhs.at(diff.row, diff.col));
    w.rhs = lhs.field().str(rhs.at(diff.row, diff.col));
    res.witness = w;
    return res;
}

// The two sides of each axiom, in the form LHS = RHS.
template <class F>
std::pair<TensorMap<F>, TensorMap<F>> axiom_sides(const BraidedAlgebra<F>& A, const std::string& axiom)
{
    auto I1 = A.id(1);
    const auto& mu = A.mu;
    const auto& R = A.R;
    if (axiom == "assoc") return {mu * tp(mu, I1), mu * tp(I1, mu)};
    if (axiom == "ybe") {
        auto R1 = tp(R, I1), R2 = tp(I1, R);
        return {R1 * R2 * R1, R2 * R1 * R2};
    }
    if (axiom == "yi") return {tp(I1, mu) * tp(R, I1) * tp(I1, R), R * tp(mu, I1)};
    if (axiom == "iy") return {tp(mu, I1) * tp(I1, R) * tp(R, I1), R * tp(I1, mu)};
    if (axiom == "bc") return {mu * R, mu};
    if (axiom == "unit_left") {
        if (!A.unit) fail(ErrorKind::ShapeMismatch, "algebra has no unit");
        return {mu * tp(*A.unit, I1), I1};
    }
    if (axiom == "unit_right") {
        if (!A.unit) fail(ErrorKind::ShapeMismatch, "algebra has no unit");
        return {mu * tp(I1, *A.unit), I1};
    }
    fail(ErrorKind::ParseError, "unknown axiom '" + axiom + "'");
}

template <class F>
AxiomResult check_axiom(const BraidedAlgebra<F>& A, const std::string& axiom)
{
    auto [l, r] = axiom_sides(A, axiom);
    return compare_sides(axiom, l, r);
}

// re-evaluates a witness and confirms that the two sides still differ there
template <class F>
bool replay_witness(const BraidedAlgebra<F>& A, const AxiomResult& res)
{
    if (!res.witness) return false;
    auto [l, r] = axiom_sides(A, res.axiom);
    const auto& w = *res.witness;
    return !A.field.eq(l.at(w.row, w.input), r.at(w.row, w.input));
}

template <class F>
AxiomReport check_associativity(const BraidedAlgebra<F>& A) { return {{check_axiom(A, "assoc")}}; }

template <class F>
AxiomReport check_ybe(const TensorMap<F>& R)
{
    if (R.dom() != 2 || R.cod() != 2) fail(ErrorKind::ArityMismatch, "YBE needs a 2->2 map");
    auto I1 = identity(R.field(), R.d(), 1);
    auto R1 = tp(R, I1), R2 = tp(I1, R);
    return {{compare_sides("ybe", R1 * R2 * R1, R2 * R1 * R2)}};
}

template <class F>
AxiomReport check_yi(const BraidedAlgebra<F>& A) { return {{check_axiom(A, "yi")}}; }
template <class F>
AxiomReport check_iy(const BraidedAlgebra<F>& A) { return {{check_axiom(A, "iy")}}; }
template <class F>
AxiomReport check_braided_commutativity(const BraidedAlgebra<F>& A) { return {{check_axiom(A, "bc")}}; }

// assoc, ybe, yi, iy always; bc on request; unit laws only when a unit is present
template <class F>
AxiomReport check_braided_algebra(const BraidedAlgebra<F>& A, bool with_bc = true)
{
    AxiomReport rep;
    for (const char* ax : {"assoc", "ybe", "yi", "iy"}) rep.results.push_back(check_axiom(A, ax));
    if (with_bc) rep.results.push_back(check_axiom(A, "bc"));
    if (A.unit) {
        rep.results.push_back(check_axiom(A, "unit_left"));
        rep.results.push_back(check_axiom(A, "unit_right"));
    }
    return rep;
}

// ---------------------------------------------------------------- groups

struct GroupTable {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::vector<unsigned>> mul;

    unsigned order() const { return static_cast<unsigned>(mul.size()); }
    unsigned op(unsigned a, unsigned b) const { return mul[a][b]; }

    unsigned identity() const
    {
        for (unsigned e = 0; e < order(); ++e) {
            bool ok = true;
            for (unsigned x = 0; x < order() && ok; ++x) ok = mul[e][x] == x && mul[x][e] == x;
            if (ok) return e;
        }
        fail(ErrorKind::NotAGroup, name + ": no identity element");
    }
    unsigned inverse(unsigned a) const
    {
        unsigned e = identity();
        for (unsigned b = 0; b < order(); ++b)
            if (mul[a][b] == e && mul[b][a] == e) return b;
        fail(ErrorKind::NotAGroup, name + ": element without inverse");
    }

    void validate() const
    {
        unsigned n = order();
        if (n == 0) fail(ErrorKind::NotAGroup, name + ": empty table");
        for (auto& row : mul) {
            if (row.size() != n) fail(ErrorKind::NotAGroup, name + ": table is not square");
            for (unsigned x : row)
                if (x >= n) fail(ErrorKind::NotAGroup, name + ": entry out of range");
        }
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c = 0; c < n; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        fail(ErrorKind::NotAGroup, name + ": not associative");
        for (unsigned a = 0; a < n; ++a) (void)inverse(a);
    }
};

template <class F>
TensorMap<F> linearize_binary(const F& f, unsigned d, const std::vector<std::vector<unsigned>>& table)
{
    std::vector<std::tuple<size_t, size_t, typename F::value_type>> trip;
    for (unsigned x = 0; x < d; ++x)
        for (unsigned y = 0; y < d; ++y) trip.emplace_back(table[x][y], size_t(x) * d + y, f.one());
    return TensorMap<F>::from_triplets(f, d, 2, 1, std::move(trip));
}

// linearization of a set map X x X -> X x X given as a function
template <class F, class Fn>
TensorMap<F> linearize_pair_map(const F& f, unsigned d, Fn&& uv)
{
    std::vector<std::tuple<size_t, size_t, typename F::value_type>> trip;
    for (unsigned x = 0; x < d; ++x)
        for (unsigned y = 0; y < d; ++y) {
            auto [u, v] = uv(x, y);
            trip.emplace_back(size_t(u) * d + v, size_t(x) * d + y, f.one());
        }
    return TensorMap<F>::from_triplets(f, d, 2, 2, std::move(trip));
}

template <class F>
TensorMap<F> group_unit(const F& f, const GroupTable& G)
{
    return TensorMap<F>::from_triplets(f, G.order(), 0, 1, {{G.identity(), 0, f.one()}});
}

// mu(g (x) h) = gh, R(g (x) h) = h (x) h^{-1} g h
template <class F>
BraidedAlgebra<F> group_algebra_conjugation(const GroupTable& G, const F& f)
{
    G.validate();
    unsigned d = G.order();
    auto mu = linearize_binary(f, d, G.mul);
    auto R = linearize_pair_map(f, d, [&](unsigned g, unsigned h) {
        return std::pair{h, G.op(G.op(G.inverse(h), g), h)};
    });
    return BraidedAlgebra<F>(f, d, mu, R, group_unit(f, G));
}

// variant 1: (y, y^-1 x y); 2: (y^-1, y x y); 3: (x y^-1 x^-1, x y^2)
template <class F>
TensorMap<F> wada_braiding(int variant, const GroupTable& G, const F& f)
{
    G.validate();
    auto inv = [&](unsigned a) { return G.inverse(a); };
    auto m = [&](unsigned a, unsigned b) { return G.op(a, b); };
    switch (variant) {
    case 1: return linearize_pair_map(f, G.order(), [&](unsigned x, unsigned y) { return std::pair{y, m(m(inv(y), x), y)}; });
    case 2: return linearize_pair_map(f, G.order(), [&](unsigned x, unsigned y) { return std::pair{inv(y), m(m(y, x), y)}; });
    case 3:
        return linearize_pair_map(f, G.order(), [&](unsigned x, unsigned y) {
            return std::pair{m(m(x, inv(y)), inv(x)), m(x, m(y, y))};
        });
    default: fail(ErrorKind::ParseError, "Wada variant must be 1, 2 or 3");
    }
}

template <class F>
BraidedAlgebra<F> wada_algebra(int variant, const GroupTable& G, const F& f)
{
    return BraidedAlgebra<F>(f, G.order(), linearize_binary(f, G.order(), G.mul), wada_braiding(variant, G, f),
                             group_unit(f, G));
}

// ---------------------------------------------------------------- MCQ

// X is the disjoint union of the components in order; element k of component c
// has global index offset(c) + k. star[x][y] = x * y in global indices.
struct MCQPresentation {
    std::vector<GroupTable> components;
    std::vector<std::vector<unsigned>> star;

    unsigned size() const
    {
        unsigned n = 0;
        for (auto& g : components) n += g.order();
        return n;
    }
    unsigned offset(unsigned c) const
    {
        unsigned n = 0;
        for (unsigned k = 0; k < c; ++k) n += components[k].order();
        return n;
    }
    unsigned component_of(unsigned x) const
    {
        for (unsigned c = 0, o = 0; c < components.size(); o += components[c].order(), ++c)
            if (x < o + components[c].order()) return c;
        fail(ErrorKind::InvalidMCQ, "element out of range");
    }
    // product inside a component, or nullopt across components
    std::optional<unsigned> product(unsigned x, unsigned y) const
    {
        unsigned c = component_of(x);
        if (component_of(y) != c) return std::nullopt;
        unsigned o = offset(c);
        return o + components[c].op(x - o, y - o);
    }
};

// the four MCQ axioms, exhaustively; results named mcq1..mcq4
inline AxiomReport check_mcq(const MCQPresentation& M)
{
    AxiomReport rep;
    unsigned n = M.size();
    auto bad = [&](const char* ax, std::vector<unsigned> w, const std::string& l, const std::string& r) {
        AxiomResult res{ax, false, Witness{0, std::move(w), 0, {}, l, r}};
        rep.results.push_back(res);
    };
    auto pass = [&](const char* ax) { rep.results.push_back({ax, true, std::nullopt}); };
    bool shape_ok = M.star.size() == n;
    for (auto& row : M.star) shape_ok = shape_ok && row.size() == n;
    if (!shape_ok) fail(ErrorKind::InvalidMCQ, "star table must be |X| x |X|");
    for (auto& row : M.star)
        for (unsigned v : row)
            if (v >= n) fail(ErrorKind::InvalidMCQ, "star entry out of range");
    for (auto& g : M.components) {
        try {
            g.validate();
        } catch (const Error& e) {
            fail(ErrorKind::InvalidMCQ, std::string("component is not a group: ") + e.what());
        }
    }
    auto S = [&](unsigned x, unsigned y) { return M.star[x][y]; };
    auto str = [](unsigned v) { return std::to_string(v); };

    // (1) a*b = b^-1 a b inside a component
    bool ok = true;
    for (unsigned c = 0; c < M.components.size() && ok; ++c) {
        auto& G = M.components[c];
        unsigned o = M.offset(c);
        for (unsigned a = 0; a < G.order() && ok; ++a)
            for (unsigned b = 0; b < G.order() && ok; ++b) {
                unsigned want = o + G.op(G.op(G.inverse(b), a), b);
                if (S(o + a, o + b) != want) {
                    bad("mcq1", {o + a, o + b}, str(S(o + a, o + b)), str(want));
                    ok = false;
                }
            }
    }
    if (ok) pass("mcq1");

    // (2) x*e = x and x*(ab) = (x*a)*b
    ok = true;
    for (unsigned c = 0; c < M.components.size() && ok; ++c) {
        auto& G = M.components[c];
        unsigned o = M.offset(c), e = o + G.identity();
        for (unsigned x = 0; x < n && ok; ++x) {
            if (S(x, e) != x) {
                bad("mcq2", {x, e}, str(S(x, e)), str(x));
                ok = false;
            }
            for (unsigned a = 0; a < G.order() && ok; ++a)
                for (unsigned b = 0; b < G.order() && ok; ++b) {
                    unsigned l = S(x, o + G.op(a, b)), r = S(S(x, o + a), o + b);
                    if (l != r) {
                        bad("mcq2", {x, o + a, o + b}, str(l), str(r));
                        ok = false;
                    }
                }
        }
    }
    if (ok) pass("mcq2");

    // (3) (x*y)*z = (x*z)*(y*z)
    ok = true;
    for (unsigned x = 0; x < n && ok; ++x)
        for (unsigned y = 0; y < n && ok; ++y)
            for (unsigned z = 0; z < n && ok; ++z) {
                unsigned l = S(S(x, y), z), r = S(S(x, z), S(y, z));
                if (l != r) {
                    bad("mcq3", {x, y, z}, str(l), str(r));
                    ok = false;
                }
            }
    if (ok) pass("mcq3");

    // (4) (ab)*x = (a*x)(b*x), with a*x and b*x in a common component
    ok = true;
    for (unsigned c = 0; c < M.components.size() && ok; ++c) {
        auto& G = M.components[c];
        unsigned o = M.offset(c);
        for (unsigned x = 0; x < n && ok; ++x)
            for (unsigned a = 0; a < G.order() && ok; ++a)
                for (unsigned b = 0; b < G.order() && ok; ++b) {
                    unsigned l = S(o + G.op(a, b), x);
                    auto r = M.product(S(o + a, x), S(o + b, x));
                    if (!r || *r != l) {
                        bad("mcq4", {o + a, o + b, x}, str(l), r ? str(*r) : std::string("undefined"));
                        ok = false;
                    }
                }
    }
    if (ok) pass("mcq4");
    return rep;
}

// mu(x (x) y) = xy within a component and 0 across; R(x (x) y) = y (x) x*y.
// The unit is omitted: mu is nonunital as soon as there are two components.
template <class F>
BraidedAlgebra<F> mcq_algebra(const MCQPresentation& M, const F& f)
{
    auto rep = check_mcq(M);
    if (!rep.passed()) {
        for (auto& r : rep.results)
            if (!r.passed) fail(ErrorKind::InvalidMCQ, "axiom " + r.axiom + " fails");
    }
    unsigned d = M.size();
    std::vector<std::tuple<size_t, size_t, typename F::value_type>> trip;
    for (unsigned x = 0; x < d; ++x)
        for (unsigned y = 0; y < d; ++y)
            if (auto p = M.product(x, y)) trip.emplace_back(*p, size_t(x) * d + y, f.one());
    auto mu = TensorMap<F>::from_triplets(f, d, 2, 1, std::move(trip));
    auto R = linearize_pair_map(f, d, [&](unsigned x, unsigned y) { return std::pair{y, M.star[x][y]}; });
    std::optional<TensorMap<F>> unit;
    if (M.components.size() == 1) unit = group_unit(f, M.components[0]);
    return BraidedAlgebra<F>(f, d, mu, R, unit);
}

} // namespace braidcoh
