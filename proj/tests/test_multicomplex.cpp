#include "common.hpp"

using namespace braidcoh;

TEST_CASE("cells")
{
    CHECK(cell_nonzero(1, 0));
    CHECK(cell_nonzero(3, -1));
    CHECK(!cell_nonzero(1, 1));
    CHECK(!cell_nonzero(2, -1));
    for (int N = 1; N <= 5; ++N)
        for (auto& c : cells_of_degree(N)) {
            CHECK(c.s + c.t == N);
            CHECK(cell_nonzero(c));
        }
    // Hochschild row and YB diagonal
    Cell h{4, 0}, y{5, -2};
    CHECK(h.n() == 4);
    CHECK(h.q() == 1);
    CHECK(y.n() == 3);
    CHECK(y.q() == 3);
    CHECK(cell_dim(2, y) == 64);
}

TEST_CASE("d1 on the Hochschild row and on K^{3,-1}")
{
    std::mt19937_64 rng(3);
    GF f(3);
    Complexes<GF> C(t::conj("C3", f));
    Multicomplex<GF> M(C);
    const auto& o = C.ops();
    for (unsigned n = 1; n <= 3; ++n) {
        auto x = random_map(f, 3, n, 1, rng);
        auto a = M.d1({int(n), 0}, x), b = hochschild_standard(o, n, x);
        CHECK((map_equal(a, b) || map_equal(a, -b)));
    }
    for (auto [name, p] : {std::pair{"C2", 2}, std::pair{"C3", 3}, std::pair{"S3", 5}}) {
        GF g(p);
        Complexes<GF> K(t::conj(name, g));
        Multicomplex<GF> MK(K);
        unsigned d = K.algebra().d;
        auto I1 = identity(g, d, 1);
        const auto &mu = K.algebra().mu, &R = K.algebra().R;
        auto al = random_map(g, d, 2, 2, rng, 0.3);
        auto want = tp(I1, mu) * tp(R, I1) * tp(I1, al) - al * tp(mu, I1) + tp(I1, mu) * tp(al, I1) * tp(I1, R);
        CHECK(map_equal(MK.d1({3, -1}, al), want));
    }
}

TEST_CASE("d2")
{
    std::mt19937_64 rng(4);
    GF f(2);
    Complexes<GF> C(t::conj("C2", f));
    Multicomplex<GF> M(C);
    auto x = random_map(f, 2, 2, 1, rng);
    CHECK(M.d2({2, 0}, x).is_zero());
    auto y = random_map(f, 2, 2, 2, rng);
    auto a = M.d2({3, -1}, y), b = delta2_YB(C.ops(), y);
    CHECK((map_equal(a, b) || map_equal(a, -b)));
    CHECK(t::throws_kind(ErrorKind::CellOutOfRange, [&] { M.d1({1, 1}, identity(f, 2, 1)); }));
}

TEST_CASE("squares of d1 and d2 and of the total differential")
{
    for (int p : {2, 3}) {
        GF f(p);
        Complexes<GF> C(t::conj("C2", f));
        Multicomplex<GF> M(C);
        for (int N = 1; N <= 3; ++N)
            for (auto& r : cell_squares(M, N)) {
                INFO("GF(" << p << ") K^{" << r.cell.s << "," << r.cell.t << "} " << r.which);
                if (r.which != "d1d2+d2d1" || p == 2) CHECK(r.rank == 0);
            }
        if (p == 2)
            for (int N = 1; N <= 3; ++N) CHECK(boundary_square_rank(M, N) == 0);
        else
            CHECK(t::throws_kind(ErrorKind::CharacteristicNot2, [&] { boundary_square_rank(M, 1); }));
    }
}

TEST_CASE("lambda constraints")
{
    std::mt19937_64 rng(5);
    GF f(3);
    Complexes<GF> C(t::conj("C3", f));
    auto z2 = zero_map(f, 3, 2, 1), z22 = zero_map(f, 3, 2, 2), z32 = zero_map(f, 3, 3, 2), z33 = zero_map(f, 3, 3, 3);
    auto L0 = lambda_constraints(C, z2, z22, z32, z32, z33, z2);
    CHECK(L0.lambda2.is_zero());
    CHECK(L0.lambda3_yi.is_zero());
    CHECK(L0.lambda3_iy.is_zero());

    // Z^2_BC is the part of Z^2_YBH where lambda2 vanishes
    auto ybh = C.differential_matrix(Theory::YBH, 2);
    std::vector<Block> src = cochain_shape(Theory::BC, 2);
    auto lam = matrix_of_linear(f, 3, src, 9 * 3, [&](const Cochain<GF>& x) {
        return Cochain<GF>{lambda_constraints(C, x[1], x[0], z32, z32, z33, z2).lambda2};
    });
    FlatMatrix<GF> stack(f, ybh.rows + lam.rows, ybh.cols);
    for (size_t j = 0; j < ybh.cols; ++j) {
        stack.col[j] = ybh.col[j];
        for (auto [r, v] : lam.col[j]) stack.col[j].emplace_back(r + ybh.rows, v);
    }
    auto bc = C.differential_matrix(Theory::BC, 2);
    CHECK(nullspace(stack).size() == nullspace(bc).size());
    for (auto& v : nullspace(bc)) CHECK(matvec(stack, v).empty());

    for (int k = 0; k < 5; ++k) {
        auto phi = random_map(f, 3, 2, 2, rng), psi = random_map(f, 3, 2, 1, rng);
        auto c = C.delta(Theory::BC, 2, {phi, psi});
        auto L = lambda_constraints(C, psi, phi, c[2], c[1], c[0], c[4]);
        CHECK(L.lambda3_yi.is_zero());
        CHECK(L.lambda3_iy.is_zero());
    }
}

TEST_CASE("low-degree reconciliation")
{
    Complexes<GF> C2(t::conj("C2", GF(2)));
    Multicomplex<GF> M2(C2);
    auto r2 = reconcile_low_degree(M2);
    REQUIRE(r2.size() == 3);
    CHECK(r2[0].matched());

    Complexes<GF> C3(t::conj("C3", GF(3)));
    Multicomplex<GF> M3(C3);
    auto r3 = reconcile_low_degree(M3);
    CHECK(r3[0].matched());
    CHECK(r3[1].matched());
    CHECK(r3[2].matched());
    CHECK(!r3[2].blocks[0].note.empty());
    CHECK(!k21_matches_without_completion(M3));
}
