#include "common.hpp"

using namespace braidcoh;

TEST_CASE("identity, compose and tensor laws")
{
    GF f(3);
    std::mt19937_64 rng(5);
    auto g = random_map(f, 3, 1, 1, rng), h = random_map(f, 3, 1, 1, rng);
    CHECK(map_equal(compose(identity(f, 3, 1), g), g));
    CHECK(map_equal(tensor(identity(f, 3, 1), identity(f, 3, 1)), identity(f, 3, 2)));
    CHECK(map_equal(tp(g, identity(f, 3, 1)) * tp(identity(f, 3, 1), h), tensor(g, h)));
    auto I0 = identity(f, 3, 0);
    CHECK(I0.rows() == 1);
    CHECK(I0.cols() == 1);
    CHECK(identity(f, 3, 2).rows() == 9);
    CHECK(t::throws_kind(ErrorKind::ArityMismatch, [&] { compose(g, identity(f, 3, 2)); }));
}

TEST_CASE("counit tensored with identity")
{
    GF f(5);
    auto eps = TensorMap<GF>::from_triplets(f, 2, 1, 0, {{0, 0, 1}, {0, 1, 1}});
    auto m = tensor(eps, identity(f, 2, 1));
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) CHECK(map_equal(m * basis_image(f, 2, {i, j}), basis_image(f, 2, {j})));
}

TEST_CASE("permutations")
{
    GF f(2);
    auto P = flip(f, 2);
    CHECK(map_equal(P * P, identity(f, 2, 2)));
    CHECK(map_equal(P * basis_image(f, 2, {0, 1}), basis_image(f, 2, {1, 0})));
    CHECK(!map_equal(P, identity(f, 2, 2)));
    auto c = permutation_map(f, 3, {2, 3, 1});
    CHECK(map_equal(c * c * c, identity(f, 3, 3)));
    CHECK(!map_equal(c, identity(f, 3, 3)));
    CHECK(t::throws_kind(ErrorKind::InvalidPermutation, [&] { permutation_map(f, 2, {1, 1}); }));
    // slot k goes to position perm[k]
    auto q = permutation_map(f, 3, {3, 1, 2});
    CHECK(map_equal(q * basis_image(f, 3, {0, 1, 2}), basis_image(f, 3, {1, 2, 0})));
}

TEST_CASE("sigma")
{
    GF f(2);
    CHECK(map_equal(sigma(flip(f, 2), 2, 1), flip(f, 2)));
    CHECK(map_equal(sigma(identity(f, 3, 2), 4, 2), identity(f, 3, 4)));
    auto A = t::conj("S3", f);
    auto s1 = sigma(A.R, 3, 1), s2 = sigma(A.R, 3, 2);
    CHECK(map_equal(s1 * s2 * s1, s2 * s1 * s2));
    CHECK(t::throws_kind(ErrorKind::PositionOutOfRange, [&] { sigma(A.R, 3, 3); }));
}

TEST_CASE("apply on basis vectors")
{
    GF f(2);
    auto A = t::conj("C2", f);
    std::vector<uint64_t> v(4, 0);
    v[3] = 1; // e_g (x) e_g
    auto w = braidcoh::apply(A.mu, v);
    CHECK(w == std::vector<uint64_t>{1, 0});
    CHECK(braidcoh::apply(identity(f, 2, 2), v) == v);
    CHECK(map_equal(A.mu * flip(f, 2), A.mu));
}

TEST_CASE("rank and nullity")
{
    GF f(2);
    CHECK(rank_and_nullity(identity(f, 2, 2)) == std::pair<size_t, size_t>{4, 0});
    CHECK(rank_and_nullity(zero_map(f, 2, 2, 2)) == std::pair<size_t, size_t>{0, 4});

    Complexes<GF> C(t::conj("C2", f));
    auto M = C.differential_matrix(Theory::YBH, 1);
    auto O = t::oracle_group("C2", 2);
    auto D = O.matrix(oracle::Th::YBH, 1);
    REQUIRE(M.rows == D.r);
    REQUIRE(M.cols == D.c);
    auto [r, n] = rank_and_nullity(M);
    CHECK(r == oracle::rank(O.D.k, D));
    CHECK(n == M.cols - r);
}

TEST_CASE("rank agrees with the oracle on random matrices")
{
    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
        GF f(k % 2 ? 3 : 2);
        auto m = random_map(f, 2, 2, 3, rng, 0.3);
        oracle::Zp z{int64_t(f.modulus())};
        auto D = oracle::from_map<oracle::Zp, GF>(z, m, [](uint64_t v) { return int64_t(v); });
        CHECK(rank_and_nullity(m).first == oracle::rank(z, D));
    }
    QQ q;
    for (int k = 0; k < 5; ++k) {
        auto m = random_map(q, 2, 2, 2, rng, 0.4);
        oracle::Qq z;
        auto D = oracle::from_map<oracle::Qq, QQ>(z, m, [](const mpq_class& v) { return v; });
        CHECK(rank_and_nullity(m).first == oracle::rank(z, D));
    }
}

TEST_CASE("mirror")
{
    GF f(3);
    CHECK(map_equal(mirror(identity(f, 3, 2)), identity(f, 3, 2)));
    CHECK(map_equal(mirror(flip(f, 3)), flip(f, 3)));
    auto A = t::conj("C3", f);
    auto lhs = mirror(tp(A.mu, identity(f, 3, 1)));
    auto rhs = tp(identity(f, 3, 1), A.mu * flip(f, 3));
    CHECK(map_equal(lhs, rhs));
    // entry by entry: x y z |-> x (x) zy
    const auto& G = t::group("C3");
    for (unsigned x = 0; x < 3; ++x)
        for (unsigned y = 0; y < 3; ++y)
            for (unsigned z = 0; z < 3; ++z)
                CHECK(map_equal(lhs * basis_image(f, 3, {x, y, z}), basis_image(f, 3, {x, G.op(z, y)})));
}

TEST_CASE("flatten round trip and dense switch")
{
    GF f(5);
    std::mt19937_64 rng(2);
    for (double dens : {0.05, 0.9}) {
        auto m = random_map(f, 3, 2, 2, rng, dens);
        auto v = flatten(m);
        CHECK(map_equal(unflatten(f, 3, 2, 2, v), m));
        CHECK(map_equal(m + zero_map(f, 3, 2, 2), m));
        CHECK((m - m).is_zero());
    }
    CHECK(t::throws_kind(ErrorKind::FieldMismatch, [&] { identity(GF(2), 2, 1) + identity(GF(3), 2, 1); }));
}
