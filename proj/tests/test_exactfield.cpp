#include "common.hpp"

using namespace braidcoh;

TEST_CASE("scalar arithmetic examples")
{
    auto g2 = field_parse("GF(2)"), g5 = field_parse("GF(5)"), q = field_parse("Q");
    Scalar one(g2, uint64_t(1));
    CHECK(scalar_arith(ScalarOp::Add, one, &one).is_zero());
    auto a = Scalar::parse(q, "2/3"), b = Scalar::parse(q, "3/4");
    CHECK(scalar_arith(ScalarOp::Mul, a, &b).str() == "1/2");
    CHECK(scalar_arith(ScalarOp::Inv, Scalar(g5, uint64_t(3))).str() == "2");
    CHECK(Scalar::parse(q, "4/6") == Scalar::parse(q, "2/3"));
    CHECK(Scalar::parse(q, "-3/6").str() == "-1/2");
    CHECK(Scalar::parse(q, "0/5").str() == "0");
}

TEST_CASE("field_parse")
{
    CHECK(field_parse("GF(2)").characteristic() == 2);
    CHECK(!field_parse("Q").is_prime_field());
    CHECK(t::throws_kind(ErrorKind::NotPrime, [] { field_parse("GF(4)"); }));
    CHECK(t::throws_kind(ErrorKind::ParseError, [] { field_parse("GF(x)"); }));
    CHECK(field_parse("GF(2305843009213693951)").p == 2305843009213693951ull);
}

TEST_CASE("division by zero and mixed fields are refused")
{
    auto g3 = field_parse("GF(3)"), g5 = field_parse("GF(5)");
    Scalar z(g3, uint64_t(0)), o3(g3, uint64_t(1)), o5(g5, uint64_t(1));
    CHECK(t::throws_kind(ErrorKind::DivisionByZero, [&] { scalar_arith(ScalarOp::Inv, z); }));
    CHECK(t::throws_kind(ErrorKind::FieldMismatch, [&] { scalar_arith(ScalarOp::Add, o3, &o5); }));
}

TEST_CASE("prime field arithmetic near the modulus bound")
{
    GF f((uint64_t(1) << 61) - 1);
    auto x = f.from_int(-1);
    CHECK(f.mul(x, x) == 1);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        auto v = f.random(rng);
        if (f.is_zero(v)) continue;
        CHECK(f.mul(v, f.inv(v)) == 1);
    }
}

TEST_CASE("field axioms on random samples")
{
    std::mt19937_64 rng(11);
    auto run = [&](auto f) {
        for (int k = 0; k < 200; ++k) {
            auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
            CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
            CHECK(f.eq(f.add(a, f.neg(a)), f.zero()));
            if (!f.is_zero(b)) CHECK(f.eq(f.mul(f.div(a, b), b), a));
        }
    };
    run(GF(2));
    run(GF(7));
    run(QQ());
}
