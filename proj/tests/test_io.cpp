#include <sstream>

#include "common.hpp"

using namespace braidcoh;

namespace {
std::string schema_pointer(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SchemaError) return e.what();
        return "other:" + std::string(e.what());
    }
    return "";
}
} // namespace

TEST_CASE("builtin specifiers")
{
    GF f(2);
    auto L = build_algebra(resolve_specifier("group:C2"), f);
    CHECK(map_equal(L.algebra.R, flip(f, 2)));
    CHECK(L.hopf);
    auto W = build_algebra(resolve_specifier("wada2:S3"), GF(3));
    CHECK(!check_yi(W.algebra).passed());
    CHECK(default_field(resolve_specifier("group:S3")).p == 2);
    CHECK(t::throws_kind(ErrorKind::ParseError, [] { build_algebra(resolve_specifier("group:C9"), GF(2)); }));
}

TEST_CASE("algebra files")
{
    GF f(2);
    json j = json::parse(R"J({"field": "GF(2)", "dim": 2, "mu": [], "R": [[0, 1, 1, 0, "1"]]})J");
    auto L = algebra_from_json(j, f);
    CHECK(map_equal(L.algebra.R * basis_image(f, 2, {0, 1}), basis_image(f, 2, {1, 0})));
    CHECK((L.algebra.R * basis_image(f, 2, {1, 0})).is_zero());

    json bad = json::parse(R"J({"field": "GF(2)", "dim": 2, "mu": [[0, 0, 2, "1"]], "R": []})J");
    CHECK(schema_pointer([&] { algebra_from_json(bad, f); }).find("/mu/0/2") != std::string::npos);
    json noR = json::parse(R"J({"dim": 2, "mu": []})J");
    CHECK(schema_pointer([&] { algebra_from_json(noR, f); }).find("/R") != std::string::npos);
    json badscalar = json::parse(R"J({"dim": 2, "mu": [[0, 0, 0, "x"]], "R": []})J");
    CHECK(!schema_pointer([&] { algebra_from_json(badscalar, f); }).empty());

    auto A = t::conj("S3", GF(5));
    auto back = algebra_from_json(algebra_to_json(A), GF(5)).algebra;
    CHECK(map_equal(back.mu, A.mu));
    CHECK(map_equal(back.R, A.R));
    REQUIRE(back.unit);
    CHECK(map_equal(*back.unit, *A.unit));

    auto Z = build_algebra(resolve_specifier(data_dir() + "/examples/zero2.json"), f);
    CHECK(check_braided_algebra(Z.algebra).passed());
    CHECK(t::throws_kind(ErrorKind::SchemaError, [] { resolve_specifier(data_dir() + "/examples/missing.json"); }));
}

TEST_CASE("deformation and cocycle files")
{
    auto ds = resolve_deformation(data_dir() + "/examples/c2_order2.json");
    GF f(2);
    auto L = build_algebra(ds.base, f);
    auto D = deformation_from_json(ds, L.algebra);
    CHECK(D.order() == 2);
    CHECK(check_deformation(D, true).passed());
    auto j = deformation_to_json(D, ds.base.spec);
    CHECK(j["order"] == 2);
    CHECK(j["psi"].size() == 2);

    GF f3(3);
    auto H = group_hopf(t::group("C3"), f3);
    auto c = cocycle_from_json(read_json_file(data_dir() + "/examples/c3_hopf_cocycle.json"), H);
    CHECK(check_hopf_2cocycle(H, c).passed());
    CHECK(normalize_check(c, H));
}

TEST_CASE("rendering")
{
    json j = {{"a", 1}, {"b", {{"c", "x"}}}, {"l", json::array({1, 2})}};
    std::ostringstream js, ts, hs;
    render(j, "json", js);
    render(j, "tsv", ts);
    render(j, "human", hs);
    CHECK(json::parse(js.str()) == j);
    CHECK(ts.str().find("b.c\tx") != std::string::npos);
    CHECK(hs.str().find("a: 1") != std::string::npos);
}

TEST_CASE("matrix export")
{
    GF f(2);
    Complexes<GF> C(t::conj("C2", f));
    auto j = flat_matrix_json(C.differential_matrix(Theory::BC, 1), cochain_shape(Theory::BC, 1), cochain_shape(Theory::BC, 2), 2);
    CHECK(j["rows"] == 24);
    CHECK(j["cols"] == 4);
    auto m = matrix_json(C.algebra().mu);
    CHECK(m["entries"].size() == 4);
}
