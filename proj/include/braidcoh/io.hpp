#pragma once
// File formats and builtin specifiers. Uses nlohmann::json (vendor/json.hpp).
//
// Algebra file:
//   {"field": "GF(2)", "dim": d, "mu": [[i,j,k,"c"],...], "R": [[i,j,k,l,"c"],...],
//    "unit": [[k,"c"],...], "hopf": {"Delta": [[i,j,k,"c"]], "eps": [[i,"c"]],
//    "S": [[i,j,"c"]], "eta": [[k,"c"]]}}
//   mu entries mean mu(e_i e_j) += c e_k, R entries R(e_i e_j) += c e_k e_l,
//   Delta entries Delta(e_i) += c e_j e_k, S entries S(e_i) += c e_j.
// MCQ file:
//   {"components": ["C2", {"name": "T", "table": [[0]]}, ...], "star": [[...]]}
//   components are catalog names or inline tables; global indices follow the
//   component order. Without "star", x*y is y^-1 x y inside a component and x
//   across components.
// Deformation file:
//   {"base": "<specifier>" or {algebra object}, "order": N,
//    "psi": [[[i,j,k,"c"],...], ...], "phi": [[[i,j,k,l,"c"],...], ...]}
//   listing the coefficients of h^1..h^N.
// Cocycle file: {"xi": [[i,j,k,"c"],...], "zeta": [[i,j,k,"c"],...]} with
//   zeta(e_i) += c e_j e_k.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "deformation.hpp"
#include "hopf.hpp"
#include "multicomplex.hpp"

#ifndef BRAIDCOH_DATA_DIR
#define BRAIDCOH_DATA_DIR "data"
#endif

namespace braidcoh {

using json = nlohmann::ordered_json;

[[noreturn]] inline void schema_error(const std::string& pointer, const std::string& msg)
{
    fail(ErrorKind::SchemaError, (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorKind::SchemaError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::SchemaError, path + ": " + e.what());
    }
}

inline std::string data_dir()
{
    if (const char* e = std::getenv("BRAIDCOH_DATA_DIR"); e && *e) return e;
    return BRAIDCOH_DATA_DIR;
}

// ---------------------------------------------------------------- groups

inline GroupTable group_from_json(const std::string& name, const json& g, const std::string& ptr)
{
    if (!g.is_object() || !g.contains("table")) schema_error(ptr, "group needs a table");
    GroupTable G;
    G.name = name;
    const auto& t = g["table"];
    if (!t.is_array() || t.empty()) schema_error(ptr + "/table", "expected a non-empty array");
    for (size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_array() || t[i].size() != t.size()) schema_error(ptr + "/table/" + std::to_string(i), "rows must be square");
        std::vector<unsigned> row;
        for (size_t j = 0; j < t[i].size(); ++j) {
            const auto& v = t[i][j];
            if (!v.is_number_unsigned() || v.get<size_t>() >= t.size())
                schema_error(ptr + "/table/" + std::to_string(i) + "/" + std::to_string(j), "entry out of range");
            row.push_back(v.get<unsigned>());
        }
        G.mul.push_back(row);
    }
    if (g.contains("elements"))
        for (auto& e : g["elements"]) G.elements.push_back(e.get<std::string>());
    G.validate();
    return G;
}

class GroupCatalog {
public:
    static const GroupCatalog& instance()
    {
        static GroupCatalog c(data_dir() + "/groups.json");
        return c;
    }

    explicit GroupCatalog(const std::string& path)
    {
        auto j = read_json_file(path);
        if (!j.contains("groups") || !j["groups"].is_object()) schema_error("/groups", "missing group map");
        for (auto& [name, g] : j["groups"].items()) groups_.emplace(name, group_from_json(name, g, "/groups/" + name));
    }

    const GroupTable& get(const std::string& name) const
    {
        auto it = groups_.find(name);
        if (it == groups_.end()) fail(ErrorKind::ParseError, "unknown group '" + name + "'");
        return it->second;
    }
    std::vector<std::string> names() const
    {
        std::vector<std::string> n;
        for (auto& [k, v] : groups_) n.push_back(k);
        return n;
    }

private:
    std::map<std::string, GroupTable> groups_;
};

// ---------------------------------------------------------------- triplets

template <class F>
typename F::value_type scalar_from_json(const F& f, const json& v, const std::string& ptr)
{
    try {
        if (v.is_string()) return f.parse(v.get<std::string>());
        if (v.is_number_integer()) return f.from_int(v.get<long long>());
    } catch (const Error& e) {
        schema_error(ptr, e.what());
    }
    schema_error(ptr, "scalar must be a decimal string or an integer");
}

// entries [i1..i_dom, o1..o_cod, "c"]: input multi-index then output multi-index
template <class F>
TensorMap<F> map_from_entries(const F& f, unsigned d, unsigned dom, unsigned cod, const json& arr, const std::string& ptr)
{
    if (!arr.is_array()) schema_error(ptr, "expected an array of entries");
    std::vector<std::tuple<size_t, size_t, typename F::value_type>> trip;
    for (size_t k = 0; k < arr.size(); ++k) {
        std::string p = ptr + "/" + std::to_string(k);
        const auto& e = arr[k];
        if (!e.is_array() || e.size() != dom + cod + 1)
            schema_error(p, "entry needs " + std::to_string(dom + cod) + " indices and a scalar");
        std::vector<unsigned> in, out;
        for (unsigned t = 0; t < dom + cod; ++t) {
            const auto& x = e[t];
            if (!x.is_number_unsigned() || x.get<size_t>() >= d)
                schema_error(p + "/" + std::to_string(t), "index must be in 0.." + std::to_string(d - 1));
            (t < dom ? in : out).push_back(x.get<unsigned>());
        }
        trip.emplace_back(encode_index(out, d), encode_index(in, d), scalar_from_json(f, e[dom + cod], p + "/" + std::to_string(dom + cod)));
    }
    return TensorMap<F>::from_triplets(f, d, dom, cod, std::move(trip));
}

template <class F>
json map_to_entries(const TensorMap<F>& m)
{
    json arr = json::array();
    m.for_each([&](size_t r, size_t c, const typename F::value_type& v) {
        json e = json::array();
        for (unsigned x : decode_index(c, m.d(), m.dom())) e.push_back(x);
        for (unsigned x : decode_index(r, m.d(), m.cod())) e.push_back(x);
        e.push_back(m.field().str(v));
        arr.push_back(e);
    });
    return arr;
}

template <class F>
json matrix_json(const TensorMap<F>& m)
{
    json j;
    j["d"] = m.d();
    j["field"] = m.field().spec().name();
    j["dom"] = m.dom();
    j["cod"] = m.cod();
    json e = json::array();
    m.for_each([&](size_t r, size_t c, const typename F::value_type& v) { e.push_back(json::array({r, c, m.field().str(v)})); });
    j["entries"] = e;
    return j;
}

template <class F>
json flat_matrix_json(const FlatMatrix<F>& M, const std::vector<Block>& src, const std::vector<Block>& dst, unsigned d)
{
    json j;
    j["d"] = d;
    j["field"] = M.field.spec().name();
    j["rows"] = M.rows;
    j["cols"] = M.cols;
    json sb = json::array(), db = json::array();
    for (auto& b : src) sb.push_back({{"name", b.name}, {"dom", b.dom}, {"cod", b.cod}});
    for (auto& b : dst) db.push_back({{"name", b.name}, {"dom", b.dom}, {"cod", b.cod}});
    j["column_blocks"] = sb;
    j["row_blocks"] = db;
    json e = json::array();
    for (size_t c = 0; c < M.cols; ++c)
        for (auto& [r, v] : M.col[c]) e.push_back(json::array({r, c, M.field.str(v)}));
    j["entries"] = e;
    return j;
}

// ---------------------------------------------------------------- algebras

// What a specifier resolves to before a field is chosen.
struct AlgebraSource {
    std::string spec;                 // as given on the command line
    std::optional<FieldSpec> field;   // from the file, if any
    json object;                      // algebra object (file kind)
    std::string kind;                 // "file", "group", "wada", "mcq"
    int wada_variant = 0;
    std::string group;
    MCQPresentation mcq;
};

inline MCQPresentation mcq_from_json(const json& j)
{
    MCQPresentation M;
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
        schema_error("/components", "expected a non-empty array");
    const auto& comps = j["components"];
    for (size_t k = 0; k < comps.size(); ++k) {
        const auto& c = comps[k];
        if (c.is_string()) M.components.push_back(GroupCatalog::instance().get(c.get<std::string>()));
        else M.components.push_back(group_from_json(c.value("name", "G" + std::to_string(k)), c, "/components/" + std::to_string(k)));
    }
    unsigned n = M.size();
    if (j.contains("star")) {
        const auto& s = j["star"];
        if (!s.is_array() || s.size() != n) schema_error("/star", "expected " + std::to_string(n) + " rows");
        for (size_t x = 0; x < n; ++x) {
            if (!s[x].is_array() || s[x].size() != n) schema_error("/star/" + std::to_string(x), "row length");
            std::vector<unsigned> row;
            for (size_t y = 0; y < n; ++y) {
                if (!s[x][y].is_number_unsigned() || s[x][y].get<size_t>() >= n)
                    schema_error("/star/" + std::to_string(x) + "/" + std::to_string(y), "entry out of range");
                row.push_back(s[x][y].get<unsigned>());
            }
            M.star.push_back(row);
        }
    } else {
        M.star.assign(n, std::vector<unsigned>(n));
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = 0; y < n; ++y) {
                unsigned c = M.component_of(x);
                if (M.component_of(y) != c) {
                    M.star[x][y] = x;
                    continue;
                }
                auto& G = M.components[c];
                unsigned o = M.offset(c);
                M.star[x][y] = o + G.op(G.op(G.inverse(y - o), x - o), y - o);
            }
    }
    return M;
}

inline AlgebraSource resolve_specifier(const std::string& spec)
{
    AlgebraSource s;
    s.spec = spec;
    auto colon = spec.find(':');
    std::string head = colon == std::string::npos ? "" : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "group") {
        s.kind = "group";
        s.group = rest;
        (void)GroupCatalog::instance().get(rest);
        return s;
    }
    if (head == "wada1" || head == "wada2" || head == "wada3") {
        s.kind = "wada";
        s.wada_variant = head[4] - '0';
        s.group = rest;
        (void)GroupCatalog::instance().get(rest);
        return s;
    }
    if (head == "mcq") {
        s.kind = "mcq";
        auto j = read_json_file(rest);
        try {
            s.mcq = mcq_from_json(j);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotAGroup) fail(ErrorKind::SchemaError, e.what());
            throw;
        }
        if (j.contains("field")) s.field = field_parse(j["field"].get<std::string>());
        return s;
    }
    s.kind = "file";
    s.object = read_json_file(spec);
    if (!s.object.is_object()) schema_error("", "algebra file must hold an object");
    if (s.object.contains("components")) return resolve_specifier("mcq:" + spec);
    if (s.object.contains("field")) {
        if (!s.object["field"].is_string()) schema_error("/field", "expected a string");
        s.field = field_parse(s.object["field"].get<std::string>());
    }
    return s;
}

// default for builtins without --field
inline FieldSpec default_field(const AlgebraSource& s) { return s.field ? *s.field : FieldSpec::prime(2); }

template <class F>
struct LoadedAlgebra {
    BraidedAlgebra<F> algebra;
    std::optional<HopfAlgebra<F>> hopf;
};

template <class F>
HopfAlgebra<F> hopf_from_json(const F& f, unsigned d, const TensorMap<F>& mu, const json& h)
{
    if (!h.is_object()) schema_error("/hopf", "expected an object");
    for (const char* k : {"Delta", "eps", "S", "eta"})
        if (!h.contains(k)) schema_error(std::string("/hopf/") + k, "missing");
    return HopfAlgebra<F>(f, d, mu, map_from_entries(f, d, 0, 1, h["eta"], "/hopf/eta"),
                          map_from_entries(f, d, 1, 2, h["Delta"], "/hopf/Delta"),
                          map_from_entries(f, d, 1, 0, h["eps"], "/hopf/eps"),
                          map_from_entries(f, d, 1, 1, h["S"], "/hopf/S"));
}

template <class F>
LoadedAlgebra<F> algebra_from_json(const json& j, const F& f)
{
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<unsigned>() == 0)
        schema_error("/dim", "expected a positive integer");
    unsigned d = j["dim"].get<unsigned>();
    if (!j.contains("mu")) schema_error("/mu", "missing");
    if (!j.contains("R")) schema_error("/R", "missing");
    auto mu = map_from_entries(f, d, 2, 1, j["mu"], "/mu");
    auto R = map_from_entries(f, d, 2, 2, j["R"], "/R");
    std::optional<TensorMap<F>> unit;
    if (j.contains("unit")) unit = map_from_entries(f, d, 0, 1, j["unit"], "/unit");
    LoadedAlgebra<F> out{BraidedAlgebra<F>(f, d, mu, R, unit), std::nullopt};
    if (j.contains("hopf")) out.hopf = hopf_from_json(f, d, mu, j["hopf"]);
    return out;
}

template <class F>
json algebra_to_json(const BraidedAlgebra<F>& A)
{
    json j;
    j["field"] = A.field.spec().name();
    j["dim"] = A.d;
    j["mu"] = map_to_entries(A.mu);
    j["R"] = map_to_entries(A.R);
    if (A.unit) j["unit"] = map_to_entries(*A.unit);
    return j;
}

template <class F>
LoadedAlgebra<F> build_algebra(const AlgebraSource& s, const F& f)
{
    if (s.kind == "group") {
        const auto& G = GroupCatalog::instance().get(s.group);
        return {group_algebra_conjugation(G, f), group_hopf(G, f)};
    }
    if (s.kind == "wada") return {wada_algebra(s.wada_variant, GroupCatalog::instance().get(s.group), f), std::nullopt};
    if (s.kind == "mcq") return {mcq_algebra(s.mcq, f), std::nullopt};
    return algebra_from_json(s.object, f);
}

// ---------------------------------------------------------------- deformations and cocycles

struct DeformationSource {
    AlgebraSource base;
    json object;
    unsigned order = 0;
};

inline DeformationSource resolve_deformation(const std::string& path)
{
    DeformationSource s;
    s.object = read_json_file(path);
    if (!s.object.is_object() || !s.object.contains("base")) schema_error("/base", "missing");
    const auto& b = s.object["base"];
    if (b.is_string()) s.base = resolve_specifier(b.get<std::string>());
    else if (b.is_object()) {
        s.base.kind = "file";
        s.base.spec = path + "#/base";
        s.base.object = b;
        if (b.contains("field")) s.base.field = field_parse(b["field"].get<std::string>());
    } else schema_error("/base", "expected a specifier string or an algebra object");
    if (!s.object.contains("order") || !s.object["order"].is_number_unsigned()) schema_error("/order", "expected N >= 0");
    s.order = s.object["order"].get<unsigned>();
    return s;
}

template <class F>
TruncatedDeformation<F> deformation_from_json(const DeformationSource& s, const BraidedAlgebra<F>& A)
{
    const auto& j = s.object;
    TruncatedDeformation<F> D(A);
    for (const char* k : {"psi", "phi"})
        if (!j.contains(k) || !j[k].is_array() || j[k].size() != s.order)
            schema_error(std::string("/") + k, "expected " + std::to_string(s.order) + " coefficient lists");
    for (unsigned k = 0; k < s.order; ++k)
        D.push(map_from_entries(A.field, A.d, 2, 2, j["phi"][k], "/phi/" + std::to_string(k)),
               map_from_entries(A.field, A.d, 2, 1, j["psi"][k], "/psi/" + std::to_string(k)));
    return D;
}

template <class F>
json deformation_to_json(const TruncatedDeformation<F>& D, const std::string& base_spec)
{
    json j;
    j["base"] = base_spec;
    j["order"] = D.order();
    json ps = json::array(), ph = json::array();
    for (unsigned k = 1; k <= D.order(); ++k) {
        ps.push_back(map_to_entries(D.psi[k]));
        ph.push_back(map_to_entries(D.phi[k]));
    }
    j["psi"] = ps;
    j["phi"] = ph;
    return j;
}

template <class F>
HopfTwoCochain<F> cocycle_from_json(const json& j, const HopfAlgebra<F>& H)
{
    if (!j.is_object()) schema_error("", "cocycle file must hold an object");
    for (const char* k : {"xi", "zeta"})
        if (!j.contains(k)) schema_error(std::string("/") + k, "missing");
    return {map_from_entries(H.field, H.d, 2, 1, j["xi"], "/xi"), map_from_entries(H.field, H.d, 1, 2, j["zeta"], "/zeta")};
}

// ---------------------------------------------------------------- reports

inline json witness_json(const Witness& w)
{
    return {{"input", w.word}, {"output", w.row_word}, {"column", w.input}, {"row", w.row}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline json axiom_report_json(const AxiomReport& rep)
{
    json arr = json::array();
    for (auto& r : rep.results) {
        json e{{"axiom", r.axiom}, {"passed", r.passed}};
        if (r.witness) e["witness"] = witness_json(*r.witness);
        arr.push_back(e);
    }
    return arr;
}

inline json cohomology_json(const CohomologyReport& r)
{
    return {{"theory", r.theory},
            {"degree", r.degree},
            {"dim_cochain", r.dim_cochain},
            {"rank_delta_prev", r.rank_delta_prev},
            {"nullity_delta", r.nullity_delta},
            {"dim_H", r.dim_H}};
}

inline json resolutions_json()
{
    json arr = json::array();
    for (auto& r : active_resolutions()) arr.push_back({{"id", r.id}, {"reading", r.text}});
    return arr;
}

// "tsv": one path<TAB>value line per leaf; "human": indented key: value lines
inline void render_leaves(const json& j, const std::string& path, std::ostream& os)
{
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) render_leaves(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array()) {
        bool scalar_row = true;
        for (auto& v : j) scalar_row = scalar_row && !v.is_structured();
        if (scalar_row) {
            os << path << '\t' << j.dump() << '\n';
            return;
        }
        for (size_t i = 0; i < j.size(); ++i) render_leaves(j[i], path + "." + std::to_string(i), os);
    } else {
        os << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

inline void render_human(const json& j, int indent, std::ostream& os)
{
    std::string pad(size_t(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_structured() && !(v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); }))) {
                os << pad << k << ":\n";
                render_human(v, indent + 1, os);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) {
            os << pad << "- [" << i << "]\n";
            render_human(j[i], indent + 1, os);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

inline void render(const json& j, const std::string& format, std::ostream& os)
{
    if (format == "json") os << j.dump(2) << '\n';
    else if (format == "tsv") render_leaves(j, "", os);
    else render_human(j, 0, os);
}

} // namespace braidcoh
