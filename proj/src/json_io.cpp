#include "brpic/json_io.hpp"

#include "brpic/error.hpp"

#include <algorithm>

namespace brpic::io {

namespace {

[[noreturn]] void schema_error(const std::string& what)
{
    throw Error("SchemaError", what);
}

long get_long(const json& j, const char* what)
{
    if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::vector<std::vector<int>> expand_cycle_generators(const json& gamma)
{
    int degree = static_cast<int>(get_long(gamma.at("degree"), "degree"));
    std::vector<std::vector<int>> gens;
    for (const auto& gen : gamma.at("generators")) {
        // a generator is a list of cycles over {0..degree-1}
        std::vector<int> perm(degree);
        for (int i = 0; i < degree; ++i) perm[i] = i;
        for (const auto& cycle : gen) {
            std::vector<int> c = cycle.get<std::vector<int>>();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] < 0 || c[i] >= degree) schema_error("cycle entry out of range");
                perm[c[i]] = c[(i + 1) % c.size()];
            }
        }
        gens.push_back(std::move(perm));
    }
    return gens;
}

} // namespace

mpq_class parse_rational(const json& j)
{
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0)
            schema_error("bad rational literal '" + j.get<std::string>() + "'");
        q.canonicalize();
        return q;
    }
    schema_error("rationals must be integers or \"p/q\" strings");
}

json rational_to_json(const mpq_class& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
    return json(q.get_str());
}

json integer_to_json(const mpz_class& z)
{
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

FiniteGroup parse_group(const json& j)
{
    if (!j.is_object()) schema_error("group must be an object");
    if (j.contains("degree"))
        return group_from_permutations(static_cast<int>(get_long(j.at("degree"), "degree")),
                                       expand_cycle_generators(j))
            .group;
    if (!j.contains("table")) schema_error("group needs a table or permutation generators");
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("order") &&
        get_long(j.at("order"), "order") != static_cast<long>(table.size()))
        schema_error("declared order disagrees with the table");
    return validate_group(table, labels);
}

json group_to_json(const FiniteGroup& g)
{
    json j;
    j["order"] = g.order;
    j["table"] = g.table;
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

GModule parse_gmodule(const json& j, const FiniteGroup& g)
{
    GModule m;
    if (j.contains("free_rank"))
        m.free_rank = static_cast<int>(get_long(j.at("free_rank"), "free_rank"));
    if (j.contains("torsion")) m.torsion = j.at("torsion").get<std::vector<long>>();
    if (j.contains("action") && !j.at("action").empty()) {
        const int n = m.gens();
        m.action.assign(g.order, IntMat::identity(n));
        for (const auto& [key, mat] : j.at("action").items()) {
            int e = std::stoi(key);
            if (e < 0 || e >= g.order) schema_error("action key out of range: " + key);
            auto rows = mat.get<std::vector<std::vector<long>>>();
            if (static_cast<int>(rows.size()) != n) schema_error("action matrix shape");
            IntMat a(n, n);
            for (int r = 0; r < n; ++r) {
                if (static_cast<int>(rows[r].size()) != n) schema_error("action matrix shape");
                for (int c = 0; c < n; ++c) a.at(r, c) = rows[r][c];
            }
            m.action[e] = std::move(a);
        }
    }
    return validate_gmodule(g, std::move(m));
}

GModule parse_gmodule_spec(const json& j, const FiniteGroup& g, int degree)
{
    if (j.is_object() && j.contains("units_of"))
        return reduce_unit_coefficients(parse_field(j.at("units_of")), degree, g);
    return parse_gmodule(j, g);
}

Cocycle parse_cocycle(const json& j, const FiniteGroup& g, const GModule& m)
{
    Cocycle c;
    c.degree = static_cast<int>(get_long(j.at("degree"), "degree"));
    if (c.degree < 0) schema_error("degree must be >= 0");
    c.group_order = g.order;
    c.gens = m.gens();
    long total = 1;
    for (int i = 0; i < c.degree; ++i) total *= g.order;
    c.values.assign(total, std::vector<mpz_class>(c.gens, 0));
    for (const auto& row : j.at("values")) {
        if (static_cast<int>(row.size()) != c.degree + 1) schema_error("bad cocycle row length");
        std::vector<int> tuple(c.degree);
        for (int i = 0; i < c.degree; ++i) {
            tuple[i] = static_cast<int>(get_long(row[i], "tuple entry"));
            if (tuple[i] < 0 || tuple[i] >= g.order) schema_error("tuple entry out of range");
        }
        std::vector<mpz_class> value(c.gens, 0);
        if (!row[c.degree].is_array()) {
            if (c.gens != 1) schema_error("scalar value for a multi-generator module");
            value[0] = get_long(row[c.degree], "value");
        }
        else {
            const auto& arr = row[c.degree];
            if (static_cast<int>(arr.size()) != c.gens) schema_error("value length");
            for (int s = 0; s < c.gens; ++s) value[s] = get_long(arr[s], "value entry");
        }
        m.reduce(value);
        c.values[c.tuple_rank(tuple)] = std::move(value);
    }
    return c;
}

json cocycle_to_json(const Cocycle& c)
{
    json rows = json::array();
    for (long r = 0; r < static_cast<long>(c.values.size()); ++r) {
        bool zero = std::all_of(c.values[r].begin(), c.values[r].end(),
                                [](const mpz_class& v) { return v == 0; });
        if (zero) continue;
        json row = json::array();
        long rr = r;
        std::vector<int> tuple(c.degree);
        for (int i = c.degree - 1; i >= 0; --i) {
            tuple[i] = static_cast<int>(rr % c.group_order);
            rr /= c.group_order;
        }
        for (int t : tuple) row.push_back(t);
        if (c.gens == 1) {
            row.push_back(integer_to_json(c.values[r][0]));
        }
        else {
            json vals = json::array();
            for (const auto& v : c.values[r]) vals.push_back(integer_to_json(v));
            row.push_back(vals);
        }
        rows.push_back(row);
    }
    return json{{"degree", c.degree}, {"values", rows}};
}

BaseField parse_field(const json& j)
{
    json kind = j;
    if (j.is_object() && j.contains("kind")) kind = j.at("kind");
    if (kind.is_string()) {
        std::string s = kind.get<std::string>();
        if (s == "R") return BaseField::reals();
        if (s == "C") return BaseField::complexes();
        schema_error("unknown field kind '" + s + "'");
    }
    if (kind.is_object() && kind.contains("Fq"))
        return BaseField::finite(get_long(kind.at("Fq"), "Fq"));
    if (kind.is_object() && kind.contains("abstract")) {
        const json& a = kind.at("abstract");
        std::optional<FinAb> br, h3;
        bool unknown = false;
        if (a.contains("br")) br = parse_finab(a.at("br"));
        if (a.contains("h3")) {
            if (a.at("h3").is_string()) {
                if (a.at("h3").get<std::string>() != "nontrivial-unknown")
                    schema_error("h3 must be a factor list or \"nontrivial-unknown\"");
                unknown = true;
            }
            else {
                h3 = parse_finab(a.at("h3"));
            }
        }
        return BaseField::abstract_field(a.at("name").get<std::string>(), br, h3, unknown);
    }
    schema_error("unrecognized field descriptor");
}

json field_to_json(const BaseField& f)
{
    switch (f.kind) {
    case BaseField::Kind::R: return json{{"kind", "R"}};
    case BaseField::Kind::C: return json{{"kind", "C"}};
    case BaseField::Kind::FiniteField: return json{{"kind", {{"Fq", f.q}}}};
    case BaseField::Kind::Abstract: {
        json a{{"name", f.name}};
        if (f.abstract_brauer) a["br"] = finab_to_json(*f.abstract_brauer);
        if (f.abstract_h3_nontrivial_unknown)
            a["h3"] = "nontrivial-unknown";
        else if (f.abstract_h3)
            a["h3"] = finab_to_json(*f.abstract_h3);
        return json{{"kind", {{"abstract", a}}}};
    }
    }
    schema_error("unknown field kind");
}

GaloisScenario parse_scenario(const json& j)
{
    GaloisScenario s;
    s.gamma = parse_group(j.at("gamma"));
    if (j.contains("theta"))
        s.theta_index = static_cast<int>(get_long(j.at("theta"), "theta"));

    const json& ra = j.at("root_action");
    if (ra.is_string() && ra.get<std::string>() == "natural") {
        if (!j.at("gamma").contains("degree"))
            schema_error("\"natural\" root_action needs a permutation-form gamma");
        int degree = static_cast<int>(get_long(j.at("gamma").at("degree"), "degree"));
        s.root_action =
            group_from_permutations(degree, expand_cycle_generators(j.at("gamma")))
                .natural_action;
    }
    else {
        s.root_action.images = ra.get<std::vector<std::vector<int>>>();
        s.root_action.set_size =
            s.root_action.images.empty() ? 0 : static_cast<int>(s.root_action.images[0].size());
    }

    if (j.contains("concrete")) {
        const json& c = j.at("concrete");
        ConcreteLayer layer;
        std::vector<mpz_class> modulus;
        for (const auto& v : c.at("modulus")) {
            mpq_class q = parse_rational(v);
            if (q.get_den() != 1) schema_error("modulus must have integer coefficients");
            modulus.push_back(q.get_num());
        }
        layer.field = std::make_shared<NumberField>(std::move(modulus));
        for (const auto& root : c.at("roots")) {
            std::vector<mpq_class> coeffs;
            for (const auto& v : root) coeffs.push_back(parse_rational(v));
            layer.roots.push_back(nf_make(layer.field, std::move(coeffs)));
        }
        for (const auto& v : c.at("f")) layer.f.push_back(parse_rational(v));
        s.concrete = std::move(layer);
    }

    s = validate_scenario(std::move(s));

    if (j.contains("G")) {
        // a supplied G is cross-checked against the derived stabilizer
        std::vector<int> supplied = j.at("G").get<std::vector<int>>();
        std::sort(supplied.begin(), supplied.end());
        if (supplied != derive_stabilizer(s).elements)
            throw Error("InvalidScenario",
                        "supplied G differs from the derived stabilizer of theta");
    }
    return s;
}

EmbeddingData parse_embeddings(const json& j)
{
    EmbeddingData e;
    for (const auto& [label, idx] : j.at("objects").items())
        e.rho[label] = static_cast<int>(get_long(idx, "rho"));
    return e;
}

namespace {

EndLabel parse_end_label(const json& j)
{
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "R") return EndLabel::r();
        if (s == "C") return EndLabel::c();
        if (s == "H") return EndLabel::h();
        schema_error("unknown end label '" + s + "'");
    }
    if (j.is_object())
        return EndLabel::abstract(j.at("center").get<std::string>(),
                                  j.at("brauer").get<std::string>());
    schema_error("end labels are \"R\"/\"C\"/\"H\" or {center, brauer}");
}

json end_label_to_json(const EndLabel& l)
{
    switch (l.kind) {
    case EndLabel::Kind::R: return json("R");
    case EndLabel::Kind::C: return json("C");
    case EndLabel::Kind::H: return json("H");
    case EndLabel::Kind::Abstract:
        return json{{"center", l.center}, {"brauer", l.brauer_class}};
    }
    schema_error("unknown end label kind");
}

} // namespace

FusionRingData parse_fusion(const json& j)
{
    FusionRingData d;
    d.base_field = parse_field(j.at("base_field"));
    d.simples = j.at("simples").get<std::vector<std::string>>();
    d.unit = static_cast<int>(get_long(j.at("unit"), "unit"));
    d.n = j.at("N").get<std::vector<std::vector<std::vector<long>>>>();
    d.dual = j.at("dual").get<std::vector<int>>();
    for (const auto& l : j.at("ends")) d.ends.push_back(parse_end_label(l));
    if (j.contains("split_unit")) d.assert_split_unit = j.at("split_unit").get<bool>();
    if (j.contains("grading")) {
        BraidingGrading bg;
        bg.group = parse_finab(j.at("grading").at("group"));
        bg.grades = j.at("grading").at("grades").get<std::vector<std::vector<long>>>();
        d.braiding_grading = std::move(bg);
    }
    return validate_fusion_ring(std::move(d));
}

json fusion_to_json(const FusionRingData& d)
{
    json j;
    j["base_field"] = field_to_json(d.base_field);
    j["simples"] = d.simples;
    j["unit"] = d.unit;
    j["N"] = d.n;
    j["dual"] = d.dual;
    json ends = json::array();
    for (const auto& l : d.ends) ends.push_back(end_label_to_json(l));
    j["ends"] = ends;
    if (!d.assert_split_unit) j["split_unit"] = false;
    if (d.braiding_grading) {
        j["grading"] = json{{"group", finab_to_json(d.braiding_grading->group)},
                            {"grades", d.braiding_grading->grades}};
    }
    return j;
}

FinAb parse_finab(const json& j)
{
    if (!j.is_array()) schema_error("abelian groups are lists of invariant factors");
    return FinAb::of(j.get<std::vector<long>>());
}

json finab_to_json(const FinAb& g)
{
    return json(g.factors);
}

ExactSequenceInstance parse_sequence(const json& j)
{
    ExactSequenceInstance s;
    for (const auto& nj : j.at("nodes")) {
        SeqNode node;
        node.name = nj.at("name").get<std::string>();
        if (nj.at("group").is_string()) {
            if (nj.at("group").get<std::string>() != "unknown")
                schema_error("node group must be a factor list or \"unknown\"");
        }
        else {
            node.group = parse_finab(nj.at("group"));
        }
        s.nodes.push_back(std::move(node));
    }
    int unknowns = 0;
    for (const auto& n : s.nodes)
        if (!n.group) ++unknowns;
    if (unknowns > 1) schema_error("at most one node may be unknown");

    const json& maps = j.at("maps");
    if (maps.size() + 1 != s.nodes.size())
        schema_error("need one map slot per consecutive node pair");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].is_null()) {
            s.maps.emplace_back();
            continue;
        }
        if (!s.nodes[i].group || !s.nodes[i + 1].group)
            schema_error("maps touching the unknown node must be null");
        AbHom h;
        h.source = *s.nodes[i].group;
        h.target = *s.nodes[i + 1].group;
        h.matrix = maps[i].get<std::vector<std::vector<long>>>();
        validate_hom(h);
        s.maps.emplace_back(std::move(h));
    }
    if (j.contains("left_exact_start"))
        s.left_exact_start = j.at("left_exact_start").get<bool>();
    if (j.contains("surjective_end")) s.surjective_end = j.at("surjective_end").get<bool>();
    if (j.contains("symbolic_prefix"))
        s.symbolic_prefix = j.at("symbolic_prefix").get<std::string>();
    return s;
}

json cohomology_to_json(const CohomologyGroup& h)
{
    return json{{"invariant_factors", h.invariant_factors},
                {"free_rank", h.free_rank},
                {"pretty", h.to_string()}};
}

json profile_to_json(const BrauerRingElement& p)
{
    json terms = json::array();
    for (const auto& [label, mult] : p.terms)
        terms.push_back(json{{"label", end_label_to_json(label)}, {"multiplicity", mult}});
    return json{{"terms", terms}, {"pretty", p.to_string()}};
}

json nfpoly_to_json(const NFPoly& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs) {
        json v = json::array();
        for (const auto& q : c.coeffs) v.push_back(rational_to_json(q));
        coeffs.push_back(v);
    }
    return json{{"coeffs", coeffs}};
}

json faithfulness_to_json(const FaithfulnessReport& r)
{
    return json{{"faithful", r.faithful},
                {"H", r.h_elements},
                {"H_is_group", r.h_is_group},
                {"fixed_field_index", r.fixed_field_index}};
}

json exactness_to_json(const ExactnessReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"node", c.node}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"pass", r.pass}, {"checks", checks}};
}

json brpic_to_json(const BrPicSolution& s)
{
    json j;
    j["order"] = s.order;
    if (s.iso_type)
        j["iso_type"] = finab_to_json(*s.iso_type);
    else
        j["iso_type"] = "UNDETERMINED";
    j["note"] = s.note;
    return j;
}

} // namespace brpic::io
