#include "stmod/serialize.hpp"

#include "stmod/error.hpp"

#include <fstream>
#include <map>

namespace stmod {

namespace {

const std::map<GroupKind, std::string> kind_names{{GroupKind::abelian, "abelian"},
                                                  {GroupKind::quaternion, "quaternion"},
                                                  {GroupKind::dihedral, "dihedral"},
                                                  {GroupKind::semidihedral, "semidihedral"},
                                                  {GroupKind::modular, "modular"}};

const Json& field(const Json& j, const char* key, const std::string& what)
{
    if (!j.is_object())
        throw InputError(what + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(what + ": missing field \"" + key + "\"");
    return *it;
}

std::int64_t integer(const Json& j, const std::string& what)
{
    if (!j.is_number_integer())
        throw InputError(what + ": expected an integer");
    return j.get<std::int64_t>();
}

std::uint32_t positive(const Json& j, const std::string& what)
{
    const auto v = integer(j, what);
    if (v <= 0 || v > 1 << 20)
        throw InputError(what + ": expected a positive integer");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

Json group_spec_to_json(const GroupSpec& spec)
{
    Json j;
    j["kind"] = kind_names.at(spec.kind);
    j["p"] = spec.p;
    if (spec.kind == GroupKind::abelian)
        j["factors"] = spec.factors;
    else
        j["n"] = spec.n;
    return j;
}

GroupSpec group_spec_from_json(const Json& j)
{
    if (j.is_string())
        return GroupSpec::parse(j.get<std::string>());
    const auto& kind = field(j, "kind", "group");
    if (!kind.is_string())
        throw InputError("group: \"kind\" must be a string");
    const auto name = kind.get<std::string>();
    if (name == "abelian") {
        const auto p = positive(field(j, "p", "group"), "group.p");
        const auto& f = field(j, "factors", "group");
        if (!f.is_array())
            throw InputError("group: \"factors\" must be an array");
        std::vector<std::uint32_t> factors;
        for (const auto& x : f)
            factors.push_back(positive(x, "group.factors"));
        auto spec = GroupSpec::abelian(p, factors);
        spec.validate();
        return spec;
    }
    for (const auto& [k, v] : kind_names) {
        if (v != name || k == GroupKind::abelian)
            continue;
        if (j.contains("p") && integer(j["p"], "group.p") != 2)
            throw InputError("group: " + name + " groups are 2-groups");
        GroupSpec spec{k, 2, {}, positive(field(j, "n", "group"), "group.n")};
        spec.validate();
        return spec;
    }
    throw InputError("group: unknown kind \"" + name + "\"");
}

GroupPtr group_from_json(const Json& j, std::size_t cap_order)
{
    const auto spec = group_spec_from_json(j);
    spec.validate();
    if (spec.order() > cap_order)
        throw CapError("group " + spec.name() + " has order " + std::to_string(spec.order()) + ", above the cap " +
                       std::to_string(cap_order));
    return build_group(spec);
}

Json matrix_to_json(const FpMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

FpMatrix matrix_from_json(const Json& j, std::uint32_t p, std::size_t rows, std::size_t cols, const std::string& what)
{
    if (!j.is_array() || j.size() != rows)
        throw InputError(what + ": expected " + std::to_string(rows) + " rows");
    FpMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InputError(what + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, integer(j[r][c], what));
    }
    return m;
}

Json module_to_json(const Module& m)
{
    const auto& g = *m.group();
    if (!g.spec())
        throw InputError("module_to_json: group has no spec");
    Json j;
    j["p"] = m.p();
    j["group"] = group_spec_to_json(*g.spec());
    j["dim"] = m.dim();
    Json action = Json::array();
    for (const auto& a : m.generator_actions())
        action.push_back(matrix_to_json(a));
    j["action"] = std::move(action);
    return j;
}

Module module_from_json(const Json& j, const GroupPtr& g)
{
    if (j.contains("p") && integer(j["p"], "module.p") != g->p())
        throw InputError("module: p does not match the group");
    const auto dim = integer(field(j, "dim", "module"), "module.dim");
    if (dim < 0 || dim > 4096)
        throw InputError("module: dim out of range");
    const auto& action = field(j, "action", "module");
    if (!action.is_array() || action.size() != g->generators().size())
        throw InputError("module: expected " + std::to_string(g->generators().size()) + " action matrices for " +
                         g->name());
    std::vector<FpMatrix> gens;
    for (std::size_t i = 0; i < action.size(); ++i)
        gens.push_back(matrix_from_json(action[i], g->p(), static_cast<std::size_t>(dim), static_cast<std::size_t>(dim),
                                        "module.action[" + g->generator_names()[i] + "]"));
    return {g, std::move(gens)};
}

Module module_from_json(const Json& j, std::size_t cap_order)
{
    return module_from_json(j, group_from_json(field(j, "group", "module"), cap_order));
}

Json map_to_json(const ModuleMap& f)
{
    return {{"source", module_to_json(f.source())},
            {"target", module_to_json(f.target())},
            {"matrix", matrix_to_json(f.matrix())}};
}

ModuleMap map_from_json(const Json& j, std::size_t cap_order)
{
    const auto& src = field(j, "source", "map");
    const auto g = group_from_json(field(src, "group", "map.source"), cap_order);
    const auto& tgt = field(j, "target", "map");
    if (!(group_spec_from_json(field(tgt, "group", "map.target")) == *g->spec()))
        throw InputError("map: source and target over different groups");
    auto a = module_from_json(src, g);
    auto b = module_from_json(tgt, g);
    auto m = matrix_from_json(field(j, "matrix", "map"), g->p(), b.dim(), a.dim(), "map.matrix");
    return {std::move(a), std::move(b), std::move(m)};
}

Json element_to_json(const AlgebraElement& a)
{
    Json j = Json::object();
    for (auto [g, c] : a.sparse())
        j[std::to_string(g)] = c;
    return j;
}

AlgebraElement element_from_json(const Json& j, const GroupPtr& g)
{
    if (!j.is_object())
        throw InputError("algebra element: expected an object of element index to coefficient");
    std::map<std::size_t, std::int64_t> terms;
    for (const auto& [key, value] : j.items()) {
        std::size_t pos = 0;
        unsigned long idx = 0;
        try {
            idx = std::stoul(key, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != key.size() || key.empty())
            throw InputError("algebra element: key \"" + key + "\" is not an element index");
        terms[idx] += integer(value, "algebra element coefficient");
    }
    return AlgebraElement::from_sparse(g, terms);
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Module parse_module_file(const std::string& path, std::size_t cap_order)
{
    return module_from_json(read_json_file(path), cap_order);
}

ModuleMap parse_map_file(const std::string& path, std::size_t cap_order)
{
    return map_from_json(read_json_file(path), cap_order);
}

Json to_json(const SeriesReport& s)
{
    return {{"socle_dims", s.socle_dims}, {"radical_dims", s.radical_dims}, {"radical_length", s.radical_length}};
}

Json to_json(const TrivialityCertificate& c)
{
    Json j{{"stably_trivial", c.stably_trivial}};
    if (c.lift)
        j["lift"] = matrix_to_json(*c.lift);
    else
        j["rank_gap"] = c.rank_gap;
    return j;
}

Json to_json(const GhostVerdict& v)
{
    Json j{{"status", to_string(v.status)}, {"window", {v.lo, v.hi}}};
    if (v.period)
        j["period"] = *v.period;
    if (v.witness) {
        j["witness"] = {{"degree", v.witness->degree},
                        {"through_dual", v.witness->through_dual},
                        {"representative", matrix_to_json(v.witness->representative.matrix())},
                        {"shift_dim", v.witness->representative.source().dim()}};
    }
    return j;
}

Json to_json(const GeneratingBound& b)
{
    Json j{{"bound", b.bound}, {"method", b.method}, {"filtration_dims", b.filtration_dims}};
    if (b.heller_degree)
        j["heller_degree"] = *b.heller_degree;
    return j;
}

Json to_json(const LengthReport& r)
{
    Json j{{"dim", r.dim}, {"series", to_json(r.series)}, {"generating_length_upper", to_json(r.generating)}};
    if (r.ghost_length)
        j["ghost_length"] = *r.ghost_length;
    return j;
}

Json to_json(const CyclicGhostReport& r)
{
    return {{"p", r.p},
            {"r", r.r},
            {"order", r.order},
            {"ghost_lengths", r.lengths},
            {"ghost_number", r.ghost_number},
            {"formula", r.formula},
            {"witness",
             {{"jordan_block", r.witness_block},
              {"chain_length", r.witness_chain},
              {"stably_nontrivial", r.witness_nontrivial},
              {"certificate_ok", r.witness_certificate_ok}}}};
}

Json to_json(const BensonCertificate& c)
{
    return {{"module_dim", c.module.dim()},
            {"restriction_scalar", c.restriction_scalar},
            {"coefficient_sum", c.coefficient_sum},
            {"factoring", to_json(c.factoring)},
            {"certified", c.certified}};
}

Json to_json(const BoundReport& r)
{
    Json j{{"group", r.group},
           {"nilpotency_index", r.nilpotency},
           {"lower", r.lower},
           {"upper", r.upper},
           {"smallest_summand", r.smallest_summand},
           {"chain_length", r.chain_length},
           {"factors_are_ghosts", r.factors_are_ghosts},
           {"certified", r.certified}};
    if (r.theta)
        j["theta"] = element_to_json(*r.theta);
    Json factors = Json::array();
    for (auto [g, e] : r.theta_factors)
        factors.push_back({{"element", g}, {"exponent", e}});
    j["theta_factors"] = factors;
    if (r.certificate)
        j["witness"] = to_json(*r.certificate);
    return j;
}

Json to_json(const ClassificationReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"group", e.group}, {"lower", e.lower}, {"upper", e.upper}, {"method", e.method}});
    return {{"entries", entries}, {"ghost_number_two", r.ghost_number_two}, {"matches", r.matches}};
}

Json to_json(const CompositeReport& r)
{
    Json prefixes = Json::array();
    for (const auto& p : r.prefixes)
        prefixes.push_back({{"length", p.length},
                            {"socle_in_kernel", p.socle_in_kernel},
                            {"image_in_radical", p.image_in_radical},
                            {"stably_trivial", p.stably_trivial}});
    return {{"nilpotency_index", r.nilpotency}, {"prefixes", prefixes}, {"bound_applies", r.bound_applies}, {"ok", r.ok}};
}

Json to_json(const Q8Report& r)
{
    return {{"module", module_to_json(r.module)},
            {"spans_radical_cube", r.spans_radical_cube},
            {"invariants_dim", r.invariants_dim},
            {"dim_mod_8", r.dim_mod_8},
            {"projective_free", r.projective_free},
            {"extension_of_trivials", r.extension_of_trivials},
            {"ghost_length", r.ghost_length},
            {"generating_length_upper", r.generating_upper},
            {"group_bounds", {r.group_lower, r.group_upper}}};
}

Json to_json(const DimensionChain& c)
{
    Json subgroups = Json::array();
    for (const auto& s : c.subgroups)
        subgroups.push_back(s);
    return {{"subgroups", subgroups}, {"exponents", c.exponents}};
}

}  // namespace stmod
