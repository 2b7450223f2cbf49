#include "stmod/verify.hpp"

#include "stmod/error.hpp"
#include "stmod/random.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace stmod {

namespace {

GroupPtr group(const std::string& name, const VerifyOptions& opts)
{
    const auto spec = GroupSpec::parse(name);
    if (spec.order() > opts.cap_order)
        throw CapError("verify: group " + name + " exceeds the order cap " + std::to_string(opts.cap_order));
    return build_group(spec);
}

Rng rng_for(const VerifyOptions& opts, std::uint64_t salt)
{
    std::seed_seq seq{opts.seed, salt};
    return Rng(seq);
}

// A nonzero combination when the basis is nonempty.
ModuleMap sample(const Module& a, const Module& b, const std::vector<FpMatrix>& basis, Rng& rng)
{
    auto f = random_combination(a, b, basis, rng);
    for (int t = 0; t < 8 && f.is_zero() && !basis.empty(); ++t)
        f = random_combination(a, b, basis, rng);
    return f;
}

const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>> cyclic_cases{
    {2, 1, 1}, {3, 1, 1}, {2, 2, 2}, {5, 1, 2}, {7, 1, 3}, {2, 3, 4}, {3, 2, 4}};

CheckResult cyclic_ghost_number(const VerifyOptions&)
{
    CheckResult res;
    const auto start = std::chrono::steady_clock::now();
    Json cases = Json::array();
    bool ok = true;
    for (auto [p, r, expected] : cyclic_cases) {
        const auto rep = ghost_number_cyclic(p, r);
        const bool good = rep.ghost_number == expected && rep.witness_nontrivial && rep.witness_certificate_ok;
        ok = ok && good;
        auto j = to_json(rep);
        j["expected"] = expected;
        j["pass"] = good;
        cases.push_back(std::move(j));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.passed = ok && secs < 60;
    res.details = {{"cases", cases}, {"within_60s", secs < 60}};
    return res;
}

CheckResult gh_cyclic(const VerifyOptions&)
{
    CheckResult res;
    Json cases = Json::array();
    bool ok = true;
    for (auto [p, r, expected] : cyclic_cases) {
        const auto rep = ghost_number_cyclic(p, r);
        const bool gh = rep.ghost_number == 1;
        const bool good = gh == (rep.order == 2 || rep.order == 3);
        ok = ok && good;
        cases.push_back({{"group", "C" + std::to_string(rep.order)}, {"ghost_number", rep.ghost_number}, {"gh", gh}});
    }
    res.passed = ok;
    res.details = {{"cases", cases}};
    return res;
}

CheckResult klein_four(const VerifyOptions& opts)
{
    CheckResult res;
    const auto g = group("V4", opts);
    auto rng = rng_for(opts, 3);
    const auto bounds = abelian_bounds(g, opts.lo, opts.hi);
    const bool witness_ok = bounds.certified && bounds.lower == 2 && bounds.upper == 2;

    std::map<std::string, std::size_t> methods;
    std::size_t module_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const auto m = random_module(g, 8, rng);
        const auto gb = generating_length_upper(m);
        bool good = gb.bound <= 2;
        if (gb.method == "invariants-filtration")
            good = good && span_contains(invariants(m).basis, radical_of(m, FpMatrix::identity(m.p(), m.dim())));
        else if (gb.method == "radical-series")
            good = good && gb.bound == radical_length(m);
        else if (gb.method == "heller-shift-of-k")
            good = good && gb.bound == 1 && m.dim() % 2 == 1;
        else
            good = false;
        ++methods[gb.method];
        module_failures += good ? 0 : 1;
    }

    const TrivialShifts shifts(g, opts.lo, opts.hi);
    std::size_t chain_failures = 0, nonzero_chains = 0;
    for (int i = 0; i < 50; ++i) {
        const auto m0 = random_module(g, 6, rng), m1 = random_module(g, 6, rng), m2 = random_module(g, 6, rng);
        const auto w0 = tate_window(m0, shifts), w1 = tate_window(m1, shifts);
        const auto f1 = sample(m0, m1, ghost_subspace(m0, m1, w0), rng);
        const auto f2 = sample(m1, m2, ghost_subspace(m1, m2, w1), rng);
        nonzero_chains += !f1.is_zero() && !f2.is_zero();
        const bool ghosts = is_ghost(f1, w0, std::nullopt).status != GhostStatus::not_ghost &&
                            is_ghost(f2, w1, std::nullopt).status != GhostStatus::not_ghost;
        if (!ghosts || !is_stably_trivial(compose(f2, f1)))
            ++chain_failures;
    }
    res.passed = witness_ok && module_failures == 0 && chain_failures == 0;
    res.details = {{"lower_witness", to_json(bounds)},
                   {"modules", 200},
                   {"generating_methods", methods},
                   {"module_failures", module_failures},
                   {"chains", 50},
                   {"chains_with_nonzero_factors", nonzero_chains},
                   {"chain_failures", chain_failures}};
    return res;
}

CheckResult quaternion_example(const VerifyOptions&)
{
    CheckResult res;
    const auto q = q8_example();
    res.passed = q.spans_radical_cube && q.invariants_dim == 1 && q.dim_mod_8 == 3 && q.projective_free &&
                 q.extension_of_trivials && q.ghost_length == 2 && q.generating_upper == 2 && q.group_lower == 2 &&
                 q.group_upper == 4;
    res.details = to_json(q);
    return res;
}

CheckResult abelian_bounds_check(const VerifyOptions& opts)
{
    CheckResult res;
    const std::vector<std::string> names{"C2",    "C4",     "C8",   "C16",   "C2xC2", "C2xC4", "C2xC8", "C4xC4",
                                         "C2^3",  "C2^2xC4", "C2^4", "C3",    "C9",    "C3xC3", "C5",    "C7",
                                         "C11",   "C13"};
    Json groups = Json::array();
    bool ok = true;
    for (const auto& name : names) {
        const auto g = group(name, opts);
        const auto b = abelian_bounds(g, opts.lo, opts.hi);
        std::size_t m = 1;
        for (auto f : g->spec()->factors)
            m += f - 1;
        const bool two_summand = g->p() == 2 && b.smallest_summand == 2;
        const bool good = b.certified && b.lower <= b.upper && b.upper + 1 == b.nilpotency && b.nilpotency == m &&
                          (!two_summand || b.lower == b.upper);
        ok = ok && good;
        auto j = to_json(b);
        j["pass"] = good;
        groups.push_back(std::move(j));
    }
    const auto cls = classify_ghost_number_two();
    res.passed = ok && cls.matches;
    res.details = {{"groups", groups}, {"classification", to_json(cls)}};
    return res;
}

CheckResult duality(const VerifyOptions& opts)
{
    CheckResult res;
    const int lo = -opts.hi - 1, hi = opts.hi;
    auto rng = rng_for(opts, 6);
    Json groups = Json::array();
    bool ok = true;
    for (const auto* name : {"C4", "C8", "C2xC2", "Q8"}) {
        const auto g = group(name, opts);
        const TrivialShifts shifts(g, lo, hi);
        const auto period = trivial_period(g).period;
        std::size_t maps = 0, agree = 0, ghosts = 0, dims_checked = 0, dims_agree = 0;
        for (int pair = 0; maps < 100; ++pair) {
            const auto m = random_module(g, 6, rng), n = random_module(g, 6, rng);
            const auto wm = tate_window(m, shifts);
            const auto wn = tate_window(dual_module(n), shifts);
            const auto ghost_basis = ghost_subspace(m, n, wm);
            const auto hom = hom_basis(m, n);
            for (int t = 0; t < 10; ++t, ++maps) {
                const auto f = sample(m, n, t % 2 == 0 ? ghost_basis : hom, rng);
                const auto v = is_ghost(f, wm, period);
                const auto vd = is_ghost(dual_map(f), wn, period);
                agree += v.status == vd.status;
                ghosts += v.status != GhostStatus::not_ghost;
            }
            if (pair < 4) {
                const auto md = tate_window(dual_module(m), shifts);
                for (int i = 0; i <= 3 && -i - 1 >= lo && i <= hi; ++i) {
                    ++dims_checked;
                    dims_agree += wm.at(-i - 1).dim() == md.at(i).dim();
                }
            }
        }
        const bool good = agree == maps && dims_agree == dims_checked && dims_checked > 0;
        ok = ok && good;
        groups.push_back({{"group", g->name()},
                          {"window", {lo, hi}},
                          {"maps", maps},
                          {"verdicts_agree", agree},
                          {"ghosts", ghosts},
                          {"tate_dims_checked", dims_checked},
                          {"tate_dims_agree", dims_agree}});
    }
    res.passed = ok;
    res.details = {{"groups", groups}};
    return res;
}

const std::vector<std::string> small_groups{"C2", "C3", "C4", "C2xC2", "C5", "C7", "C8",
                                            "C2xC4", "C2^3", "D8", "Q8", "C9", "C3xC3"};

CheckResult target_k(const VerifyOptions& opts)
{
    CheckResult res;
    auto rng = rng_for(opts, 7);
    std::size_t maps = 0, ghosts = 0, exceptions = 0, nonzero_ghosts = 0;
    for (const auto& name : small_groups) {
        const auto g = group(name, opts);
        const TrivialShifts shifts(g, opts.lo, opts.hi);
        const auto period = trivial_period(g).period;
        const auto k = trivial_module(g);
        for (int i = 0; i < 4; ++i) {
            // Odd sources carry a free summand, the only way a ghost into k can be nonzero.
            auto m = random_module(g, 6, rng);
            if (i % 2 == 1)
                m = random_basis_change(direct_sum(m, regular_module(g)), rng);
            const auto w = tate_window(m, shifts);
            const auto gb = ghost_subspace(m, k, w);
            const auto hom = hom_basis(m, k);
            for (int t = 0; t < 4; ++t, ++maps) {
                const auto f = sample(m, k, t < 2 ? gb : hom, rng);
                if (is_ghost(f, w, period).status == GhostStatus::not_ghost)
                    continue;
                ++ghosts;
                nonzero_ghosts += !f.is_zero();
                exceptions += is_stably_trivial(f) ? 0 : 1;
            }
        }
    }
    res.passed = exceptions == 0 && maps >= 200;
    res.details = {{"maps", maps}, {"verified_ghosts", ghosts}, {"nonzero_ghosts", nonzero_ghosts},
                   {"exceptions", exceptions}, {"window", {opts.lo, opts.hi}}};
    return res;
}

CheckResult soc_rad(const VerifyOptions& opts)
{
    CheckResult res;
    auto rng = rng_for(opts, 8);
    std::size_t chains = 0, exceptions = 0, nonzero = 0;
    for (const auto* name : {"C4", "C8", "C9", "C2xC2", "Q8", "D8", "C2xC4", "C3xC3", "C2^3"}) {
        const auto g = group(name, opts);
        const TrivialShifts shifts(g, opts.lo, opts.hi);
        const auto period = trivial_period(g).period;
        for (int c = 0; c < 12; ++c, ++chains) {
            const std::size_t l = 1 + static_cast<std::size_t>(c % 3);
            std::vector<Module> mods{random_module(g, 6, rng)};
            std::vector<ModuleMap> chain;
            bool ghosts = true;
            for (std::size_t j = 0; j < l; ++j) {
                mods.push_back(c % 2 == 0 ? mods.back() : random_module(g, 6, rng));
                const auto w = tate_window(mods[j], shifts);
                chain.push_back(sample(mods[j], mods[j + 1], ghost_subspace(mods[j], mods[j + 1], w), rng));
                ghosts = ghosts && is_ghost(chain.back(), w, period).status != GhostStatus::not_ghost;
            }
            const auto rep = composite_bound_check(chain);
            bool good = ghosts;
            for (const auto& p : rep.prefixes)
                good = good && p.socle_in_kernel && p.image_in_radical;
            nonzero += !compose_chain(chain).is_zero();
            exceptions += good ? 0 : 1;
        }
    }
    res.passed = exceptions == 0 && chains >= 100;
    res.details = {{"chains", chains}, {"nonzero_composites", nonzero}, {"exceptions", exceptions},
                   {"window", {opts.lo, opts.hi}}};
    return res;
}

void partitions(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                std::vector<std::vector<std::uint32_t>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

CheckResult nilpotency(const VerifyOptions& opts)
{
    CheckResult res;
    std::vector<GroupSpec> specs;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        std::uint32_t pa = 1;
        for (std::uint32_t a = 1; pa * p <= 32; ++a) {
            pa *= p;
            std::vector<std::vector<std::uint32_t>> parts;
            std::vector<std::uint32_t> cur;
            partitions(a, a, cur, parts);
            for (const auto& part : parts) {
                std::vector<std::uint32_t> factors;
                for (auto e : part) {
                    std::uint32_t f = 1;
                    for (std::uint32_t i = 0; i < e; ++i)
                        f *= p;
                    factors.push_back(f);
                }
                std::sort(factors.begin(), factors.end());
                specs.push_back(GroupSpec::abelian(p, factors));
            }
        }
    }
    for (std::uint32_t n = 3; n <= 5; ++n)
        for (auto s : {GroupSpec::quaternion(n), GroupSpec::dihedral(n), GroupSpec::semidihedral(n),
                       GroupSpec::modular(n)})
            specs.push_back(s);

    bool ok = true;
    Json groups = Json::array();
    std::map<std::string, std::size_t> computed;
    for (const auto& spec : specs) {
        if (spec.order() > opts.cap_order)
            throw CapError("verify: group " + spec.name() + " exceeds the order cap");
        const auto g = build_group(spec);
        const auto chain = jennings_chain(*g, g->p());
        const auto direct = dimension_subgroups_direct(g);
        const std::size_t by_formula = chain.nilpotency_index(g->p());
        const std::size_t by_powers = radical_filtration(g).nilpotency_index();
        const bool good = by_formula == by_powers && chain.subgroups == direct.subgroups;
        ok = ok && good;
        computed[spec.name()] = by_powers;
        groups.push_back({{"group", spec.name()},
                          {"jennings", by_formula},
                          {"radical_powers", by_powers},
                          {"chains_agree", chain.subgroups == direct.subgroups}});
    }

    std::map<std::string, std::size_t> expected{{"Q8", 5},    {"C2", 2},    {"C2xC2", 3}, {"C2xC2xC2", 4},
                                                {"C2xC2xC2xC2", 5}, {"D16", 9}, {"SD16", 9},  {"M16", 9}};
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u})
        expected["C" + std::to_string(q)] = q;
    Json named = Json::array();
    for (const auto& [name, value] : expected) {
        const auto it = computed.find(name);
        const bool good = it != computed.end() && it->second == value;
        ok = ok && good;
        named.push_back({{"group", name}, {"expected", value}, {"computed", it == computed.end() ? 0 : it->second}});
    }
    res.passed = ok;
    res.details = {{"groups", groups}, {"named", named}};
    return res;
}

CheckResult bound_chain(const VerifyOptions& opts)
{
    CheckResult res;
    auto rng = rng_for(opts, 10);
    std::size_t chains = 0, exceptions = 0, nonzero_factors = 0;
    Json per_group = Json::array();
    for (const auto* name : {"C2", "C3", "C4", "C2xC2", "C5", "C7", "C8", "C2xC4", "C2^3", "D8", "Q8"}) {
        const auto g = group(name, opts);
        const TrivialShifts shifts(g, opts.lo, opts.hi);
        const auto period = trivial_period(g).period;
        const std::size_t len = nilpotency_index(g, g->p()) - 1;
        std::size_t group_chains = 0;
        for (int c = 0; c < 6; ++c, ++chains, ++group_chains) {
            // Even chains are endomorphisms of one module, odd chains pass through fresh modules.
            std::vector<Module> mods{random_module(g, 6, rng)};
            std::vector<ModuleMap> chain;
            bool ghosts = true;
            for (std::size_t j = 0; j < len; ++j) {
                mods.push_back(c % 2 == 0 ? mods.back() : random_module(g, 6, rng));
                const auto w = tate_window(mods[j], shifts);
                chain.push_back(sample(mods[j], mods[j + 1], ghost_subspace(mods[j], mods[j + 1], w), rng));
                ghosts = ghosts && is_ghost(chain.back(), w, period).status != GhostStatus::not_ghost;
                nonzero_factors += !chain.back().is_zero();
            }
            if (!ghosts || !is_stably_trivial(compose_chain(chain)))
                ++exceptions;
        }
        per_group.push_back({{"group", g->name()}, {"chain_length", len}, {"chains", group_chains}});
    }
    res.passed = exceptions == 0;
    res.details = {{"groups", per_group}, {"chains", chains}, {"nonzero_factors", nonzero_factors},
                   {"exceptions", exceptions}, {"window", {opts.lo, opts.hi}}};
    return res;
}

CheckResult heller_dims(const VerifyOptions& opts)
{
    CheckResult res;
    const std::vector<std::string> names{"C2",    "C4",   "C8",   "C16",   "C2xC2", "C2xC4", "C2xC8", "C4xC4",
                                         "C2^3",  "C2^2xC4", "C2^4", "D8",  "Q8",    "SD8",   "M8",    "D16",
                                         "Q16",   "SD16", "M16",  "C3",    "C9",    "C3xC3", "C5",    "C7",
                                         "C11",   "C13"};
    bool ok = true;
    Json groups = Json::array();
    for (const auto& name : names) {
        const auto g = group(name, opts);
        const TrivialShifts shifts(g, -4, 4);
        Json dims = Json::array();
        bool good = true;
        for (int i = -4; i <= 4; ++i) {
            const std::size_t d = shifts.at(i).dim();
            dims.push_back(d);
            const std::size_t expected = i % 2 == 0 ? 1 % g->order() : g->order() - 1;
            good = good && d % g->order() == expected;
        }
        ok = ok && good;
        groups.push_back({{"group", g->name()}, {"order", g->order()}, {"dims", dims}, {"pass", good}});
    }
    Json jordan = Json::array();
    for (const auto* name : {"C2", "C3", "C4", "C5", "C7", "C8", "C9"}) {
        const auto g = group(name, opts);
        bool good = true;
        for (std::size_t i = 1; i < g->order(); ++i) {
            const auto shifted = heller_shift(jordan_module(g, i), 1);
            good = good && iso_test(shifted, jordan_module(g, g->order() - i)).status == IsoStatus::isomorphic;
        }
        ok = ok && good;
        jordan.push_back({{"group", g->name()}, {"pass", good}});
    }
    res.passed = ok;
    res.details = {{"trivial_shifts", groups}, {"jordan_blocks", jordan}};
    return res;
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::tuple<std::string, std::string, CheckFn>>& registry()
{
    static const std::vector<std::tuple<std::string, std::string, CheckFn>> r{
        {"cyclic-ghost-number", "cyclic ghost numbers ceil((p^r-1)/2)", cyclic_ghost_number},
        {"gh-cyclic", "ghost number 1 exactly for C2 and C3", gh_cyclic},
        {"klein-four", "V4 ghost and generating number 2", klein_four},
        {"quaternion-example", "Q8 radical-cube module, ghost length 2", quaternion_example},
        {"abelian-bounds", "abelian bounds and ghost number 2 classification", abelian_bounds_check},
        {"duality", "ghost iff dual ghost; Tate duality dimensions", duality},
        {"target-k", "ghosts into k are stably trivial", target_k},
        {"soc-rad", "socle/radical containments along ghost chains", soc_rad},
        {"nilpotency", "nilpotency indices, Jennings vs radical powers", nilpotency},
        {"bound-chain", "(m-1)-fold ghost composites are stably trivial", bound_chain},
        {"heller-dims", "Heller shift dimensions and Jordan block shifts", heller_dims},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& verify_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, title, fn] : registry())
            out.push_back(id);
        return out;
    }();
    return ids;
}

std::string verify_title(const std::string& id)
{
    for (const auto& [rid, title, fn] : registry())
        if (rid == id)
            return title;
    throw InputError("unknown check id \"" + id + "\"");
}

CheckResult run_check(const std::string& id, const VerifyOptions& opts)
{
    for (const auto& [rid, title, fn] : registry()) {
        if (rid != id)
            continue;
        const auto start = std::chrono::steady_clock::now();
        auto res = fn(opts);
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.id = rid;
        res.title = title;
        return res;
    }
    throw InputError("unknown check id \"" + id + "\"");
}

}  // namespace stmod
