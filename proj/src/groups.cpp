#include "stmod/groups.hpp"

#include "stmod/algebra.hpp"
#include "stmod/error.hpp"
#include "stmod/fflin.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace stmod {

namespace {

bool is_power_of(std::uint64_t n, std::uint32_t p, std::uint32_t& exponent)
{
    exponent = 0;
    if (n == 0)
        return false;
    while (n % p == 0) {
        n /= p;
        ++exponent;
    }
    return n == 1;
}

std::string power_label(const std::string& base, std::size_t e)
{
    if (e == 0)
        return "";
    return e == 1 ? base : base + "^" + std::to_string(e);
}

constexpr std::size_t max_table_order = 256;

}  // namespace

GroupSpec GroupSpec::abelian(std::uint32_t p, std::vector<std::uint32_t> factors)
{
    GroupSpec s;
    s.kind = GroupKind::abelian;
    s.p = p;
    s.factors = std::move(factors);
    std::sort(s.factors.begin(), s.factors.end());
    return s;
}

GroupSpec GroupSpec::cyclic(std::uint32_t order)
{
    std::uint32_t p = 2;
    while (p <= order && order % p != 0)
        ++p;
    return abelian(p, {order});
}

std::string GroupSpec::name() const
{
    switch (kind) {
    case GroupKind::abelian: {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i)
            s += (i ? "xC" : "C") + std::to_string(factors[i]);
        return s;
    }
    case GroupKind::quaternion:
        return "Q" + std::to_string(1u << n);
    case GroupKind::dihedral:
        return "D" + std::to_string(1u << n);
    case GroupKind::semidihedral:
        return "SD" + std::to_string(1u << n);
    case GroupKind::modular:
        return "M" + std::to_string(1u << n);
    }
    return "?";
}

GroupSpec GroupSpec::parse(const std::string& text)
{
    auto fail = [&](const std::string& why) -> GroupSpec {
        throw InputError("cannot parse group '" + text + "': " + why);
    };
    auto parse_uint = [&](const std::string& s) -> std::uint32_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 9)
            fail("expected a positive integer, got '" + s + "'");
        return static_cast<std::uint32_t>(std::stoul(s));
    };
    if (text == "V4")
        return abelian(2, {2, 2});
    for (auto [prefix, kind] : {std::pair{"SD", GroupKind::semidihedral}, std::pair{"Q", GroupKind::quaternion},
                                std::pair{"D", GroupKind::dihedral}, std::pair{"M", GroupKind::modular}}) {
        std::string pre = prefix;
        if (text.rfind(pre, 0) == 0) {
            std::uint32_t order = parse_uint(text.substr(pre.size()));
            std::uint32_t e = 0;
            if (!is_power_of(order, 2, e))
                fail("order must be a power of 2");
            GroupSpec s{kind, 2, {}, e};
            s.validate();
            return s;
        }
    }
    std::vector<std::uint32_t> factors;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.empty() || part[0] != 'C')
            fail("expected factors of the form C<n> separated by 'x'");
        std::string body = part.substr(1);
        std::uint32_t reps = 1;
        if (auto caret = body.find('^'); caret != std::string::npos) {
            reps = parse_uint(body.substr(caret + 1));
            body = body.substr(0, caret);
        }
        std::uint32_t order = parse_uint(body);
        for (std::uint32_t i = 0; i < reps; ++i)
            factors.push_back(order);
    }
    if (factors.empty())
        fail("no factors");
    GroupSpec s = abelian(cyclic(factors.front()).p, factors);
    s.validate();
    return s;
}

std::size_t GroupSpec::order() const
{
    if (kind != GroupKind::abelian)
        return std::size_t{1} << n;
    std::size_t o = 1;
    for (auto f : factors)
        o *= f;
    return o;
}

void GroupSpec::validate() const
{
    if (!is_prime(p))
        throw InputError("group spec: p = " + std::to_string(p) + " is not prime");
    if (kind == GroupKind::abelian) {
        if (factors.empty())
            throw InputError("group spec: abelian group needs at least one invariant factor");
        for (auto f : factors) {
            std::uint32_t e = 0;
            if (f < p || !is_power_of(f, p, e))
                throw InputError("group spec: invariant factor " + std::to_string(f) + " is not a positive power of " +
                                 std::to_string(p));
        }
        return;
    }
    if (p != 2)
        throw InputError("group spec: " + name() + " requires p = 2");
    if (n < 3)
        throw InputError("group spec: non-abelian families require n >= 3, got n = " + std::to_string(n));
    if (n > 12)
        throw CapError("group spec: order 2^" + std::to_string(n) + " is beyond the supported range");
}

Group::Group(std::uint32_t p, std::vector<std::uint32_t> table, std::vector<std::size_t> generators,
             std::vector<std::string> generator_names, std::vector<Relation> relations, std::string name,
             std::optional<GroupSpec> spec)
    : p_(p), table_(std::move(table)), generators_(std::move(generators)),
      generator_names_(std::move(generator_names)), relations_(std::move(relations)), name_(std::move(name)),
      spec_(std::move(spec))
{
    std::size_t n = 0;
    while (n * n < table_.size())
        ++n;
    order_ = n;
    if (n == 0 || n * n != table_.size())
        throw InputError("group " + name_ + ": multiplication table is not square");
    if (n > max_table_order)
        throw CapError("group " + name_ + ": order " + std::to_string(n) + " exceeds the table cap");
    std::uint32_t e = 0;
    if (!is_prime(p) || !is_power_of(n, p, e))
        throw InputError("group " + name_ + ": order " + std::to_string(n) + " is not a power of " + std::to_string(p));
    for (auto v : table_)
        if (v >= n)
            throw InputError("group " + name_ + ": table entry out of range");
    for (std::size_t a = 0; a < n; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw InputError("group " + name_ + ": element 0 is not a two-sided identity");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == n)
            throw InputError("group " + name_ + ": element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab = mul(a, b);
            for (std::size_t c = 0; c < n; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    throw InputError("group " + name_ + ": multiplication is not associative");
        }
    if (generator_names_.size() != generators_.size())
        throw InputError("group " + name_ + ": generator names do not match generators");
    for (auto g : generators_)
        if (g >= n)
            throw InputError("group " + name_ + ": generator out of range");

    // Shortest words by breadth-first search over left multiplication by generators.
    words_.assign(n, Word{});
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t a = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            std::size_t b = mul(generators_[i], a);
            if (seen[b])
                continue;
            seen[b] = true;
            Word w;
            w.letters.push_back({i, 1});
            w.letters.insert(w.letters.end(), words_[a].letters.begin(), words_[a].letters.end());
            words_[b] = std::move(w);
            queue.push_back(b);
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
        throw InputError("group " + name_ + ": generators do not generate the group");
    for (const auto& rel : relations_)
        if (evaluate(rel.lhs) != evaluate(rel.rhs))
            throw InputError("group " + name_ + ": table violates relation " + rel.text);
}

std::size_t Group::power(std::size_t a, std::int64_t k) const
{
    std::size_t base = k < 0 ? inv(a) : a;
    std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    std::size_t r = 0;
    for (std::uint64_t i = 0; i < e; ++i)
        r = mul(r, base);
    return r;
}

std::size_t Group::element_order(std::size_t a) const
{
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = mul(x, a))
        ++k;
    return k;
}

std::size_t Group::commutator(std::size_t a, std::size_t b) const
{
    return mul(mul(a, b), mul(inv(a), inv(b)));
}

bool Group::is_abelian() const
{
    for (auto a : generators_)
        for (auto b : generators_)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::size_t Group::evaluate(const Word& w) const
{
    std::size_t r = 0;
    for (auto [gen, exp] : w.letters)
        r = mul(r, power(generators_.at(gen), exp));
    return r;
}

std::string Group::element_label(std::size_t a) const
{
    if (a == 0)
        return "1";
    if (spec_ && spec_->kind == GroupKind::abelian) {
        std::string s;
        std::size_t rest = a;
        for (std::size_t i = 0; i < spec_->factors.size(); ++i) {
            std::size_t e = rest % spec_->factors[i];
            rest /= spec_->factors[i];
            auto part = power_label(generator_names_[i], e);
            if (!part.empty())
                s += (s.empty() ? "" : " ") + part;
        }
        return s;
    }
    if (spec_) {
        const std::size_t half = order_ / 2;
        std::string s = power_label("x", a % half);
        if (a >= half)
            s += s.empty() ? "y" : " y";
        return s;
    }
    return "e" + std::to_string(a);
}

GroupPtr build_group(const GroupSpec& spec)
{
    spec.validate();
    const std::size_t n = spec.order();
    if (n > max_table_order)
        throw CapError("group " + spec.name() + ": order " + std::to_string(n) + " exceeds the table cap of " +
                       std::to_string(max_table_order));
    std::vector<std::uint32_t> table(n * n);
    std::vector<std::size_t> gens;
    std::vector<std::string> names;
    std::vector<Relation> rels;

    if (spec.kind == GroupKind::abelian) {
        const auto& f = spec.factors;
        std::vector<std::size_t> stride(f.size(), 1);
        for (std::size_t i = 1; i < f.size(); ++i)
            stride[i] = stride[i - 1] * f[i - 1];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::size_t c = 0;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    std::size_t ea = (a / stride[i]) % f[i], eb = (b / stride[i]) % f[i];
                    c += ((ea + eb) % f[i]) * stride[i];
                }
                table[a * n + b] = static_cast<std::uint32_t>(c);
            }
        for (std::size_t i = 0; i < f.size(); ++i) {
            gens.push_back(stride[i]);
            names.push_back(f.size() == 1 ? "g" : "g" + std::to_string(i));
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            rels.push_back({names[i] + "^" + std::to_string(f[i]) + " = 1", Word{{{i, int(f[i])}}}, Word{}});
            for (std::size_t j = i + 1; j < f.size(); ++j)
                rels.push_back({names[i] + " " + names[j] + " = " + names[j] + " " + names[i],
                                Word{{{i, 1}, {j, 1}}}, Word{{{j, 1}, {i, 1}}}});
        }
    } else {
        // x^N = 1, y x y^-1 = x^s, y^2 = x^t with N = 2^(n-1)
        const std::int64_t N = std::int64_t{1} << (spec.n - 1);
        std::int64_t s = -1, t = 0;
        switch (spec.kind) {
        case GroupKind::quaternion:
            t = N / 2;
            break;
        case GroupKind::dihedral:
            break;
        case GroupKind::semidihedral:
            s = -1 + N / 2;
            break;
        case GroupKind::modular:
            s = 1 + N / 2;
            break;
        default:
            break;
        }
        auto norm = [N](std::int64_t v) { return static_cast<std::size_t>(((v % N) + N) % N); };
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::int64_t i1 = a % N, j1 = a / N, i2 = b % N, j2 = b / N;
                std::int64_t i = j1 == 0 ? i1 + i2 : i1 + s * i2;
                std::int64_t j = j1 + j2;
                if (j == 2) {
                    i += t;
                    j = 0;
                }
                table[a * n + b] = static_cast<std::uint32_t>(norm(i) + j * N);
            }
        gens = {1, static_cast<std::size_t>(N)};
        names = {"x", "y"};
        const int Ni = static_cast<int>(N);
        rels.push_back({"x^" + std::to_string(N) + " = 1", Word{{{0, Ni}}}, Word{}});
        if (spec.kind == GroupKind::quaternion)
            rels.push_back({"x^" + std::to_string(N / 2) + " = y^2", Word{{{0, Ni / 2}}}, Word{{{1, 2}}}});
        else
            rels.push_back({"y^2 = 1", Word{{{1, 2}}}, Word{}});
        std::string rhs = s == -1 ? "x^-1" : "x^" + std::to_string(s);
        rels.push_back({"y x y^-1 = " + rhs, Word{{{1, 1}, {0, 1}, {1, -1}}}, Word{{{0, static_cast<int>(s)}}}});
    }
    return std::make_shared<const Group>(spec.p, std::move(table), std::move(gens), std::move(names), std::move(rels),
                                         spec.name(), spec);
}

std::vector<std::size_t> center(const Group& g)
{
    std::vector<std::size_t> z;
    for (std::size_t a = 0; a < g.order(); ++a) {
        bool central = true;
        for (std::size_t b = 0; b < g.order() && central; ++b)
            central = g.mul(a, b) == g.mul(b, a);
        if (central)
            z.push_back(a);
    }
    return z;
}

std::vector<std::size_t> generated_subgroup(const Group& g, std::span<const std::size_t> elements)
{
    std::vector<bool> in(g.order(), false);
    in[0] = true;
    std::vector<std::size_t> members{0};
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
        for (auto s : elements) {
            std::size_t b = g.mul(members[idx], s);
            if (!in[b]) {
                in[b] = true;
                members.push_back(b);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subgroup(const Group& g, std::span<const std::size_t> elements)
{
    std::vector<bool> in(g.order(), false);
    for (auto e : elements) {
        if (e >= g.order())
            return false;
        in[e] = true;
    }
    if (!in[0])
        return false;
    for (auto a : elements)
        for (auto b : elements)
            if (!in[g.mul(a, b)])
                return false;
    return true;
}

bool is_normal(const Group& g, std::span<const std::size_t> subgroup)
{
    std::vector<bool> in(g.order(), false);
    for (auto e : subgroup)
        in[e] = true;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (auto h : subgroup)
            if (!in[g.mul(g.mul(a, h), g.inv(a))])
                return false;
    return true;
}

std::vector<std::size_t> left_transversal(const Group& g, std::span<const std::size_t> subgroup)
{
    std::vector<bool> covered(g.order(), false);
    std::vector<std::size_t> reps;
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (covered[a])
            continue;
        reps.push_back(a);
        for (auto h : subgroup)
            covered[g.mul(a, h)] = true;
    }
    return reps;
}

CyclicSubgroup cyclic_subgroup(const Group& g, std::size_t generator)
{
    if (generator == 0 || generator >= g.order())
        throw PreconditionError("cyclic_subgroup: generator must be a non-identity element");
    CyclicSubgroup c;
    std::size_t gen[] = {generator};
    c.elements = generated_subgroup(g, gen);
    c.transversal = left_transversal(g, c.elements);
    return c;
}

std::size_t Subgroup::restrict(std::size_t parent_element) const
{
    for (std::size_t i = 0; i < embedding.size(); ++i)
        if (embedding[i] == parent_element)
            return i;
    return static_cast<std::size_t>(-1);
}

Subgroup make_subgroup(const GroupPtr& parent, std::span<const std::size_t> elements)
{
    std::vector<std::size_t> members(elements.begin(), elements.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!is_subgroup(*parent, members))
        throw InputError("make_subgroup: element set is not a subgroup of " + parent->name());
    if (members.size() == 1)
        throw PreconditionError("make_subgroup: the trivial subgroup is not supported");
    const std::size_t n = members.size();
    std::vector<std::size_t> local(parent->order(), n);
    for (std::size_t i = 0; i < n; ++i)
        local[members[i]] = i;
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = static_cast<std::uint32_t>(local[parent->mul(members[a], members[b])]);
    std::vector<std::size_t> gens, parent_gens;
    std::vector<std::string> names;
    for (std::size_t i = 1; i < n; ++i) {
        auto current = generated_subgroup(*parent, parent_gens);
        if (std::binary_search(current.begin(), current.end(), members[i]))
            continue;
        parent_gens.push_back(members[i]);
        gens.push_back(i);
        names.push_back(parent->element_label(members[i]));
    }
    std::string label = "<";
    for (std::size_t i = 0; i < names.size(); ++i)
        label += (i ? ", " : "") + names[i];
    label += "> in " + parent->name();
    Subgroup s;
    s.parent = parent;
    s.group = std::make_shared<const Group>(parent->p(), std::move(table), std::move(gens), std::move(names),
                                            std::vector<Relation>{}, label);
    s.embedding = members;
    s.transversal = left_transversal(*parent, members);
    return s;
}

std::size_t DimensionChain::nilpotency_index(std::uint32_t p) const
{
    std::size_t sum = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        sum += (i + 1) * exponents[i];
    return 1 + (p - 1) * sum;
}

namespace {

DimensionChain chain_from_subgroups(std::vector<std::vector<std::size_t>> subgroups, std::uint32_t p)
{
    DimensionChain chain;
    chain.subgroups = std::move(subgroups);
    for (std::size_t i = 0; i + 1 < chain.subgroups.size(); ++i) {
        const std::size_t a = chain.subgroups[i].size(), b = chain.subgroups[i + 1].size();
        std::uint32_t e = 0;
        if (a % b != 0 || !is_power_of(a / b, p, e))
            throw InternalError("dimension chain: index is not a power of p");
        chain.exponents.push_back(e);
    }
    return chain;
}

}  // namespace

DimensionChain jennings_chain(const Group& g, std::uint32_t p)
{
    if (g.p() != p)
        throw InputError("jennings_chain: group " + g.name() + " is a " + std::to_string(g.p()) + "-group, not a " +
                         std::to_string(p) + "-group");
    std::vector<std::vector<std::size_t>> f;
    std::vector<std::size_t> all(g.order());
    for (std::size_t a = 0; a < g.order(); ++a)
        all[a] = a;
    f.push_back(all);
    for (std::size_t n = 2; f.back().size() > 1; ++n) {
        if (n > g.order() + 2)
            throw InternalError("jennings_chain: recursion did not terminate");
        std::vector<std::size_t> gens;
        for (auto a : all)
            for (auto b : f[n - 2])
                gens.push_back(g.commutator(a, b));
        const std::size_t idx = (n + p - 1) / p;  // ceil(n / p), 1-based
        for (auto c : f[idx - 1])
            gens.push_back(g.power(c, p));
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        f.push_back(generated_subgroup(g, gens));
    }
    return chain_from_subgroups(std::move(f), p);
}

DimensionChain dimension_subgroups_direct(const GroupPtr& g)
{
    auto filtration = radical_filtration(g);
    std::vector<std::vector<std::size_t>> f;
    for (std::size_t i = 1; i < filtration.bases.size(); ++i) {
        std::vector<std::size_t> members;
        for (std::size_t a = 0; a < g->order(); ++a) {
            FpMatrix v(g->p(), g->order(), 1);
            if (a != 0) {
                v.set(a, 0, 1);
                v.set(0, 0, -1);
            }
            if (span_contains(filtration.bases[i], v))
                members.push_back(a);
        }
        f.push_back(std::move(members));
        if (f.back().size() == 1)
            break;
    }
    return chain_from_subgroups(std::move(f), g->p());
}

std::size_t nilpotency_index(const GroupPtr& g, std::uint32_t p)
{
    if (g->p() != p)
        throw InputError("nilpotency_index: group " + g->name() + " is not a " + std::to_string(p) + "-group");
    const std::size_t by_jennings = jennings_chain(*g, p).nilpotency_index(p);
    const std::size_t by_powers = radical_filtration(g).nilpotency_index();
    if (by_jennings != by_powers)
        throw InternalError("nilpotency_index: Jennings formula gives " + std::to_string(by_jennings) +
                            " but radical powering gives " + std::to_string(by_powers) + " for " + g->name());
    return by_powers;
}

}  // namespace stmod
