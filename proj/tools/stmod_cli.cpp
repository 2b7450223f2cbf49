#include "stmod/error.hpp"
#include "stmod/serialize.hpp"
#include "stmod/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace stmod;

namespace {

constexpr const char* tool_version = "0.1.0";

enum Exit { ok = 0, verification_failed = 1, input_error = 2, cap_error = 3, internal_error = 4 };

struct Options {
    std::vector<int> window{-4, 4};
    std::uint64_t seed = VerifyOptions{}.seed;
    std::size_t cap_order = 128;
    std::string json_out;
    bool timing = false;

    int lo() const { return window[0]; }
    int hi() const { return window[1]; }
};

// Where a subcommand takes its module from: a file, a Jordan block, or k.
struct ModuleSource {
    std::string group;
    std::string module_file;
    std::size_t jordan = 0;

    void attach(CLI::App* sub)
    {
        sub->add_option("--group", group, "group such as C4, C2xC2, Q8, D16");
        sub->add_option("--module", module_file, "module JSON file");
        sub->add_option("--jordan", jordan, "Jordan block of this size over the cyclic --group");
    }

    GroupPtr load_group(std::size_t cap) const
    {
        if (group.empty())
            throw InputError("--group is required");
        return group_from_json(Json(group), cap);
    }

    Module load(std::size_t cap) const
    {
        if (!module_file.empty()) {
            if (!group.empty() || jordan != 0)
                throw InputError("--module cannot be combined with --group or --jordan");
            return parse_module_file(module_file, cap);
        }
        const auto g = load_group(cap);
        return jordan != 0 ? jordan_module(g, jordan) : trivial_module(g);
    }
};

Json tate_dims(const TateWindow& w)
{
    Json dims = Json::object();
    for (int i = w.lo; i <= w.hi; ++i)
        dims[std::to_string(i)] = w.at(i).dim();
    return dims;
}

Json period_json(const Periodicity& per)
{
    return {{"period", per.period ? Json(*per.period) : Json(nullptr)}, {"dims", per.dims}, {"reason", per.reason}};
}

std::string verdict_line(const CheckResult& r)
{
    std::string line = (r.passed ? "PASS  " : "FAIL  ") + r.id;
    line.resize(std::max<std::size_t>(line.size(), 28), ' ');
    return line + r.title;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stable module computations over p-groups"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--window", opt.window, "Tate degree window LO HI")->expected(2)->allow_extra_args(false);
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--cap-order", opt.cap_order, "largest accepted group order");
    app.add_option("--json", opt.json_out, "write the JSON report to this file");
    app.add_flag("--timing", opt.timing, "include wall-clock seconds in the report");

    ModuleSource src;
    int shift = 1;
    auto* heller = app.add_subcommand("heller", "projective-free Heller shift of a module");
    src.attach(heller);
    heller->add_option("--shift", shift, "shift degree (negative for cosyzygies)");

    auto* tate = app.add_subcommand("tate", "Tate cohomology dimensions over the window");
    src.attach(tate);

    std::string map_file, route = "direct";
    auto* ghost = app.add_subcommand("is-ghost", "decide whether a map is a ghost");
    ghost->add_option("--map", map_file, "map JSON file")->required();
    ghost->add_option("--route", route, "direct or dual")->check(CLI::IsMember({"direct", "dual"}));

    auto* trivial = app.add_subcommand("stably-trivial", "decide whether a map factors through a projective");
    trivial->add_option("--map", map_file, "map JSON file")->required();

    auto* length = app.add_subcommand("ghost-length", "ghost length and generating bound of a module");
    src.attach(length);

    std::vector<std::string> pr_tokens;
    std::uint32_t cyc_p = 0, cyc_r = 0;
    auto* cyclic = app.add_subcommand("ghost-number-cyclic", "exact ghost number of a cyclic p-group");
    cyclic->add_option("assignments", pr_tokens, "p=P r=R");
    cyclic->add_option("--p", cyc_p, "prime");
    cyclic->add_option("--r", cyc_r, "exponent");

    auto* bounds = app.add_subcommand("abelian-bounds", "ghost number bounds for an abelian p-group");
    src.attach(bounds);

    auto* jennings = app.add_subcommand("jennings", "dimension subgroups and nilpotency index");
    src.attach(jennings);

    app.add_subcommand("q8-example", "the Q8 module spanned by the cube of the radical");

    std::string verify_id;
    auto* verify = app.add_subcommand("verify", "run acceptance checks");
    verify->add_option("id", verify_id, "check id or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    Json command = Json::array();
    for (int i = 1; i < argc; ++i)
        command.push_back(argv[i]);
    Json report{{"command", command}, {"tool", "stmod"}, {"version", tool_version}, {"seed", opt.seed}};
    int code = ok;
    const auto start = std::chrono::steady_clock::now();

    try {
        if (opt.lo() > opt.hi())
            throw InputError("--window needs LO <= HI");
        const std::size_t cap = opt.cap_order;
        Json result;
        if (*heller) {
            const auto m = src.load(cap);
            const auto shifted = heller_shift(m, shift);
            result = {{"shift", shift}, {"source_dim", m.dim()}, {"dim", shifted.dim()},
                      {"series", to_json(socle_radical_series(shifted))}, {"module", module_to_json(shifted)}};
        } else if (*tate) {
            const auto m = src.load(cap);
            const TrivialShifts shifts(m.group(), opt.lo(), opt.hi());
            result = {{"window", opt.window}, {"dims", tate_dims(tate_window(m, shifts))},
                      {"trivial_period", period_json(trivial_period(m.group()))}};
        } else if (*ghost) {
            const auto f = parse_map_file(map_file, cap);
            const auto v = is_ghost(f, opt.lo(), opt.hi(), route == "dual" ? GhostRoute::dual : GhostRoute::direct);
            result = {{"route", route}, {"verdict", to_json(v)},
                      {"witness_checked", v.witness ? Json(check_witness(f, *v.witness)) : Json(nullptr)}};
        } else if (*trivial) {
            const auto f = parse_map_file(map_file, cap);
            const auto cert = stable_triviality(f);
            result = {{"certificate", to_json(cert)}, {"certificate_checked", check_certificate(f, cert)}};
        } else if (*length) {
            result = to_json(length_report(src.load(cap)));
        } else if (*cyclic) {
            for (const auto& tok : pr_tokens) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw InputError("expected p=P or r=R, got \"" + tok + "\"");
                const auto key = tok.substr(0, eq);
                std::uint32_t value = 0;
                try {
                    value = static_cast<std::uint32_t>(std::stoul(tok.substr(eq + 1)));
                } catch (const std::exception&) {
                    throw InputError("not a number in \"" + tok + "\"");
                }
                if (key == "p")
                    cyc_p = value;
                else if (key == "r")
                    cyc_r = value;
                else
                    throw InputError("unknown assignment \"" + tok + "\"");
            }
            if (cyc_p == 0 || cyc_r == 0)
                throw InputError("ghost-number-cyclic needs p and r");
            result = to_json(ghost_number_cyclic(cyc_p, cyc_r));
        } else if (*bounds) {
            result = to_json(abelian_bounds(src.load_group(cap), opt.lo(), opt.hi()));
        } else if (*jennings) {
            const auto g = src.load_group(cap);
            const auto chain = jennings_chain(*g, g->p());
            result = {{"group", g->name()}, {"chain", to_json(chain)}, {"nilpotency_index", nilpotency_index(g, g->p())}};
        } else if (app.got_subcommand("q8-example")) {
            result = to_json(q8_example());
        } else if (*verify) {
            VerifyOptions vo{opt.seed, opt.lo(), opt.hi(), opt.cap_order};
            std::vector<std::string> ids;
            if (verify_id == "all")
                ids = verify_ids();
            else
                ids.push_back(verify_id);
            Json checks = Json::array();
            std::size_t passed = 0;
            for (const auto& id : ids) {
                verify_title(id);
                const auto r = run_check(id, vo);
                std::cerr << verdict_line(r) << '\n';
                Json j{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}};
                if (opt.timing)
                    j["seconds"] = r.seconds;
                checks.push_back(std::move(j));
                passed += r.passed;
            }
            std::cerr << passed << '/' << ids.size() << " checks passed\n";
            result = {{"checks", checks}, {"passed", passed}, {"total", ids.size()}};
            if (passed != ids.size())
                code = verification_failed;
        }
        report["result"] = std::move(result);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return input_error;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return cap_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal_error;
    }

    if (opt.timing)
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto text = report.dump(2) + "\n";
    if (opt.json_out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.json_out);
        if (!out || !(out << text)) {
            std::cerr << "input error: cannot write " << opt.json_out << '\n';
            return input_error;
        }
    }
    return code;
}
