// Batch driver: build resolutions, run verification suites, compute
// characters and Ext tables, emit JSON. Exit codes: 0 success, 1 a
// verification check failed, 2 usage or configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "klrcalc/jsonio.hpp"
#include "klrcalc/verify.hpp"

using namespace klrcalc;
using nlohmann::json;

namespace {

struct Opts {
    int a = 1, b = 1, m = 1;
    bool have_ab = false;
    std::string pi, sigma;
    int cutoff = 12;
    std::string ring = "Q";
    int p = 2;
    std::string out;
    std::string suite;
    int max_d = 4;
};

void write_out(const Opts& o, const json& j) {
    std::string text = dump_json(j);
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + o.out);
    f << text;
}

Ring parse_ring(const Opts& o) {
    if (o.ring == "Q") return Ring::Q;
    if (o.ring == "Z") return Ring::Z;
    if (o.ring == "Fp") {
        if (o.p < 2) throw std::invalid_argument("--p must be at least 2");
        return Ring::Fp;
    }
    throw std::invalid_argument("--ring must be Q, Z or Fp");
}

KostantPartition partition_arg(const Opts& o) {
    if (!o.pi.empty()) return parse_partition(o.pi);
    if (!o.have_ab) throw std::invalid_argument("give --a/--b/--m or --pi");
    KostantPartition p;
    p.parts.emplace_back(Root(o.a, o.b + 1), o.m);
    p.validate();
    return p;
}

json params_json(const Opts& o) {
    json p{{"cutoff", o.cutoff}, {"ring", o.ring}};
    if (o.ring == "Fp") p["p"] = o.p;
    if (!o.pi.empty())
        p["pi"] = o.pi;
    else
        p["alpha"] = {{"a", o.a}, {"b", o.b}, {"m", o.m}};
    return p;
}

int cmd_resolve(const Opts& o) {
    write_out(o, complex_json(build_P_pi(partition_arg(o))));
    return 0;
}

int cmd_char(const Opts& o) {
    StdModule mod = delta_pi(partition_arg(o));
    write_out(o, character_json(character(mod, o.cutoff)));
    return 0;
}

int cmd_ext(const Opts& o) {
    if (o.sigma.empty()) throw std::invalid_argument("ext needs --sigma");
    auto pi = partition_arg(o);
    auto sigma = parse_partition(o.sigma);
    if (pi.weight() != sigma.weight())
        throw std::invalid_argument("--pi and --sigma have different weights");
    write_out(o, ext_json(ext_compute(pi, sigma, o.cutoff, parse_ring(o),
                                      o.ring == "Fp" ? o.p : 0)));
    return 0;
}

void push_report(json& reports, bool& all_ok, const std::string& check,
                 const json& params, bool ok,
                 const std::vector<std::string>& witnesses) {
    reports.push_back(report_json(check, params, ok, witnesses));
    all_ok = all_ok && ok;
}

int cmd_verify(const Opts& o) {
    json reports = json::array();
    bool all_ok = true;
    if (o.suite == "lemmas" || o.suite == "all" || o.suite.empty()) {
        for (auto& r : lemma_suite(o.max_d))
            push_report(reports, all_ok, r.name, {{"max_d", o.max_d}}, r.ok,
                        r.ok ? std::vector<std::string>{}
                             : std::vector<std::string>{r.witness});
    }
    if (o.suite.empty() || o.suite == "complex" || o.suite == "all") {
        if (o.pi.empty() && !o.have_ab)
            throw std::invalid_argument(
                "give --a/--b/--m (or --suite lemmas) to pick a complex");
        json params = params_json(o);
        Root al(o.a, o.b + 1);
        auto P = o.pi.empty() ? build_P_power(al, o.m)
                              : build_P_pi(parse_partition(o.pi));
        auto rd = check_d_squared(P);
        push_report(reports, all_ok, "d_squared", params, rd.ok,
                    rd.ok ? std::vector<std::string>{}
                          : std::vector<std::string>{rd.witness});
        if (o.pi.empty()) {
            auto Q = build_Q(al, o.m);
            auto cmp = build_comparison(al, o.m);
            auto rq = check_d_squared(Q);
            auto rc = check_chain_maps(P, Q, cmp);
            auto rs = check_splitting(al, o.m, cmp);
            for (auto& [name, r] :
                 {std::pair<const char*, CheckResult&>{"d_squared_thin", rq},
                  {"chain_maps", rc},
                  {"splitting", rs}})
                push_report(reports, all_ok, name, params, r.ok,
                            r.ok ? std::vector<std::string>{}
                                 : std::vector<std::string>{r.witness});
        }
        Ring ring = parse_ring(o);
        if (ring == Ring::Z)
            throw std::invalid_argument("verify needs --ring Q or Fp");
        auto tab =
            homology_dims(P, o.cutoff, ring, ring == Ring::Fp ? o.p : 0);
        std::vector<std::string> wit;
        Character ch = character(o.pi.empty()
                                     ? delta_power(al, o.m)
                                     : delta_pi(parse_partition(o.pi)),
                                 o.cutoff);
        for (auto& [key, dims] : tab.dims) {
            for (int n = 1; n < (int)dims.size(); ++n)
                if (dims[n] != 0)
                    wit.push_back("H_" + std::to_string(n) + " nonzero at word " +
                                  to_string(key.first) + " degree " +
                                  std::to_string(key.second));
            if (dims[0] != ch.dim(key.first, key.second))
                wit.push_back("H_0 mismatch at word " + to_string(key.first) +
                              " degree " + std::to_string(key.second));
        }
        for (auto& [w, qp] : ch.coeffs)
            for (auto& [deg, c] : qp) {
                if (c == 0 || deg > o.cutoff) continue;
                auto it = tab.dims.find({w, deg});
                if (it == tab.dims.end() || it->second[0] != c)
                    wit.push_back("H_0 mismatch at word " + to_string(w) +
                                  " degree " + std::to_string(deg));
            }
        push_report(reports, all_ok, "homology", params, wit.empty(), wit);
    }
    write_out(o, reports);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KLR algebra resolution calculator"};
    app.require_subcommand(1);
    Opts o;
    if (const char* env = std::getenv("KLRTOOL_THREADS")) (void)env;

    std::vector<CLI::Option*> a_opts;
    auto add_common = [&](CLI::App* cmd, bool with_ring) {
        auto* fa = cmd->add_option("--a", o.a, "first vertex of the root interval");
        a_opts.push_back(fa);
        auto* fb = cmd->add_option("--b", o.b, "last vertex of the root interval is b+1");
        auto* fm = cmd->add_option("--m", o.m, "multiplicity");
        fa->needs(fb);
        fb->needs(fa);
        fm->needs(fa);
        cmd->add_option("--pi", o.pi, "Kostant partition [[lo,hi],mult],...")
            ->excludes(fa);
        cmd->add_option("--cutoff", o.cutoff, "internal degree cutoff")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--out", o.out, "output file (default stdout)");
        if (with_ring) {
            cmd->add_option("--ring", o.ring, "Q, Z or Fp");
            cmd->add_option("--p", o.p, "modulus for Fp");
        }
        return cmd;
    };

    auto* resolve = add_common(app.add_subcommand("resolve",
                                                  "build a resolution"),
                               false);
    auto* verify = add_common(
        app.add_subcommand("verify", "run certification checks"), true);
    verify->add_option("--suite", o.suite, "lemmas | complex | all");
    verify->add_option("--max-d", o.max_d, "strand bound for the lemma suite");
    auto* ext = add_common(app.add_subcommand("ext", "Ext table"), true);
    ext->add_option("--sigma", o.sigma, "target Kostant partition");
    auto* chr = add_common(app.add_subcommand("char", "graded character"),
                           false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    for (auto* fa : a_opts)
        if (fa->count() > 0) o.have_ab = true;

    try {
        if (resolve->parsed()) return cmd_resolve(o);
        if (verify->parsed()) return cmd_verify(o);
        if (ext->parsed()) return cmd_ext(o);
        if (chr->parsed()) return cmd_char(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
