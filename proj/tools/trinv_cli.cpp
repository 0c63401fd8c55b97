// Command-line front end: print Dickson invariants and Hilbert series,
// verify the series / bases / filtration / identity suites, count orbits,
// and dump bases as JSON.
//
// Exit codes: 0 all checks passed, 1 verification mismatch, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "trinv/steenrod.hpp"

using json = nlohmann::json;
using namespace trinv;

namespace {

struct Options {
    int q = 2;
    int m = 2;
    int n = 1;
    int i = 0;
    int k = 1;
    std::string alpha_str;
    std::string json_path;
    std::string csv_path;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    bool verbose = false;
};

Composition parse_alpha(const std::string& s) {
    Composition a;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) a.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    for (int x : a)
        if (x < 1) throw CLI::ValidationError("--alpha", "parts must be positive");
    if (a.empty()) throw CLI::ValidationError("--alpha", "empty composition");
    return a;
}

bool is_prime_power(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!Gf::is_prime(p)) continue;
        int t = q;
        while (t % p == 0) t /= p;
        if (t == 1) return true;
    }
    return false;
}

/// Desk-scale guard: refuse jobs whose state space or group is too large.
void check_work_bound(const Composition& alpha, int m, int q) {
    int n = comp_size(alpha);
    double points = std::pow(static_cast<double>(q), static_cast<double>(m) * n);
    if (points > 100000.0)
        throw CLI::ValidationError("work bound", "q^(m*n) exceeds 100000; refusing");
    if (parabolic_order(alpha, q) > 12000)
        throw CLI::ValidationError("work bound", "|P(alpha)| exceeds 12000; refusing");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

json series_json(const SeriesPoly& s) {
    json a = json::array();
    for (const auto& c : s.coeff_strings()) a.push_back(c);
    return a;
}

int run_verify_hilbert(const Options& opt, const Composition& alpha) {
    check_work_bound(alpha, opt.m, opt.q);
    auto rep = verify_hilbert(alpha, opt.m, opt.q, opt.jobs);
    json j{{"alpha", alpha},
           {"m", opt.m},
           {"q", opt.q},
           {"conjecture", series_json(rep.conjecture)},
           {"bruteforce", series_json(rep.bruteforce)},
           {"equal", rep.equal},
           {"totals",
            {{"conjecture", rep.conjecture_total.str()},
             {"bruteforce", rep.bruteforce_total.str()},
             {"orbits", rep.orbit_total}}}};
    if (!opt.json_path.empty()) write_text(opt.json_path, j.dump(2) + "\n");
    if (!opt.csv_path.empty()) {
        std::ostringstream os;
        os << "degree,conjecture,bruteforce,basis-count,match\n";
        auto elems = build(alpha, opt.m, field_of_size(opt.q));
        std::map<long long, long long> counts;
        for (const auto& e : elems) ++counts[e.degree];
        long long dmax = std::max(rep.conjecture.degree(), rep.bruteforce.degree());
        for (long long d = 0; d <= dmax; ++d) {
            BigInt c = rep.conjecture.coeff(d), b = rep.bruteforce.coeff(d);
            long long bc = counts.count(d) ? counts[d] : 0;
            os << d << "," << c.str() << "," << b.str() << "," << bc << ","
               << (c == b && BigInt(bc) == c ? 1 : 0) << "\n";
        }
        write_text(opt.csv_path, os.str());
    }
    std::cout << (rep.equal ? "EQUAL" : "MISMATCH") << ": conjectured "
              << rep.conjecture.str() << "\n";
    if (opt.verbose) std::cout << "bruteforce: " << rep.bruteforce.str() << "\n";
    std::cout << "totals: conjecture=" << rep.conjecture_total
              << " bruteforce=" << rep.bruteforce_total << " orbits=" << rep.orbit_total << "\n";
    bool ok = rep.equal && BigInt(rep.orbit_total) == rep.bruteforce_total;
    return ok ? 0 : 1;
}

int run_verify_basis(const Options& opt, const Composition& alpha) {
    check_work_bound(alpha, opt.m, opt.q);
    auto rep = verify_basis(alpha, opt.m, opt.q, opt.jobs);
    json j{{"alpha", alpha},        {"m", opt.m},
           {"q", opt.q},           {"count", rep.count},
           {"nonzero", rep.nonzero}, {"degrees_match", rep.degrees_match},
           {"invariant", rep.invariant}, {"independent", rep.independent},
           {"spans", rep.spans},   {"failures", rep.failures}};
    if (!opt.json_path.empty()) write_text(opt.json_path, j.dump(2) + "\n");
    std::cout << (rep.ok() ? "PASS" : "FAIL") << ": " << rep.count << " elements"
              << " invariant=" << rep.invariant << " independent=" << rep.independent
              << " spans=" << rep.spans << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    return rep.ok() ? 0 : 1;
}

int run_verify_filtration(const Options& opt) {
    check_work_bound(Composition{opt.n}, opt.m, opt.q);
    auto rep = verify_filtration(opt.n, opt.k, opt.m, opt.q, opt.jobs);
    json j{{"n", opt.n},
           {"k", opt.k},
           {"m", opt.m},
           {"q", opt.q},
           {"steenrod_closed", rep.steenrod_closed},
           {"dickson_closed", rep.dickson_closed},
           {"annihilated", rep.annihilated},
           {"flexible", rep.flexible},
           {"failures", rep.failures}};
    if (!opt.json_path.empty()) write_text(opt.json_path, j.dump(2) + "\n");
    std::cout << (rep.ok() ? "PASS" : "FAIL") << ": steenrod=" << rep.steenrod_closed
              << " dickson=" << rep.dickson_closed << " annihilated=" << rep.annihilated
              << " flexible=" << rep.flexible << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    return rep.ok() ? 0 : 1;
}

int run_verify_identities(const Options& opt) {
    const Gf& F = field_of_size(opt.q);
    int q = opt.q, m = opt.m;
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        for (int s : {0, 1, 2, 5}) {
            Poly f = Q(1, 0, F, 1).pow(s);
            ok &= (Q(2, 0, F, 2) * delta(2, m, f).poly()).truncated(m).is_zero();
            ok &= (Q(2, 1, F, 2) * delta(2, m, f).poly()).truncated(m) ==
                  delta(2, m, Q(1, 0, F, 1).pow(q) * f).poly().truncated(m);
            Poly dd = delta_iter(2, m, 2, f).poly();
            ok &= (Q(3, 2, F, 3) * dd).truncated(m) ==
                  delta_iter(2, m, 2, Q(1, 0, F, 1).pow(q * q) * f).poly().truncated(m);
            ok &= (Q(3, 1, F, 3) * dd).truncated(m).is_zero();
        }
        for (int i : {1, 2})
            for (int a : {0, 1})
                for (int b : {0, 1}) {
                    Poly g = Q(2, 1, F, 2).pow(a) * Q(2, 0, F, 2).pow(b);
                    ok &= (Q(3, i, F, 3) * delta(3, m, g).poly()).truncated(m) ==
                          delta(3, m, Q(2, i - 1, F, 2).pow(q) * g).poly().truncated(m);
                }
        report("dickson-delta interaction", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < m; ++i) ok &= rank2_edge_check(m, i, F);
        report("rank-2 edge decomposition", ok);
        report("rank-3 edge elements", rank3_edge_check(m, F));
    }
    {
        bool ok = true;
        long long mq = q_integer(m, q);
        for (long long s = 0; s < mq; ++s)
            ok &= delta(2, m, Q(1, 0, F, 1).pow(s)).poly().truncated(m) ==
                  y_closed(m, static_cast<int>(s), F).truncated(m);
        for (long long s = 0; s <= mq; ++s)
            ok &= delta_iter(2, m, 2, Q(1, 0, F, 1).pow(s)).poly().truncated(m) ==
                  a_closed(m, static_cast<int>(s), F).truncated(m);
        report("closed-form families", ok);
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant theory of truncated polynomial rings"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--q", opt.q, "field size (prime power)")->envname("TRINV_Q");
    app.add_option("--m", opt.m, "Frobenius power")->envname("TRINV_M");
    app.add_option("--n", opt.n, "rank")->envname("TRINV_N");
    app.add_option("--alpha", opt.alpha_str, "composition, e.g. 2,1")->envname("TRINV_ALPHA");
    app.add_option("--json", opt.json_path, "write a JSON report to this path");
    app.add_option("--csv", opt.csv_path, "write a per-degree CSV to this path");
    app.add_option("--jobs", opt.jobs, "worker threads")->envname("TRINV_JOBS");
    app.add_flag("--verbose", opt.verbose, "more output");
    app.set_config("--config");

    auto* cmd_dickson = app.add_subcommand("dickson", "print Q_{n,i}");
    cmd_dickson->add_option("--i", opt.i, "lower index");
    auto* cmd_series = app.add_subcommand("series", "print the conjectured Hilbert series");
    auto* cmd_orbits = app.add_subcommand("orbits", "count orbits on the point space");
    auto* cmd_dump = app.add_subcommand("basis-dump", "dump the candidate basis as JSON");
    auto* cmd_verify = app.add_subcommand("verify", "run a verification");
    cmd_verify->require_subcommand(1);
    auto* v_hilbert = cmd_verify->add_subcommand("hilbert", "series vs brute force");
    auto* v_basis = cmd_verify->add_subcommand("basis", "basis vs brute force");
    auto* v_filt = cmd_verify->add_subcommand("filtration", "Steenrod/Dickson filtration closure");
    v_filt->add_option("--k", opt.k, "filtration level");
    auto* v_ident = cmd_verify->add_subcommand("identities", "delta/Dickson identity suites");

    // global options may appear after the subcommand name
    for (auto* sub : {cmd_dickson, cmd_series, cmd_orbits, cmd_dump, cmd_verify}) sub->fallthrough();
    for (auto* sub : {v_hilbert, v_basis, v_filt, v_ident}) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (!is_prime_power(opt.q)) throw CLI::ValidationError("--q", "not a prime power");
        if (opt.m < 1) throw CLI::ValidationError("--m", "m >= 1 required");

        Composition alpha =
            opt.alpha_str.empty() ? Composition{opt.n} : parse_alpha(opt.alpha_str);
        if (comp_size(alpha) > 3 &&
            (v_basis->parsed() || v_hilbert->parsed() || cmd_dump->parsed()))
            throw CLI::ValidationError("--alpha", "rank above 3 is out of scope");

        const Gf& F = field_of_size(opt.q);
        if (cmd_dickson->parsed()) {
            std::cout << Q(opt.n, opt.i, F).str() << "\n";
            return 0;
        }
        if (cmd_series->parsed()) {
            std::cout << hilbert_conjecture(alpha, opt.m, opt.q).str() << "\n";
            return 0;
        }
        if (cmd_orbits->parsed()) {
            check_work_bound(alpha, opt.m, opt.q);
            std::cout << orbit_count(parabolic_generators(alpha, F), opt.m) << "\n";
            return 0;
        }
        if (cmd_dump->parsed()) {
            check_work_bound(alpha, opt.m, opt.q);
            auto elems = build(alpha, opt.m, F);
            json arr = json::array();
            for (const auto& e : elems)
                arr.push_back({{"recipe", e.recipe()},
                               {"degree", e.degree},
                               {"nvars", e.value.nvars},
                               {"poly", e.value.str()}});
            json j{{"alpha", alpha}, {"m", opt.m}, {"q", opt.q}, {"count", elems.size()},
                   {"elements", arr}};
            std::string text = j.dump(2) + "\n";
            if (!opt.json_path.empty())
                write_text(opt.json_path, text);
            else
                std::cout << text;
            return 0;
        }
        if (v_hilbert->parsed()) return run_verify_hilbert(opt, alpha);
        if (v_basis->parsed()) return run_verify_basis(opt, alpha);
        if (v_filt->parsed()) return run_verify_filtration(opt);
        if (v_ident->parsed()) return run_verify_identities(opt);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
