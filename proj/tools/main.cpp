#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "algseq/harness.hpp"

namespace {

using namespace algseq;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct FieldArgs {
    unsigned p = 2;
    unsigned e = 1;
    const Field& get() const { return Field::get(p, e); }
};

void add_field_flags(CLI::App* cmd, FieldArgs& fa) {
    cmd->add_option("--p", fa.p, "characteristic (prime)")->required();
    cmd->add_option("--e", fa.e, "extension degree")->default_val(1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_prefix(const std::vector<uint16_t>& prefix) {
    for (size_t k = 0; k < prefix.size(); ++k) {
        if (k) std::cout << ",";
        std::cout << prefix[k];
    }
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"automata and orbit analysis for algebraic power series over F_q"};
    app.require_subcommand(1);

    FieldArgs fa_series, fa_build, fa_orbit, fa_uniorbit, fa_bound, fa_search, fa_verify,
        fa_conj;

    // series
    auto* series_cmd = app.add_subcommand("series", "coefficient prefix of the series of P");
    std::string series_poly;
    size_t series_n = 512;
    add_field_flags(series_cmd, fa_series);
    series_cmd->add_option("--poly", series_poly, "defining polynomial P(x, y)")->required();
    series_cmd->add_option("--n", series_n, "prefix length")->default_val(512);

    // build
    auto* build_cmd = app.add_subcommand("build", "construct the automaton of P");
    std::string build_poly, build_out;
    bool build_minimize = false;
    add_field_flags(build_cmd, fa_build);
    build_cmd->add_option("--poly", build_poly, "defining polynomial P(x, y)")->required();
    build_cmd->add_flag("--minimize", build_minimize, "minimize before writing");
    build_cmd->add_option("--out", build_out, "output file (stdout when absent)");

    // run
    auto* run_cmd = app.add_subcommand("run", "evaluate an automaton document at n");
    std::string run_file;
    uint64_t run_n = 0;
    run_cmd->add_option("--automaton", run_file, "automaton document")->required();
    run_cmd->add_option("--n", run_n, "index")->required();

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of S0 under lambda_{0,0}");
    std::string orbit_poly;
    add_field_flags(orbit_cmd, fa_orbit);
    orbit_cmd->add_option("--poly", orbit_poly, "defining polynomial P(x, y)")->required();

    // uniorbit
    auto* uni_cmd = app.add_subcommand("uniorbit", "orbit of S under the univariate lambda_0");
    std::string uni_r, uni_s;
    add_field_flags(uni_cmd, fa_uniorbit);
    uni_cmd->add_option("--r", uni_r, "Laurent polynomial R")->required();
    uni_cmd->add_option("--s", uni_s, "start polynomial S")->required();

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "automaton size bound for (q, h, d)");
    unsigned bound_h = 1, bound_d = 1;
    add_field_flags(bound_cmd, fa_bound);
    bound_cmd->add_option("--h", bound_h, "height")->required();
    bound_cmd->add_option("--d", bound_d, "degree")->required();

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive cell search");
    unsigned search_h = 1, search_d = 1, search_jobs = 1;
    uint64_t search_budget = uint64_t(1) << 33;
    std::string search_out, search_format = "csv";
    add_field_flags(search_cmd, fa_search);
    search_cmd->add_option("--h", search_h, "height")->required();
    search_cmd->add_option("--d", search_d, "degree")->required();
    search_cmd->add_option("--jobs", search_jobs, "worker threads")->default_val(1);
    search_cmd->add_option("--budget", search_budget, "candidate x state-cap budget");
    search_cmd->add_option("--out", search_out, "output file");
    search_cmd->add_option("--format", search_format, "csv or json")->default_val("csv");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "property sweep over a cell");
    unsigned verify_h = 1, verify_d = 1, verify_jobs = 1;
    size_t verify_n = 512;
    add_field_flags(verify_cmd, fa_verify);
    verify_cmd->add_option("--h", verify_h, "height")->required();
    verify_cmd->add_option("--d", verify_d, "degree")->required();
    verify_cmd->add_option("--n", verify_n, "series prefix length")->default_val(512);
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads")->default_val(1);

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "orbit-structure conjecture sweep");
    std::string conj_r;
    unsigned conj_degmax = 4;
    add_field_flags(conj_cmd, fa_conj);
    conj_cmd->add_option("--r", conj_r, "single R to check (sweeps all R when absent)");
    conj_cmd->add_option("--degmax", conj_degmax, "sweep degree cap")->default_val(4);

    try {
        app.parse(argc, argv);

        if (series_cmd->parsed()) {
            const Field& f = fa_series.get();
            FurstenbergInput in = validate(parse_poly(series_poly, f));
            print_prefix(series_prefix(in, series_n));
            return kExitOk;
        }

        if (build_cmd->parsed()) {
            const Field& f = fa_build.get();
            FurstenbergInput in = validate(parse_poly(build_poly, f));
            Dfao a = build(in);
            std::cerr << "states: " << a.size() << "\n";
            if (build_minimize) {
                a = minimize(a);
                std::cerr << "minimized: " << a.size() << "\n";
            }
            std::string doc = serialize(a);
            if (build_out.empty()) {
                std::cout << doc << "\n";
            } else {
                std::ofstream out(build_out);
                if (!out) throw input_error("cannot write " + build_out);
                out << doc << "\n";
            }
            return kExitOk;
        }

        if (run_cmd->parsed()) {
            Dfao a = deserialize(read_file(run_file));
            std::cout << run(a, run_n).code() << "\n";
            return kExitOk;
        }

        if (orbit_cmd->parsed()) {
            const Field& f = fa_orbit.get();
            FurstenbergInput in = validate(parse_poly(orbit_poly, f));
            uint64_t cap = sat_pow(f.q(), static_cast<uint64_t>(in.h + 1) * in.d) + 2;
            auto rep = orbit<BiPoly>(
                in.S0, [&](const BiPoly& s) { return lambda_r0(s, in.Qq1, 0); },
                static_cast<size_t>(cap), BiPolyHash());
            std::cout << "t=" << rep.transient << " period=" << rep.period
                      << " size=" << rep.size() << "\n";
            return kExitOk;
        }

        if (uni_cmd->parsed()) {
            const Field& f = fa_uniorbit.get();
            UniLaurent r = parse_laurent(uni_r, f);
            if (r.is_zero() || r.valuation() < -1)
                throw input_error("R must be nonzero with valuation >= -1");
            UniLaurent s_laurent = parse_laurent(uni_s, f);
            if (!s_laurent.is_polynomial()) throw input_error("S must be a polynomial");
            UniPoly s = s_laurent.to_poly();
            UniLaurent rq1 = pow(r, f.q() - 1);
            uint64_t cap = sat_pow(f.q(), static_cast<uint64_t>(std::max(r.deg(), 0)) + 2) + 2;
            auto rep = orbit<UniPoly>(
                s, [&](const UniPoly& x) { return lambda0_cached(x, rq1); },
                static_cast<size_t>(std::min<uint64_t>(cap, 1 << 22)));
            std::cout << "t=" << rep.transient << " period=" << rep.period
                      << " size=" << rep.size() << "\n";
            return kExitOk;
        }

        if (bound_cmd->parsed()) {
            const Field& f = fa_bound.get();
            BoundReport r = theorem1_bound(f.q(), bound_h, bound_d);
            if (r.trivial) {
                std::cout << "trivial series (h = 0): 1 state\n";
                return kExitOk;
            }
            std::cout << "q=" << r.q << " h=" << r.h << " d=" << r.d << "\n"
                      << "main q^{hd}      = " << r.main_term << "\n"
                      << "orbit term       = " << r.orbit_term << "\n"
                      << "log terms        = " << r.log_terms << "\n"
                      << "total            = " << r.total << "\n"
                      << "ratio total/q^hd = " << r.ratio() << "\n";
            return kExitOk;
        }

        if (search_cmd->parsed()) {
            const Field& f = fa_search.get();
            SearchOptions opts;
            opts.jobs = search_jobs;
            opts.budget = search_budget;
            SearchResult r = search(f, search_h, search_d, opts);
            std::cout << "q=" << r.q << " h=" << r.h << " d=" << r.d
                      << " candidates=" << r.candidates_examined
                      << " max_unminimized=" << r.max_unminimized_size
                      << " minimized_of_argmax=" << r.minimized_size_of_argmax
                      << " bound=" << r.bound_total << " max_orbit=" << r.max_orbit_size << "\n"
                      << "argmax poly: " << r.argmax_poly << "\n"
                      << "argmax orbit poly: " << r.argmax_orbit_poly << "\n";
            if (!search_out.empty()) {
                if (search_format == "csv")
                    emit_csv(r, search_out);
                else if (search_format == "json")
                    emit_json(r, search_out);
                else
                    throw input_error("unknown format " + search_format);
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const Field& f = fa_verify.get();
            VerifyOptions opts;
            opts.series_n = verify_n;
            opts.jobs = verify_jobs;
            VerifyReport r = verify_all(f, verify_h, verify_d, opts);
            std::cout << "q=" << r.q << " h=" << r.h << " d=" << r.d
                      << " candidates=" << r.candidates << " violations=" << r.violations_total
                      << "\n";
            for (const auto& v : r.violations)
                std::cout << "violation [" << v.check << "] poly=" << v.poly << ": " << v.detail
                          << "\n";
            return r.ok() ? kExitOk : kExitViolation;
        }

        if (conj_cmd->parsed()) {
            const Field& f = fa_conj.get();
            std::vector<UniPoly> rs;
            if (!conj_r.empty()) {
                UniLaurent r = parse_laurent(conj_r, f);
                if (!r.is_polynomial()) throw input_error("R must be a polynomial");
                rs.push_back(r.to_poly());
            } else {
                for (unsigned deg = 1; deg <= conj_degmax; ++deg) {
                    uint64_t count = sat_pow(f.q(), deg + 1);
                    for (uint64_t enc = 0; enc < count; ++enc) {
                        std::vector<uint16_t> c(deg + 1);
                        uint64_t v = enc;
                        for (unsigned k = 0; k <= deg; ++k) {
                            c[k] = static_cast<uint16_t>(v % f.q());
                            v /= f.q();
                        }
                        if (c[0] == 0 || c[deg] == 0) continue;
                        rs.emplace_back(f, std::move(c));
                    }
                }
            }
            uint64_t checked = 0, mismatches = 0;
            for (const auto& r : rs) {
                Factorization fact = factor(r);
                uint64_t ell = 1;
                for (const auto& [ri, ei] : fact.factors)
                    ell = std::lcm(ell, static_cast<uint64_t>(ri.deg()));
                for (unsigned m = 1; m <= ell; ++m) {
                    if (ell % m != 0) continue;
                    ConjectureReport rep = conjecture1(r, m);
                    ++checked;
                    if (!rep.match) {
                        ++mismatches;
                        std::cout << "conjecture 1 counterexample: R=" << rep.r << " m=" << m
                                  << " predicted=" << rep.predicted_dim
                                  << " computed=" << rep.computed_dim << "\n";
                    }
                }
                ConjectureReport rep2 = conjecture2(r);
                ++checked;
                if (!rep2.match) {
                    ++mismatches;
                    std::cout << "conjecture 2 counterexample: R=" << rep2.r << "\n";
                }
            }
            std::cout << "conjecture checks: " << checked << ", counterexamples: " << mismatches
                      << "\n";
            return kExitOk;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}
