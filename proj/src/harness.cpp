#include "algseq/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <thread>

#include "json.hpp"

namespace algseq {

CandidateEnumerator::CandidateEnumerator(const Field& f, unsigned h, unsigned d)
    : f_(&f), h_(h), d_(d) {
    if (h < 1 || d < 1) throw input_error("candidate enumeration needs h >= 1 and d >= 1");
    for (int i = 0; i <= static_cast<int>(h); ++i)
        for (int j = 0; j <= static_cast<int>(d); ++j) {
            if (i == 0 && (j == 0 || j == 1)) continue;  // fixed cells
            cells_.push_back({i, j});
        }
    total_ = 1;
    for (size_t k = 0; k < cells_.size(); ++k) {
        if (total_ > (uint64_t(1) << 62) / f.q())
            throw budget_error("candidate space too large to enumerate");
        total_ *= f.q();
    }
}

std::optional<BiPoly> CandidateEnumerator::decode(uint64_t encoding) const {
    const Field& f = *f_;
    std::vector<BiTerm> terms;
    terms.push_back({0, 1, 1});
    int maxi = 0, maxj = 1;
    uint64_t v = encoding;
    for (size_t k = cells_.size(); k-- > 0;) {
        uint16_t c = static_cast<uint16_t>(v % f.q());
        v /= f.q();
        if (c == 0) continue;
        terms.push_back({cells_[k].first, cells_[k].second, c});
        maxi = std::max(maxi, cells_[k].first);
        maxj = std::max(maxj, cells_[k].second);
    }
    if (maxi != static_cast<int>(h_) || maxj != static_cast<int>(d_)) return std::nullopt;
    return BiPoly(f, std::move(terms));
}

std::optional<BiPoly> CandidateEnumerator::next() {
    while (cursor_ < total_) {
        auto p = decode(cursor_++);
        if (p) return p;
    }
    return std::nullopt;
}

namespace {

// distinct states along the 0-digit chain from the initial state: the orbit
// of S0 under lambda_{0,0}, read off the built automaton
uint64_t zero_chain_orbit_size(const Dfao& a) {
    std::vector<uint8_t> seen(a.size(), 0);
    uint32_t s = a.initial;
    uint64_t count = 0;
    while (!seen[s]) {
        seen[s] = 1;
        ++count;
        s = a.next(s, 0);
    }
    return count;
}

struct CellScan {
    uint64_t candidates = 0;
    uint64_t max_size = 0, argmax_enc = 0;
    uint64_t max_orbit = 0, argmax_orbit_enc = 0;
    std::map<uint64_t, uint64_t> histogram;
};

void merge(CellScan& into, const CellScan& from) {
    into.candidates += from.candidates;
    for (const auto& [k, v] : from.histogram) into.histogram[k] += v;
    if (from.max_size > into.max_size ||
        (from.max_size == into.max_size && from.argmax_enc < into.argmax_enc))
        into.argmax_enc = from.argmax_enc;
    into.max_size = std::max(into.max_size, from.max_size);
    if (from.max_orbit > into.max_orbit ||
        (from.max_orbit == into.max_orbit && from.argmax_orbit_enc < into.argmax_orbit_enc))
        into.argmax_orbit_enc = from.argmax_orbit_enc;
    into.max_orbit = std::max(into.max_orbit, from.max_orbit);
}

}  // namespace

SearchResult search(const Field& f, unsigned h, unsigned d, const SearchOptions& opts) {
    CandidateEnumerator en(f, h, d);
    uint64_t cap = sat_pow(f.q(), static_cast<uint64_t>(h + 1) * d) + 1;
    if (en.total_combinations() > opts.budget / std::max<uint64_t>(cap, 1))
        throw budget_error("search budget exceeded: " + std::to_string(en.total_combinations()) +
                           " candidates with state cap " + std::to_string(cap));

    unsigned jobs = std::max(1u, opts.jobs);
    uint64_t total = en.total_combinations();
    std::vector<CellScan> parts(jobs);
    auto work = [&](unsigned w) {
        CandidateEnumerator mine(f, h, d);
        CellScan& part = parts[w];
        uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
        for (uint64_t enc = lo; enc < hi; ++enc) {
            auto p = mine.decode(enc);
            if (!p) continue;
            FurstenbergInput in = validate(*p);
            Dfao a = build(in);
            ++part.candidates;
            uint64_t size = a.size();
            part.histogram[size] += 1;
            if (size > part.max_size) {
                part.max_size = size;
                part.argmax_enc = enc;
            }
            uint64_t orb = zero_chain_orbit_size(a);
            if (orb > part.max_orbit) {
                part.max_orbit = orb;
                part.argmax_orbit_enc = enc;
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    CellScan scan;
    scan.argmax_enc = UINT64_MAX;
    scan.argmax_orbit_enc = UINT64_MAX;
    for (const auto& part : parts) merge(scan, part);

    SearchResult r;
    r.q = f.q();
    r.h = h;
    r.d = d;
    r.candidates_examined = scan.candidates;
    r.max_unminimized_size = scan.max_size;
    r.argmax_encoding = scan.argmax_enc;
    r.histogram = std::move(scan.histogram);
    r.max_orbit_size = scan.max_orbit;
    r.argmax_orbit_encoding = scan.argmax_orbit_enc;
    r.bound_total = theorem1_bound(f.q(), h, d).total;
    if (scan.candidates > 0) {
        BiPoly argmax = *en.decode(scan.argmax_enc);
        r.argmax_poly = argmax.str();
        r.minimized_size_of_argmax = minimize(build(validate(argmax))).size();
        r.argmax_orbit_poly = en.decode(scan.argmax_orbit_enc)->str();
    }
    return r;
}

UniPoly delta_op(const UniPoly& s) {
    const Field& f = s.field();
    if (s.is_zero()) return s;
    int deg = s.deg();
    std::vector<uint16_t> c(deg + 1, 0);
    for (int j = 0; j <= deg; ++j)
        c[j] = f.mulc(s.coeffc(j), f.from_int(deg - j).code());
    return UniPoly(f, std::move(c));
}

ConjectureReport conjecture1(const UniPoly& r, unsigned m) {
    const Field& f = r.field();
    if (r.deg() < 1) throw input_error("conjecture 1 needs deg R >= 1");
    if (r.coeffc(0) == 0) throw input_error("conjecture 1 needs R(0) != 0");
    Factorization fact = factor(r);
    uint64_t ell = 1;
    for (const auto& [ri, ei] : fact.factors)
        ell = std::lcm(ell, static_cast<uint64_t>(ri.deg()));
    if (m == 0 || ell % m != 0) throw input_error("m must divide the lcm of the factor degrees");

    ConjectureReport rep;
    rep.r = r.str();
    rep.m = m;
    rep.predicted_dim = 1;
    for (const auto& [ri, ei] : fact.factors)
        rep.predicted_dim += std::gcd(static_cast<uint64_t>(m), static_cast<uint64_t>(ri.deg()));

    UniLaurent rq1 = pow(UniLaurent(r), f.q() - 1);
    MatFq L = operator_matrix(f, r.deg(),
                              [&](const UniPoly& s) { return lambda0_cached(s, rq1); });
    MatFq Lm = mat_pow(L, m);
    MatFq diff = mat_sub(Lm, MatFq::identity(f, L.rows()));
    rep.computed_dim = nullspace_basis(diff).size();
    rep.match = rep.computed_dim == rep.predicted_dim;
    return rep;
}

ConjectureReport conjecture2(const UniPoly& r) {
    const Field& f = r.field();
    if (r.deg() < 1) throw input_error("conjecture 2 needs deg R >= 1");
    Factorization fact = factor(r);
    ConjectureReport rep;
    rep.r = r.str();
    UniLaurent rq1 = pow(UniLaurent(r), f.q() - 1);

    std::vector<UniPoly> keep;
    for (size_t i = 0; i < fact.factors.size(); ++i) {
        UniPoly cand = UniPoly::one(f);
        bool skip = fact.factors[i].second % f.p() == 0;
        for (size_t k = 0; k < fact.factors.size(); ++k) {
            UniPoly piece = pow(fact.factors[k].first, fact.factors[k].second);
            if (k == i) piece = delta_op(piece);
            cand = cand * piece;
        }
        if (fact.e0 > 0) cand = cand * UniPoly::monomial(f, static_cast<unsigned>(fact.e0));
        rep.skipped.push_back(skip);
        if (skip) continue;
        rep.candidates.push_back(cand.str());
        rep.fixed.push_back(lambda0_cached(cand, rq1) == cand);
        keep.push_back(cand);
    }

    bool all_exponents_ok = true;
    for (const auto& [ri, ei] : fact.factors)
        if (ei % f.p() == 0) all_exponents_ok = false;
    if (fact.e0 == 0 && all_exponents_ok && !fact.factors.empty()) {
        rep.independence_checked = true;
        MatFq m(f, static_cast<size_t>(r.deg()) + 1, keep.size() + 1);
        for (size_t c = 0; c < keep.size(); ++c)
            for (int k = 0; k <= keep[c].deg(); ++k) m.at(k, c) = keep[c].coeffc(k);
        for (int k = 0; k <= r.deg(); ++k) m.at(k, keep.size()) = r.coeffc(k);
        rep.independent = rank(m) == keep.size() + 1;
    }
    rep.match = std::all_of(rep.fixed.begin(), rep.fixed.end(), [](bool b) { return b; }) &&
                (!rep.independence_checked || rep.independent);
    return rep;
}

std::optional<Violation> check_run_agreement(const Dfao& a, const std::vector<uint16_t>& prefix) {
    for (uint64_t n = 0; n < prefix.size(); ++n)
        if (run(a, n).code() != prefix[n])
            return Violation{"run/series agreement", "", "mismatch at n=" + std::to_string(n)};
    return std::nullopt;
}

std::optional<Violation> check_zero_insensitivity(const Dfao& a, unsigned zeros) {
    for (size_t s = 0; s < a.size(); ++s) {
        uint32_t t = static_cast<uint32_t>(s);
        for (unsigned k = 0; k < zeros; ++k) {
            t = a.next(t, 0);
            if (a.out[t] != a.out[s])
                return Violation{"leading-zero invariance", "",
                                 "state " + std::to_string(s) + " changes output after " +
                                     std::to_string(k + 1) + " zero digits"};
        }
    }
    return std::nullopt;
}

std::optional<Violation> check_size_sandwich(const FurstenbergInput& in, const Dfao& a,
                                             const Dfao& minimized,
                                             const KernelOracleReport& kernel) {
    uint64_t cap = sat_pow(in.f->q(), static_cast<uint64_t>(in.h + 1) * in.d) + 1;
    uint64_t bound = theorem1_bound(in.f->q(), in.h, in.d).total;
    if (kernel.distinct_count > minimized.size())
        return Violation{"size sandwich", "",
                         "kernel lower bound " + std::to_string(kernel.distinct_count) +
                             " exceeds minimized size " + std::to_string(minimized.size())};
    if (minimized.size() > a.size())
        return Violation{"size sandwich", "", "minimized size exceeds unminimized size"};
    if (a.size() > cap)
        return Violation{"size sandwich", "", "unminimized size exceeds q^{(h+1)d} + 1"};
    if (minimized.size() > bound)
        return Violation{"size sandwich", "", "minimized size exceeds the Theorem 1 bound"};
    return std::nullopt;
}

namespace {

UniLaurent random_laurent(const Field& f, std::mt19937_64& rng, int val_lo, int val_hi,
                          int max_len) {
    int val = val_lo + static_cast<int>(rng() % (val_hi - val_lo + 1));
    int len = 1 + static_cast<int>(rng() % max_len);
    std::vector<uint16_t> c(len);
    for (auto& x : c) x = static_cast<uint16_t>(rng() % f.q());
    return UniLaurent(f, val, std::move(c));
}

BiPoly random_bipoly(const Field& f, std::mt19937_64& rng, int max_i, int min_j, int max_j) {
    std::vector<BiTerm> t;
    for (int i = 0; i <= max_i; ++i)
        for (int j = min_j; j <= max_j; ++j) {
            uint16_t c = static_cast<uint16_t>(rng() % f.q());
            if (c) t.push_back({i, j, c});
        }
    return BiPoly(f, std::move(t));
}

void record(VerifyReport& rep, const VerifyOptions& opts, const std::string& check,
            const std::string& poly, const std::string& detail) {
    ++rep.violations_total;
    if (rep.violations.size() < opts.max_violations)
        rep.violations.push_back({check, poly, detail});
}

}  // namespace

VerifyReport verify_all(const Field& f, unsigned h, unsigned d, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.q = f.q();
    rep.h = h;
    rep.d = d;

    CandidateEnumerator en(f, h, d);
    uint64_t cap = sat_pow(f.q(), static_cast<uint64_t>(h + 1) * d) + 1;
    if (en.total_combinations() > opts.budget / std::max<uint64_t>(cap, 1))
        throw budget_error("verify budget exceeded");

    // field-level Cartier identity on random Laurent pairs, univariate and bivariate
    {
        std::mt19937_64 rng(opts.seed);
        for (unsigned k = 0; k < opts.cartier_pairs; ++k) {
            UniLaurent G = random_laurent(f, rng, -3, 3, 6);
            UniLaurent F = random_laurent(f, rng, -2, 2, 5);
            unsigned r = static_cast<unsigned>(rng() % f.q());
            UniLaurent Fq_pow = pow(F, f.q());
            if (cartier(r, G * Fq_pow) != cartier(r, G) * F) {
                record(rep, opts, "Cartier identity (univariate)", "",
                       "Lambda_r(G F^q) != Lambda_r(G) F for G=" + G.str() + ", F=" + F.str());
                break;
            }
        }
        for (unsigned k = 0; k < opts.cartier_pairs; ++k) {
            BiPoly G = random_bipoly(f, rng, 2, -2, 2);
            BiPoly F = random_bipoly(f, rng, 1, -1, 1);
            unsigned r = static_cast<unsigned>(rng() % f.q());
            unsigned s = static_cast<unsigned>(rng() % f.q());
            BiPoly Fq_pow = pow(F, f.q());
            if (cartier(r, s, G * Fq_pow) != cartier(r, s, G) * F) {
                record(rep, opts, "Cartier identity (bivariate)", "",
                       "Lambda_{r,s}(G F^q) != Lambda_{r,s}(G) F");
                break;
            }
        }
    }

    unsigned jobs = std::max(1u, opts.jobs);
    uint64_t total = en.total_combinations();
    std::vector<VerifyReport> parts(jobs);
    for (auto& p : parts) {
        p.q = f.q();
        p.h = h;
        p.d = d;
    }

    auto work = [&](unsigned w) {
        CandidateEnumerator mine(f, h, d);
        VerifyReport& part = parts[w];
        uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
        for (uint64_t enc = lo; enc < hi; ++enc) {
            auto cand = mine.decode(enc);
            if (!cand) continue;
            ++part.candidates;
            const std::string poly = cand->str();
            FurstenbergInput in = validate(*cand);

            std::vector<uint16_t> prefix = series_prefix(in, opts.series_n);
            Dfao a = build(in);
            if (auto v = check_run_agreement(a, prefix)) {
                v->poly = poly;
                record(part, opts, v->check, v->poly, v->detail);
            }
            if (auto v = check_zero_insensitivity(a)) {
                v->poly = poly;
                record(part, opts, v->check, v->poly, v->detail);
            }
            Dfao m = minimize(a);
            KernelOracleReport kernel = kernel_oracle(prefix, f.q(), opts.kernel_emax);
            if (auto v = check_size_sandwich(in, a, m, kernel)) {
                v->poly = poly;
                record(part, opts, v->check, v->poly, v->detail);
            }

            // module closure over the W basis
            bool closure_ok = true;
            for (int i = 0; i < static_cast<int>(h) && closure_ok; ++i)
                for (int j = 0; j < static_cast<int>(d) && closure_ok; ++j)
                    for (unsigned r = 0; r < f.q() && closure_ok; ++r) {
                        BiPoly img = lambda_r0(BiPoly::monomial(f, i, j), in.Qq1, r);
                        bool in_w = img.is_zero() ||
                                    (img.height() <= static_cast<int>(h) - 1 &&
                                     img.ydeg() <= static_cast<int>(d) - 1 && img.ymin() >= 0);
                        if (!in_w) {
                            record(part, opts, "module closure", poly,
                                   "lambda_{r,0}(W) leaves W at r=" + std::to_string(r));
                            closure_ok = false;
                        }
                    }

            // emulation diagrams: S0, lambda(S0), and random elements of V
            std::mt19937_64 rng(opts.seed ^ (enc * 0x9e3779b97f4a7c15ull));
            std::vector<BiPoly> samples{in.S0, lambda_r0(in.S0, in.Qq1, 0)};
            for (unsigned k = 0; k < opts.emulation_samples; ++k)
                samples.push_back(random_bipoly(f, rng, static_cast<int>(h), 0,
                                                static_cast<int>(d) - 1));
            for (const auto& s : samples) {
                EmulationWitness wres = check_emulation(s, in);
                if (!wres.all_ok()) {
                    record(part, opts, "emulation diagrams", poly,
                           "projection diagram fails for S=" + s.str());
                    break;
                }
            }

            if (CheckResult flow = check_information_flow(in); !flow.ok)
                record(part, opts, "information flow", poly, flow.detail);
            if (CheckResult degp = check_degree_props(in); !degp.ok)
                record(part, opts, "degree propositions", poly, degp.detail);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    for (const auto& part : parts) {
        rep.candidates += part.candidates;
        rep.violations_total += part.violations_total;
        for (const auto& v : part.violations)
            if (rep.violations.size() < opts.max_violations) rep.violations.push_back(v);
    }
    return rep;
}

namespace {

std::filesystem::path histogram_sidecar(const std::string& path) {
    std::filesystem::path p(path);
    std::filesystem::path side = p;
    side.replace_extension();
    side += ".hist";
    side += p.extension().empty() ? std::filesystem::path(".csv") : p.extension();
    return side;
}

}  // namespace

void emit_csv(const SearchResult& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << "q,h,d,poly,unminimized_size,minimized_size_of_argmax,bound_total\n";
    out << r.q << "," << r.h << "," << r.d << ",\"" << r.argmax_poly << "\","
        << r.max_unminimized_size << "," << r.minimized_size_of_argmax << "," << r.bound_total
        << "\n";
    std::ofstream hist(histogram_sidecar(path));
    if (!hist) throw input_error("cannot write histogram sidecar");
    hist << "size,count\n";
    for (const auto& [size, count] : r.histogram) hist << size << "," << count << "\n";
}

void emit_json(const SearchResult& r, const std::string& path) {
    nlohmann::json j;
    j["q"] = r.q;
    j["h"] = r.h;
    j["d"] = r.d;
    j["candidates_examined"] = r.candidates_examined;
    j["max_unminimized_size"] = r.max_unminimized_size;
    j["argmax_poly"] = r.argmax_poly;
    j["argmax_encoding"] = r.argmax_encoding;
    j["minimized_size_of_argmax"] = r.minimized_size_of_argmax;
    j["bound_total"] = r.bound_total;
    j["max_orbit_size"] = r.max_orbit_size;
    j["argmax_orbit_poly"] = r.argmax_orbit_poly;
    j["argmax_orbit_encoding"] = r.argmax_orbit_encoding;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [size, count] : r.histogram)
        hist.push_back(nlohmann::json::array({size, count}));
    j["histogram"] = std::move(hist);
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

SearchResult search_result_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("search result document: ") + e.what(), e.byte);
    }
    SearchResult r;
    r.q = j.at("q").get<unsigned>();
    r.h = j.at("h").get<unsigned>();
    r.d = j.at("d").get<unsigned>();
    r.candidates_examined = j.at("candidates_examined").get<uint64_t>();
    r.max_unminimized_size = j.at("max_unminimized_size").get<uint64_t>();
    r.argmax_poly = j.at("argmax_poly").get<std::string>();
    r.argmax_encoding = j.at("argmax_encoding").get<uint64_t>();
    r.minimized_size_of_argmax = j.at("minimized_size_of_argmax").get<uint64_t>();
    r.bound_total = j.at("bound_total").get<uint64_t>();
    r.max_orbit_size = j.at("max_orbit_size").get<uint64_t>();
    r.argmax_orbit_poly = j.at("argmax_orbit_poly").get<std::string>();
    r.argmax_orbit_encoding = j.at("argmax_orbit_encoding").get<uint64_t>();
    for (const auto& row : j.at("histogram"))
        r.histogram[row.at(0).get<uint64_t>()] = row.at(1).get<uint64_t>();
    return r;
}

}  // namespace algseq
