#include "algseq/automaton.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "algseq/bounds.hpp"
#include "json.hpp"

namespace algseq {

namespace {

Dfao closure(const Field& f, const BiPoly& start, const BiPoly& qq1, unsigned s_digit_mode,
             uint64_t cap) {
    unsigned q = f.q();
    Dfao a;
    a.f = &f;
    a.q = q;
    a.initial = 0;
    std::unordered_map<BiPoly, uint32_t, BiPolyHash> index;
    std::vector<BiPoly> states;
    states.push_back(start);
    index.emplace(start, 0);
    for (size_t cur = 0; cur < states.size(); ++cur) {
        BiPoly state = states[cur];  // copy: states may reallocate below
        for (unsigned r = 0; r < q; ++r) {
            BiPoly image = cartier_product(state, qq1, r, s_digit_mode ? r : 0);
            auto [it, fresh] = index.emplace(image, static_cast<uint32_t>(states.size()));
            if (fresh) {
                states.push_back(image);
                if (states.size() > cap)
                    throw std::logic_error("automaton construction exceeded its state cap");
            }
            a.tr.push_back(it->second);
        }
    }
    a.out.reserve(states.size());
    a.label.reserve(states.size());
    for (const auto& s : states) {
        a.out.push_back(s.coeffc(0, 0));
        a.label.push_back(s.str());
    }
    return a;
}

}  // namespace

Dfao build(const FurstenbergInput& in) {
    uint64_t cap = sat_pow(in.f->q(), static_cast<uint64_t>(in.h + 1) * in.d) + 1;
    return closure(*in.f, in.S0, in.Qq1, 0, cap);
}

Dfao build_diagonal(const BiPoly& s, const BiPoly& q) {
    if (&s.field() != &q.field()) throw field_mismatch();
    const Field& f = s.field();
    if (q.coeffc(0, 0) == 0)
        throw input_error("diagonal automaton needs Q(0,0) != 0");
    if (!s.is_plain() || !q.is_plain())
        throw input_error("diagonal automaton expects plain polynomials");
    BiPoly qq1 = pow(q, f.q() - 1);
    // reachable states stay in the (height, ydeg) box of Q; headroom for the transient
    uint64_t cap = sat_pow(f.q(), (static_cast<uint64_t>(std::max(q.height(), 0)) + 1) *
                                      (static_cast<uint64_t>(std::max(q.ydeg(), 0)) + 1)) +
                   64;
    return closure(f, s, qq1, 1, cap);
}

Fq run(const Dfao& a, uint64_t n) {
    uint32_t s = a.initial;
    while (n) {
        s = a.next(s, static_cast<unsigned>(n % a.q));
        n /= a.q;
    }
    return Fq(*a.f, a.out[s]);
}

bool zero_insensitive(const Dfao& a) {
    for (size_t s = 0; s < a.size(); ++s)
        if (a.out[a.next(static_cast<uint32_t>(s), 0)] != a.out[s]) return false;
    return true;
}

Dfao minimize(const Dfao& a) {
    if (!zero_insensitive(a))
        throw input_error("cannot minimize: automaton is sensitive to leading zeros");
    size_t n = a.size();
    unsigned q = a.q;

    std::vector<uint32_t> cls(n);
    {
        std::map<uint16_t, uint32_t> first;
        for (size_t s = 0; s < n; ++s)
            cls[s] = first.emplace(a.out[s], static_cast<uint32_t>(first.size())).first->second;
    }
    size_t count = 0;
    for (uint32_t c : cls) count = std::max<size_t>(count, c + 1);
    for (;;) {
        std::map<std::vector<uint32_t>, uint32_t> sig;
        std::vector<uint32_t> next(n);
        for (size_t s = 0; s < n; ++s) {
            std::vector<uint32_t> key(q + 1);
            key[0] = cls[s];
            for (unsigned r = 0; r < q; ++r) key[r + 1] = cls[a.next(static_cast<uint32_t>(s), r)];
            auto [it, fresh] = sig.emplace(std::move(key), static_cast<uint32_t>(sig.size()));
            next[s] = it->second;
        }
        size_t new_count = sig.size();
        cls.swap(next);
        if (new_count == count) break;
        count = new_count;
    }

    // canonical BFS renumbering over classes, digit order 0..q-1
    std::vector<uint32_t> rep(count, UINT32_MAX);  // class -> representative state
    for (size_t s = n; s-- > 0;) rep[cls[s]] = static_cast<uint32_t>(s);
    std::vector<uint32_t> order;  // BFS order of classes
    std::vector<uint32_t> newid(count, UINT32_MAX);
    order.push_back(cls[a.initial]);
    newid[cls[a.initial]] = 0;
    for (size_t k = 0; k < order.size(); ++k) {
        uint32_t c = order[k];
        uint32_t s = rep[c];
        for (unsigned r = 0; r < q; ++r) {
            uint32_t tc = cls[a.next(s, r)];
            if (newid[tc] == UINT32_MAX) {
                newid[tc] = static_cast<uint32_t>(order.size());
                order.push_back(tc);
            }
        }
    }

    Dfao m;
    m.f = a.f;
    m.q = q;
    m.initial = 0;
    m.out.resize(order.size());
    m.label.assign(order.size(), std::string());
    m.tr.resize(order.size() * q);
    for (size_t k = 0; k < order.size(); ++k) {
        uint32_t s = rep[order[k]];
        m.out[k] = a.out[s];
        for (unsigned r = 0; r < q; ++r) m.tr[k * q + r] = newid[cls[a.next(s, r)]];
    }
    return m;
}

KernelOracleReport kernel_oracle(const std::vector<uint16_t>& prefix, unsigned q,
                                 unsigned e_max) {
    size_t n = prefix.size();
    if (q < 2) throw input_error("kernel oracle needs q >= 2");
    if (n < 8) throw input_error("kernel oracle inconclusive: window shorter than 8 symbols");

    struct Cls {
        unsigned e;
        uint64_t r;
        std::vector<uint16_t> seq;
    };
    std::vector<Cls> classes;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
    auto key8 = [](const std::vector<uint16_t>& s) {
        uint64_t h = 1469598103934665603ull;
        for (size_t k = 0; k < 8; ++k) {
            h ^= s[k];
            h *= 1099511628211ull;
        }
        return h;
    };
    auto materialize = [&](uint64_t qe, uint64_t r) {
        size_t w = static_cast<size_t>((n - r) / qe);
        std::vector<uint16_t> s(w);
        for (size_t k = 0; k < w; ++k) s[k] = prefix[qe * k + r];
        return s;
    };
    // returns class id, inserting a new class if needed; -1 means "indistinct"
    auto classify = [&](unsigned e, uint64_t r, std::vector<uint16_t> s) {
        uint64_t h = key8(s);
        for (uint32_t id : buckets[h]) {
            const auto& c = classes[id];
            size_t m = std::min(c.seq.size(), s.size());
            if (std::equal(s.begin(), s.begin() + m, c.seq.begin())) return std::make_pair(id, false);
        }
        uint32_t id = static_cast<uint32_t>(classes.size());
        classes.push_back({e, r, std::move(s)});
        buckets[h].push_back(id);
        return std::make_pair(id, true);
    };

    KernelOracleReport rep;
    rep.exact_closed = true;
    rep.window = n;
    classify(0, 0, materialize(1, 0));
    std::vector<uint32_t> queue{0};
    for (size_t head = 0; head < queue.size(); ++head) {
        const Cls cur = classes[queue[head]];
        uint64_t qe = 1;
        for (unsigned k = 0; k < cur.e; ++k) qe *= q;
        uint64_t qe1 = qe * q;
        for (unsigned digit = 0; digit < q; ++digit) {
            uint64_t rc = cur.r + qe * digit;
            size_t w = rc < n ? static_cast<size_t>((n - rc) / qe1) : 0;
            if (cur.e + 1 > e_max || w < 8) {
                rep.exact_closed = false;
                continue;
            }
            auto [id, fresh] = classify(cur.e + 1, rc, materialize(qe1, rc));
            if (fresh) queue.push_back(id);
            rep.window = std::min(rep.window, w);
        }
    }
    rep.distinct_count = classes.size();
    for (const auto& c : classes) rep.representatives.emplace_back(c.e, c.r);
    return rep;
}

std::string serialize(const Dfao& a) {
    nlohmann::json j;
    j["q"] = a.q;
    j["lsd_first"] = true;
    j["initial"] = a.initial;
    nlohmann::json states = nlohmann::json::array();
    for (size_t s = 0; s < a.size(); ++s) {
        nlohmann::json st;
        st["id"] = s;
        st["output"] = a.out[s];
        if (!a.label[s].empty()) st["label"] = a.label[s];
        states.push_back(std::move(st));
    }
    j["states"] = std::move(states);
    nlohmann::json trans = nlohmann::json::array();
    for (size_t s = 0; s < a.size(); ++s) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned r = 0; r < a.q; ++r) row.push_back(a.tr[s * a.q + r]);
        trans.push_back(std::move(row));
    }
    j["transitions"] = std::move(trans);
    return j.dump(2);
}

Dfao deserialize(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("automaton document: ") + e.what(), e.byte);
    }
    try {
        unsigned q = j.at("q").get<unsigned>();
        if (q < 2) throw input_error("automaton document: q must be at least 2");
        // q = p^e has a unique prime p
        unsigned p = 2;
        while (q % p != 0) ++p;
        unsigned e = 0;
        unsigned rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (rest != 1) throw input_error("automaton document: q is not a prime power");
        const Field& f = Field::get(p, e);

        Dfao a;
        a.f = &f;
        a.q = q;
        a.initial = j.at("initial").get<uint32_t>();
        const auto& states = j.at("states");
        if (!states.is_array() || states.empty())
            throw input_error("automaton document: empty states list");
        size_t n = states.size();
        a.out.assign(n, 0);
        a.label.assign(n, std::string());
        std::vector<bool> seen(n, false);
        for (const auto& st : states) {
            size_t id = st.at("id").get<size_t>();
            if (id >= n || seen[id]) throw input_error("automaton document: bad state id");
            seen[id] = true;
            uint64_t out = st.at("output").get<uint64_t>();
            if (out >= q) throw input_error("automaton document: output out of range");
            a.out[id] = static_cast<uint16_t>(out);
            if (st.contains("label")) a.label[id] = st.at("label").get<std::string>();
        }
        if (a.initial >= n) throw input_error("automaton document: initial out of range");
        const auto& trans = j.at("transitions");
        if (!trans.is_array() || trans.size() != n)
            throw input_error("automaton document: transitions must cover every state");
        a.tr.assign(n * q, 0);
        for (size_t s = 0; s < n; ++s) {
            const auto& row = trans.at(s);
            if (!row.is_array() || row.size() != q)
                throw input_error("automaton document: each state needs q transitions");
            for (unsigned r = 0; r < q; ++r) {
                uint64_t t = row.at(r).get<uint64_t>();
                if (t >= n) throw input_error("automaton document: transition out of range");
                a.tr[s * q + r] = static_cast<uint32_t>(t);
            }
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("automaton document: ") + e.what(), 0);
    }
}

}  // namespace algseq
