#include "core/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace ira {

std::int64_t TannerGraph::info_edge_count() const {
    std::int64_t e = 0;
    for (const auto& adj : check_info) e += static_cast<std::int64_t>(adj.size());
    return e;
}

bool TannerGraph::is_pilot(std::int32_t v) const {
    return std::binary_search(pilots.begin(), pilots.end(), v);
}

bool TannerGraph::is_doped(std::int32_t v) const {
    return std::binary_search(doped.begin(), doped.end(), v);
}

namespace {

std::vector<std::int64_t> largest_remainder(const std::vector<double>& targets,
                                            std::int64_t total) {
    std::vector<std::int64_t> counts(targets.size(), 0);
    std::vector<std::pair<double, std::size_t>> fracs;
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        double t = std::max(0.0, targets[i]);
        counts[i] = static_cast<std::int64_t>(std::floor(t));
        assigned += counts[i];
        fracs.push_back({t - std::floor(t), i});
    }
    std::sort(fracs.begin(), fracs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::int64_t left = total - assigned;
    for (std::size_t k = 0; left > 0 && k < fracs.size(); ++k, --left) ++counts[fracs[k].second];
    while (left < 0) {  // floating-point corner: trim from the largest class
        std::size_t imax = 0;
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] > counts[imax]) imax = i;
        if (counts[imax] == 0) break;
        --counts[imax];
        ++left;
    }
    return counts;
}

// One pass: collect every edge slot involved in a duplicate edge or a 4-cycle
// of the info-check subgraph (pilot nodes exempt) and swap each collected
// slot's endpoint with a uniformly random slot anywhere in the graph.
// Swapping only within the offending set is not ergodic (a lone duplicated
// pair would permute among itself forever), so partners are drawn globally.
bool repair_round(TannerGraph& g, Rng& rng) {
    struct Loc {
        std::int32_t check, s1, s2;
    };
    std::vector<std::pair<std::int32_t, std::int32_t>> bad_slots;  // (check, slot)
    std::unordered_map<std::uint64_t, Loc> pair_seen;              // pair -> first occurrence
    pair_seen.reserve(static_cast<std::size_t>(g.info_edge_count()));
    std::unordered_set<std::int32_t> pilotset(g.pilots.begin(), g.pilots.end());

    for (std::int32_t c = 0; c < g.C; ++c) {
        const auto& adj = g.check_info[static_cast<std::size_t>(c)];
        for (std::size_t s1 = 0; s1 < adj.size(); ++s1) {
            if (pilotset.count(adj[s1])) continue;
            for (std::size_t s2 = s1 + 1; s2 < adj.size(); ++s2) {
                if (pilotset.count(adj[s2])) continue;
                if (adj[s1] == adj[s2]) {  // duplicate edge
                    bad_slots.push_back({c, static_cast<std::int32_t>(s1)});
                    bad_slots.push_back({c, static_cast<std::int32_t>(s2)});
                    continue;
                }
                std::int32_t a = std::min(adj[s1], adj[s2]);
                std::int32_t b = std::max(adj[s1], adj[s2]);
                std::uint64_t key =
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                    static_cast<std::uint32_t>(b);
                Loc loc{c, static_cast<std::int32_t>(s1), static_cast<std::int32_t>(s2)};
                auto [it, inserted] = pair_seen.try_emplace(key, loc);
                if (!inserted && it->second.check != c) {
                    // 4-cycle: mark all four edges
                    bad_slots.push_back({it->second.check, it->second.s1});
                    bad_slots.push_back({it->second.check, it->second.s2});
                    bad_slots.push_back({c, static_cast<std::int32_t>(s1)});
                    bad_slots.push_back({c, static_cast<std::int32_t>(s2)});
                }
            }
        }
    }
    if (bad_slots.empty()) return true;
    std::sort(bad_slots.begin(), bad_slots.end());
    bad_slots.erase(std::unique(bad_slots.begin(), bad_slots.end()), bad_slots.end());

    // flat slot directory for drawing random partners
    std::vector<std::pair<std::int32_t, std::int32_t>> all_slots;
    all_slots.reserve(static_cast<std::size_t>(g.info_edge_count()));
    for (std::int32_t c = 0; c < g.C; ++c)
        for (std::size_t s = 0; s < g.check_info[static_cast<std::size_t>(c)].size(); ++s)
            all_slots.push_back({c, static_cast<std::int32_t>(s)});
    for (auto [c, s] : bad_slots) {
        auto [c2, s2] = all_slots[static_cast<std::size_t>(rng.below(all_slots.size()))];
        std::swap(g.check_info[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)],
                  g.check_info[static_cast<std::size_t>(c2)][static_cast<std::size_t>(s2)]);
    }
    return false;
}

void repair_graph(TannerGraph& g, Rng& rng, int max_rounds) {
    for (int round = 0; round < max_rounds; ++round) {
        if (repair_round(g, rng)) return;
    }
    // final check
    Rng probe(0);
    TannerGraph copy = g;
    if (repair_round(copy, probe))
        return;
    throw error(errc::construction_failed, "build_graph: swap rounds exceeded the cap");
}

void match_sockets(TannerGraph& g, const std::vector<std::int32_t>& info_sockets,
                   const std::vector<std::int64_t>& check_degrees, Rng& rng) {
    std::vector<std::int32_t> shuffled = info_sockets;
    rng.shuffle(shuffled);
    g.check_info.assign(static_cast<std::size_t>(g.C), {});
    std::size_t pos = 0;
    for (std::int64_t c = 0; c < g.C; ++c) {
        auto& adj = g.check_info[static_cast<std::size_t>(c)];
        adj.reserve(static_cast<std::size_t>(check_degrees[static_cast<std::size_t>(c)]));
        for (std::int64_t k = 0; k < check_degrees[static_cast<std::size_t>(c)]; ++k)
            adj.push_back(shuffled[pos++]);
    }
}

TannerGraph build_check_regular(const TruncatedPair& pair, std::int64_t N, std::uint64_t seed,
                                const BuildOptions& opts) {
    const double p = pair.design_p;
    const std::int64_t K_nominal = std::llround(static_cast<double>(N) * (1.0 - p));
    // node-fraction targets: L_n = (lambda_n / n) / ((1-p)/3) for n = 2..M,
    // plus the pilot bucket collapsed onto one dummy bit
    std::vector<double> targets;  // index 0 -> degree 2, ..., index M-2 -> degree M; last -> pilots
    const double norm = 3.0 / (1.0 - p);
    for (int n = 2; n <= pair.M; ++n)
        targets.push_back(static_cast<double>(K_nominal) * pair.lambda.coeff(n) /
                          static_cast<double>(n) * norm);
    targets.push_back(static_cast<double>(K_nominal) * pair.pilot_fraction);
    std::vector<std::int64_t> counts = largest_remainder(targets, K_nominal);

    std::int64_t info_sockets_regular = 0;
    for (int n = 2; n <= pair.M; ++n)
        info_sockets_regular += counts[static_cast<std::size_t>(n - 2)] * n;
    std::int64_t dummy_sockets = 3 * N - info_sockets_regular;
    {
        // resolve negative slack by shrinking the highest populated class
        int d = pair.M;
        while (dummy_sockets < 0 && d >= 2) {
            auto& cd = counts[static_cast<std::size_t>(d - 2)];
            if (cd > 0) {
                --cd;
                dummy_sockets += d;
            } else {
                --d;
            }
        }
        if (dummy_sockets < 0)
            throw error(errc::invalid_quantization,
                        "build_graph: socket counts cannot be balanced");
    }

    TannerGraph g;
    g.N = N;
    g.C = N;
    std::int64_t K_regular = 0;
    for (int n = 2; n <= pair.M; ++n) K_regular += counts[static_cast<std::size_t>(n - 2)];
    bool have_dummy = dummy_sockets > 0;
    g.K = K_regular + (have_dummy ? 1 : 0);
    if (have_dummy) g.pilots.push_back(static_cast<std::int32_t>(g.K - 1));
    g.design_rate = pair.design_rate;

    std::vector<std::int32_t> sockets;
    sockets.reserve(static_cast<std::size_t>(3 * N));
    std::int32_t node = 0;
    for (int n = 2; n <= pair.M; ++n) {
        for (std::int64_t c = 0; c < counts[static_cast<std::size_t>(n - 2)]; ++c, ++node)
            for (int e = 0; e < n; ++e) sockets.push_back(node);
    }
    for (std::int64_t e = 0; e < dummy_sockets; ++e)
        sockets.push_back(static_cast<std::int32_t>(g.K - 1));

    Rng rng(Rng::mix(seed, 0x67726170u));
    std::vector<std::int64_t> check_degrees(static_cast<std::size_t>(N), 3);
    match_sockets(g, sockets, check_degrees, rng);
    repair_graph(g, rng, opts.max_swap_rounds);
    return g;
}

TannerGraph build_bit_regular(const TruncatedPair& pair, std::int64_t N, std::uint64_t seed,
                              const BuildOptions& opts) {
    const int q = pair.q;
    NodeDegreeDistribution Rn = node_perspective(pair.rho, NodeDegreeDistribution::Kind::check);
    std::vector<double> targets;  // index i-1 -> degree i, i = 1..M
    for (int i = 1; i <= pair.M; ++i)
        targets.push_back(static_cast<double>(N) * Rn.coeff(i));
    std::vector<std::int64_t> counts = largest_remainder(targets, N);

    std::int64_t sockets_total = 0;
    for (int i = 1; i <= pair.M; ++i) sockets_total += counts[static_cast<std::size_t>(i - 1)] * i;
    // Largest-remainder keeps the check count exact but lets the socket sum
    // drift (fractions of high-degree classes carry many sockets). Repair it
    // toward q * round(N * rate) by moving checks between degree classes,
    // preferring long jumps through the extreme classes.
    const std::int64_t K_target = std::llround(static_cast<double>(N) * pair.design_rate);
    const std::int64_t target_sockets = K_target * q;
    auto move_check = [&](int from, int to) {
        --counts[static_cast<std::size_t>(from - 1)];
        ++counts[static_cast<std::size_t>(to - 1)];
        sockets_total += to - from;
    };
    while (sockets_total != target_sockets) {
        std::int64_t d = target_sockets - sockets_total;
        int a = -1;
        if (d > 0) {
            for (int i = 1; i < pair.M; ++i)
                if (counts[static_cast<std::size_t>(i - 1)] > 0) { a = i; break; }
            int b = static_cast<int>(std::min<std::int64_t>(pair.M, a + d));
            if (a < 0 || b <= a) break;
            move_check(a, b);
        } else {
            for (int i = pair.M; i > 1; --i)
                if (counts[static_cast<std::size_t>(i - 1)] > 0) { a = i; break; }
            int b = static_cast<int>(std::max<std::int64_t>(1, a + d));
            if (a < 0 || b >= a) break;
            move_check(a, b);
        }
    }
    if (sockets_total != target_sockets)
        throw error(errc::invalid_quantization, "build_graph: socket counts cannot be balanced");

    TannerGraph g;
    g.N = N;
    g.C = N;
    g.K = K_target;
    g.design_rate = pair.design_rate;
    if (g.K < 1) throw error(errc::invalid_quantization, "build_graph: no information bits");

    Rng rng(Rng::mix(seed, 0x67726170u));
    // spread check degrees over the check indices at random
    std::vector<std::int64_t> check_degrees;
    check_degrees.reserve(static_cast<std::size_t>(N));
    for (int i = 1; i <= pair.M; ++i)
        for (std::int64_t c = 0; c < counts[static_cast<std::size_t>(i - 1)]; ++c)
            check_degrees.push_back(i);
    rng.shuffle(check_degrees);

    std::vector<std::int32_t> sockets;
    sockets.reserve(static_cast<std::size_t>(sockets_total));
    for (std::int64_t v = 0; v < g.K; ++v)
        for (int e = 0; e < q; ++e) sockets.push_back(static_cast<std::int32_t>(v));

    match_sockets(g, sockets, check_degrees, rng);

    // doped bits: systematically transmitted starters, uniform at random
    int want = std::min<std::int64_t>(opts.doping_count, g.K);
    std::set<std::int32_t> doped;
    while (static_cast<int>(doped.size()) < want)
        doped.insert(static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(g.K))));
    g.doped.assign(doped.begin(), doped.end());

    repair_graph(g, rng, opts.max_swap_rounds);
    return g;
}

}  // namespace

TannerGraph build_graph(const TruncatedPair& pair, std::int64_t N, std::uint64_t seed,
                        const BuildOptions& opts) {
    if (N < 8) throw error(errc::invalid_parameter, "build_graph: N too small");
    if (!opts.force_conjectural && (pair.lambda.region != RegionStatus::proven ||
                                    pair.rho.region != RegionStatus::proven))
        throw error(errc::conjectural_refused,
                    "build_graph: d.d. positivity is conjectural for these parameters "
                    "(pass force to build anyway)");
    if (pair.kind == EnsembleKind::check_regular) return build_check_regular(pair, N, seed, opts);
    return build_bit_regular(pair, N, seed, opts);
}

GraphAudit audit_graph(const TannerGraph& g) {
    GraphAudit a;
    std::unordered_set<std::int32_t> pilotset(g.pilots.begin(), g.pilots.end());
    std::vector<std::int64_t> info_deg(static_cast<std::size_t>(g.K), 0);
    std::unordered_map<std::uint64_t, std::int32_t> pair_seen;
    for (std::int32_t c = 0; c < g.C; ++c) {
        const auto& adj = g.check_info[static_cast<std::size_t>(c)];
        for (std::size_t s1 = 0; s1 < adj.size(); ++s1) {
            ++info_deg[static_cast<std::size_t>(adj[s1])];
            if (pilotset.count(adj[s1])) continue;
            for (std::size_t s2 = s1 + 1; s2 < adj.size(); ++s2) {
                if (pilotset.count(adj[s2])) continue;
                if (adj[s1] == adj[s2]) { a.no_multi_edges = false; continue; }
                std::int32_t lo = std::min(adj[s1], adj[s2]);
                std::int32_t hi = std::max(adj[s1], adj[s2]);
                std::uint64_t key =
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) |
                    static_cast<std::uint32_t>(hi);
                auto [it, inserted] = pair_seen.try_emplace(key, c);
                if (!inserted && it->second != c) a.no_4cycles = false;
            }
        }
    }
    std::int64_t deg_sum = 0;
    for (auto d : info_deg) deg_sum += d;
    a.socket_balance = deg_sum == g.info_edge_count();
    for (auto d : g.doped)
        if (pilotset.count(d)) a.doped_pilot_disjoint = false;
    return a;
}

// ------------------------------------------------------------------ codec

Codeword encode(const TannerGraph& g, const std::vector<std::uint8_t>& info_bits) {
    if (static_cast<std::int64_t>(info_bits.size()) != g.K)
        throw error(errc::invalid_parameter, "encode: info vector length mismatch");
    for (auto v : g.pilots)
        if (info_bits[static_cast<std::size_t>(v)] != 0)
            throw error(errc::pilot_violation, "encode: pilot positions must be zero");
    Codeword cw;
    cw.info_bits = info_bits;
    cw.code_bits.assign(static_cast<std::size_t>(g.N), 0);
    std::uint8_t acc = 0;
    for (std::int64_t j = 0; j < g.C; ++j) {
        std::uint8_t s = 0;
        for (auto v : g.check_info[static_cast<std::size_t>(j)])
            s ^= info_bits[static_cast<std::size_t>(v)];
        acc ^= s;
        cw.code_bits[static_cast<std::size_t>(j)] = acc;
    }
    cw.doped_bits.reserve(g.doped.size());
    for (auto v : g.doped) cw.doped_bits.push_back(info_bits[static_cast<std::size_t>(v)]);
    return cw;
}

ReceivedWord transmit(const TannerGraph& g, const Codeword& cw, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p < 1.0))
        throw error(errc::invalid_parameter, "transmit: p must lie in [0,1)");
    Rng rng(Rng::mix(seed, 0x6368616eu));
    ReceivedWord rx;
    rx.code_sym.resize(cw.code_bits.size());
    for (std::size_t i = 0; i < cw.code_bits.size(); ++i)
        rx.code_sym[i] = rng.uniform01() < p ? SYM_ERASED : cw.code_bits[i];
    rx.doped_sym.resize(cw.doped_bits.size());
    for (std::size_t i = 0; i < cw.doped_bits.size(); ++i)
        rx.doped_sym[i] = rng.uniform01() < p ? SYM_ERASED : cw.doped_bits[i];
    (void)g;
    return rx;
}

DecodeResult peel_decode(const TannerGraph& g, const ReceivedWord& rx) {
    if (static_cast<std::int64_t>(rx.code_sym.size()) != g.N ||
        rx.doped_sym.size() != g.doped.size())
        throw error(errc::invalid_parameter, "peel_decode: received word shape mismatch");

    const std::int64_t nvar = g.K + g.N;  // info vars then code vars
    std::vector<std::uint8_t> value(static_cast<std::size_t>(nvar), 0);
    std::vector<std::uint8_t> known(static_cast<std::size_t>(nvar), 0);

    for (auto v : g.pilots) known[static_cast<std::size_t>(v)] = 1;  // zero-valued
    for (std::size_t i = 0; i < g.doped.size(); ++i) {
        if (rx.doped_sym[i] != SYM_ERASED) {
            known[static_cast<std::size_t>(g.doped[i])] = 1;
            value[static_cast<std::size_t>(g.doped[i])] = rx.doped_sym[i];
        }
    }
    for (std::int64_t j = 0; j < g.N; ++j) {
        if (rx.code_sym[static_cast<std::size_t>(j)] != SYM_ERASED) {
            known[static_cast<std::size_t>(g.K + j)] = 1;
            value[static_cast<std::size_t>(g.K + j)] = rx.code_sym[static_cast<std::size_t>(j)];
        }
    }

    // adjacency: variable -> constraints
    std::vector<std::vector<std::int32_t>> var_checks(static_cast<std::size_t>(nvar));
    for (std::int32_t c = 0; c < g.C; ++c) {
        for (auto v : g.check_info[static_cast<std::size_t>(c)])
            var_checks[static_cast<std::size_t>(v)].push_back(c);
        var_checks[static_cast<std::size_t>(g.K + c)].push_back(c);  // code bit c
        if (c + 1 < g.C) var_checks[static_cast<std::size_t>(g.K + c)].push_back(c + 1);
    }

    std::vector<std::int32_t> unknown_count(static_cast<std::size_t>(g.C), 0);
    std::vector<std::uint8_t> parity(static_cast<std::size_t>(g.C), 0);
    DecodeResult res;

    auto members_of = [&](std::int32_t c, std::vector<std::int64_t>& out) {
        out.clear();
        for (auto v : g.check_info[static_cast<std::size_t>(c)]) out.push_back(v);
        out.push_back(g.K + c);
        if (c >= 1) out.push_back(g.K + c - 1);
    };

    std::vector<std::int64_t> members;
    for (std::int32_t c = 0; c < g.C; ++c) {
        members_of(c, members);
        for (auto v : members) {
            if (known[static_cast<std::size_t>(v)]) {
                parity[static_cast<std::size_t>(c)] ^= value[static_cast<std::size_t>(v)];
                ++res.edges_touched;
            } else {
                ++unknown_count[static_cast<std::size_t>(c)];
            }
        }
        if (unknown_count[static_cast<std::size_t>(c)] == 0 &&
            parity[static_cast<std::size_t>(c)] != 0)
            throw error(errc::decode_inconsistency, "peel_decode: contradictory constraint");
    }

    std::vector<std::int32_t> queue;
    for (std::int32_t c = 0; c < g.C; ++c)
        if (unknown_count[static_cast<std::size_t>(c)] == 1) queue.push_back(c);

    while (!queue.empty()) {
        std::int32_t c = queue.back();
        queue.pop_back();
        if (unknown_count[static_cast<std::size_t>(c)] != 1) continue;
        members_of(c, members);
        std::int64_t target = -1;
        for (auto v : members)
            if (!known[static_cast<std::size_t>(v)]) { target = v; break; }
        if (target < 0) continue;
        std::uint8_t val = parity[static_cast<std::size_t>(c)];
        known[static_cast<std::size_t>(target)] = 1;
        value[static_cast<std::size_t>(target)] = val;
        ++res.iterations;
        for (auto cc : var_checks[static_cast<std::size_t>(target)]) {
            parity[static_cast<std::size_t>(cc)] ^= val;
            ++res.edges_touched;
            if (--unknown_count[static_cast<std::size_t>(cc)] == 1) queue.push_back(cc);
            if (unknown_count[static_cast<std::size_t>(cc)] == 0 &&
                parity[static_cast<std::size_t>(cc)] != 0)
                throw error(errc::decode_inconsistency, "peel_decode: contradictory constraint");
        }
    }

    res.recovered_info.assign(static_cast<std::size_t>(g.K), SYM_ERASED);
    for (std::int64_t v = 0; v < g.K; ++v) {
        if (known[static_cast<std::size_t>(v)])
            res.recovered_info[static_cast<std::size_t>(v)] = value[static_cast<std::size_t>(v)];
        else if (!g.is_pilot(static_cast<std::int32_t>(v)))
            ++res.unresolved_info;
    }
    return res;
}

double graph_complexity(const TannerGraph& g) {
    return static_cast<double>(g.info_edge_count() + g.accumulator_edge_count()) /
           static_cast<double>(g.info_bit_count());
}

// --------------------------------------------------------------- file I/O

std::string TannerGraph::serialize() const {
    std::ostringstream os;
    os << "IRAGRAPH v1\n";
    os << "K " << K << " C " << C << " N " << N << "\n";
    os << "doped";
    for (auto v : doped) os << ' ' << v;
    os << "\npilots";
    for (auto v : pilots) os << ' ' << v;
    os << "\n";
    for (std::int64_t c = 0; c < C; ++c) {
        os << "check " << c << ":";
        for (auto v : check_info[static_cast<std::size_t>(c)]) os << ' ' << v;
        os << "\n";
    }
    return os.str();
}

TannerGraph TannerGraph::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto fail = [](const std::string& what) -> TannerGraph& {
        throw error(errc::parse_error, "graph parse: " + what);
    };
    if (!std::getline(is, line) || line != "IRAGRAPH v1") fail("bad magic");
    TannerGraph g;
    {
        if (!std::getline(is, line)) fail("missing size line");
        std::istringstream ls(line);
        std::string kw1, kw2, kw3;
        if (!(ls >> kw1 >> g.K >> kw2 >> g.C >> kw3 >> g.N) || kw1 != "K" || kw2 != "C" ||
            kw3 != "N" || g.K < 0 || g.C < 0 || g.N != g.C)
            fail("bad size line");
    }
    auto read_list = [&](const char* name, std::vector<std::int32_t>& out) {
        if (!std::getline(is, line)) fail(std::string("missing ") + name);
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != name) fail(std::string("expected ") + name);
        std::int64_t v;
        while (ls >> v) {
            if (v < 0 || v >= g.K) fail("index out of range");
            out.push_back(static_cast<std::int32_t>(v));
        }
    };
    read_list("doped", g.doped);
    read_list("pilots", g.pilots);
    std::sort(g.doped.begin(), g.doped.end());
    std::sort(g.pilots.begin(), g.pilots.end());
    g.check_info.assign(static_cast<std::size_t>(g.C), {});
    for (std::int64_t c = 0; c < g.C; ++c) {
        if (!std::getline(is, line)) fail("missing check line");
        std::istringstream ls(line);
        std::string kw;
        std::int64_t idx;
        char colon;
        if (!(ls >> kw >> idx >> colon) || kw != "check" || idx != c || colon != ':')
            fail("bad check line");
        std::int64_t v;
        while (ls >> v) {
            if (v < 0 || v >= g.K) fail("info index out of range");
            g.check_info[static_cast<std::size_t>(c)].push_back(static_cast<std::int32_t>(v));
        }
    }
    return g;
}

void TannerGraph::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error(errc::io_error, "graph save: cannot open " + path);
    std::string s = serialize();
    f.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!f) throw error(errc::io_error, "graph save: write failed");
}

TannerGraph TannerGraph::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw error(errc::io_error, "graph load: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

}  // namespace ira
