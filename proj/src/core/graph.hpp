#ifndef IRA_CORE_GRAPH_HPP
#define IRA_CORE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/degree_dist.hpp"

namespace ira {

// Finite-length IRA structure. Info node indices run 0..K-1, parity checks
// 0..C-1, code bits 0..N-1 with C == N. Check j is connected to code bits
// j-1 and j (check 0 only to code bit 0: the accumulator starts from state 0),
// plus the listed info nodes.
struct TannerGraph {
    std::int64_t K = 0;
    std::int64_t C = 0;
    std::int64_t N = 0;
    std::vector<std::vector<std::int32_t>> check_info;  // per-check info neighbors
    std::vector<std::int32_t> doped;                    // transmitted systematically, sorted
    std::vector<std::int32_t> pilots;                   // fixed to zero and known, sorted
    // construction provenance
    double design_rate = 0.0;

    std::int64_t info_edge_count() const;
    std::int64_t accumulator_edge_count() const { return 2 * N - 1; }
    std::int64_t info_bit_count() const {  // information-carrying bits
        return K - static_cast<std::int64_t>(pilots.size());
    }
    // actual code rate: pilots carry no information, doped bits are transmitted
    double rate() const {
        return static_cast<double>(info_bit_count()) /
               static_cast<double>(N + static_cast<std::int64_t>(doped.size()));
    }
    bool is_pilot(std::int32_t v) const;
    bool is_doped(std::int32_t v) const;

    std::string serialize() const;  // IRAGRAPH v1 text format
    static TannerGraph parse(const std::string& text);
    void save(const std::string& path) const;
    static TannerGraph load(const std::string& path);
};

struct BuildOptions {
    int doping_count = 150;      // bit-regular only
    bool force_conjectural = false;
    int max_swap_rounds = 1000;
};

// Quantize the pair's degree distributions to N code bits, match sockets with
// a seeded uniform permutation, and repair multi-edges / 4-cycles in the
// info-check subgraph (the check-regular dummy pilot is exempt).
TannerGraph build_graph(const TruncatedPair& pair, std::int64_t N, std::uint64_t seed,
                        const BuildOptions& opts = {});

// Structural audit used by tests: socket balance, duplicate edges and
// 4-cycles among non-pilot info nodes, doped/pilot disjointness.
struct GraphAudit {
    bool socket_balance = true;
    bool no_multi_edges = true;
    bool no_4cycles = true;
    bool doped_pilot_disjoint = true;
    bool ok() const { return socket_balance && no_multi_edges && no_4cycles && doped_pilot_disjoint; }
};
GraphAudit audit_graph(const TannerGraph& g);

struct Codeword {
    std::vector<std::uint8_t> code_bits;   // length N
    std::vector<std::uint8_t> info_bits;   // length K (not transmitted except doped)
    std::vector<std::uint8_t> doped_bits;  // values at doped positions, transmitted
};

// Accumulator encoding: s_j = xor of info neighbors, c_0 = s_0, c_j = c_{j-1} ^ s_j.
Codeword encode(const TannerGraph& g, const std::vector<std::uint8_t>& info_bits);

inline constexpr std::uint8_t SYM_ZERO = 0;
inline constexpr std::uint8_t SYM_ONE = 1;
inline constexpr std::uint8_t SYM_ERASED = 2;

struct ReceivedWord {
    std::vector<std::uint8_t> code_sym;   // length N, values SYM_*
    std::vector<std::uint8_t> doped_sym;  // per doped position
};

ReceivedWord transmit(const TannerGraph& g, const Codeword& cw, double p, std::uint64_t seed);

struct DecodeResult {
    std::vector<std::uint8_t> recovered_info;  // SYM_* per info bit (pilots resolve to 0)
    int iterations = 0;                        // peeling resolutions performed
    std::int64_t edges_touched = 0;
    std::int64_t unresolved_info = 0;          // among information-carrying bits
};

// Single-use-edge peeling: repeatedly resolves constraints with exactly one
// unknown incident variable.
DecodeResult peel_decode(const TannerGraph& g, const ReceivedWord& rx);

// (info-side edges + accumulator edges) per information-carrying bit.
double graph_complexity(const TannerGraph& g);

}  // namespace ira

#endif
