#include "core/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace ira {

using nlohmann::json;

std::string Config::to_json() const {
    json j;
    j["ensemble"] = ensemble == EnsembleKind::bit_regular ? "bit-regular" : "check-regular";
    j["q"] = q;
    j["p"] = p;
    j["epsilon"] = epsilon;
    j["n_max"] = n_max;
    j["oracle_depth"] = oracle_depth;
    j["grid_size"] = grid_size;
    j["seed"] = seed;
    j["threads"] = threads;
    j["doping_count"] = doping_count;
    j["out"] = out;
    return j.dump(2) + "\n";
}

Config Config::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(errc::parse_error, std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw error(errc::parse_error, "config: top level must be an object");
    static const std::set<std::string> known = {"ensemble", "q",       "p",           "epsilon",
                                                "n_max",    "oracle_depth", "grid_size",
                                                "seed",     "threads", "doping_count", "out"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key()))
            throw error(errc::validation_error, "config: unknown key '" + it.key() + "'");
    }
    Config c;
    try {
        if (j.contains("ensemble")) {
            std::string e = j["ensemble"].get<std::string>();
            if (e == "bit-regular")
                c.ensemble = EnsembleKind::bit_regular;
            else if (e == "check-regular")
                c.ensemble = EnsembleKind::check_regular;
            else
                throw error(errc::validation_error, "config: field ensemble must be "
                                                    "'bit-regular' or 'check-regular'");
        }
        if (j.contains("q")) c.q = j["q"].get<int>();
        if (j.contains("p")) c.p = j["p"].get<double>();
        if (j.contains("epsilon")) c.epsilon = j["epsilon"].get<double>();
        if (j.contains("n_max")) c.n_max = j["n_max"].get<int>();
        if (j.contains("oracle_depth")) c.oracle_depth = j["oracle_depth"].get<int>();
        if (j.contains("grid_size")) c.grid_size = j["grid_size"].get<int>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("threads")) c.threads = j["threads"].get<int>();
        if (j.contains("doping_count")) c.doping_count = j["doping_count"].get<int>();
        if (j.contains("out")) c.out = j["out"].get<std::string>();
    } catch (const json::exception& e) {
        throw error(errc::validation_error, std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

void Config::validate() const {
    if (q < 3) throw error(errc::validation_error, "config: field q must be >= 3");
    if (!(p > 0.0 && p < 1.0))
        throw error(errc::validation_error, "config: field p must lie in (0,1)");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw error(errc::validation_error, "config: field epsilon must lie in (0,1)");
    if (n_max < 2) throw error(errc::validation_error, "config: field n_max must be >= 2");
    if (oracle_depth < 2)
        throw error(errc::validation_error, "config: field oracle_depth must be >= 2");
    if (grid_size < 100)
        throw error(errc::validation_error, "config: field grid_size must be >= 100");
    if (threads < 1) throw error(errc::validation_error, "config: field threads must be >= 1");
    if (doping_count < 0)
        throw error(errc::validation_error, "config: field doping_count must be >= 0");
}

Config Config::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error(errc::io_error, "config: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_json(ss.str());
}

void Config::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw error(errc::io_error, "config: cannot open " + path);
    f << to_json();
}

}  // namespace ira
