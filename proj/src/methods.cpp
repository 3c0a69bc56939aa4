#include "dcp/methods.hpp"

#include <algorithm>

#include "dcp/advhits.hpp"
#include "dcp/baselines.hpp"
#include "dcp/detect_fast.hpp"
#include "dcp/errors.hpp"
#include "dcp/likelihood.hpp"

namespace dcp {

const std::vector<std::string>& method_ids() {
    static const std::vector<std::string> ids = {"lowrank", "hits",   "advhits", "advhitsgrp", "hillclimb",
                                                 "maxlike", "degree", "sapa1",   "sapa2",      "disum1",
                                                 "disum2",  "disum3", "disum4",  "bowtie"};
    return ids;
}

bool is_method(const std::string& id) {
    const auto& ids = method_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::uint64_t method_key(const std::string& id) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : id) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

DetectionResult run_bowtie(const DirectedGraph& g, std::uint64_t seed) {
    if (g.n() == 0) throw Error("bowtie: empty graph");
    DetectionResult r;
    r.partition = bowtie(g).as_partition();
    r.diagnostics.method = "bowtie";
    r.diagnostics.seed = seed;
    return r;
}

}  // namespace

Detector make_detector(const std::string& id, const MethodOverrides& ov) {
    if (id == "lowrank") return [](const DirectedGraph& g, std::uint64_t s) { return detect_lowrank(g, s); };
    if (id == "hits") return [](const DirectedGraph& g, std::uint64_t s) { return detect_hits(g, s); };
    if (id == "advhits" || id == "advhitsgrp") {
        AdvHitsConfig cfg;
        cfg.variant = id == "advhits" ? AdvHitsVariant::AdvHits : AdvHitsVariant::AdvHitsGrp;
        if (ov.tol) cfg.conv_tol = *ov.tol;
        return [cfg](const DirectedGraph& g, std::uint64_t s) {
            AdvHitsConfig c = cfg;
            c.seed = s;
            return detect_advhits(g, c);
        };
    }
    if (id == "hillclimb") {
        HillClimbOptions opt;
        if (ov.restarts) opt.restarts = *ov.restarts;
        return [opt](const DirectedGraph& g, std::uint64_t s) { return hill_climb(g, s, opt); };
    }
    if (id == "maxlike") {
        MaxLikeOptions opt;
        if (ov.restarts) opt.restarts = *ov.restarts;
        return [opt](const DirectedGraph& g, std::uint64_t s) { return max_like(g, s, opt); };
    }
    if (id == "degree") return [](const DirectedGraph& g, std::uint64_t s) { return detect_degree(g, s); };
    if (id == "sapa1" || id == "sapa2") {
        const SapaVariant v = id == "sapa1" ? SapaVariant::Bibliometric : SapaVariant::DegreeDiscounted;
        return [v](const DirectedGraph& g, std::uint64_t s) { return detect_sapa(g, v, s); };
    }
    if (id.size() == 6 && id.starts_with("disum") && id[5] >= '1' && id[5] <= '4') {
        const int v = id[5] - '0';
        return [v](const DirectedGraph& g, std::uint64_t s) { return detect_disum(g, v, s); };
    }
    if (id == "bowtie") return run_bowtie;
    throw Error("unknown method '" + id + "'");
}

}  // namespace dcp
