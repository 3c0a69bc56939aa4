#include "dcp/mcstats.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "dcp/errors.hpp"
#include "dcp/likelihood.hpp"
#include "dcp/rng.hpp"
#include "dcp/synth.hpp"

namespace dcp {

LShape l_shape_statistic(const DirectedGraph& g, const Partition& p) {
    if (p.k != 4) throw Error("L-shape statistic needs a 4-set partition");
    const BlockStructure& s = catalog("DCP4");
    const BlockCounts counts = block_counts(g, p);
    std::array<int, 4> naming{0, 1, 2, 3};
    LShape best;
    bool have = false;
    double best_ll = 0.0;
    do {
        const LikelihoodFit f = evaluate_naming(counts, s, naming);
        if (!have || f.log_lik > best_ll) {
            have = true;
            best_ll = f.log_lik;
            best.naming = naming;
            best.d_in = f.pairs_signal > 0 ? static_cast<double>(f.edges_signal) / f.pairs_signal : 0.0;
            best.d_out = f.pairs_noise > 0 ? static_cast<double>(f.edges_noise) / f.pairs_noise : 0.0;
        }
    } while (std::next_permutation(naming.begin(), naming.end()));
    best.stat = best.d_in - best.d_out;
    return best;
}

DirectedGraph sample_null(const DirectedGraph& g, NullModel null, std::uint64_t seed) {
    if (null == NullModel::Config) return sample_configuration(g, seed);
    const double n = static_cast<double>(g.n());
    const double p = g.n() > 1 ? static_cast<double>(g.m()) / (n * (n - 1.0)) : 0.0;
    return sample_er(g.n(), std::min(p, 1.0), seed);
}

McTestResult monte_carlo_test(const DirectedGraph& g, const Detector& method, const std::string& method_id,
                              NullModel null, const McOptions& opt) {
    if (opt.reps < 0) throw Error("reps must be nonnegative");
    McTestResult r;
    r.null_model = null;
    r.method = method_id;
    r.reps = opt.reps;
    r.seed = opt.seed;
    r.method_seed = opt.method_seed;
    r.observed_stat = l_shape_statistic(g, method(g, opt.method_seed).partition).stat;
    r.null_stats.assign(static_cast<std::size_t>(opt.reps), 0.0);

    std::atomic<int> next{0}, retries{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (int rep; (rep = next.fetch_add(1)) < opt.reps;) {
            {
                std::lock_guard lock(failure_mu);
                if (failure) return;
            }
            for (int attempt = 0;; ++attempt) {
                const std::uint64_t graph_seed = derive_seed(opt.seed, static_cast<std::uint64_t>(rep) + 1, attempt);
                const std::uint64_t run_seed =
                    derive_seed(opt.method_seed, static_cast<std::uint64_t>(rep) + 1, attempt);
                try {
                    const DirectedGraph h = sample_null(g, null, graph_seed);
                    r.null_stats[rep] = l_shape_statistic(h, method(h, run_seed).partition).stat;
                    break;
                } catch (const std::exception&) {
                    if (attempt + 1 >= opt.max_retries) {
                        std::lock_guard lock(failure_mu);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                    ++retries;
                }
            }
        }
    };
    const int nworkers = std::clamp(opt.workers, 1, std::max(1, opt.reps));
    if (nworkers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    r.retries = retries;
    const auto exceed = std::count_if(r.null_stats.begin(), r.null_stats.end(),
                                      [&](double s) { return s >= r.observed_stat; });
    r.p_value = static_cast<double>(exceed + 1) / static_cast<double>(opt.reps + 1);
    return r;
}

}  // namespace dcp
