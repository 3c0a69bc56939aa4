#include "dcp/benchmark.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "dcp/metrics.hpp"
#include "dcp/rng.hpp"

namespace dcp {

Summary summarize(const std::vector<double>& x) {
    Summary s;
    if (x.empty()) return s;
    double sum = 0.0;
    for (double v : x) sum += v;
    s.mean = sum / static_cast<double>(x.size());
    if (x.size() > 1) {
        double ss = 0.0;
        for (double v : x) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(x.size() - 1));
    }
    return s;
}

std::vector<std::vector<SampleScore>> score_samples(const std::vector<BenchmarkSample>& samples,
                                                    const BenchmarkOptions& opt) {
    if (opt.methods.empty()) throw Error("benchmark needs at least one method");
    std::vector<Detector> detectors;
    for (const auto& id : opt.methods) detectors.push_back(make_detector(id, opt.overrides));

    std::vector<std::vector<SampleScore>> out(samples.size(), std::vector<SampleScore>(opt.methods.size()));
    std::vector<std::uint8_t> finished(samples.size(), 0);
    std::atomic<std::size_t> next{0}, done{0};
    std::mutex mu;
    std::size_t fail_index = samples.size();
    std::string fail_what, fail_method;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < samples.size();) {
            {
                std::lock_guard lock(mu);
                if (fail_index < i) return;
            }
            const BenchmarkSample& s = samples[i];
            std::size_t mi = 0;
            try {
                const PlantedGraph pg = generate_sample(s);
                for (; mi < detectors.size(); ++mi) {
                    const DetectionResult r =
                        detectors[mi](pg.graph, derive_seed(s.seed, method_key(opt.methods[mi])));
                    out[i][mi] = {ari(r.partition, pg.planted), nmi(r.partition, pg.planted),
                                  voi(r.partition, pg.planted)};
                }
            } catch (const std::exception& e) {
                std::lock_guard lock(mu);
                if (i < fail_index) {
                    fail_index = i;
                    fail_what = e.what();
                    fail_method = mi < opt.methods.size() ? opt.methods[mi] : "";
                }
                return;
            }
            finished[i] = 1;
            const std::size_t d = ++done;
            if (opt.progress) opt.progress(d, samples.size());
        }
    };
    const int nworkers = std::max(1, std::min<int>(opt.workers, static_cast<int>(std::max<std::size_t>(1, samples.size()))));
    if (nworkers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (fail_index < samples.size()) {
        std::size_t completed = 0;
        while (completed < samples.size() && finished[completed]) ++completed;
        throw BenchmarkFailure("method '" + fail_method + "' failed on grid point " +
                                   std::to_string(samples[fail_index].point.index) + " replicate " +
                                   std::to_string(samples[fail_index].replicate) + ": " + fail_what,
                               completed, samples[fail_index], fail_method);
    }
    return out;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const BenchmarkOptions& opt) {
    const std::vector<BenchmarkSample> samples = benchmark_grid(spec);
    const auto scores = score_samples(samples, opt);

    std::vector<BenchmarkRow> rows;
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j].point.index == samples[i].point.index) ++j;
        for (std::size_t mi = 0; mi < opt.methods.size(); ++mi) {
            std::vector<double> a, n, v;
            for (std::size_t s = i; s < j; ++s) {
                a.push_back(scores[s][mi].ari);
                n.push_back(scores[s][mi].nmi);
                v.push_back(scores[s][mi].voi);
            }
            rows.push_back({samples[i].point, opt.methods[mi], j - i, summarize(a), summarize(n), summarize(v)});
        }
        i = j;
    }
    return rows;
}

}  // namespace dcp
