// Benchmark of the OpenMP replication kernels against the serial reference
// runner. Results must agree exactly; only the wall time may differ.

#include <cstdio>
#include <omp.h>

#include "seqlof/mc.hpp"

using namespace seqlof;

namespace {

template <typename Run>
double timed(const Run& run) {
    double start = omp_get_wtime();
    run();
    return omp_get_wtime() - start;
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s,
                equal ? "results identical" : "RESULTS DIFFER");
}

} // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());

    {
        McConfig config;
        config.n = 500;
        config.replications = 4000;
        config.seed = 7;
        McReport serial_report;
        McReport parallel_report;
        config.exec = ExecutionPolicy::serial;
        double ts = timed([&] { serial_report = mc_size(config); });
        config.exec = ExecutionPolicy::parallel;
        double tp = timed([&] { parallel_report = mc_size(config); });
        report("mc_size", ts, tp, serial_report.estimate == parallel_report.estimate &&
                                      serial_report.rejections == parallel_report.rejections);
    }

    {
        McConfig config;
        config.n = 1000;
        config.replications = 1500;
        config.seed = 7;
        config.scenario = ScenarioStep{0.5, 1.0, 0.0, true};
        std::vector<double> grid;
        for (int i = 0; i <= 32; ++i) {
            grid.push_back(i / 32.0);
        }
        McReport serial_report;
        McReport parallel_report;
        config.exec = ExecutionPolicy::serial;
        double ts = timed([&] { serial_report = mc_drift(config, grid); });
        config.exec = ExecutionPolicy::parallel;
        double tp = timed([&] { parallel_report = mc_drift(config, grid); });
        bool equal = serial_report.curve.size() == parallel_report.curve.size();
        for (std::size_t i = 0; equal && i < serial_report.curve.size(); ++i) {
            equal = serial_report.curve[i].mean == parallel_report.curve[i].mean &&
                    serial_report.curve[i].std_error == parallel_report.curve[i].std_error;
        }
        report("mc_drift", ts, tp, equal);
    }

    {
        McReport serial_report;
        McReport parallel_report;
        double ts = timed([&] {
            serial_report = mc_brownian_crossing(2000, 20000, 0.05, 7,
                                                 ExecutionPolicy::serial);
        });
        double tp = timed([&] {
            parallel_report = mc_brownian_crossing(2000, 20000, 0.05, 7,
                                                   ExecutionPolicy::parallel);
        });
        report("brownian crossing", ts, tp,
               serial_report.rejections == parallel_report.rejections);
    }

    return 0;
}
