#pragma once

#include <cstdint>
#include <string>

#include "trispace/graph.hpp"

namespace trispace {

/// Measurements of one Monte Carlo trial.
struct TrialRecord {
    int n = 0;
    double c = 0;  // p = c * sqrt(ln n / n)
    double p = 0;
    std::uint64_t seed = 0;
    long long edges = 0;
    long long triangles = 0;
    bool q = false;  // every edge lies in a triangle
    long long dim_cycle = 0;
    long long dim_triangle = 0;
    long long betti1 = 0;
    double ms = 0;  // wall time; serialized as 0 to keep sweep output reproducible
};

/// p for the (n, c) parameterization, clamped to [0,1].
double threshold_p(int n, double c);

/// Sample G(n,p) from the seed and measure the full record. Rejects n > 2000.
TrialRecord run_trial(int n, double p, std::uint64_t seed);

/// Same with p derived from c.
TrialRecord run_trial_c(int n, double c, std::uint64_t seed);

/// Record for an already-built graph (fixture path); ms covers analysis only.
TrialRecord measure_graph(const Graph& g, double c, double p, std::uint64_t seed);

/// One JSON object per line, fields in the fixed order
/// n,c,p,seed,edges,triangles,q,dim_cycle,dim_triangle,betti1,ms.
/// ms is written as 0 so that repeated runs emit identical bytes.
std::string to_json_line(const TrialRecord& r);

}  // namespace trispace
