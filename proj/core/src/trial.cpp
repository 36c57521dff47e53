#include "trispace/trial.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "trispace/edge_spaces.hpp"
#include "trispace/sample.hpp"

namespace trispace {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

void append_double(std::string& out, double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);  // shortest round-trip
    out.append(buf, res.ptr);
}

}  // namespace

double threshold_p(int n, double c) {
    if (n < 2) return 0.0;
    const double p = c * std::sqrt(std::log(static_cast<double>(n)) / n);
    return std::min(1.0, std::max(0.0, p));
}

TrialRecord measure_graph(const Graph& g, double c, double p, std::uint64_t seed) {
    const auto start = Clock::now();
    TrialRecord r;
    r.n = g.vertex_count();
    r.c = c;
    r.p = p;
    r.seed = seed;
    r.edges = g.edge_count();

    const TriangleSet tri = triangles(g);
    r.triangles = static_cast<long long>(tri.count());
    r.q = true;
    for (int cnt : tri.per_edge)
        if (cnt == 0) {
            r.q = false;
            break;
        }

    const int dim_c = cycle_space_dim(g);
    const int dim_t = triangle_space_dim(g, tri, dim_c);
    r.dim_cycle = dim_c;
    r.dim_triangle = dim_t;
    r.betti1 = dim_c - dim_t;
    r.ms = ms_between(start, Clock::now());
    return r;
}

TrialRecord run_trial(int n, double p, std::uint64_t seed) {
    if (n > 2000) throw std::invalid_argument("run_trial: resource guard, n must be <= 2000");
    const double denom = n >= 2 ? std::sqrt(std::log(static_cast<double>(n)) / n) : 0.0;
    const double c = denom > 0 ? p / denom : 0.0;
    const auto start = Clock::now();
    const Graph g = sample_gnp(n, p, seed);
    TrialRecord r = measure_graph(g, c, p, seed);
    r.ms = ms_between(start, Clock::now());
    return r;
}

TrialRecord run_trial_c(int n, double c, std::uint64_t seed) {
    if (n > 2000) throw std::invalid_argument("run_trial: resource guard, n must be <= 2000");
    const double p = threshold_p(n, c);
    const auto start = Clock::now();
    const Graph g = sample_gnp(n, p, seed);
    TrialRecord r = measure_graph(g, c, p, seed);
    r.c = c;
    r.ms = ms_between(start, Clock::now());
    return r;
}

std::string to_json_line(const TrialRecord& r) {
    std::string s;
    s.reserve(160);
    s += "{\"n\":";
    s += std::to_string(r.n);
    s += ",\"c\":";
    append_double(s, r.c);
    s += ",\"p\":";
    append_double(s, r.p);
    s += ",\"seed\":";
    s += std::to_string(r.seed);
    s += ",\"edges\":";
    s += std::to_string(r.edges);
    s += ",\"triangles\":";
    s += std::to_string(r.triangles);
    s += ",\"q\":";
    s += r.q ? "true" : "false";
    s += ",\"dim_cycle\":";
    s += std::to_string(r.dim_cycle);
    s += ",\"dim_triangle\":";
    s += std::to_string(r.dim_triangle);
    s += ",\"betti1\":";
    s += std::to_string(r.betti1);
    s += ",\"ms\":0}";
    return s;
}

}  // namespace trispace
