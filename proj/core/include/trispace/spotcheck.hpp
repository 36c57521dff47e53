#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trispace/graph.hpp"

namespace trispace {

/// Worst relative deviations of a known-(n,p) graph from its concentration
/// predictions. Report-only; callers apply their own tolerance.
struct SpotcheckReport {
    int n = 0;
    double p = 0;
    double tol = 0;

    double degree_dev = 0;      // max_v |d(v)/((n-1)p) - 1|
    double codegree_excess = 0; // max(0, max_{x,y} d(x,y)/(4 n p^2) - 1)
    double nabla_dev = 0;       // worst |∇(S,T)| / (|S||T|p) - 1 over samples
    double zeta_dev = 0;        // worst ζ(Y,Z) / ((|Y||Z|-|Y∩Z|)p) - 1
    int nabla_samples = 0;
    int zeta_samples = 0;
    std::vector<std::string> notes;  // skipped/degenerate checks

    double worst() const;
    bool within(double tolerance) const { return worst() <= tolerance; }
};

/// Degree, codegree, bipartite edge count, and zeta checks against exact
/// means. Random (S,T) and (Y,Z) sets are drawn from the seed; set sizes
/// follow the concentration statements' thresholds (S,T of size at least
/// ~2 log(n)/p; Y,Z with |Y||Z| > 8 tol^-2 n / p), and checks whose
/// thresholds cannot be met at this (n,p,tol) are skipped with a note.
SpotcheckReport concentration_spotcheck(const Graph& g, double p, int samples,
                                        std::uint64_t seed, double tol = 0.25);

}  // namespace trispace
