#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trispace/graph.hpp"

namespace trispace {

/// A probability bound plus the named intermediate quantities it was
/// assembled from. `value` is clamped to [0,1]; raw terms are not.
struct BoundReport {
    double value = 1.0;
    std::map<std::string, double> terms;
};

/// phi(x) = (1+x)log(1+x) - x for x >= -1, with phi(-1) = 1 by continuity.
double phi(double x);

/// P(xi >= mu + lambda) <= exp[-lambda^2 / (2(mu + lambda/3))].
BoundReport chernoff_upper(double mu, double lambda);

/// P(xi <= mu - lambda) <= exp[-mu phi(-lambda/mu)] <= exp[-lambda^2/(2mu)].
/// Requires 0 <= lambda <= mu; value is the phi form, terms carry both.
BoundReport chernoff_lower(double mu, double lambda);

/// Lipschitz function of m independent Ber(p) variables:
/// P(|X - EX| > t) <= exp[-t^2/(4mp)], valid for 0 <= t <= 2mp.
BoundReport azuma_bound(double m, double p, double t);

/// Expected number of edges of G(n,p) lying in no triangle:
/// mu(p) = C(n,2) p (1-p^2)^(n-2).
double mu_no_triangle(int n, double p);

/// Second-moment bound on P(X = 0) for X = number of edges in no triangle:
/// pairwise-term upper bounds, pair-type counts, and the assembled upper
/// bound on Var(X)/(EX)^2 (term "var_ratio"; +inf when EX = 0).
BoundReport second_moment_terms(int n, double p);

/// Triangle counts of K_n by |F ∩ T|, with the exact-identity flags.
struct GoodmanCounts {
    int n = 0;
    long long f = 0;                     // |F|
    long long t0 = 0, t1 = 0, t2 = 0, t3 = 0;
    bool identity_holds = false;         // |F|(n-2) == t1 + 2 t2 + 3 t3
    bool t1t2_bound_holds = false;       // t1 + t2 < n^3 / 8

    long long triple_total() const { return t0 + t1 + t2 + t3; }
};

GoodmanCounts goodman(int n, const std::vector<VertexPair>& f);

/// Inequality-chain verifier for dense, far-from-bipartite F ⊆ K_n.
/// Hypothesis: |F| > (1-delta) n^2/4 and min over cuts |F \ Π| > eta n^2.
/// Chain (o(1) terms set to `slack`, default 0):
///   t1 + t3 >= eta n^3 / 3,
///   t1 - 3 t3 < (delta + slack) n^3,
///   tau(F) = t3 > (1/12)(eta - 3 delta - slack) n^3.
struct Ml3Report {
    bool hypothesis_met = false;
    bool size_ok = false;                // |F| > (1-delta) n^2/4
    long long min_cut_deficiency = 0;    // min over cuts of |F \ Π|
    GoodmanCounts counts;
    double eta = 0, delta = 0, slack = 0;
    bool chain_t1t3 = false;
    bool chain_t1_minus_3t3 = false;
    bool conclusion = false;
    /// conclusion is forced whenever both chain inequalities hold
    bool implication_consistent = false;
};

/// The cut minimization is exhaustive (n <= 24) unless the caller supplies
/// the deficiency.
Ml3Report ml3_check(int n, const std::vector<VertexPair>& f, double delta, double eta,
                    std::optional<long long> supplied_deficiency = std::nullopt,
                    double slack = 0.0);

/// Janson bound on P(no triangle of a fixed m-triangle family appears in
/// G(n,p)): mu = m p^3, Delta-bar bounded by 3 m n p^5 + mu, value
/// exp[-mu^2/(2 Delta-bar)]. Enlarging Delta-bar only weakens the bound.
BoundReport janson_triangle_bound(long long m, int n, double p);

}  // namespace trispace
