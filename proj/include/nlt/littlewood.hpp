#pragma once

#include <map>
#include <vector>

#include "nlt/field.hpp"

namespace nlt {

/// Shell index j with 2^(j-1) < k <= 2^j for k > 0.
int dyadic_shell_index(double k);

/// Sharp dyadic decomposition f = low_pass + sum_j blocks[j], with
/// low_pass carrying |k| <= 2^(K-1) (including the mean) and block j the
/// shell 2^(j-1) < |k| <= 2^j for j >= K. Empty shells are omitted.
struct DyadicBlocks {
    std::map<int, Field> blocks;
    Field low_pass;
};

/// Requires 2^K <= k_max.
DyadicBlocks decompose(const Field& f, int K);

/// Per-shell Bernstein ratios:
///   deriv_ratio = ||Lambda^s block||_p / (2^{js} ||block||_p)
///   embed_ratio = ||block||_q / (2^{j(1/p-1/q)} ||block||_p)
/// Shells with no spectral content are skipped.
struct BernsteinReport {
    struct Shell {
        int j = 0;
        double deriv_ratio = 0.0;
        double embed_ratio = 0.0;
    };
    std::vector<Shell> shells;
    double max_ratio = 0.0;
    bool bounded = false; // max_ratio < 4
};

BernsteinReport bernstein_check(const DyadicBlocks& blocks, double s, double p, double q);

} // namespace nlt
