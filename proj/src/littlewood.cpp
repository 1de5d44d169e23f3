#include "nlt/littlewood.hpp"

#include <cmath>

#include "nlt/errors.hpp"
#include "nlt/fft.hpp"
#include "nlt/functionals.hpp"

namespace nlt {

int dyadic_shell_index(double k) {
    if (!(k > 0.0)) throw parameter_error("dyadic_shell_index: need k > 0");
    int j = static_cast<int>(std::ceil(std::log2(k)));
    // guard against log2 rounding at exact powers of two
    while (std::exp2(j - 1) >= k) --j;
    while (std::exp2(j) < k) ++j;
    return j;
}

DyadicBlocks decompose(const Field& f, int K) {
    if (std::exp2(K) > f.grid->max_wavenumber()) {
        throw parameter_error("decompose: 2^K exceeds the largest wavenumber");
    }
    const Spectrum s = forward_transform(f);
    const auto& k = f.grid->wavenumbers();

    double cmax = 0.0;
    for (const auto& c : s.coeffs) cmax = std::max(cmax, std::abs(c));

    std::map<int, Spectrum> shells;
    Spectrum low(f.grid);
    const double low_cut = std::exp2(K - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double ak = std::abs(k[i]);
        // rounding dust goes to the low pass so noise-only shells are not
        // materialized and the reconstruction stays exact
        if (ak <= low_cut || std::abs(s[i]) <= 1e-14 * cmax) {
            low[i] = s[i];
            continue;
        }
        const int j = dyadic_shell_index(ak);
        auto [it, inserted] = shells.try_emplace(j, f.grid);
        it->second[i] = s[i];
    }

    DyadicBlocks out;
    out.low_pass = synthesize(low);
    for (auto& [j, spec] : shells) out.blocks.emplace(j, synthesize(spec));
    return out;
}

BernsteinReport bernstein_check(const DyadicBlocks& blocks, double s, double p, double q) {
    if (!(p >= 1.0) || !(q >= p)) {
        throw parameter_error("bernstein_check: need 1 <= p <= q");
    }
    BernsteinReport report;
    for (const auto& [j, block] : blocks.blocks) {
        const double base = lp_norm(block, p);
        if (base <= 0.0) continue;
        const Field lam = apply_symbol(block, [s](double k) -> std::complex<double> {
            return k == 0.0 ? 0.0 : std::pow(std::abs(k), s);
        });
        BernsteinReport::Shell shell;
        shell.j = j;
        shell.deriv_ratio = lp_norm(lam, p) / (std::pow(2.0, j * s) * base);
        shell.embed_ratio =
            lp_norm(block, q) / (std::pow(2.0, j * (1.0 / p - 1.0 / q)) * base);
        report.max_ratio = std::max({report.max_ratio, shell.deriv_ratio, shell.embed_ratio});
        report.shells.push_back(shell);
    }
    report.bounded = report.max_ratio < 4.0;
    return report;
}

} // namespace nlt
