#include "nlt/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "nlt/errors.hpp"

namespace nlt {

namespace {

// One FFTW plan pair per transform size. Plans are created under a lock
// (the FFTW planner is not thread-safe) with FFTW_UNALIGNED so they can be
// executed on arbitrary caller buffers via the new-array interface, which
// is safe to call concurrently.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    struct Plans {
        fftw_plan forward = nullptr;
        fftw_plan backward = nullptr;
    };

    Plans get(std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;
        std::vector<fftw_complex> buf(n);
        Plans p;
        p.forward = fftw_plan_dft_1d(static_cast<int>(n), buf.data(), buf.data(),
                                     FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.backward = fftw_plan_dft_1d(static_cast<int>(n), buf.data(), buf.data(),
                                      FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(n, p);
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::size_t, Plans> plans_;
};

inline fftw_complex* as_fftw(std::vector<std::complex<double>>& v) {
    return reinterpret_cast<fftw_complex*>(v.data());
}

// The grid starts at x_0 = -L/2, so the index-space DFT picks up a phase
// exp(-i k_j x_0) = (-1)^j relative to the node-space coefficients. For even
// N this equals (-1)^i in storage order.
inline double centre_phase(std::size_t i) { return (i % 2 == 0) ? 1.0 : -1.0; }

} // namespace

Spectrum forward_transform(const Field& f) {
    if (!f.grid) throw parameter_error("forward_transform: field has no grid");
    if (!all_finite(f)) throw invalid_field_error("forward_transform: non-finite field values");
    const std::size_t n = f.size();
    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = f[i];
    fftw_execute_dft(PlanCache::instance().get(n).forward, as_fftw(buf), as_fftw(buf));
    Spectrum s(f.grid);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = buf[i] * (centre_phase(i) * inv_n);
    return s;
}

Field synthesize(const Spectrum& s) {
    if (!s.grid) throw parameter_error("synthesize: spectrum has no grid");
    const std::size_t n = s.size();
    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = s[i] * centre_phase(i);
    fftw_execute_dft(PlanCache::instance().get(n).backward, as_fftw(buf), as_fftw(buf));
    Field f(s.grid);
    for (std::size_t i = 0; i < n; ++i) f[i] = buf[i].real();
    return f;
}

Field inverse_transform(const Spectrum& s) {
    if (!s.grid) throw parameter_error("inverse_transform: spectrum has no grid");
    if (!all_finite(s)) throw invalid_field_error("inverse_transform: non-finite coefficients");
    const std::size_t n = s.size();

    double scale = 0.0;
    for (const auto& c : s.coeffs) scale = std::max(scale, std::abs(c));
    const double tol = 1e-12 * std::max(scale, 1e-300);
    double asym = std::abs(s[0].imag());
    asym = std::max(asym, std::abs(s[n / 2].imag()));
    for (std::size_t i = 1; i < n / 2; ++i) {
        asym = std::max(asym, std::abs(s[i] - std::conj(s[n - i])));
    }
    if (asym > tol) {
        throw asymmetric_spectrum_error(
            "inverse_transform: Hermitian symmetry violated (defect " +
            std::to_string(asym) + ", tolerance " + std::to_string(tol) + ")");
    }
    return synthesize(s);
}

Spectrum dft_reference(const Field& f) {
    if (!f.grid) throw parameter_error("dft_reference: field has no grid");
    const std::size_t n = f.size();
    if (n > 4096) {
        throw oracle_size_error("dft_reference: N = " + std::to_string(n) +
                                " exceeds the 4096 oracle guard");
    }
    if (!all_finite(f)) throw invalid_field_error("dft_reference: non-finite field values");
    Spectrum s(f.grid);
    const auto& x = f.grid->nodes();
    const auto& k = f.grid->wavenumbers();
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const double phase = -k[j] * x[m];
            acc += f[m] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        s[j] = acc / static_cast<double>(n);
    }
    return s;
}

Spectrum apply_multiplier(const Spectrum& s,
                          const std::function<std::complex<double>(double)>& symbol) {
    Spectrum out(s.grid);
    const auto& k = s.grid->wavenumbers();
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = symbol(k[i]) * s[i];
    return out;
}

Spectrum dealias(const Spectrum& s) {
    Spectrum out = s;
    const int n = static_cast<int>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int j = s.grid->mode_index(i);
        if (3 * std::abs(j) > n) out[i] = 0.0;
    }
    return out;
}

Field apply_symbol(const Field& f,
                   const std::function<std::complex<double>(double)>& symbol) {
    return synthesize(apply_multiplier(forward_transform(f), symbol));
}

Field dealiased_product(const Field& a, const Field& b) {
    return synthesize(dealias(forward_transform(multiply(a, b))));
}

} // namespace nlt
