#pragma once

#include <complex>
#include <functional>

#include "nlt/field.hpp"

namespace nlt {

/// Discrete Fourier analysis of a real field:
///   c_j = (1/N) sum_m f(x_m) exp(-i k_j x_m),
/// so that f(x) = sum_j c_j exp(i k_j x) interpolates the samples.
/// Throws invalid_field_error on NaN/Inf input.
Spectrum forward_transform(const Field& f);

/// Synthesis back to node values. The input must be Hermitian-symmetric
/// (c_{-j} = conj(c_j), Nyquist real) to within 1e-12 of the largest
/// coefficient magnitude; otherwise throws asymmetric_spectrum_error.
Field inverse_transform(const Spectrum& s);

/// Synthesis without the symmetry gate, for internal pipelines whose spectra
/// are symmetric by construction (real input, Hermitian multipliers). The
/// relative gate would misfire on spectra holding nothing but rounding dust,
/// e.g. an operator output that zeroes every significant mode.
Field synthesize(const Spectrum& s);

/// Direct O(N^2) summation of the same analysis sum, kept free of any FFT
/// machinery so it can serve as an independent cross-check. Guarded to
/// N <= 4096 (oracle_size_error).
Spectrum dft_reference(const Field& f);

/// Multiply each coefficient by symbol(k_j).
Spectrum apply_multiplier(const Spectrum& s,
                          const std::function<std::complex<double>(double)>& symbol);

/// 2/3-rule truncation: zero all modes with |j| > N/3. Idempotent.
Spectrum dealias(const Spectrum& s);

/// forward -> symbol -> inverse convenience pipeline.
Field apply_symbol(const Field& f,
                   const std::function<std::complex<double>(double)>& symbol);

/// Pointwise product followed by 2/3 dealiasing of the result.
Field dealiased_product(const Field& a, const Field& b);

} // namespace nlt
