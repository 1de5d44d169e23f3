#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace nlt {

/// Uniform periodic grid on the cell [-L/2, L/2).
///
/// Nodes are x_m = -L/2 + m*dx with dx = L/N. Spectral data is kept in FFT
/// storage order: slot i holds integer mode j = i for i < N/2 and j = i - N
/// otherwise, so the wavenumbers are k_j = 2*pi*j/L with
/// j in {-N/2, ..., N/2-1}. Slot N/2 is the unpaired Nyquist mode.
class Grid {
public:
    /// N must be a power of two >= 8; L must be positive.
    Grid(std::size_t n_points, double domain_length);

    std::size_t size() const { return n_; }
    double length() const { return length_; }
    double spacing() const { return spacing_; }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& wavenumbers() const { return wavenumbers_; }

    double node(std::size_t i) const { return nodes_[i]; }
    double wavenumber(std::size_t i) const { return wavenumbers_[i]; }

    /// Integer mode index j for storage slot i.
    int mode_index(std::size_t i) const {
        return i < n_ / 2 ? static_cast<int>(i)
                          : static_cast<int>(i) - static_cast<int>(n_);
    }
    /// Storage slot for integer mode j in [-N/2, N/2-1].
    std::size_t storage_index(int j) const {
        return j >= 0 ? static_cast<std::size_t>(j)
                      : static_cast<std::size_t>(j + static_cast<int>(n_));
    }

    std::size_t nyquist_index() const { return n_ / 2; }
    /// Largest wavenumber magnitude, pi*N/L (the Nyquist mode).
    double max_wavenumber() const;

    bool compatible(const Grid& other) const {
        return n_ == other.n_ && length_ == other.length_;
    }

private:
    std::size_t n_;
    double length_;
    double spacing_;
    std::vector<double> nodes_;
    std::vector<double> wavenumbers_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(std::size_t n_points, double domain_length);

} // namespace nlt
