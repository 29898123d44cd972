// spectral.hpp — Dirichlet eigenbasis on an interval (0, L).
//
// States are complex waves stored as coefficients against the L²-orthonormal
// sine basis ẽ_j(ξ) = √(2/L) sin(jπξ/L), with eigenvalues λ_j = (jπ/L)² of
// −Δ.  The (H¹₀)*-orthonormal basis is e_j = √λ_j ẽ_j, so all three norms of
// the Gelfand triple V = L² ⊂ (H¹₀)* ⊂ V* are diagonal weight sums:
//
//   ‖x‖²_{L²}     = Σ |a_j|²
//   ‖x‖²_{(H¹₀)*} = Σ |a_j|² / λ_j
//   ‖x‖²_{H¹₀}    = Σ λ_j |a_j|²
//
// The collocation grid is the G interior uniform points of (0, L); the
// discrete sine orthogonality Σ_m sin(jπm/(G+1)) sin(kπm/(G+1)) = (G+1)/2
// makes trapezoid quadrature exact on resolved modes, so synthesis/analysis
// round-trips are identities up to rounding whenever N ≤ G/2.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpms {

using Complex = std::complex<double>;

enum class NormKind { L2, HminusOne, HOne };

class SpectralState;

class SpectralSpace {
public:
    // Throws std::invalid_argument naming the offending field.
    SpectralSpace(double domain_length, std::size_t truncation,
                  std::size_t grid_size)
        : length_(domain_length), modes_(truncation), grid_(grid_size) {
        if (!(domain_length > 0.0))
            throw std::invalid_argument("domain_length must be positive");
        if (truncation == 0)
            throw std::invalid_argument("truncation must be >= 1");
        if (grid_size < 2 * truncation)
            throw std::invalid_argument("grid size must be >= 2*truncation");
        lambda_.resize(modes_);
        for (std::size_t i = 0; i < modes_; ++i) {
            const double j = static_cast<double>(i + 1);
            const double k = j * std::numbers::pi / length_;
            lambda_[i] = k * k;
        }
        // ẽ_j(ξ_m), row-major over modes; ξ_m = (m+1) L/(G+1).
        const double scale = std::sqrt(2.0 / length_);
        basis_.resize(modes_ * grid_);
        for (std::size_t i = 0; i < modes_; ++i)
            for (std::size_t m = 0; m < grid_; ++m) {
                const double arg = static_cast<double>(i + 1) *
                                   std::numbers::pi *
                                   static_cast<double>(m + 1) /
                                   static_cast<double>(grid_ + 1);
                basis_[i * grid_ + m] = scale * std::sin(arg);
            }
    }

    static SpectralSpace with_default_grid(double domain_length,
                                           std::size_t truncation) {
        return SpectralSpace(domain_length, truncation, 8 * truncation);
    }

    double length() const { return length_; }
    std::size_t modes() const { return modes_; }
    std::size_t grid_size() const { return grid_; }

    // λ_j for 1-based mode number j.
    double lambda(std::size_t j) const { return lambda_.at(j - 1); }
    std::span<const double> eigenvalues() const { return lambda_; }

    // Interior node ξ_m, m = 0..G-1.
    double node(std::size_t m) const {
        return length_ * static_cast<double>(m + 1) /
               static_cast<double>(grid_ + 1);
    }
    // Trapezoid weight h = L/(G+1) (endpoint values vanish under Dirichlet).
    double quadrature_weight() const {
        return length_ / static_cast<double>(grid_ + 1);
    }
    // ẽ_j(ξ_m) for 1-based j.
    double basis_value(std::size_t j, std::size_t m) const {
        return basis_[(j - 1) * grid_ + m];
    }

    std::vector<Complex> to_grid(const SpectralState& x) const;
    SpectralState to_coefficients(std::span<const Complex> grid_values) const;

    bool same_as(const SpectralSpace& other) const {
        return length_ == other.length_ && modes_ == other.modes_ &&
               grid_ == other.grid_;
    }

private:
    double length_;
    std::size_t modes_;
    std::size_t grid_;
    std::vector<double> lambda_;
    std::vector<double> basis_;
};

class SpectralState {
public:
    SpectralState(const SpectralSpace* space, std::vector<Complex> coeffs)
        : space_(space), a_(std::move(coeffs)) {
        if (space_ == nullptr)
            throw std::invalid_argument("state requires an owning space");
        if (a_.size() != space_->modes())
            throw std::invalid_argument("coefficient count must equal truncation");
    }

    static SpectralState zero(const SpectralSpace& space) {
        return SpectralState(&space,
                             std::vector<Complex>(space.modes(), Complex{}));
    }
    // Single eigenmode amp·ẽ_j (1-based j).
    static SpectralState mode(const SpectralSpace& space, std::size_t j,
                              Complex amp) {
        if (j == 0 || j > space.modes())
            throw std::invalid_argument("mode number out of range");
        auto x = zero(space);
        x.a_[j - 1] = amp;
        return x;
    }

    const SpectralSpace& space() const { return *space_; }
    std::size_t size() const { return a_.size(); }
    std::span<const Complex> coefficients() const { return a_; }
    Complex& operator[](std::size_t i) { return a_[i]; }
    const Complex& operator[](std::size_t i) const { return a_[i]; }

    SpectralState& operator+=(const SpectralState& rhs) {
        require_same_space(rhs);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
        return *this;
    }
    SpectralState& operator-=(const SpectralState& rhs) {
        require_same_space(rhs);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
        return *this;
    }
    SpectralState& operator*=(Complex s) {
        for (auto& c : a_) c *= s;
        return *this;
    }

    friend SpectralState operator+(SpectralState a, const SpectralState& b) {
        a += b;
        return a;
    }
    friend SpectralState operator-(SpectralState a, const SpectralState& b) {
        a -= b;
        return a;
    }
    friend SpectralState operator*(Complex s, SpectralState a) {
        a *= s;
        return a;
    }

private:
    void require_same_space(const SpectralState& rhs) const {
        if (!space_->same_as(*rhs.space_))
            throw std::logic_error("states live on different spaces");
    }

    const SpectralSpace* space_;
    std::vector<Complex> a_;
};

inline std::vector<Complex> SpectralSpace::to_grid(
    const SpectralState& x) const {
    if (x.size() != modes_)
        throw std::invalid_argument("state size does not match space");
    std::vector<Complex> values(grid_, Complex{});
    for (std::size_t i = 0; i < modes_; ++i) {
        const Complex a = x[i];
        if (a == Complex{}) continue;
        const double* row = &basis_[i * grid_];
        for (std::size_t m = 0; m < grid_; ++m) values[m] += a * row[m];
    }
    return values;
}

inline SpectralState SpectralSpace::to_coefficients(
    std::span<const Complex> grid_values) const {
    if (grid_values.size() != grid_)
        throw std::invalid_argument("grid size does not match space");
    const double h = quadrature_weight();
    std::vector<Complex> a(modes_);
    for (std::size_t i = 0; i < modes_; ++i) {
        const double* row = &basis_[i * grid_];
        Complex acc{};
        for (std::size_t m = 0; m < grid_; ++m) acc += grid_values[m] * row[m];
        a[i] = h * acc;
    }
    return SpectralState(this, std::move(a));
}

// Hermitian L² inner product ⟨x, y⟩ = Σ conj(a_j) b_j.
inline Complex inner_l2(const SpectralState& x, const SpectralState& y) {
    Complex acc{};
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::conj(x[i]) * y[i];
    return acc;
}

// (H¹₀)* inner product ⟨x, y⟩ = Σ conj(a_j) b_j / λ_j.
inline Complex inner_hminus(const SpectralState& x, const SpectralState& y) {
    Complex acc{};
    const auto lambda = x.space().eigenvalues();
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::conj(x[i]) * y[i] / lambda[i];
    return acc;
}

inline double norm(const SpectralState& x, NormKind which) {
    const auto lambda = x.space().eigenvalues();
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double m2 = std::norm(x[i]);
        switch (which) {
            case NormKind::L2: acc += m2; break;
            case NormKind::HminusOne: acc += m2 / lambda[i]; break;
            case NormKind::HOne: acc += m2 * lambda[i]; break;
        }
    }
    return std::sqrt(acc);
}

// Galerkin projection Π_k: identical in the L² and (H¹₀)* geometries.
inline SpectralState project(const SpectralState& x, std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("projection level must be >= 1");
    std::vector<Complex> a(x.coefficients().begin(), x.coefficients().end());
    for (std::size_t i = k; i < a.size(); ++i) a[i] = Complex{};
    return SpectralState(&x.space(), std::move(a));
}

// power +1: Δ (a_j ↦ −λ_j a_j); power −1: its inverse.
inline SpectralState apply_laplacian(const SpectralState& x, int power) {
    if (power != 1 && power != -1)
        throw std::invalid_argument("laplacian power must be +1 or -1");
    const auto lambda = x.space().eigenvalues();
    std::vector<Complex> a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        a[i] = power == 1 ? -lambda[i] * x[i] : -x[i] / lambda[i];
    return SpectralState(&x.space(), std::move(a));
}

// Re-express a state on a target space (same interval, any truncation).
inline SpectralState embed(const SpectralState& x,
                           const SpectralSpace& target) {
    if (x.space().length() != target.length())
        throw std::invalid_argument("embedding requires equal domain lengths");
    std::vector<Complex> a(target.modes(), Complex{});
    const std::size_t n = std::min(x.size(), target.modes());
    for (std::size_t i = 0; i < n; ++i) a[i] = x[i];
    return SpectralState(&target, std::move(a));
}

} // namespace cpms
