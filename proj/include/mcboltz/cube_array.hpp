#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mcboltz {

/// Dense d-dimensional array with the same extent along every axis.
/// Storage is row-major: the last index varies fastest.
class CubeArray {
public:
    CubeArray() = default;

    CubeArray(int dim, int extent, double fill = 0.0)
        : dim_(dim), extent_(extent) {
        if (dim < 1 || extent < 1) {
            throw std::invalid_argument("CubeArray: dim and extent must be positive");
        }
        std::size_t n = 1;
        for (int l = 0; l < dim; ++l) n *= static_cast<std::size_t>(extent);
        data_.assign(n, fill);
    }

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] int extent() const noexcept { return extent_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }

    [[nodiscard]] double& operator[](std::size_t i) noexcept { return data_[i]; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return data_[i]; }

    [[nodiscard]] std::span<double> values() noexcept { return data_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return data_; }
    [[nodiscard]] std::vector<double>& storage() noexcept { return data_; }
    [[nodiscard]] const std::vector<double>& storage() const noexcept { return data_; }

    [[nodiscard]] std::size_t flat(std::span<const int> idx) const noexcept {
        std::size_t f = 0;
        for (int l = 0; l < dim_; ++l) f = f * static_cast<std::size_t>(extent_) + static_cast<std::size_t>(idx[l]);
        return f;
    }

    void unflat(std::size_t f, std::span<int> idx) const noexcept {
        for (int l = dim_ - 1; l >= 0; --l) {
            idx[l] = static_cast<int>(f % static_cast<std::size_t>(extent_));
            f /= static_cast<std::size_t>(extent_);
        }
    }

    CubeArray& operator+=(const CubeArray& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    CubeArray& operator-=(const CubeArray& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    CubeArray& operator*=(double s) noexcept {
        for (double& x : data_) x *= s;
        return *this;
    }

    /// this += s * o
    void axpy(double s, const CubeArray& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
    }

    [[nodiscard]] bool same_shape(const CubeArray& o) const noexcept {
        return dim_ == o.dim_ && extent_ == o.extent_;
    }

private:
    void check_same(const CubeArray& o) const {
        if (!same_shape(o)) throw std::invalid_argument("CubeArray: shape mismatch");
    }

    int dim_ = 0;
    int extent_ = 0;
    std::vector<double> data_;
};

inline CubeArray operator-(CubeArray a, const CubeArray& b) { return a -= b; }
inline CubeArray operator+(CubeArray a, const CubeArray& b) { return a += b; }
inline CubeArray operator*(double s, CubeArray a) { return a *= s; }

} // namespace mcboltz
