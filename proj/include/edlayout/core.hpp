#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace edl {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, CSV, compact layout notation).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A precondition of an operation was not met by its arguments.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Dense square matrix stored row-major.
template <typename T>
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using Matrix = SquareMatrix<double>;

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Seeded random source.
///
/// Draws are built directly on the 64-bit Mersenne Twister output (whose
/// sequence is fixed by the standard) rather than on the standard
/// distributions, whose algorithms differ between library vendors. Equal seeds
/// therefore give equal streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n);

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

  private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for run `index` of a batch started from `base`.
///
/// seed_k = splitmix64(base + k * 0x9E3779B97F4A7C15). Runs of different
/// algorithms started from the same base seed share their per-run seeds.
std::uint64_t run_seed(std::uint64_t base, std::size_t index);

/// Shortest decimal text for `value` with at most `max_decimals` digits after
/// the point ("3.6", "3.273", "12").
std::string format_decimal(double value, int max_decimals);

/// printf("%.*g") text used for CSV and report cells; "inf"/"nan" for
/// non-finite values.
std::string format_general(double value, int significant = 12);

}  // namespace edl
