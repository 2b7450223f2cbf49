#pragma once

// Dense linear algebra over a prime field F_p.
//
// Entries are stored reduced mod p in row-major order, one byte each, so the
// modulus is limited to primes below 256. All elimination uses the first
// nonzero entry of a column as pivot, which keeps every derived basis (and
// therefore every serialized certificate) reproducible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stmod {

bool is_prime(std::uint32_t n);

// Multiplicative inverse of a nonzero residue.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

class FpMatrix {
public:
    // Empty 0x0 matrix over F_2.
    FpMatrix() = default;
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static FpMatrix identity(std::uint32_t p, std::size_t n);
    static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
    // Column vector from residues (reduced mod p).
    static FpMatrix column(std::uint32_t p, const std::vector<std::int64_t>& entries);

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t value);

    std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<std::uint8_t>& data() const { return data_; }

    bool is_zero() const;
    bool operator==(const FpMatrix& other) const = default;

    FpMatrix transpose() const;
    FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    FpMatrix select_columns(std::span<const std::size_t> cols) const;
    FpMatrix select_rows(std::span<const std::size_t> rows) const;
    FpMatrix col(std::size_t c) const;
    // Row-major flattening as a column vector of length rows*cols.
    FpMatrix vec() const;
    // Inverse of vec(): reshape a (rows*cols)x1 column (or column c of a matrix).
    static FpMatrix unvec(const FpMatrix& v, std::size_t col, std::size_t rows, std::size_t cols);
    // Same row-major data viewed with a different shape.
    FpMatrix reshaped(std::size_t rows, std::size_t cols) const;

    static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
    static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
    static FpMatrix hstack(std::span<const FpMatrix> parts, std::uint32_t p, std::size_t rows);
    static FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b);

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix scaled(std::uint32_t c) const;
    FpMatrix& operator+=(const FpMatrix& o);
    // this += c * o
    void add_scaled(const FpMatrix& o, std::uint32_t c);

    std::string to_string() const;

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

struct RrefResult {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

// Some X with a*X == b, or nullopt if any column of b is outside the column space of a.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

// Columns form a basis of the right kernel {x : m*x = 0}; cols(m) - rank(m) of them.
FpMatrix kernel_basis(const FpMatrix& m);

std::optional<FpMatrix> inverse(const FpMatrix& m);

// Independent columns of m (its pivot columns) spanning the column space.
FpMatrix column_basis(const FpMatrix& m);

// L with L*b == I for b of full column rank.
FpMatrix left_inverse(const FpMatrix& b);

// Standard basis vectors completing the columns of `sub` (full column rank, n rows) to a basis.
FpMatrix complement_basis(const FpMatrix& sub);

// Rows spanning the annihilator of the column space of `sub`: q*v == 0 iff v in span(sub).
FpMatrix annihilator(const FpMatrix& sub);

// Basis of the intersection of two column spaces inside the same ambient space.
FpMatrix intersect_spans(const FpMatrix& a, const FpMatrix& b);

bool span_contains(const FpMatrix& span, const FpMatrix& vectors);

}  // namespace stmod
