#include "stmod/fflin.hpp"

#include "stmod/error.hpp"

#include <algorithm>
#include <tuple>
#include <sstream>

namespace stmod {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    a %= p;
    if (a == 0)
        throw InternalError("inverse_mod: zero has no inverse");
    // Extended Euclid on small integers.
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

namespace {

std::uint8_t reduce(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint8_t>(r);
}

void check_same_p(const FpMatrix& a, const FpMatrix& b, const char* op)
{
    if (a.p() != b.p())
        throw InputError(std::string(op) + ": modulus mismatch (" + std::to_string(a.p()) + " vs " +
                         std::to_string(b.p()) + ")");
}

// dst[j] -= f * src[j] for j in [from, n)
void sub_scaled_row(std::uint8_t* dst, const std::uint8_t* src, std::uint32_t f, std::size_t from, std::size_t n,
                    std::uint32_t p)
{
    if (p == 2) {
        for (std::size_t j = from; j < n; ++j)
            dst[j] ^= src[j];
        return;
    }
    std::uint8_t tbl[256];
    const std::uint32_t g = p - f;
    for (std::uint32_t x = 0; x < p; ++x)
        tbl[x] = static_cast<std::uint8_t>((g * x) % p);
    for (std::size_t j = from; j < n; ++j) {
        unsigned s = static_cast<unsigned>(dst[j]) + tbl[src[j]];
        dst[j] = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
}

void scale_row(std::uint8_t* row, std::uint32_t f, std::size_t from, std::size_t n, std::uint32_t p)
{
    if (f == 1)
        return;
    for (std::size_t j = from; j < n; ++j)
        row[j] = static_cast<std::uint8_t>((row[j] * f) % p);
}

// In-place reduced row echelon form. Pivots are searched only in the first
// `pivot_limit` columns; the remaining columns are carried along.
std::vector<std::size_t> eliminate(std::vector<std::uint8_t>& a, std::size_t rows, std::size_t cols,
                                   std::size_t pivot_limit, std::uint32_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0)
            ++pr;
        if (pr == rows)
            continue;
        if (pr != r)
            std::swap_ranges(a.begin() + pr * cols, a.begin() + (pr + 1) * cols, a.begin() + r * cols);
        std::uint8_t* prow = a.data() + r * cols;
        scale_row(prow, inverse_mod(prow[c], p), c, cols, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            std::uint8_t* irow = a.data() + i * cols;
            if (irow[c] != 0)
                sub_scaled_row(irow, prow, irow[c], c, cols, p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols)
{
    if (!is_prime(p) || p > 255)
        throw InputError("FpMatrix: modulus " + std::to_string(p) + " is not a prime below 256");
    data_.assign(rows * cols, 0);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n)
{
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(p, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw InputError("FpMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < nc; ++c)
            m.data_[r * nc + c] = reduce(rows[r][c], p);
    }
    return m;
}

FpMatrix FpMatrix::column(std::uint32_t p, const std::vector<std::int64_t>& entries)
{
    FpMatrix m(p, entries.size(), 1);
    for (std::size_t r = 0; r < entries.size(); ++r)
        m.data_[r] = reduce(entries[r], p);
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value)
{
    data_[r * cols_ + c] = reduce(value, p_);
}

bool FpMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    FpMatrix b(p_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        std::copy_n(data_.begin() + (r0 + r) * cols_ + c0, nc, b.data_.begin() + r * nc);
    return b;
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> cols) const
{
    FpMatrix b(p_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            b.data_[r * cols.size() + j] = data_[r * cols_ + cols[j]];
    return b;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> rows) const
{
    FpMatrix b(p_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy_n(data_.begin() + rows[i] * cols_, cols_, b.data_.begin() + i * cols_);
    return b;
}

FpMatrix FpMatrix::col(std::size_t c) const
{
    return block(0, c, rows_, 1);
}

FpMatrix FpMatrix::vec() const
{
    FpMatrix v(p_, rows_ * cols_, 1);
    v.data_ = data_;
    return v;
}

FpMatrix FpMatrix::unvec(const FpMatrix& v, std::size_t col, std::size_t rows, std::size_t cols)
{
    if (v.rows() != rows * cols)
        throw InternalError("FpMatrix::unvec: size mismatch");
    FpMatrix m(v.p(), rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i)
        m.data_[i] = v(i, col);
    return m;
}

FpMatrix FpMatrix::reshaped(std::size_t rows, std::size_t cols) const
{
    if (rows * cols != data_.size())
        throw InternalError("FpMatrix::reshaped: size mismatch");
    FpMatrix m(p_, rows, cols);
    m.data_ = data_;
    return m;
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b)
{
    check_same_p(a, b, "hstack");
    if (a.rows_ != b.rows_)
        throw InternalError("hstack: row count mismatch");
    FpMatrix m(a.p_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::copy_n(a.data_.begin() + r * a.cols_, a.cols_, m.data_.begin() + r * m.cols_);
        std::copy_n(b.data_.begin() + r * b.cols_, b.cols_, m.data_.begin() + r * m.cols_ + a.cols_);
    }
    return m;
}

FpMatrix FpMatrix::hstack(std::span<const FpMatrix> parts, std::uint32_t p, std::size_t rows)
{
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (part.rows_ != rows || part.p_ != p)
            throw InternalError("hstack: incompatible part");
        total += part.cols_;
    }
    FpMatrix m(p, rows, total);
    std::size_t offset = 0;
    for (const auto& part : parts) {
        for (std::size_t r = 0; r < rows; ++r)
            std::copy_n(part.data_.begin() + r * part.cols_, part.cols_, m.data_.begin() + r * total + offset);
        offset += part.cols_;
    }
    return m;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b)
{
    check_same_p(a, b, "vstack");
    if (a.cols_ != b.cols_)
        throw InternalError("vstack: column count mismatch");
    FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + a.data_.size());
    return m;
}

FpMatrix FpMatrix::block_diagonal(const FpMatrix& a, const FpMatrix& b)
{
    check_same_p(a, b, "block_diagonal");
    FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        std::copy_n(a.data_.begin() + r * a.cols_, a.cols_, m.data_.begin() + r * m.cols_);
    for (std::size_t r = 0; r < b.rows_; ++r)
        std::copy_n(b.data_.begin() + r * b.cols_, b.cols_, m.data_.begin() + (a.rows_ + r) * m.cols_ + a.cols_);
    return m;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const
{
    FpMatrix m = *this;
    m += o;
    return m;
}

FpMatrix& FpMatrix::operator+=(const FpMatrix& o)
{
    add_scaled(o, 1);
    return *this;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const
{
    FpMatrix m = *this;
    m.add_scaled(o, p_ - 1);
    return m;
}

void FpMatrix::add_scaled(const FpMatrix& o, std::uint32_t c)
{
    check_same_p(*this, o, "add");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InternalError("add: shape mismatch");
    c %= p_;
    if (c == 0)
        return;
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] = static_cast<std::uint8_t>((data_[i] + c * o.data_[i]) % p_);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const
{
    check_same_p(*this, o, "multiply");
    if (cols_ != o.rows_)
        throw InternalError("multiply: shape mismatch " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    FpMatrix m(p_, rows_, o.cols_);
    const std::size_t n = o.cols_;
    if (p_ == 2) {
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint8_t* out = m.data_.data() + i * n;
            for (std::size_t k = 0; k < cols_; ++k) {
                if (data_[i * cols_ + k] == 0)
                    continue;
                const std::uint8_t* src = o.data_.data() + k * n;
                for (std::size_t j = 0; j < n; ++j)
                    out[j] ^= src[j];
            }
        }
        return m;
    }
    std::vector<std::uint32_t> acc(n);
    constexpr std::size_t flush_every = 60000;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0u);
        std::size_t pending = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint32_t a = data_[i * cols_ + k];
            if (a == 0)
                continue;
            const std::uint8_t* src = o.data_.data() + k * n;
            for (std::size_t j = 0; j < n; ++j)
                acc[j] += a * src[j];
            if (++pending == flush_every) {
                for (auto& v : acc)
                    v %= p_;
                pending = 0;
            }
        }
        std::uint8_t* out = m.data_.data() + i * n;
        for (std::size_t j = 0; j < n; ++j)
            out[j] = static_cast<std::uint8_t>(acc[j] % p_);
    }
    return m;
}

FpMatrix FpMatrix::scaled(std::uint32_t c) const
{
    FpMatrix m = *this;
    c %= p_;
    for (auto& v : m.data_)
        v = static_cast<std::uint8_t>((v * c) % p_);
    return m;
}

std::string FpMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? "," : "") << int(data_[r * cols_ + c]);
        os << "]";
    }
    os << "]";
    return os.str();
}

RrefResult rref(const FpMatrix& m)
{
    RrefResult res;
    res.reduced = m;
    std::vector<std::uint8_t> buf = m.data();
    res.pivots = eliminate(buf, m.rows(), m.cols(), m.cols(), m.p());
    res.rank = res.pivots.size();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            res.reduced.set(r, c, buf[r * m.cols() + c]);
    return res;
}

std::size_t rank(const FpMatrix& m)
{
    std::vector<std::uint8_t> buf = m.data();
    return eliminate(buf, m.rows(), m.cols(), m.cols(), m.p()).size();
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b)
{
    check_same_p(a, b, "solve");
    if (a.rows() != b.rows())
        throw InternalError("solve: row count mismatch");
    const std::size_t na = a.cols(), nb = b.cols(), cols = na + nb;
    std::vector<std::uint8_t> buf(a.rows() * cols);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy_n(a.data().begin() + r * na, na, buf.begin() + r * cols);
        std::copy_n(b.data().begin() + r * nb, nb, buf.begin() + r * cols + na);
    }
    auto pivots = eliminate(buf, a.rows(), cols, na, a.p());
    for (std::size_t r = pivots.size(); r < a.rows(); ++r)
        for (std::size_t j = 0; j < nb; ++j)
            if (buf[r * cols + na + j] != 0)
                return std::nullopt;
    FpMatrix x(a.p(), na, nb);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j)
            x.set(pivots[i], j, buf[i * cols + na + j]);
    return x;
}

FpMatrix kernel_basis(const FpMatrix& m)
{
    std::vector<std::uint8_t> buf = m.data();
    const std::size_t n = m.cols();
    auto pivots = eliminate(buf, m.rows(), n, n, m.p());
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    FpMatrix k(m.p(), n, n - pivots.size());
    std::size_t j = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        k.set(f, j, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k.set(pivots[i], j, -static_cast<std::int64_t>(buf[i * n + f]));
        ++j;
    }
    return k;
}

std::optional<FpMatrix> inverse(const FpMatrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    if (rank(m) != m.rows())
        return std::nullopt;
    return solve(m, FpMatrix::identity(m.p(), m.rows()));
}

FpMatrix column_basis(const FpMatrix& m)
{
    auto pivots = rref(m).pivots;
    return m.select_columns(pivots);
}

FpMatrix left_inverse(const FpMatrix& b)
{
    const std::size_t k = b.cols();
    auto rows = rref(b.transpose()).pivots;
    if (rows.size() != k)
        throw InternalError("left_inverse: matrix does not have full column rank");
    auto square_inv = inverse(b.select_rows(rows));
    if (!square_inv)
        throw InternalError("left_inverse: selected rows not invertible");
    FpMatrix l(b.p(), k, b.rows());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            l.set(i, rows[j], (*square_inv)(i, j));
    return l;
}

FpMatrix complement_basis(const FpMatrix& sub)
{
    const std::size_t n = sub.rows(), k = sub.cols();
    auto pivots = rref(FpMatrix::hstack(sub, FpMatrix::identity(sub.p(), n))).pivots;
    std::vector<std::size_t> extra;
    for (auto c : pivots) {
        if (c >= k)
            extra.push_back(c - k);
    }
    return FpMatrix::identity(sub.p(), n).select_columns(extra);
}

FpMatrix annihilator(const FpMatrix& sub)
{
    return kernel_basis(sub.transpose()).transpose();
}

FpMatrix intersect_spans(const FpMatrix& a, const FpMatrix& b)
{
    if (a.cols() == 0 || b.cols() == 0)
        return FpMatrix(a.p(), a.rows(), 0);
    auto k = kernel_basis(FpMatrix::hstack(a, b.scaled(a.p() - 1)));
    auto coeffs = k.block(0, 0, a.cols(), k.cols());
    return column_basis(a * coeffs);
}

bool span_contains(const FpMatrix& span, const FpMatrix& vectors)
{
    if (vectors.cols() == 0)
        return true;
    return solve(span, vectors).has_value();
}

}  // namespace stmod
