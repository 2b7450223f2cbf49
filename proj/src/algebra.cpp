#include "stmod/algebra.hpp"

#include "stmod/error.hpp"

#include <algorithm>

namespace stmod {

AlgebraElement::AlgebraElement(GroupPtr group, std::vector<std::uint8_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != group_->order())
        throw InputError("algebra element: expected " + std::to_string(group_->order()) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
    for (auto& c : coeffs_)
        c = static_cast<std::uint8_t>(c % group_->p());
}

AlgebraElement AlgebraElement::zero(const GroupPtr& g)
{
    return {g, std::vector<std::uint8_t>(g->order(), 0)};
}

AlgebraElement AlgebraElement::one(const GroupPtr& g)
{
    return basis(g, 0);
}

AlgebraElement AlgebraElement::basis(const GroupPtr& g, std::size_t element)
{
    auto e = zero(g);
    e.coeffs_.at(element) = 1;
    return e;
}

AlgebraElement AlgebraElement::minus_one(const GroupPtr& g, std::size_t element)
{
    return basis(g, element) - one(g);
}

AlgebraElement AlgebraElement::from_sparse(const GroupPtr& g, const std::map<std::size_t, std::int64_t>& terms)
{
    auto e = zero(g);
    const auto p = static_cast<std::int64_t>(g->p());
    for (auto [elem, c] : terms) {
        if (elem >= g->order())
            throw InputError("algebra element: index " + std::to_string(elem) + " is not an element of " + g->name());
        e.coeffs_[elem] = static_cast<std::uint8_t>((((e.coeffs_[elem] + c) % p) + p) % p);
    }
    return e;
}

std::uint32_t AlgebraElement::augmentation() const
{
    std::uint32_t s = 0;
    for (auto c : coeffs_)
        s += c;
    return s % p();
}

AlgebraElement AlgebraElement::bar() const
{
    auto e = zero(group_);
    for (std::size_t g = 0; g < coeffs_.size(); ++g)
        e.coeffs_[group_->inv(g)] = coeffs_[g];
    return e;
}

std::map<std::size_t, std::uint32_t> AlgebraElement::sparse() const
{
    std::map<std::size_t, std::uint32_t> out;
    for (std::size_t g = 0; g < coeffs_.size(); ++g)
        if (coeffs_[g])
            out[g] = coeffs_[g];
    return out;
}

FpMatrix AlgebraElement::as_column() const
{
    FpMatrix v(p(), coeffs_.size(), 1);
    for (std::size_t g = 0; g < coeffs_.size(); ++g)
        v.set(g, 0, coeffs_[g]);
    return v;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const
{
    if (group_ != o.group_)
        throw InputError("algebra element: group mismatch");
    auto e = *this;
    for (std::size_t g = 0; g < coeffs_.size(); ++g)
        e.coeffs_[g] = static_cast<std::uint8_t>((coeffs_[g] + o.coeffs_[g]) % p());
    return e;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const
{
    return *this + o.scaled(p() - 1);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const
{
    return multiply(*this, o);
}

AlgebraElement AlgebraElement::scaled(std::uint32_t c) const
{
    auto e = *this;
    for (auto& v : e.coeffs_)
        v = static_cast<std::uint8_t>((v * (c % p())) % p());
    return e;
}

AlgebraElement AlgebraElement::pow(std::size_t k) const
{
    auto r = one(group_);
    for (std::size_t i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const
{
    return group_ == o.group_ && coeffs_ == o.coeffs_;
}

bool AlgebraElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint8_t c) { return c == 0; });
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.group() != b.group())
        throw InputError("multiply: algebra elements over different groups");
    const auto& g = *a.group();
    const std::uint32_t p = g.p();
    std::vector<std::uint32_t> acc(g.order(), 0);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (!a.coeff(x))
            continue;
        for (std::size_t y = 0; y < g.order(); ++y)
            if (b.coeff(y))
                acc[g.mul(x, y)] = (acc[g.mul(x, y)] + a.coeff(x) * b.coeff(y)) % p;
    }
    std::vector<std::uint8_t> out(acc.begin(), acc.end());
    return {a.group(), std::move(out)};
}

AlgebraElement norm_element(const GroupPtr& g)
{
    return {g, std::vector<std::uint8_t>(g->order(), 1)};
}

bool is_central(const AlgebraElement& a)
{
    for (auto gen : a.group()->generators()) {
        auto x = AlgebraElement::basis(a.group(), gen);
        if (!(x * a == a * x))
            return false;
    }
    return true;
}

FpMatrix left_multiplication_matrix(const AlgebraElement& a)
{
    const auto& g = *a.group();
    FpMatrix m(g.p(), g.order(), g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (!a.coeff(x))
            continue;
        for (std::size_t y = 0; y < g.order(); ++y) {
            const std::size_t r = g.mul(x, y);
            m.set(r, y, m(r, y) + a.coeff(x));
        }
    }
    return m;
}

std::vector<std::size_t> RadicalFiltration::dims() const
{
    std::vector<std::size_t> d;
    for (const auto& b : bases)
        d.push_back(b.cols());
    return d;
}

RadicalFiltration radical_filtration(const GroupPtr& g)
{
    const std::uint32_t p = g->p();
    const std::size_t n = g->order();
    std::vector<FpMatrix> gen_minus_one;
    for (auto gen : g->generators())
        gen_minus_one.push_back(left_multiplication_matrix(AlgebraElement::minus_one(g, gen)));

    RadicalFiltration f;
    f.bases.push_back(FpMatrix::identity(p, n));
    FpMatrix j1(p, n, n - 1);
    for (std::size_t a = 1; a < n; ++a) {
        j1.set(a, a - 1, 1);
        j1.set(0, a - 1, -1);
    }
    f.bases.push_back(j1);
    while (f.bases.back().cols() > 0) {
        const auto& prev = f.bases.back();
        std::vector<FpMatrix> images;
        for (const auto& m : gen_minus_one)
            images.push_back(m * prev);
        auto next = column_basis(FpMatrix::hstack(images, p, n));
        if (next.cols() >= prev.cols())
            throw InternalError("radical_filtration: radical powers failed to decrease");
        f.bases.push_back(std::move(next));
    }
    return f;
}

}  // namespace stmod
