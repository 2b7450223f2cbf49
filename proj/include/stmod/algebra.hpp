#pragma once

// The group algebra kG, k = F_p, with basis indexed by group elements.

#include "stmod/fflin.hpp"
#include "stmod/groups.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace stmod {

class AlgebraElement {
public:
    AlgebraElement(GroupPtr group, std::vector<std::uint8_t> coeffs);

    static AlgebraElement zero(const GroupPtr& g);
    static AlgebraElement one(const GroupPtr& g);
    static AlgebraElement basis(const GroupPtr& g, std::size_t element);
    // g - 1
    static AlgebraElement minus_one(const GroupPtr& g, std::size_t element);
    // Sparse {element: coefficient} form; coefficients reduced mod p.
    static AlgebraElement from_sparse(const GroupPtr& g, const std::map<std::size_t, std::int64_t>& terms);

    const GroupPtr& group() const { return group_; }
    std::uint32_t p() const { return group_->p(); }
    const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }
    std::uint8_t coeff(std::size_t g) const { return coeffs_[g]; }

    std::uint32_t augmentation() const;
    // sum a_g g^{-1}
    AlgebraElement bar() const;
    std::map<std::size_t, std::uint32_t> sparse() const;
    FpMatrix as_column() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(std::uint32_t c) const;
    AlgebraElement pow(std::size_t k) const;
    bool operator==(const AlgebraElement& o) const;
    bool is_zero() const;

private:
    GroupPtr group_;
    std::vector<std::uint8_t> coeffs_;
};

// Convolution product through the multiplication table.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement norm_element(const GroupPtr& g);

// Commutes with every group generator.
bool is_central(const AlgebraElement& a);

// Matrix of v -> a*v on the basis of kG.
FpMatrix left_multiplication_matrix(const AlgebraElement& a);

// bases[i] spans J(kG)^i (columns), i = 0..m with bases[m] empty.
struct RadicalFiltration {
    std::vector<FpMatrix> bases;
    std::size_t nilpotency_index() const { return bases.size() - 1; }
    std::vector<std::size_t> dims() const;
};

// J(kG) is the augmentation ideal (kG is local); J^{i+1} = sum_j (g_j - 1) J^i.
RadicalFiltration radical_filtration(const GroupPtr& g);

}  // namespace stmod
