#pragma once

// Finite p-groups as explicit multiplication tables.
//
// Elements are normal forms 0..|G|-1 with the identity at 0. Abelian groups
// use a mixed-radix encoding of exponent vectors (first factor least
// significant); the two-generator 2-groups use x^i y^j -> i + j * 2^(n-1).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stmod {

enum class GroupKind { abelian, quaternion, dihedral, semidihedral, modular };

struct GroupSpec {
    GroupKind kind = GroupKind::abelian;
    std::uint32_t p = 2;
    // Abelian: orders of the cyclic factors, each a positive power of p.
    std::vector<std::uint32_t> factors;
    // Non-abelian families: |G| = 2^n.
    std::uint32_t n = 0;

    static GroupSpec abelian(std::uint32_t p, std::vector<std::uint32_t> factors);
    static GroupSpec cyclic(std::uint32_t order);
    static GroupSpec quaternion(std::uint32_t n) { return {GroupKind::quaternion, 2, {}, n}; }
    static GroupSpec dihedral(std::uint32_t n) { return {GroupKind::dihedral, 2, {}, n}; }
    static GroupSpec semidihedral(std::uint32_t n) { return {GroupKind::semidihedral, 2, {}, n}; }
    static GroupSpec modular(std::uint32_t n) { return {GroupKind::modular, 2, {}, n}; }

    // "C4", "C2xC4", "Q8", "D16", "SD16", "M16"
    std::string name() const;
    // Parses the compact names produced by name(), plus "V4" and powers like "C2^3".
    static GroupSpec parse(const std::string& text);
    std::size_t order() const;
    void validate() const;

    bool operator==(const GroupSpec&) const = default;
};

// A word in the generators: (generator index, exponent) pairs, read left to right.
struct Word {
    std::vector<std::pair<std::size_t, int>> letters;
};

struct Relation {
    std::string text;
    Word lhs;
    Word rhs;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
public:
    // Validates the table exhaustively: identity, inverses, associativity,
    // prime-power order and that the generators generate.
    Group(std::uint32_t p, std::vector<std::uint32_t> table, std::vector<std::size_t> generators,
          std::vector<std::string> generator_names, std::vector<Relation> relations, std::string name,
          std::optional<GroupSpec> spec = std::nullopt);

    std::size_t order() const { return order_; }
    std::uint32_t p() const { return p_; }
    std::size_t identity() const { return 0; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::size_t power(std::size_t a, std::int64_t k) const;
    std::size_t element_order(std::size_t a) const;
    std::size_t commutator(std::size_t a, std::size_t b) const;

    const std::vector<std::size_t>& generators() const { return generators_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const std::string& name() const { return name_; }
    const std::optional<GroupSpec>& spec() const { return spec_; }

    bool is_abelian() const;
    std::size_t evaluate(const Word& w) const;
    // Normal-form label, e.g. "x^2 y" or "g0 g1^3".
    std::string element_label(std::size_t a) const;
    // Element reached from the identity by a shortest generator word.
    const Word& word_for(std::size_t a) const { return words_[a]; }

private:
    std::uint32_t p_;
    std::size_t order_;
    std::vector<std::uint32_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> generators_;
    std::vector<std::string> generator_names_;
    std::vector<Relation> relations_;
    std::string name_;
    std::optional<GroupSpec> spec_;
    std::vector<Word> words_;
};

GroupPtr build_group(const GroupSpec& spec);

std::vector<std::size_t> center(const Group& g);

// Smallest subgroup containing the given elements (sorted).
std::vector<std::size_t> generated_subgroup(const Group& g, std::span<const std::size_t> elements);

bool is_subgroup(const Group& g, std::span<const std::size_t> elements);
bool is_normal(const Group& g, std::span<const std::size_t> subgroup);

// Left coset representatives t with G = union of t*H, identity first, each
// representative the smallest element of its coset.
std::vector<std::size_t> left_transversal(const Group& g, std::span<const std::size_t> subgroup);

struct CyclicSubgroup {
    std::vector<std::size_t> elements;
    std::vector<std::size_t> transversal;
};

CyclicSubgroup cyclic_subgroup(const Group& g, std::size_t generator);

// A subgroup realized as a group in its own right together with its embedding.
struct Subgroup {
    GroupPtr parent;
    GroupPtr group;
    std::vector<std::size_t> embedding;    // element of `group` -> element of `parent`
    std::vector<std::size_t> transversal;  // left coset representatives in `parent`
    // parent element -> subgroup element, or npos when outside
    std::size_t restrict(std::size_t parent_element) const;
};

Subgroup make_subgroup(const GroupPtr& parent, std::span<const std::size_t> elements);

// Dimension subgroups F_1 = G > F_2 > ... > F_{d+1} = 1 and the exponents
// e_i with p^{e_i} = [F_i : F_{i+1}].
struct DimensionChain {
    std::vector<std::vector<std::size_t>> subgroups;
    std::vector<std::uint32_t> exponents;
    std::size_t nilpotency_index(std::uint32_t p) const;
};

// Recursion F_1 = G, F_n = [G, F_{n-1}] * (F_{ceil(n/p)})^p.
DimensionChain jennings_chain(const Group& g, std::uint32_t p);

// F_i = {g : g - 1 in J(kG)^i}, read off the radical filtration of kG.
DimensionChain dimension_subgroups_direct(const GroupPtr& g);

// Computed from the dimension chain and by powering the radical; a
// disagreement throws InternalError.
std::size_t nilpotency_index(const GroupPtr& g, std::uint32_t p);

}  // namespace stmod
