#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "knc/cyclo.hpp"
#include "knc/linalg.hpp"

namespace knc {

enum class GroupFamily { Cyclic, Dihedral, Dicyclic, U };

const char* to_string(GroupFamily f);
GroupFamily parse_group_family(const std::string& name);  // throws InvalidArgument

// x^flip y^power, power reduced modulo the rotation order.
struct GroupElement {
    int flip = 0;
    long power = 0;
    auto operator<=>(const GroupElement&) const = default;
};

std::string to_string(const GroupElement& g);

// Groups with presentation x^2 = y^z, y^R = 1, y x = x y^r.
//   Cyclic(m):   y only, R = m
//   Dihedral(m): R = m,  r = -1,    z = 0   (order 2m)
//   Dicyclic(n): R = 2n, r = -1,    z = n   (order 4n)
//   U(n):        R = 2n, r = n - 1, z = 0   (order 4n, n even)
class FiniteGroup {
public:
    GroupFamily family() const noexcept { return family_; }
    long param() const noexcept { return param_; }
    long rotation_order() const noexcept { return rotation_; }
    long order() const noexcept { return static_cast<long>(elements_.size()); }
    bool has_flip() const noexcept { return family_ != GroupFamily::Cyclic; }
    // Set when the request was canonicalized, e.g. "U(3)" built as Dihedral(3).
    const std::optional<std::string>& alias() const noexcept { return alias_; }
    std::string name() const;

    GroupElement identity() const { return {0, 0}; }
    GroupElement x() const;
    GroupElement y() const { return {0, rotation_ == 1 ? 0 : 1}; }
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, long e) const;
    long element_order(const GroupElement& a) const;

    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    std::size_t index_of(const GroupElement& g) const;

    friend FiniteGroup build_group(GroupFamily family, long param);

private:
    FiniteGroup() = default;
    GroupElement normalize(GroupElement g) const;
    GroupFamily family_ = GroupFamily::Cyclic;
    long param_ = 1;
    long rotation_ = 1;
    long twist_ = 1;   // r
    long square_ = 0;  // z
    std::optional<std::string> alias_;
    std::vector<GroupElement> elements_;
};

// Throws InvalidArgument for param < 1. U(n) with n odd is returned as Dihedral(n).
FiniteGroup build_group(GroupFamily family, long param);

// Checks the defining relations of the family on the group's own multiplication.
bool presentation_holds(const FiniteGroup& g);

struct ConjClass {
    GroupElement representative;
    std::vector<GroupElement> members;  // sorted
};

// Identity first, then increasing size, ties by smallest member.
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g);

struct Irrep {
    std::string label;
    std::vector<std::string> aliases;
    int dim = 1;
    Matrix x_image;  // empty for cyclic groups
    Matrix y_image;

    Matrix image(const GroupElement& g) const;
    CycloElem character(const GroupElement& g) const;
};

// True when the images satisfy the family's defining relations exactly.
bool irrep_satisfies_presentation(const FiniteGroup& g, const Irrep& rho);
// dim Hom_G(a, b), by solving T a(s) = b(s) T for both generators.
std::size_t intertwiner_dimension(const FiniteGroup& g, const Irrep& a, const Irrep& b);
// The 2-dimensional candidates R_h of U(n), before any filtering.
Irrep u_candidate(long n, long h);

std::vector<Irrep> irreps(const FiniteGroup& g);

struct CharacterTable {
    FiniteGroup group;
    std::vector<ConjClass> classes;
    std::vector<Irrep> irreps;
    std::vector<long> class_sizes;
    Matrix values;  // values(irrep, class)
    unsigned field_order = 1;

    // Weighted conjugate transpose W conj(T)^t / |G|, the inverse of the table.
    Matrix inverse() const;
    bool rows_orthonormal() const;
    bool columns_orthogonal() const;
    std::size_t class_of(const GroupElement& g) const;
    std::size_t irrep_index(const std::string& label) const;
};

CharacterTable character_table(const FiniteGroup& g);

// m_pi = (1/|G|) sum_c |c| chi(c) conj(chi_pi(c)). Throws NonIntegerMultiplicity when an
// inner product is not even rational.
std::vector<Rational> multiplicity_inner_product(const CharacterTable& table,
                                                 const std::vector<CycloElem>& chi);
// Same, but every entry must be a nonnegative integer.
std::vector<long> integer_multiplicities(const CharacterTable& table,
                                         const std::vector<CycloElem>& chi);

}  // namespace knc
