#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knc/curve.hpp"
#include "knc/groups.hpp"
#include "knc/laurent.hpp"

namespace knc {

enum class MapKind { Twist, Flip };

const char* to_string(MapKind kind);

// Algebra map t -> t_factor * t^t_exponent, u -> u_factor * t^u_shift * u.
//   twist(root):             t -> root^2 t,      u -> root u
//   flip(scale, u_factor):   t -> scale t^{-1},  u -> u_factor t^{-g-1} u
// For a flip, scale = c^2 and u_factor = sign * c^{g+1}; c and sign are recorded when c
// is representable, with c chosen so that sign is 1 or i whenever the genus is even.
class AlgebraMap {
public:
    static AlgebraMap identity(long genus);
    static AlgebraMap twist(long genus, const CycloElem& root);
    static AlgebraMap flip(long genus, const CycloElem& scale, const CycloElem& u_factor);

    MapKind kind() const noexcept { return kind_; }
    long genus() const noexcept { return genus_; }
    int t_exponent() const noexcept { return kind_ == MapKind::Twist ? 1 : -1; }
    long u_shift() const noexcept { return kind_ == MapKind::Twist ? 0 : -genus_ - 1; }
    const CycloElem& t_factor() const noexcept { return t_factor_; }
    const CycloElem& u_factor() const noexcept { return u_factor_; }

    const CycloElem& twist_root() const;  // throws InvalidArgument for flips
    const CycloElem& flip_scale() const;  // throws InvalidArgument for twists
    const std::optional<CycloElem>& flip_root() const noexcept { return flip_root_; }
    const std::optional<CycloElem>& flip_sign() const noexcept { return flip_sign_; }

    bool is_identity() const;
    std::string describe() const;

    friend bool operator==(const AlgebraMap& a, const AlgebraMap& b);
    friend bool operator!=(const AlgebraMap& a, const AlgebraMap& b) { return !(a == b); }

private:
    AlgebraMap() = default;
    MapKind kind_ = MapKind::Twist;
    long genus_ = 0;
    CycloElem t_factor_;
    CycloElem u_factor_;
    std::optional<CycloElem> flip_root_;
    std::optional<CycloElem> flip_sign_;
};

// True iff (image of u)^2 = p(image of t) as Laurent polynomials.
bool verify_automorphism(const HyperellipticCurve& curve, const AlgebraMap& map);

// a o b: apply b first. Throws ConsistencyError if the result leaves both shapes.
AlgebraMap compose(const AlgebraMap& a, const AlgebraMap& b);
AlgebraMap map_power(const AlgebraMap& map, long e);

// permutation[i] = index of the image root of roots()[i].
struct TwistCandidate {
    AlgebraMap map;
    std::vector<std::size_t> permutation;
};

struct FlipCandidate {
    AlgebraMap map;
    std::vector<std::size_t> permutation;
};

// Every root^2 with root^{4g} = 1 that permutes the roots. The generator comes first,
// followed by its powers 2, 3, ..., ending with the identity.
std::vector<TwistCandidate> twist_candidates(const HyperellipticCurve& curve);

struct FlipSearch {
    std::vector<FlipCandidate> flips;
    // Scales admitting a root matching whose u-factor has no representation.
    std::vector<CycloElem> undetermined_scales;
};

// Ordered by preference: positive rational scale, rational scale, then discovery order;
// within a scale the sign 1 (or i) comes first.
FlipSearch flip_candidates(const HyperellipticCurve& curve);

struct AutProfile {
    long genus = 0;
    long twist_half_order = 1;  // twist subgroup is cyclic of order 2 * twist_half_order
    long quotient = 0;          // 2 * genus / twist_half_order
    bool flip_exists = false;
    FiniteGroup group;
    AlgebraMap y_map;                 // twist generator
    std::optional<AlgebraMap> x_map;  // chosen flip, when one exists
    std::vector<AlgebraMap> element_maps;  // aligned with group.elements()

    const AlgebraMap& map_of(const GroupElement& g) const;
};

// Throws UndeterminedGroup when a flip exists that cannot be written down.
AutProfile classify_group(const HyperellipticCurve& curve);

// Relations of the profile's presentation evaluated on the generator maps.
bool generator_relations_hold(const AutProfile& profile);

}  // namespace knc
