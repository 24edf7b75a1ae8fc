#include "knc/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "knc/errors.hpp"

namespace knc {

const char* to_string(MapKind kind) { return kind == MapKind::Twist ? "twist" : "flip"; }

AlgebraMap AlgebraMap::identity(long genus) { return twist(genus, CycloElem(1)); }

AlgebraMap AlgebraMap::twist(long genus, const CycloElem& root) {
    if (root.is_zero()) throw InvalidArgument("twist root must be nonzero");
    AlgebraMap m;
    m.kind_ = MapKind::Twist;
    m.genus_ = genus;
    m.t_factor_ = root * root;
    m.u_factor_ = root;
    return m;
}

AlgebraMap AlgebraMap::flip(long genus, const CycloElem& scale, const CycloElem& u_factor) {
    if (scale.is_zero() || u_factor.is_zero()) throw InvalidArgument("flip factors must be nonzero");
    AlgebraMap m;
    m.kind_ = MapKind::Flip;
    m.genus_ = genus;
    m.t_factor_ = scale;
    m.u_factor_ = u_factor;
    if (auto root = try_sqrt(scale)) {
        CycloElem c = *root;
        CycloElem sign = u_factor / c.pow(genus + 1);
        if (genus % 2 == 0) {
            auto unit = as_root_of_unity(sign);
            // (L, j) with j / L in [1/2, 1) means the sign lies in the lower half plane
            if (unit && 2 * unit->second >= unit->first && unit->first != 1) {
                c = -c;
                sign = -sign;
            }
        }
        m.flip_root_ = c;
        m.flip_sign_ = sign;
    }
    return m;
}

const CycloElem& AlgebraMap::twist_root() const {
    if (kind_ != MapKind::Twist) throw InvalidArgument("flip has no twist root");
    return u_factor_;
}

const CycloElem& AlgebraMap::flip_scale() const {
    if (kind_ != MapKind::Flip) throw InvalidArgument("twist has no flip scale");
    return t_factor_;
}

bool AlgebraMap::is_identity() const { return kind_ == MapKind::Twist && u_factor_.is_one(); }

std::string AlgebraMap::describe() const {
    std::ostringstream os;
    if (kind_ == MapKind::Twist) {
        os << "twist(root = " << u_factor_ << ")";
    } else {
        os << "flip(scale = " << t_factor_ << ", u_factor = " << u_factor_;
        if (flip_root_) os << ", root = " << *flip_root_ << ", sign = " << *flip_sign_;
        os << ")";
    }
    return os.str();
}

bool operator==(const AlgebraMap& a, const AlgebraMap& b) {
    return a.kind_ == b.kind_ && a.genus_ == b.genus_ && a.t_factor_ == b.t_factor_ &&
           a.u_factor_ == b.u_factor_;
}

bool verify_automorphism(const HyperellipticCurve& curve, const AlgebraMap& map) {
    if (map.genus() != curve.genus()) return false;
    LaurentPoly lhs = curve.poly().shifted(2 * map.u_shift()) * (map.u_factor() * map.u_factor());
    LaurentPoly rhs = curve.poly().substitute(map.t_factor(), map.t_exponent());
    return lhs == rhs;
}

AlgebraMap compose(const AlgebraMap& a, const AlgebraMap& b) {
    if (a.genus() != b.genus()) throw InvalidArgument("composing maps of different genus");
    long genus = a.genus();
    int sigma = a.t_exponent() * b.t_exponent();
    CycloElem t_factor = b.t_factor() * a.t_factor().pow(b.t_exponent());
    CycloElem u_factor = b.u_factor() * a.t_factor().pow(b.u_shift()) * a.u_factor();
    long shift = a.t_exponent() * b.u_shift() + a.u_shift();
    if (sigma == 1) {
        if (shift != 0 || t_factor != u_factor * u_factor)
            throw ConsistencyError("composition is not a twist: " + a.describe() + " o " +
                                   b.describe());
        return AlgebraMap::twist(genus, u_factor);
    }
    if (shift != -genus - 1)
        throw ConsistencyError("composition is not a flip: " + a.describe() + " o " + b.describe());
    return AlgebraMap::flip(genus, t_factor, u_factor);
}

AlgebraMap map_power(const AlgebraMap& map, long e) {
    if (e < 0) throw InvalidArgument("negative map power");
    AlgebraMap out = AlgebraMap::identity(map.genus());
    for (long i = 0; i < e; ++i) out = compose(out, map);
    return out;
}

namespace {

struct RootIndex {
    unsigned order;
    std::map<std::string, std::vector<std::size_t>> slots;
};

RootIndex index_roots(const std::vector<CycloElem>& roots, unsigned order) {
    RootIndex idx{order, {}};
    for (std::size_t i = 0; i < roots.size(); ++i) idx.slots[roots[i].key(order)].push_back(i);
    return idx;
}

// Matches images[i] to distinct roots, or nullopt when the multisets differ.
std::optional<std::vector<std::size_t>> match(const RootIndex& idx,
                                              const std::vector<CycloElem>& images) {
    std::map<std::string, std::size_t> used;
    std::vector<std::size_t> perm(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (idx.order % images[i].order() != 0) return std::nullopt;
        auto key = images[i].key(idx.order);
        auto it = idx.slots.find(key);
        if (it == idx.slots.end()) return std::nullopt;
        std::size_t& u = used[key];
        if (u >= it->second.size()) return std::nullopt;
        perm[i] = it->second[u++];
    }
    return perm;
}

CycloElem root_product(const HyperellipticCurve& curve) { return curve.coeff(1); }

}  // namespace

std::vector<TwistCandidate> twist_candidates(const HyperellipticCurve& curve) {
    long genus = curve.genus();
    long full = 4 * genus;
    const auto& roots = curve.roots();
    auto idx = index_roots(roots, static_cast<unsigned>(lcm_l(curve.field_order(), 4 * genus)));
    // root^2 = zeta_{2g}^j must map the roots onto themselves; the valid j form a subgroup
    long valid_squares = 0;
    for (long j = 0; j < 2 * genus; ++j) {
        CycloElem factor = root_of_unity(static_cast<unsigned>(2 * genus), j);
        std::vector<CycloElem> images;
        for (const auto& r : roots) images.push_back(factor * r);
        if (match(idx, images)) ++valid_squares;
    }
    long half = valid_squares;  // twist subgroup has order 2 * half
    std::vector<TwistCandidate> out;
    CycloElem generator = root_of_unity(static_cast<unsigned>(2 * half), 1);
    for (long e = 1; e <= 2 * half; ++e) {
        CycloElem root = e == 2 * half ? CycloElem(1) : generator.pow(e);
        AlgebraMap map = AlgebraMap::twist(genus, root);
        CycloElem square = root * root;
        std::vector<CycloElem> images;
        for (const auto& r : roots) images.push_back(square * r);
        auto perm = match(idx, images);
        if (!perm || !verify_automorphism(curve, map))
            throw ConsistencyError("twist " + map.describe() + " fails on its own curve");
        out.push_back({std::move(map), std::move(*perm)});
    }
    if (full % (2 * half) != 0) throw ConsistencyError("twist subgroup order does not divide 4g");
    return out;
}

FlipSearch flip_candidates(const HyperellipticCurve& curve) {
    long genus = curve.genus();
    const auto& roots = curve.roots();
    auto idx = index_roots(roots, curve.field_order());
    std::vector<CycloElem> inverses;
    for (const auto& r : roots) inverses.push_back(r.inverse());
    struct Found {
        CycloElem scale;
        std::vector<std::size_t> perm;
        std::size_t discovery;
    };
    std::vector<Found> scales;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        CycloElem scale = roots[0] * roots[j];
        bool seen = false;
        for (const auto& f : scales) seen = seen || f.scale == scale;
        if (seen) continue;
        std::vector<CycloElem> images;
        for (const auto& inv : inverses) images.push_back(scale * inv);
        if (auto perm = match(idx, images)) scales.push_back({scale, std::move(*perm), j});
    }
    auto rank = [](const CycloElem& s) {
        if (!s.is_rational()) return 2;
        return sgn(s.rational_value()) > 0 ? 0 : 1;
    };
    std::stable_sort(scales.begin(), scales.end(),
                     [&](const Found& a, const Found& b) { return rank(a.scale) < rank(b.scale); });
    FlipSearch out;
    CycloElem product = root_product(curve);
    for (const auto& f : scales) {
        auto u_factor = try_sqrt(f.scale * product);
        if (!u_factor) {
            out.undetermined_scales.push_back(f.scale);
            continue;
        }
        AlgebraMap plus = AlgebraMap::flip(genus, f.scale, *u_factor);
        AlgebraMap minus = AlgebraMap::flip(genus, f.scale, -*u_factor);
        auto preferred = [](const AlgebraMap& m) {
            if (!m.flip_sign()) return 2;
            const CycloElem& s = *m.flip_sign();
            if (s.is_one() || s == root_of_unity(4, 1)) return 0;
            return 1;
        };
        if (preferred(minus) < preferred(plus)) std::swap(plus, minus);
        for (auto* m : {&plus, &minus}) {
            if (!verify_automorphism(curve, *m))
                throw ConsistencyError("flip " + m->describe() + " fails on its own curve");
            out.flips.push_back({*m, f.perm});
        }
    }
    return out;
}

const AlgebraMap& AutProfile::map_of(const GroupElement& g) const {
    return element_maps.at(group.index_of(g));
}

namespace {

AlgebraMap word_map(const AlgebraMap& x, const AlgebraMap& y, const GroupElement& g) {
    AlgebraMap out = map_power(y, g.power);
    return g.flip ? compose(x, out) : out;
}

}  // namespace

AutProfile classify_group(const HyperellipticCurve& curve) {
    long genus = curve.genus();
    auto twists = twist_candidates(curve);
    long half = static_cast<long>(twists.size()) / 2;
    long quotient = 2 * genus / half;
    auto search = flip_candidates(curve);
    if (!search.undetermined_scales.empty()) {
        std::ostringstream os;
        os << "flip with scale " << search.undetermined_scales.front()
           << " exists but its u-factor is not representable";
        throw UndeterminedGroup(os.str());
    }
    AlgebraMap y = twists.front().map;
    std::optional<AlgebraMap> x;
    GroupFamily family = GroupFamily::Cyclic;
    long param = 2 * half;
    if (!search.flips.empty()) {
        const AlgebraMap& first = search.flips.front().map;
        bool involution = compose(first, first).is_identity();
        if (quotient % 2 == 0) {
            x = first;
            family = involution ? GroupFamily::Dihedral : GroupFamily::Dicyclic;
            param = involution ? 2 * half : half;
        } else {
            for (const auto& f : search.flips)
                if (compose(f.map, f.map).is_identity()) {
                    x = f.map;
                    break;
                }
            if (!x) x = compose(first, y);
            family = GroupFamily::U;
            param = half;
        }
    }
    FiniteGroup group = build_group(family, param);
    if (group.family() != family)
        throw ConsistencyError("unexpected canonicalization of " + group.name());
    std::vector<AlgebraMap> maps;
    for (const auto& g : group.elements())
        maps.push_back(x ? word_map(*x, y, g) : map_power(y, g.power));
    AutProfile profile{genus, half, quotient, x.has_value(), std::move(group), y, x, std::move(maps)};
    if (!generator_relations_hold(profile))
        throw ConsistencyError("generator maps violate the presentation of " + profile.group.name());
    std::size_t expected = twists.size() + search.flips.size();
    if (profile.element_maps.size() != expected)
        throw ConsistencyError("group order does not match the number of automorphisms found");
    for (std::size_t i = 0; i < profile.element_maps.size(); ++i) {
        const auto& m = profile.element_maps[i];
        for (std::size_t j = 0; j < i; ++j)
            if (profile.element_maps[j] == m) throw ConsistencyError("group elements act identically");
        bool listed = false;
        for (const auto& t : twists) listed = listed || t.map == m;
        for (const auto& f : search.flips) listed = listed || f.map == m;
        if (!listed) throw ConsistencyError("element map " + m.describe() + " was not detected");
    }
    return profile;
}

bool generator_relations_hold(const AutProfile& profile) {
    const FiniteGroup& g = profile.group;
    const AlgebraMap& y = profile.y_map;
    long rotation = g.rotation_order();
    if (!map_power(y, rotation).is_identity()) return false;
    for (long e = 1; e < rotation; ++e)
        if (map_power(y, e).is_identity()) return false;
    if (!profile.x_map) return !g.has_flip();
    const AlgebraMap& x = *profile.x_map;
    GroupElement xx = g.multiply(g.x(), g.x());
    if (compose(x, x) != map_power(y, xx.power) || xx.flip != 0) return false;
    GroupElement yx = g.multiply(g.y(), g.x());
    return compose(y, x) == compose(x, map_power(y, yx.power));
}

}  // namespace knc
