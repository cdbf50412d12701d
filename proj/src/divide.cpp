#include "dkh/divide.hpp"

#include <algorithm>

namespace dkh {

namespace {

int wall_width(const std::vector<WallKind>& wall) {
    int w = 0;
    for (WallKind k : wall) w += (k == WallKind::TurnBack) ? 2 : 1;
    return w;
}

void append_turn_backs(std::vector<SingularPoint>& points, const std::vector<WallKind>& wall, bool right) {
    int level = 1;
    for (WallKind k : wall) {
        if (k == WallKind::TurnBack) {
            SingularPoint p;
            p.kind = PointKind::TurnBack;
            p.right_side = right;
            p.top_level = level;
            points.push_back(p);
            level += 2;
        } else {
            level += 1;
        }
    }
}

}  // namespace

int Divide::strand_count() const { return wall_width(left_wall); }

int Divide::endpoint_count() const {
    int e = 0;
    for (WallKind k : left_wall) e += (k == WallKind::Endpoint);
    for (WallKind k : right_wall) e += (k == WallKind::Endpoint);
    return e;
}

SingularProfile validate(const Divide& divide) {
    const int nl = wall_width(divide.left_wall);
    const int nr = wall_width(divide.right_wall);
    if (nl != nr)
        throw ValidationError(Errc::StrandCountMismatch, "left wall spans " + std::to_string(nl) +
                                                             " strands, right wall spans " + std::to_string(nr));
    if (nl == 0) throw ValidationError(Errc::EmptyDivide, "divide has no strands");

    SingularProfile profile;
    profile.strands = nl;
    profile.endpoints = divide.endpoint_count();
    for (size_t g = 0; g < divide.word.size(); ++g) {
        const Crossing& c = divide.word[g];
        if (c.position < 1 || c.position > nl - 1)
            throw ValidationError(Errc::CrossingOutOfRange,
                                  "crossing " + std::to_string(g + 1) + " at position " + std::to_string(c.position) +
                                      " needs 1 <= position <= " + std::to_string(nl - 1));
        SingularPoint p;
        p.kind = (c.sign > 0) ? PointKind::PositiveCrossing : PointKind::NegativeCrossing;
        p.word_index = static_cast<int>(g);
        p.position = c.position;
        profile.points.push_back(p);
        (c.sign > 0 ? profile.n_plus : profile.n_minus) += 1;
    }
    append_turn_backs(profile.points, divide.left_wall, false);
    append_turn_backs(profile.points, divide.right_wall, true);
    profile.n_zero = static_cast<int>(profile.points.size()) - profile.n_plus - profile.n_minus;
    profile.writhe = 2 * profile.n_plus - 2 * profile.n_minus + profile.n_zero;
    return profile;
}

int PartialDivide::fixed_bit(int point) const {
    auto it = std::lower_bound(fixed.begin(), fixed.end(), std::make_pair(point, -1));
    if (it != fixed.end() && it->first == point) return it->second;
    return -1;
}

PartialDivide as_partial(const Divide& divide) { return PartialDivide{divide, {}}; }

PartialDivide pin_point(const PartialDivide& divide, int point, int bit) {
    PartialDivide out = divide;
    auto it = std::lower_bound(out.fixed.begin(), out.fixed.end(), std::make_pair(point, -1));
    if (it != out.fixed.end() && it->first == point)
        throw InvariantError(Errc::InternalError, "point " + std::to_string(point) + " already pinned");
    out.fixed.insert(it, {point, bit});
    return out;
}

SingularProfile validate(const PartialDivide& divide) {
    SingularProfile base = validate(divide.base);
    for (auto [pt, bit] : divide.fixed) {
        if (pt < 0 || pt >= base.n())
            throw InvariantError(Errc::InternalError, "pinned point " + std::to_string(pt) + " out of range");
        if (bit != 0 && bit != 1)
            throw InvariantError(Errc::InternalError, "pinned bit must be 0 or 1");
    }
    SingularProfile out;
    out.strands = base.strands;
    out.endpoints = base.endpoints;
    for (int t = 0; t < base.n(); ++t) {
        if (divide.fixed_bit(t) >= 0) continue;
        const SingularPoint& p = base.points[t];
        out.points.push_back(p);
        switch (p.kind) {
            case PointKind::PositiveCrossing: out.n_plus++; break;
            case PointKind::NegativeCrossing: out.n_minus++; break;
            case PointKind::TurnBack: out.n_zero++; break;
        }
    }
    out.writhe = 2 * out.n_plus - 2 * out.n_minus + out.n_zero;
    return out;
}

int writhe(const Divide& divide) { return validate(divide).writhe; }
int writhe(const PartialDivide& divide) { return validate(divide).writhe; }

}  // namespace dkh
