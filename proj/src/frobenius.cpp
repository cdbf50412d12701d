#include "dkh/frobenius.hpp"

#include <sstream>

namespace dkh {

int basis_degree(const Shape& shape, uint32_t index) {
    const int r = static_cast<int>(shape.size());
    int deg = 0;
    for (int f = 0; f < r; ++f) {
        const int sign = ((index >> (r - 1 - f)) & 1u) ? +1 : -1;
        deg += sign * (shape[f] == Factor::B ? 2 : 1);
    }
    return deg;
}

std::string basis_name(const Shape& shape, uint32_t index) {
    if (shape.empty()) return "1";
    const int r = static_cast<int>(shape.size());
    std::string s;
    for (int f = 0; f < r; ++f) {
        if (f) s += "(x)";
        const bool plus = (index >> (r - 1 - f)) & 1u;
        s += (shape[f] == Factor::A) ? (plus ? "v+" : "v-") : (plus ? "w+" : "w-");
    }
    return s;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (shape != o.shape) throw InvariantError(Errc::DomainMismatch, "added elements of different shapes");
    coeffs ^= o.coeffs;
    return *this;
}

std::string AlgebraElement::to_string() const {
    if (coeffs == 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (int idx = 0; idx < shape_dim(shape); ++idx) {
        if (!(coeffs >> idx & 1u)) continue;
        if (!first) out << " + ";
        out << basis_name(shape, idx);
        first = false;
    }
    return out.str();
}

AlgebraElement LinearMap::apply(const AlgebraElement& x) const {
    if (x.shape != domain)
        throw InvariantError(Errc::DomainMismatch,
                             "element of shape " + basis_name(x.shape, 0) + "-space not in the map's domain");
    AlgebraElement out = AlgebraElement::zero(codomain);
    for (int idx = 0; idx < shape_dim(domain); ++idx)
        if (x.coeffs >> idx & 1u) out.coeffs ^= table[idx];
    return out;
}

LinearMap identity_map(Shape shape) {
    LinearMap f{shape, shape, {}};
    f.table.resize(shape_dim(shape));
    for (int idx = 0; idx < shape_dim(shape); ++idx) f.table[idx] = uint64_t{1} << idx;
    return f;
}

LinearMap compose(const LinearMap& second, const LinearMap& first) {
    if (first.codomain != second.domain)
        throw InvariantError(Errc::DomainMismatch, "composition shapes do not match");
    LinearMap f{first.domain, second.codomain, {}};
    f.table.resize(shape_dim(first.domain), 0);
    for (int idx = 0; idx < shape_dim(first.domain); ++idx) {
        uint64_t mid = first.table[idx];
        uint64_t out = 0;
        for (int m = 0; m < shape_dim(first.codomain); ++m)
            if (mid >> m & 1u) out ^= second.table[m];
        f.table[idx] = out;
    }
    return f;
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
    LinearMap h;
    h.domain = f.domain;
    h.domain.insert(h.domain.end(), g.domain.begin(), g.domain.end());
    h.codomain = f.codomain;
    h.codomain.insert(h.codomain.end(), g.codomain.begin(), g.codomain.end());
    const int gd = static_cast<int>(g.domain.size());
    const int gc = static_cast<int>(g.codomain.size());
    h.table.resize(shape_dim(h.domain), 0);
    for (int fi = 0; fi < shape_dim(f.domain); ++fi) {
        for (int gi = 0; gi < shape_dim(g.domain); ++gi) {
            const uint32_t idx = (static_cast<uint32_t>(fi) << gd) | gi;
            uint64_t out = 0;
            const uint64_t fm = f.table[fi], gm = g.table[gi];
            for (int fo = 0; fo < shape_dim(f.codomain); ++fo) {
                if (!(fm >> fo & 1u)) continue;
                for (int go = 0; go < shape_dim(g.codomain); ++go)
                    if (gm >> go & 1u) out ^= uint64_t{1} << ((static_cast<uint32_t>(fo) << gc) | go);
            }
            h.table[idx] = out;
        }
    }
    return h;
}

bool is_zero_map(const LinearMap& f) {
    for (uint64_t m : f.table)
        if (m) return false;
    return true;
}

bool homogeneous_degree(const LinearMap& f, int* degree) {
    bool have = false;
    int d = 0;
    for (int idx = 0; idx < shape_dim(f.domain); ++idx) {
        const int din = basis_degree(f.domain, idx);
        for (int o = 0; o < shape_dim(f.codomain); ++o) {
            if (!(f.table[idx] >> o & 1u)) continue;
            const int shift = basis_degree(f.codomain, o) - din;
            if (!have) {
                d = shift;
                have = true;
            } else if (shift != d) {
                return false;
            }
        }
    }
    if (degree) *degree = d;
    return true;
}

namespace {

const Shape kScalar{};
const Shape kA{Factor::A};
const Shape kB{Factor::B};
const Shape kAA{Factor::A, Factor::A};
const Shape kAB{Factor::A, Factor::B};
const Shape kBB{Factor::B, Factor::B};

// Index convention per shape (MSB = first factor, bit 1 = '+'):
//   A:    0 = v-, 1 = v+
//   X(x)Y: 0 = --, 1 = -+, 2 = +-, 3 = ++
LinearMap make(Shape dom, Shape cod, std::vector<uint64_t> table) {
    return LinearMap{std::move(dom), std::move(cod), std::move(table)};
}

}  // namespace

const LinearMap& map_mu1() {
    static const LinearMap m = make(kAA, kA, {0b00, 0b01, 0b01, 0b10});
    return m;
}
const LinearMap& map_delta1() {
    static const LinearMap m = make(kA, kAA, {0b0001, 0b0110});
    return m;
}
const LinearMap& map_eta1() {
    static const LinearMap m = make(kScalar, kA, {0b10});
    return m;
}
const LinearMap& map_eps1() {
    static const LinearMap m = make(kA, kScalar, {1, 0});
    return m;
}
const LinearMap& map_beta1() {
    static const LinearMap m = make(kAA, kScalar, {0, 1, 1, 0});
    return m;
}
const LinearMap& map_iota() {
    static const LinearMap m = make(kB, kAA, {0b0001, 0b1000});
    return m;
}
const LinearMap& map_pi() {
    static const LinearMap m = make(kAA, kB, {0b01, 0, 0, 0b10});
    return m;
}
const LinearMap& map_mu2() {
    static const LinearMap m = make(kBB, kB, {0b00, 0b01, 0b01, 0b10});
    return m;
}
const LinearMap& map_delta2() {
    static const LinearMap m = make(kB, kBB, {0b0001, 0b0110});
    return m;
}
const LinearMap& map_eta2() {
    static const LinearMap m = make(kScalar, kB, {0b10});
    return m;
}
const LinearMap& map_eps2() {
    static const LinearMap m = make(kB, kScalar, {1, 0});
    return m;
}
const LinearMap& map_eta1bar() {
    static const LinearMap m = make(kScalar, kA, {0b01});
    return m;
}
const LinearMap& map_eta2bar() {
    static const LinearMap m = make(kScalar, kB, {0b01});
    return m;
}
const LinearMap& map_eps1bar() {
    static const LinearMap m = make(kA, kScalar, {0, 1});
    return m;
}
const LinearMap& map_eps2bar() {
    static const LinearMap m = make(kB, kScalar, {0, 1});
    return m;
}
const LinearMap& map_tau() {
    static const LinearMap m = make(kA, kA, {0b10, 0});
    return m;
}
const LinearMap& map_sigma() {
    static const LinearMap m = make(kB, kA, {0b01, 0});
    return m;
}
const LinearMap& map_flip_a() {
    static const LinearMap m = make(kAA, kAA, {0b0001, 0b0100, 0b0010, 0b1000});
    return m;
}
const LinearMap& map_flip_b() {
    static const LinearMap m = make(kBB, kBB, {0b0001, 0b0100, 0b0010, 0b1000});
    return m;
}

const char* tcase_name(TCase t) {
    switch (t) {
        case TCase::T1: return "T1";
        case TCase::T2: return "T2";
        case TCase::T3: return "T3";
        case TCase::T4: return "T4";
        case TCase::T5: return "T5";
        case TCase::T6: return "T6";
        case TCase::T7: return "T7";
    }
    return "?";
}

const LinearMap& t_map(TCase t) {
    // two open -> two open
    static const LinearMap t1 = make(kAA, kAA, {0b0000, 0b0001, 0b0001, 0b0110});
    // one open -> open + closed
    static const LinearMap t2 = make(kA, kAB, {0b0001, 0b0100});
    // open + closed -> one open
    static const LinearMap t3 = make(kAB, kA, {0b00, 0b01, 0b00, 0b10});
    // one closed -> two closed
    static const LinearMap t4 = make(kB, kBB, {0b0001, 0b0110});
    // two closed -> one closed
    static const LinearMap t5 = make(kBB, kB, {0b00, 0b01, 0b01, 0b10});
    // one open -> one closed (turn-back)
    static const LinearMap t6 = make(kA, kB, {0b01, 0b00});
    // two open -> one open (turn-back)
    static const LinearMap t7 = make(kAA, kA, {0b00, 0b01, 0b01, 0b10});
    switch (t) {
        case TCase::T1: return t1;
        case TCase::T2: return t2;
        case TCase::T3: return t3;
        case TCase::T4: return t4;
        case TCase::T5: return t5;
        case TCase::T6: return t6;
        case TCase::T7: return t7;
    }
    throw InvariantError(Errc::InternalError, "bad TCase");
}

AlgebraElement t_map(TCase t, const AlgebraElement& x) { return t_map(t).apply(x); }

const LinearMap& structure_map(const std::string& name, const Shape& argument_shape) {
    if (name == "mu1") return map_mu1();
    if (name == "delta1") return map_delta1();
    if (name == "eta1") return map_eta1();
    if (name == "eps1") return map_eps1();
    if (name == "beta1") return map_beta1();
    if (name == "iota") return map_iota();
    if (name == "pi") return map_pi();
    if (name == "mu2") return map_mu2();
    if (name == "delta2") return map_delta2();
    if (name == "eta2") return map_eta2();
    if (name == "eps2") return map_eps2();
    if (name == "eta1bar") return map_eta1bar();
    if (name == "eta2bar") return map_eta2bar();
    if (name == "eps1bar") return map_eps1bar();
    if (name == "eps2bar") return map_eps2bar();
    if (name == "tau") return map_tau();
    if (name == "sigma") return map_sigma();
    if (name == "flip") {
        if (argument_shape == kBB) return map_flip_b();
        return map_flip_a();
    }
    throw InvariantError(Errc::DomainMismatch, "unknown structure map '" + name + "'");
}

AlgebraElement structure_map(const std::string& name, const AlgebraElement& x) {
    return structure_map(name, x.shape).apply(x);
}

}  // namespace dkh
