#pragma once
// The graded algebras A = Z2{v-, v+} (open components) and B = Z2{w-, w+}
// (closed components), their Frobenius structure maps, and the transition
// maps T1..T7 that drive the differential. All maps are stored as explicit
// value tables on basis tensors; the composite presentations (T1 = delta1 o
// mu1 and so on) are verified by the test battery instead of being used as
// definitions.
//
// Basis encoding: a tensor space with factors f_0 .. f_{r-1} (each A or B)
// has 2^r basis tensors; index bit for factor 0 sits in the most significant
// position and bit 1 means the '+' generator. An element is a bitmask over
// basis indices with coefficients mod 2.

#include <cstdint>
#include <string>
#include <vector>

#include "dkh/errors.hpp"

namespace dkh {

enum class Factor : uint8_t { A, B };

using Shape = std::vector<Factor>;  // empty = the scalar field Z2

inline int shape_dim(const Shape& s) { return 1 << s.size(); }

// deg(v-+) = -+1, deg(w-+) = -+2
int basis_degree(const Shape& shape, uint32_t index);
std::string basis_name(const Shape& shape, uint32_t index);

struct AlgebraElement {
    Shape shape;
    uint64_t coeffs = 0;  // bit per basis index

    static AlgebraElement basis(Shape shape, uint32_t index) {
        return {std::move(shape), uint64_t{1} << index};
    }
    static AlgebraElement zero(Shape shape) { return {std::move(shape), 0}; }

    bool is_zero() const { return coeffs == 0; }
    std::string to_string() const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
    AlgebraElement& operator+=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
};

struct LinearMap {
    Shape domain;
    Shape codomain;
    std::vector<uint64_t> table;  // per domain basis index: codomain mask

    AlgebraElement apply(const AlgebraElement& x) const;
    uint64_t apply_basis(uint32_t index) const { return table[index]; }

    bool operator==(const LinearMap& o) const = default;
};

LinearMap identity_map(Shape shape);
LinearMap compose(const LinearMap& second, const LinearMap& first);  // second o first
LinearMap tensor(const LinearMap& f, const LinearMap& g);
bool is_zero_map(const LinearMap& f);
// Homogeneity: every output term sits at input degree + d; returns false when
// no single d works. d is reported through *degree.
bool homogeneous_degree(const LinearMap& f, int* degree);

enum class TCase : uint8_t { T1, T2, T3, T4, T5, T6, T7 };
const char* tcase_name(TCase t);

// Structure maps by name: mu1, delta1, eta1, eps1, beta1, iota, pi, mu2,
// delta2, eta2, eps2, eta1bar, eta2bar, eps1bar, eps2bar, tau, sigma, flip
// (flip resolves to the A or B flip by the argument's shape).
const LinearMap& structure_map(const std::string& name, const Shape& argument_shape = {});
AlgebraElement structure_map(const std::string& name, const AlgebraElement& x);

const LinearMap& t_map(TCase t);
AlgebraElement t_map(TCase t, const AlgebraElement& x);

// Direct accessors used by the complex builder and the test battery.
const LinearMap& map_mu1();
const LinearMap& map_delta1();
const LinearMap& map_eta1();
const LinearMap& map_eps1();
const LinearMap& map_beta1();
const LinearMap& map_iota();
const LinearMap& map_pi();
const LinearMap& map_mu2();
const LinearMap& map_delta2();
const LinearMap& map_eta2();
const LinearMap& map_eps2();
const LinearMap& map_eta1bar();
const LinearMap& map_eta2bar();
const LinearMap& map_eps1bar();
const LinearMap& map_eps2bar();
const LinearMap& map_tau();
const LinearMap& map_sigma();
const LinearMap& map_flip_a();  // phi1 on A (x) A
const LinearMap& map_flip_b();  // phi2 on B (x) B

}  // namespace dkh
