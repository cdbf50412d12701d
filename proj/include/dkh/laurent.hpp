#pragma once
// Laurent polynomials in sqrt(t) with exact integer coefficients. Exponents
// are stored in sqrt(t) units, so t^m is exponent 2m and the state gradings k
// and j can be used as exponents directly.

#include <cstdint>
#include <map>
#include <string>

namespace dkh {

class HalfLaurent {
  public:
    HalfLaurent() = default;

    static HalfLaurent monomial(int exp_half, long long coeff = 1) {
        HalfLaurent p;
        p.add_term(exp_half, coeff);
        return p;
    }

    // exp_half is the exponent in sqrt(t) units.
    void add_term(int exp_half, long long coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, long long>& terms() const { return terms_; }

    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

    HalfLaurent times_monomial(int exp_half, long long coeff = 1) const;

    // t -> t^2 (doubles every exponent).
    HalfLaurent substitute_t_squared() const;

    // Exact division; returns false (and leaves quotient empty) on a nonzero
    // remainder.
    bool divide_exact(const HalfLaurent& divisor, HalfLaurent& quotient) const;

    // "t - t^3 + t^4"; odd sqrt(t) exponents render as t^(m/2).
    std::string to_text() const;
    std::string to_latex() const;

  private:
    std::map<int, long long> terms_;  // exponent (sqrt t units) -> nonzero coeff
};

// 1 + t, the divisor of the enhanced-state sum.
HalfLaurent one_plus_t();

}  // namespace dkh
