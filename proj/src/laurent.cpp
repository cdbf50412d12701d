#include "dkh/laurent.hpp"

#include <sstream>

namespace dkh {

void HalfLaurent::add_term(int exp_half, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp_half);
    if (it == terms_.end()) {
        terms_.emplace(exp_half, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r;
    for (auto [ea, ca] : a.terms_)
        for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

HalfLaurent HalfLaurent::times_monomial(int exp_half, long long coeff) const {
    HalfLaurent r;
    if (coeff == 0) return r;
    for (auto [e, c] : terms_) r.terms_.emplace(e + exp_half, c * coeff);
    return r;
}

HalfLaurent HalfLaurent::substitute_t_squared() const {
    HalfLaurent r;
    for (auto [e, c] : terms_) r.terms_.emplace(2 * e, c);
    return r;
}

bool HalfLaurent::divide_exact(const HalfLaurent& divisor, HalfLaurent& quotient) const {
    quotient = HalfLaurent{};
    if (divisor.is_zero()) return false;
    HalfLaurent rem = *this;
    const auto lead = *divisor.terms_.rbegin();  // highest exponent
    while (!rem.is_zero()) {
        const auto top = *rem.terms_.rbegin();
        if (top.second % lead.second != 0) return false;
        const int e = top.first - lead.first;
        const long long c = top.second / lead.second;
        quotient.add_term(e, c);
        rem -= divisor.times_monomial(e, c);
        // degree strictly decreases, so this terminates
        if (!rem.is_zero() && rem.terms_.rbegin()->first >= top.first) return false;
    }
    return true;
}

namespace {

void render_term(std::ostringstream& out, int exp_half, long long coeff, bool latex, bool first) {
    long long a = coeff;
    if (first) {
        if (a < 0) {
            out << "-";
            a = -a;
        }
    } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    const bool whole = (exp_half % 2) == 0;
    const int ipart = exp_half / 2;
    if (exp_half == 0) {
        out << a;
        return;
    }
    if (a != 1) out << a;
    if (whole && ipart == 1) {
        out << "t";
        return;
    }
    if (latex) {
        if (whole)
            out << "t^{" << ipart << "}";
        else
            out << "t^{" << exp_half << "/2}";
    } else {
        if (whole)
            out << "t^" << ipart;
        else
            out << "t^(" << exp_half << "/2)";
    }
}

std::string render(const std::map<int, long long>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        render_term(out, it->first, it->second, latex, first);
        first = false;
    }
    return out.str();
}

}  // namespace

std::string HalfLaurent::to_text() const { return render(terms_, false); }
std::string HalfLaurent::to_latex() const { return render(terms_, true); }

HalfLaurent one_plus_t() {
    HalfLaurent p;
    p.add_term(0, 1);
    p.add_term(2, 1);
    return p;
}

}  // namespace dkh
