#include "lecount/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace lecount {

QPoly::QPoly(long constant) {
    if (constant != 0) coeffs_.push_back(Int(constant));
}

QPoly::QPoly(const Int& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

QPoly QPoly::monomial(long exponent, const Int& coeff) {
    if (exponent < 0) throw IndexError("monomial with negative exponent");
    QPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(exponent) + 1, Int(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& QPoly::coeff(long exponent) const {
    static const Int zero(0);
    if (exponent < 0 || exponent >= static_cast<long>(coeffs_.size()))
        return zero;
    return coeffs_[static_cast<size_t>(exponent)];
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Int> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(prod));
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionError("division by zero polynomial");
    if (is_zero()) return QPoly();
    if (degree() < divisor.degree())
        throw NonPolynomialError("quotient degree would be negative");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(
        static_cast<size_t>(degree() - divisor.degree()) + 1, Int(0));
    const Int& lead = divisor.coeffs_.back();
    for (long d = degree() - divisor.degree(); d >= 0; --d) {
        Int& top = rem[static_cast<size_t>(d) + divisor.coeffs_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw NonPolynomialError("leading coefficient does not divide");
        Int f = top / lead;
        quot[static_cast<size_t>(d)] = f;
        for (size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rem[static_cast<size_t>(d) + i] -= f * divisor.coeffs_[i];
    }
    for (const Int& c : rem)
        if (c != 0)
            throw NonPolynomialError("polynomial division left a remainder");
    return QPoly(std::move(quot));
}

Int QPoly::eval_at_one() const {
    Int s(0);
    for (const Int& c : coeffs_) s += c;
    return s;
}

Rat QPoly::eval(const Rat& q) const {
    Rat s(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        s = s * q + Rat(*it);
    return s;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const Int& c = coeffs_[e];
        if (c == 0) continue;
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                out << "-";
                a = -a;
            } else {
                out << "+";
            }
        }
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str();
            out << "q";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

QPoly q_int(long n) {
    if (n < 0) throw IndexError("q-integer of negative argument");
    return QPoly(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

QPoly q_factorial(long n) {
    if (n < 0) throw IndexError("q-factorial of negative argument");
    QPoly p(1);
    for (long i = 2; i <= n; ++i) p *= q_int(i);
    return p;
}

QPoly q_binomial(long n, long k) {
    if (k < 0 || k > n) return QPoly();
    return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

QPoly q_multinomial(long n, const std::vector<long>& parts) {
    long total = 0;
    QPoly den(1);
    for (long p : parts) {
        if (p < 0) throw IndexError("negative part in composition");
        total += p;
        den *= q_factorial(p);
    }
    if (total != n)
        throw DimensionError("composition parts do not sum to the total");
    return q_factorial(n).divide_exact(den);
}

PermStats perm_stats(const std::vector<int>& word) {
    PermStats st;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] > word[i + 1]) {
            st.descents.push_back(static_cast<long>(i) + 1);
            st.maj += static_cast<long>(i) + 1;
        }
    }
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++st.inv;
    return st;
}

}  // namespace lecount
