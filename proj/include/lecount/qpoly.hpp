#pragma once

#include <string>
#include <vector>

#include "lecount/numeric.hpp"

namespace lecount {

// Polynomial in q with integer coefficients, stored densely by ascending
// exponent with no trailing zero coefficients.
class QPoly {
  public:
    QPoly() = default;
    QPoly(long constant);
    QPoly(const Int& constant);
    explicit QPoly(std::vector<Int> coeffs);

    static QPoly monomial(long exponent, const Int& coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Int& coeff(long exponent) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    // Quotient of an exact division; throws NonPolynomialError if the
    // remainder is nonzero and DivisionError on division by zero or a
    // non-monic-leading divisor that does not divide exactly.
    QPoly divide_exact(const QPoly& divisor) const;

    Int eval_at_one() const;
    Rat eval(const Rat& q) const;

    // Ascending-exponent rendering, e.g. "1+2q+q^3"; zero prints "0".
    std::string to_string() const;

  private:
    void normalize();
    std::vector<Int> coeffs_;
};

// [n]_q = 1 + q + ... + q^{n-1}.
QPoly q_int(long n);
// [n]_q! = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(long n);
// Gaussian binomial; computed by exact division.
QPoly q_binomial(long n, long k);
// q-multinomial for a composition of n; parts must sum to n.
QPoly q_multinomial(long n, const std::vector<long>& parts);

struct PermStats {
    long maj = 0;
    long inv = 0;
    std::vector<long> descents;  // 1-based positions i with w[i] > w[i+1]
};

// Statistics of a word of distinct integers (1-based positions).
PermStats perm_stats(const std::vector<int>& word);

}  // namespace lecount
