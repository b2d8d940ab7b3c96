#ifndef EQUICHAIN_POLYNOMIAL_HPP
#define EQUICHAIN_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "equichain/rational.hpp"

namespace equichain {

/// An ordered list of distinct variable names. Variables are listed in
/// ascending category order, and the induced lex order makes the variable
/// that comes LATER in the list lex-SMALLER; so with variables x1,x2,...,x6
/// the leading monomial of the discriminant is x1^5 x2^4 ... x6^0.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(size_t i) const { return names_[i]; }
    /// Position of a variable, or -1 if absent.
    int index_of(const std::string& name) const;

    bool operator==(const VariableSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using Ring = std::shared_ptr<const VariableSet>;
Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& a, const Ring& b);

/// Exponent vector aligned with a VariableSet.
using Exponents = std::vector<int>;

/// Lex comparison honoring the convention above: compare exponents starting
/// at the first-listed (lex-greatest) variable. Returns <0, 0, >0.
int lex_compare(const Exponents& a, const Exponents& b);

int exponents_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents exponents_lcm(const Exponents& a, const Exponents& b);

struct Term {
    Exponents expo;
    Rational coeff;
};

/// Immutable sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted in descending lex order with no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, const Rational& c);
    static Polynomial variable(const Ring& r, const std::string& name);
    static Polynomial monomial(const Ring& r, Exponents e, Rational c);
    /// Takes arbitrary (exponents, coefficient) pairs, merges and sorts.
    static Polynomial from_terms(const Ring& r, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Leading term under lex; throws zero_polynomial on the zero polynomial.
    const Term& init() const;

    /// Maximum total degree (-1 for the zero polynomial).
    int total_degree() const;
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    /// Evaluation at a point given in ring variable order.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// ASCII form like `3/2*x1^2*x3 - x2`.
    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

/// Applies an injective variable renaming into the target ring; the map must
/// cover every variable occurring in f (bad_renaming otherwise). This is the
/// ring homomorphism sending each variable to its image.
Polynomial rename(const Polynomial& f, const std::map<std::string, std::string>& phi,
                  const Ring& target);

/// Product of (x_i - x_j) over i < j in the given variable list order;
/// requires at least two variables, all distinct and present in the ring.
Polynomial discriminant(const Ring& r, const std::vector<std::string>& vars);

/// Parses `3/2*x1^2*x3 - x2` style text. `disc(a,b,...)` expands to the
/// discriminant on variables `xa, xb, ...` (falling back to the literal
/// names if no x-prefixed variable exists). Throws parse_error.
Polynomial parse_polynomial(const std::string& text, const Ring& r);

} // namespace equichain

#endif
