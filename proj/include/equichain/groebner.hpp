#ifndef EQUICHAIN_GROEBNER_HPP
#define EQUICHAIN_GROEBNER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "equichain/polynomial.hpp"

namespace equichain {

/// A reduced Groebner basis under the ring's lex order: monic elements, no
/// term of any element divisible by another's leading term, sorted with
/// descending leading monomials. Reduced bases are unique, so equality of
/// bases decides equality of ideals.
struct GroebnerBasis {
    Ring ring;
    std::vector<Polynomial> basis;

    bool zero_ideal() const { return basis.empty(); }
    bool unit_ideal() const;
    bool operator==(const GroebnerBasis& o) const;
};

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first, lex ties) and the coprime-leading-term criterion, followed
/// by minimalization and full interreduction.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens);

/// Remainder of f under multivariate division by the basis; deterministic
/// (greatest reducible term first, first dividing basis element wins).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// True iff f reduces to zero, i.e. f lies in the ideal.
bool member(const Polynomial& f, const GroebnerBasis& gb);

/// Exact linear algebra over a single graded piece.
struct SpanResult {
    bool member = false;
    int rank_generators = 0;
    int rank_extended = 0;
    /// f = sum coeff * gens[index] when member (indices into the input list).
    std::vector<std::pair<int, Rational>> combination;
};

/// Decides whether f lies in the rational linear span of gens; all nonzero
/// inputs must be homogeneous of one common degree (not_homogeneous
/// otherwise). When an ideal is generated in a single degree d, its degree-d
/// piece equals this span, so this decides degree-d ideal membership.
SpanResult graded_span_member(const Polynomial& f, const std::vector<Polynomial>& gens);

} // namespace equichain

#endif
