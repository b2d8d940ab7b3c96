#ifndef EQUICHAIN_POSET_HPP
#define EQUICHAIN_POSET_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichain/category.hpp"
#include "equichain/error.hpp"

namespace equichain {

/// Componentwise order on N^m (Dickson); arity_mismatch on unequal lengths.
bool dickson_leq(const std::vector<int>& a, const std::vector<int>& b);

/// Higman order on words over a quasi-ordered alphabet: u <= v iff some
/// strictly increasing position map dominates letterwise. Leftmost-greedy
/// matching, which agrees with the brute-force search over monotone
/// injections (any witness can be shifted left).
template <class P, class Leq>
bool higman_leq(const std::vector<P>& u, const std::vector<P>& v, Leq&& alphabet_leq) {
    size_t j = 0;
    for (const P& letter : u) {
        while (j < v.size() && !alphabet_leq(letter, v[j])) ++j;
        if (j == v.size()) return false;
        ++j;
    }
    return true;
}

inline bool higman_leq_nat(const std::vector<int>& u, const std::vector<int>& v) {
    return higman_leq(u, v, [](int a, int b) { return a <= b; });
}

/// First pair (i, j), i < j, comparable in either direction; nullopt when
/// the family is an antichain.
template <class T, class Leq>
std::optional<std::pair<size_t, size_t>> antichain_violation(const std::vector<T>& elems,
                                                             Leq&& leq) {
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (leq(elems[i], elems[j]) || leq(elems[j], elems[i])) return std::make_pair(i, j);
    return std::nullopt;
}

template <class T, class Leq>
bool antichain_check(const std::vector<T>& elems, Leq&& leq) {
    return !antichain_violation(elems, std::forward<Leq>(leq)).has_value();
}

/// A weighted object (A, alpha): weights are aligned with the instance's
/// element listing for A. Its isomorphism class is a point of M(C).
struct WeightedObject {
    CatObject object;
    std::vector<int> weights;

    std::string describe(const CategoryInstance& inst) const;
};

/// [A,alpha] <= [B,beta]: some morphism phi: A -> B has alpha(x) <=
/// beta(phi(x)) for every x. Decided by enumerating hom(A, B).
bool weighted_leq(const CategoryInstance& inst, const WeightedObject& a, const WeightedObject& b);

/// Equality of classes in M(C): some bijective morphism matches the
/// weightings exactly (the underlying functor is conservative, so bijective
/// morphisms are isomorphisms).
bool weighted_iso(const CategoryInstance& inst, const WeightedObject& a, const WeightedObject& b);

/// [A] <= [B] in M°: A embeds into (a translate of) B, i.e. hom(A, B) is
/// non-empty. Coincides with weighted_leq on all-ones weightings.
bool subset_class_leq(const CategoryInstance& inst, const CatObject& a, const CatObject& b);

/// An up-closed order ideal of M(C), stored by its minimal-generator
/// antichain; membership means dominating some generator. Single writer.
class OrderIdeal {
public:
    explicit OrderIdeal(const CategoryInstance& inst) : inst_(&inst) {}

    const CategoryInstance& instance() const { return *inst_; }
    const std::vector<WeightedObject>& generators() const { return gens_; }

    /// Inserts a class and re-minimalizes; no-op if already contained.
    void insert(WeightedObject w);
    bool contains(const WeightedObject& w) const;

private:
    const CategoryInstance* inst_;
    std::vector<WeightedObject> gens_;
};

} // namespace equichain

#endif
