#ifndef EQUICHAIN_INSTANCES_HPP
#define EQUICHAIN_INSTANCES_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equichain/boron_tree.hpp"
#include "equichain/category.hpp"
#include "equichain/ordered_tree.hpp"

namespace equichain {

/// All injections [n] -> [m] (0-based values), lexicographic by image tuple.
std::vector<std::vector<int>> all_injections(int n, int m);
/// The monotone ones, i.e. sorted n-subsets of [m].
std::vector<std::vector<int>> monotone_injections(int n, int m);

/// FI with the |.|_m underlying-set functor: objects are [n], morphisms all
/// injections; elements are pairs (i, j) with j in [m], named "i_j" (plain
/// "i" when m = 1). Not orderable.
class FiInstance : public CategoryInstance {
public:
    explicit FiInstance(int multiplicity = 1);
    std::string name() const override;
    std::vector<CatObject> objects_up_to(int size_bound) const override;
    std::vector<std::string> elements(const CatObject& a) const override;
    std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const override;
    bool orderable() const override { return false; }
    CatObject parse_object(const std::string& text) const override;

    static CatObject object(int n, int multiplicity = 1);

private:
    int mult_;
};

/// OI: totally ordered sets with monotone injections; orderable. The |.|_m
/// variant orders |A| x [m] lexicographically, which every |phi|_m respects.
class OiInstance : public CategoryInstance {
public:
    explicit OiInstance(int multiplicity = 1);
    std::string name() const override;
    std::vector<CatObject> objects_up_to(int size_bound) const override;
    std::vector<std::string> elements(const CatObject& a) const override;
    std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const override;
    bool orderable() const override { return true; }
    CatObject parse_object(const std::string& text) const override;

private:
    int mult_;
};

/// Block OI: hom([n],[m]) is the m-n+1 shift maps j -> j+i. (For n = 0 all
/// shifts share the empty set map, so the hom-set is a single morphism.)
class BoiInstance : public CategoryInstance {
public:
    std::string name() const override { return "boi"; }
    std::vector<CatObject> objects_up_to(int size_bound) const override;
    std::vector<std::string> elements(const CatObject& a) const override;
    std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const override;
    bool orderable() const override { return true; }
    CatObject parse_object(const std::string& text) const override;
};

/// Finite totally ordered sets with a c-coloring; morphisms are monotone
/// color-preserving injections. Objects serialize as "[1,2,1]".
class ColoredLinearInstance : public CategoryInstance {
public:
    explicit ColoredLinearInstance(int colors);
    std::string name() const override;
    std::vector<CatObject> objects_up_to(int size_bound) const override;
    std::vector<std::string> elements(const CatObject& a) const override;
    std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const override;
    bool orderable() const override { return true; }
    CatObject parse_object(const std::string& text) const override;

    static CatObject object(const std::vector<int>& colors);

private:
    int colors_;
};

/// Boron trees with quartet-preserving embeddings; elements are the leaf
/// labels in natural order. Enumeration runs over leaf sets {1..n}, n >= 2.
class BoronInstance : public CategoryInstance {
public:
    std::string name() const override { return "boron"; }
    std::vector<CatObject> objects_up_to(int size_bound) const override;
    std::vector<std::string> elements(const CatObject& a) const override;
    std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const override;
    bool orderable() const override { return false; }
    CatObject parse_object(const std::string& text) const override;

    static CatObject object(const BoronTree& t);
};

/// Ordered boron trees with root- and order-preserving embeddings; elements
/// are the leaves in their total order (root last). Carries the canonical
/// ordering of the auxiliary category.
class OrderedBoronInstance : public CategoryInstance {
public:
    std::string name() const override { return "ordered_boron"; }
    std::vector<CatObject> objects_up_to(int size_bound) const override;
    std::vector<std::string> elements(const CatObject& a) const override;
    std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const override;
    bool orderable() const override { return true; }
    CatObject parse_object(const std::string& text) const override;

    static CatObject object(const OrderedBoronTree& t);
};

/// Finite subsets of N x N acted on diagonally by finitary injections of N:
/// a morphism A -> B is the restriction of some g x g with (g x g)(A) in B.
/// Objects serialize as "{(1,2),(2,3)}"; "cycle(n)" parses to the n-cycle
/// {(1,2),...,(n-1,n),(n,1)}. Enumeration covers subsets of [b] x [b] of
/// size at most b. Not orderable.
class PairFiInstance : public CategoryInstance {
public:
    std::string name() const override { return "pair_fi"; }
    std::vector<CatObject> objects_up_to(int size_bound) const override;
    std::vector<std::string> elements(const CatObject& a) const override;
    std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const override;
    bool orderable() const override { return false; }
    CatObject parse_object(const std::string& text) const override;

    static CatObject object(std::vector<std::pair<int, int>> pairs);
    static CatObject cycle(int n);
};

/// Builds an instance from a descriptor: fi, oi, boi, fi_m m=K, oi_m m=K,
/// colored_linear c=K, boron, ordered_boron, pair_fi.
std::unique_ptr<CategoryInstance> make_instance(const std::string& descriptor);

/// A concrete functor: an object map whose underlying sets are identified
/// with the identity (element name lists agree up to reordering) and whose
/// morphism map is inclusion of set maps.
struct ConcreteFunctor {
    std::string description;
    const CategoryInstance* dom = nullptr;
    const CategoryInstance* cod = nullptr;
    std::function<CatObject(const CatObject&)> object_map;
};

/// The forgetful functor for the supported pairs: ordered_boron -> boron,
/// oi -> fi and oi_m -> fi_m (equal multiplicities), or the identity when
/// both arguments are the same instance. Throws no_such_functor otherwise.
ConcreteFunctor forgetful_functor(const CategoryInstance& from, const CategoryInstance& to);

/// Checks concreteness on the enumerated range: element sets agree and every
/// dom-morphism's set map appears in the codomain hom-set. Returns a
/// description of the first failure, if any.
std::optional<std::string> check_concrete(const ConcreteFunctor& f, int size_bound);

/// Every codomain object with |A| <= bound is isomorphic to the image of
/// some domain object.
bool essentially_surjective_on(const ConcreteFunctor& f, int size_bound);

} // namespace equichain

#endif
