#ifndef EQUICHAIN_CATEGORY_HPP
#define EQUICHAIN_CATEGORY_HPP

#include <memory>
#include <optional>
#include <string>
#include <typeinfo>
#include <vector>

#include "equichain/error.hpp"

namespace equichain {

/// The underlying-set map of a morphism phi: A -> B as positions into the
/// element listings: elements(A)[i] maps to elements(B)[map[i]]. Morphisms
/// are identified with their set maps (the forgetful functor is faithful).
using SetMap = std::vector<int>;

/// Type-erased immutable object of some category instance. The key is a
/// stable serialization used for ordering, deduplication and memoization.
class CatObject {
public:
    CatObject() = default;

    template <class T>
    static CatObject make(std::string key, int size, T payload) {
        CatObject o;
        o.key_ = std::move(key);
        o.size_ = size;
        o.payload_ = std::make_shared<const T>(std::move(payload));
        o.type_ = &typeid(T);
        return o;
    }

    const std::string& key() const { return key_; }
    /// |A|, the number of elements of the underlying set.
    int size() const { return size_; }
    bool valid() const { return type_ != nullptr; }

    template <class T>
    const T& as() const {
        if (!type_ || *type_ != typeid(T))
            throw Error(Errc::instance_mismatch, "object '" + key_ + "' belongs to another instance");
        return *static_cast<const T*>(payload_.get());
    }

    bool operator==(const CatObject& o) const { return key_ == o.key_; }

private:
    std::shared_ptr<const void> payload_;
    const std::type_info* type_ = nullptr;
    std::string key_;
    int size_ = 0;
};

/// A finitary FI-concrete category: objects are labeled representatives,
/// morphisms are enumerated as injective set maps. Implementations are
/// stateless and safe for concurrent use.
class CategoryInstance {
public:
    virtual ~CategoryInstance() = default;

    virtual std::string name() const = 0;

    /// All objects with |A| <= size_bound, in a deterministic order. These
    /// are labeled representatives; callers dedup isomorphism classes.
    virtual std::vector<CatObject> objects_up_to(int size_bound) const = 0;

    /// The underlying set |A| as an ordered list of element names. For
    /// orderable instances the listing order is the category ordering.
    virtual std::vector<std::string> elements(const CatObject& a) const = 0;

    /// The hom-set hom(A, B), deterministic order, no duplicates.
    virtual std::vector<SetMap> morphisms(const CatObject& a, const CatObject& b) const = 0;

    /// Whether the instance carries an ordering (a total order on every |A|
    /// making all morphisms monotone).
    virtual bool orderable() const = 0;

    /// Parses an object serialization as produced by CatObject::key().
    virtual CatObject parse_object(const std::string& text) const = 0;

    /// The total order on |A|, or nullopt for unorderable instances.
    std::optional<std::vector<std::string>> ordering(const CatObject& a) const {
        if (!orderable()) return std::nullopt;
        return elements(a);
    }
};

} // namespace equichain

#endif
