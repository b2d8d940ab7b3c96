#include "equichain/poset.hpp"

#include <algorithm>

namespace equichain {

bool dickson_leq(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw Error(Errc::arity_mismatch, "Dickson order needs equal arity");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string WeightedObject::describe(const CategoryInstance& inst) const {
    std::vector<std::string> names = inst.elements(object);
    std::string out = object.key() + " weights: {";
    bool first = true;
    for (size_t i = 0; i < names.size(); ++i) {
        if (weights[i] == 0) continue;
        if (!first) out += ", ";
        first = false;
        out += names[i] + ": " + std::to_string(weights[i]);
    }
    out += "}";
    return out;
}

namespace {

void check_weights(const CategoryInstance& inst, const WeightedObject& w) {
    if (w.weights.size() != static_cast<size_t>(w.object.size()))
        throw Error(Errc::instance_mismatch, "weighting does not cover |A|");
    for (int v : w.weights)
        if (v < 0) throw Error(Errc::invalid_argument, "weights must be non-negative");
    (void)inst;
}

} // namespace

bool weighted_leq(const CategoryInstance& inst, const WeightedObject& a, const WeightedObject& b) {
    check_weights(inst, a);
    check_weights(inst, b);
    for (const SetMap& phi : inst.morphisms(a.object, b.object)) {
        bool ok = true;
        for (size_t i = 0; i < phi.size() && ok; ++i) ok = a.weights[i] <= b.weights[phi[i]];
        if (ok) return true;
    }
    return false;
}

bool weighted_iso(const CategoryInstance& inst, const WeightedObject& a, const WeightedObject& b) {
    check_weights(inst, a);
    check_weights(inst, b);
    if (a.object.size() != b.object.size()) return false;
    for (const SetMap& phi : inst.morphisms(a.object, b.object)) {
        bool ok = true;
        for (size_t i = 0; i < phi.size() && ok; ++i) ok = a.weights[i] == b.weights[phi[i]];
        if (ok) return true;
    }
    return false;
}

bool subset_class_leq(const CategoryInstance& inst, const CatObject& a, const CatObject& b) {
    return !inst.morphisms(a, b).empty();
}

void OrderIdeal::insert(WeightedObject w) {
    if (contains(w)) return;
    std::vector<WeightedObject> next;
    for (auto& g : gens_)
        if (!weighted_leq(*inst_, w, g)) next.push_back(std::move(g));
    next.push_back(std::move(w));
    gens_ = std::move(next);
}

bool OrderIdeal::contains(const WeightedObject& w) const {
    for (const auto& g : gens_)
        if (weighted_leq(*inst_, g, w)) return true;
    return false;
}

} // namespace equichain
