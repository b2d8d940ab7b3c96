#include "equichain/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "equichain/error.hpp"

namespace equichain {

bool GroebnerBasis::unit_ideal() const {
    return basis.size() == 1 && basis.front().total_degree() == 0;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    if (!same_ring(ring, o.ring) || basis.size() != o.basis.size()) return false;
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] != o.basis[i]) return false;
    return true;
}

namespace {

Polynomial make_monic(const Polynomial& f) {
    return f * (Rational(1) / f.init().coeff);
}

Exponents quotient(const Exponents& a, const Exponents& b) {
    Exponents q(a.size());
    for (size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
    return q;
}

Polynomial reduce_once(const Polynomial& f, const std::vector<Polynomial>& basis, bool* changed) {
    // reduce the greatest reducible term of f
    for (const auto& t : f.terms()) {
        for (const auto& g : basis) {
            if (!divides(g.init().expo, t.expo)) continue;
            Rational c = t.coeff / g.init().coeff;
            Polynomial multiple =
                g * Polynomial::monomial(f.ring(), quotient(t.expo, g.init().expo), c);
            *changed = true;
            return f - multiple;
        }
    }
    *changed = false;
    return f;
}

Polynomial full_reduce(Polynomial f, const std::vector<Polynomial>& basis) {
    bool changed = true;
    while (changed && !f.is_zero()) f = reduce_once(f, basis, &changed);
    return f;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Exponents lcm = exponents_lcm(f.init().expo, g.init().expo);
    Polynomial mf = Polynomial::monomial(f.ring(), quotient(lcm, f.init().expo),
                                         Rational(1) / f.init().coeff);
    Polynomial mg = Polynomial::monomial(g.ring(), quotient(lcm, g.init().expo),
                                         Rational(1) / g.init().coeff);
    return f * mf - g * mg;
}

} // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring)) throw Error(Errc::ring_mismatch, "generator in wrong ring");
        if (!g.is_zero()) basis.push_back(make_monic(g));
    }

    // pair queue keyed by (lcm degree, lcm, indices): the normal strategy
    using PairKey = std::tuple<int, Exponents, size_t, size_t>;
    auto key_of = [&](size_t i, size_t j) {
        Exponents lcm = exponents_lcm(basis[i].init().expo, basis[j].init().expo);
        return PairKey{exponents_degree(lcm), lcm, i, j};
    };
    std::set<PairKey> queue;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) queue.insert(key_of(i, j));

    while (!queue.empty()) {
        auto [deg, lcm, i, j] = *queue.begin();
        queue.erase(queue.begin());
        (void)deg;
        // coprime leading terms: the S-polynomial reduces to zero
        Exponents sum(lcm.size());
        for (size_t k = 0; k < lcm.size(); ++k)
            sum[k] = basis[i].init().expo[k] + basis[j].init().expo[k];
        if (sum == lcm) continue;

        Polynomial r = full_reduce(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r));
        for (size_t k = 0; k + 1 < basis.size(); ++k) queue.insert(key_of(k, basis.size() - 1));
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Exponents& lt_i = basis[i].init().expo;
            const Exponents& lt_j = basis[j].init().expo;
            if (!divides(lt_j, lt_i)) continue;
            if (lt_i == lt_j) redundant = j < i; // keep the first of equal leads
            else redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // interreduce to the reduced basis
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = full_reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(make_monic(r));
    }

    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return lex_compare(a.init().expo, b.init().expo) > 0;
    });
    return GroebnerBasis{ring, std::move(reduced)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!same_ring(f.ring(), gb.ring)) throw Error(Errc::ring_mismatch, "polynomial in wrong ring");
    return full_reduce(f, gb.basis);
}

bool member(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

SpanResult graded_span_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
    int degree = -1;
    auto check = [&](const Polynomial& g) {
        if (g.is_zero()) return;
        if (!g.is_homogeneous())
            throw Error(Errc::not_homogeneous, "graded span requires homogeneous input");
        int d = g.total_degree();
        if (degree == -1) degree = d;
        else if (degree != d)
            throw Error(Errc::not_homogeneous, "graded span requires a single common degree");
    };
    check(f);
    for (const auto& g : gens) {
        if (!g.is_zero() && !same_ring(g.ring(), f.ring()))
            throw Error(Errc::ring_mismatch, "generator in wrong ring");
        check(g);
    }

    // row echelon over the degree-d monomial basis; each pivot row remembers
    // its expression in the original generators
    struct Row {
        Polynomial poly;
        std::map<int, Rational> combo;
    };
    std::vector<Row> pivots;

    auto reduce_against = [&](Polynomial p, std::map<int, Rational> combo) {
        while (!p.is_zero()) {
            const Term& lead = p.init();
            const Row* hit = nullptr;
            for (const auto& row : pivots)
                if (row.poly.init().expo == lead.expo) {
                    hit = &row;
                    break;
                }
            if (!hit) break;
            Rational c = lead.coeff / hit->poly.init().coeff;
            p = p - hit->poly * c;
            for (const auto& [idx, v] : hit->combo) {
                combo[idx] -= c * v;
                if (combo[idx] == 0) combo.erase(idx);
            }
        }
        return Row{std::move(p), std::move(combo)};
    };

    SpanResult res;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        Row row = reduce_against(gens[i], {{static_cast<int>(i), Rational(1)}});
        if (!row.poly.is_zero()) pivots.push_back(std::move(row));
    }
    res.rank_generators = static_cast<int>(pivots.size());

    if (f.is_zero()) {
        res.member = true;
        res.rank_extended = res.rank_generators;
        return res;
    }
    Row rem = reduce_against(f, {});
    if (rem.poly.is_zero()) {
        res.member = true;
        res.rank_extended = res.rank_generators;
        // rem.combo holds -(coefficients of f in the generators)
        for (auto& [idx, c] : rem.combo) res.combination.emplace_back(idx, -c);
    } else {
        res.member = false;
        res.rank_extended = res.rank_generators + 1;
    }
    return res;
}

} // namespace equichain
