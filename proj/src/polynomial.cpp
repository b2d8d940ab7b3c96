#include "equichain/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "equichain/error.hpp"

namespace equichain {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error(Errc::invalid_argument, "empty variable name");
        auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
        (void)it;
        if (!fresh) throw Error(Errc::invalid_argument, "duplicate variable '" + names_[i] + "'");
    }
}

int VariableSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

Ring make_ring(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

int lex_compare(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw Error(Errc::ring_mismatch, "exponent vectors of different lengths");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int exponents_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exponents_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Polynomial Polynomial::constant(const Ring& r, const Rational& c) {
    return monomial(r, Exponents(r->size(), 0), c);
}

Polynomial Polynomial::variable(const Ring& r, const std::string& name) {
    int i = r->index_of(name);
    if (i < 0) throw Error(Errc::ring_mismatch, "variable '" + name + "' not in ring");
    Exponents e(r->size(), 0);
    e[i] = 1;
    return monomial(r, std::move(e), 1);
}

Polynomial Polynomial::monomial(const Ring& r, Exponents e, Rational c) {
    if (e.size() != r->size()) throw Error(Errc::ring_mismatch, "exponent vector size mismatch");
    Polynomial f(r);
    if (c != 0) f.terms_.push_back({std::move(e), std::move(c)});
    return f;
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> terms) {
    std::map<Exponents, Rational> acc;
    for (auto& t : terms) {
        if (t.expo.size() != r->size())
            throw Error(Errc::ring_mismatch, "exponent vector size mismatch");
        acc[t.expo] += t.coeff;
    }
    Polynomial f(r);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) f.terms_.push_back({it->first, it->second});
    // std::map sorts ascending componentwise-lex, which is exactly our lex
    // order; reverse iteration yields descending terms.
    return f;
}

const Term& Polynomial::init() const {
    if (terms_.empty()) throw Error(Errc::zero_polynomial, "zero polynomial has no initial term");
    return terms_.front();
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, exponents_degree(t.expo));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = exponents_degree(terms_.front().expo);
    for (const auto& t : terms_)
        if (exponents_degree(t.expo) != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    if (!same_ring(ring_, g.ring_)) throw Error(Errc::ring_mismatch, "polynomial rings differ");
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
        int cmp;
        if (i == terms_.size()) cmp = -1;
        else if (j == g.terms_.size()) cmp = 1;
        else cmp = lex_compare(terms_[i].expo, g.terms_[j].expo);
        if (cmp > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            out.terms_.push_back(g.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + g.terms_[j].coeff;
            if (c != 0) out.terms_.push_back({terms_[i].expo, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
    if (!same_ring(ring_, g.ring_)) throw Error(Errc::ring_mismatch, "polynomial rings differ");
    std::map<Exponents, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : g.terms_) {
            Exponents e(a.expo.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = a.expo[k] + b.expo[k];
            acc[std::move(e)] += a.coeff * b.coeff;
        }
    Polynomial out(ring_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.terms_.push_back({it->first, it->second});
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (!same_ring(ring_, g.ring_)) throw Error(Errc::ring_mismatch, "polynomial rings differ");
    if (terms_.size() != g.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].expo != g.terms_[i].expo || terms_[i].coeff != g.terms_[i].coeff) return false;
    return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->size())
        throw Error(Errc::arity_mismatch, "evaluation point has wrong arity");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < t.expo[i]; ++k) prod *= point[i];
        sum += prod;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (size_t v = 0; v < t.expo.size(); ++v) {
            if (t.expo[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->name(v);
            if (t.expo[v] > 1) vars += "^" + std::to_string(t.expo[v]);
        }
        if (vars.empty()) {
            out += equichain::to_string(c);
        } else if (c == 1) {
            out += vars;
        } else {
            out += equichain::to_string(c) + "*" + vars;
        }
    }
    return out;
}

Polynomial rename(const Polynomial& f, const std::map<std::string, std::string>& phi,
                  const Ring& target) {
    std::set<std::string> images;
    for (const auto& [from, to] : phi) {
        (void)from;
        if (!images.insert(to).second)
            throw Error(Errc::bad_renaming, "renaming is not injective at '" + to + "'");
    }

    const VariableSet& src = *f.ring();
    std::vector<int> position(src.size(), -1); // src index -> target index
    for (size_t i = 0; i < src.size(); ++i) {
        auto it = phi.find(src.name(i));
        if (it != phi.end()) {
            int j = target->index_of(it->second);
            if (j < 0)
                throw Error(Errc::bad_renaming, "image '" + it->second + "' not in target ring");
            position[i] = j;
        }
    }

    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Exponents e(target->size(), 0);
        for (size_t i = 0; i < src.size(); ++i) {
            if (t.expo[i] == 0) continue;
            if (position[i] < 0)
                throw Error(Errc::bad_renaming, "variable '" + src.name(i) + "' has no image");
            e[position[i]] += t.expo[i];
        }
        out.push_back({std::move(e), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

Polynomial discriminant(const Ring& r, const std::vector<std::string>& vars) {
    if (vars.size() < 2)
        throw Error(Errc::invalid_argument, "discriminant needs at least two variables");
    std::set<std::string> distinct(vars.begin(), vars.end());
    if (distinct.size() != vars.size())
        throw Error(Errc::bad_renaming, "discriminant variables must be distinct");
    Polynomial prod = Polynomial::constant(r, 1);
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            prod = prod * (Polynomial::variable(r, vars[i]) - Polynomial::variable(r, vars[j]));
    return prod;
}

namespace {

struct PolyParser {
    const std::string& text;
    const Ring& ring;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::parse_error, "at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string ident() {
        skip_ws();
        std::string out;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            out += text[pos++];
        if (out.empty()) fail("expected an identifier");
        return out;
    }

    long integer() {
        skip_ws();
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out += text[pos++];
        if (out.empty()) fail("expected a number");
        return std::stol(out);
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            long e = integer();
            Polynomial pow = Polynomial::constant(ring, 1);
            for (long k = 0; k < e; ++k) pow = pow * base;
            return pow;
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) fail("division by zero");
                return Polynomial::constant(ring, rational_of(num, den));
            }
            return Polynomial::constant(ring, rational_of(num));
        }
        std::string name = ident();
        if (name == "disc" && peek() == '(') {
            ++pos;
            std::vector<std::string> vars;
            do {
                vars.push_back(resolve(ident()));
            } while (eat(','));
            if (!eat(')')) fail("expected ')'");
            return discriminant(ring, vars);
        }
        if (ring->index_of(name) < 0) fail("unknown variable '" + name + "'");
        return Polynomial::variable(ring, name);
    }

    // disc() arguments are element names; variables are conventionally the
    // element name with an 'x' prefix.
    std::string resolve(const std::string& element) const {
        if (ring->index_of("x" + element) >= 0) return "x" + element;
        if (ring->index_of(element) >= 0) return element;
        throw Error(Errc::parse_error, "no variable for element '" + element + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& r) {
    PolyParser p{text, r};
    Polynomial f = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

} // namespace equichain
