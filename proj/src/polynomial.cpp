#include "p1146/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace p1146 {

Scalar make_scalar(const Integer& num, const Integer& den)
{
    if (den == 0) throw DomainError("zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw ParseError("bad integer in '" + std::string(text) + "'");
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_scalar(n, d);
}

std::uint64_t total_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const
{
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<std::string> names)
    : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto& n = names_[i];
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw DomainError("invalid variable name '" + n + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == n) throw DomainError("duplicate variable name '" + n + "'");
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const
{
    if (auto i = index_of(name)) return *i;
    throw ArityError("variable '" + std::string(name) + "' is not in the ring");
}

RingPtr make_ring(std::vector<std::string> names)
{
    return std::make_shared<const Ring>(std::move(names));
}

namespace rings {

const RingPtr& projective3()
{
    static const RingPtr r = make_ring({"x1", "x2", "x3", "x4"});
    return r;
}

const RingPtr& pencil()
{
    static const RingPtr r = make_ring({"t", "x1", "x3", "x4"});
    return r;
}

RingPtr weighted_target(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return make_ring(std::move(names));
}

} // namespace rings

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring)
    : ring_(std::move(ring))
{
    if (!ring_) throw DomainError("polynomial needs a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c)
{
    Polynomial p(std::move(ring));
    p.add_term(Monomial(p.ring_->arity(), 0), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name)
{
    Monomial m(ring->arity(), 0);
    m[ring->require_index(name)] = 1;
    return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial exponents, const Scalar& c)
{
    Polynomial p(std::move(ring));
    if (exponents.size() != p.ring_->arity())
        throw ArityError("monomial length " + std::to_string(exponents.size()) + " does not match ring arity "
                         + std::to_string(p.ring_->arity()));
    p.add_term(exponents, c);
    return p;
}

std::optional<std::uint64_t> Polynomial::degree() const
{
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);
}

std::uint32_t Polynomial::degree_in(std::string_view var) const
{
    auto i = ring_->require_index(var);
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Scalar Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const
{
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *terms_.begin();
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    Scalar inv = 1 / leading_term().second;
    return *this * inv;
}

void Polynomial::check_same_ring(const Polynomial& g, const char* op) const
{
    if (ring_ != g.ring_ && !(*ring_ == *g.ring_))
        throw ArityError(std::string(op) + ": operands belong to different rings");
}

void Polynomial::add_term(const Monomial& m, const Scalar& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& g)
{
    check_same_ring(g, "add");
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g)
{
    check_same_ring(g, "subtract");
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g)
{
    f.check_same_ring(g, "mul");
    Polynomial r(f.ring_);
    Monomial m(f.ring_->arity());
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = mf[i] + mg[i];
            r.add_term(m, cf * cg);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& g)
{
    *this = *this * g;
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const
{
    return *ring_ == *g.ring_ && terms_ == g.terms_;
}

// Terms are written largest first. Only the first term carries its sign inside the
// coefficient; later terms are joined with '+' or '-'. A leading coefficient of -1 on a
// non-constant term is written "-1*..." because the grammar has no bare unary minus.
std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar coeff = c;
        if (!first) {
            out += coeff < 0 ? '-' : '+';
            coeff = abs(coeff);
        }
        bool constant = total_degree(m) == 0;
        bool need_star = false;
        if (constant || coeff != 1) {
            out += coeff.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out += '*';
            out += ring_->name(i);
            if (m[i] > 1) out += '^' + std::to_string(m[i]);
            need_star = true;
        }
        first = false;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const RingPtr& ring, std::string_view text)
        : ring_(ring)
        , text_(text)
    {
    }

    Polynomial run()
    {
        Polynomial result(ring_);
        skip_ws();
        if (at_end()) fail("empty input");

        // A sign before the first term belongs to its integer coefficient; "-x1" is
        // accepted as shorthand for "-1*x1".
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        result += term(negative);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            result += term(op == '-');
        }
        return result;
    }

private:
    Polynomial term(bool negative)
    {
        Scalar coeff = 1;
        Monomial m(ring_->arity(), 0);
        if (std::isdigit(static_cast<unsigned char>(peek())))
            coeff = coefficient();
        else
            factor(m);
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            skip_ws();
            factor(m);
        }
        if (negative) coeff = -coeff;
        return Polynomial::monomial(ring_, std::move(m), coeff);
    }

    Scalar coefficient()
    {
        std::string num = digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::string den = digits();
            Integer d(den);
            if (d == 0) fail("zero denominator");
            return make_scalar(Integer(num), d);
        }
        return Scalar(Integer(num));
    }

    void factor(Monomial& m)
    {
        std::size_t start = pos_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected a variable name");
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::string d = digits();
            if (d.size() > 9) fail("exponent too large");
            e = static_cast<std::uint32_t>(std::stoul(d));
        }
        m[*idx] += e;
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text)
{
    return Parser(ring, text).run();
}

Polynomial pow(const Polynomial& f, unsigned k)
{
    Polynomial result = Polynomial::constant(f.ring(), 1);
    Polynomial base = f;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target)
{
    const auto& ring = *f.ring();
    if (images.size() != ring.arity())
        throw SubstitutionError("expected " + std::to_string(ring.arity()) + " images, got "
                                + std::to_string(images.size()));
    for (const auto& img : images)
        if (!(*img.ring() == *target)) throw ArityError("substitution images must share the target ring");

    // powers[i][e] caches images[i]^e
    std::vector<std::vector<Polynomial>> powers(ring.arity());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Polynomial result(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term *= power(i, m[i]);
        result += term;
    }
    return result;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images, const RingPtr& target)
{
    const auto& ring = *f.ring();
    std::vector<bool> used(ring.arity(), false);
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) used[i] = true;

    std::vector<Polynomial> positional;
    positional.reserve(ring.arity());
    for (std::size_t i = 0; i < ring.arity(); ++i) {
        auto it = images.find(ring.name(i));
        if (it != images.end()) {
            positional.push_back(it->second);
        }
        else if (used[i]) {
            throw SubstitutionError("no image for variable '" + ring.name(i) + "'");
        }
        else {
            positional.emplace_back(target);
        }
    }
    return substitute(f, positional, target);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g)
{
    if (!(*f.ring() == *g.ring())) throw ArityError("exact_divide: operands belong to different rings");
    if (g.is_zero()) throw DivisibilityError("division by the zero polynomial");

    const auto& [lead_m, lead_c] = g.leading_term();
    Polynomial quotient(f.ring());
    Polynomial rest = f;
    // Exact division in any monomial order: LT(q*g) = LT(q)*LT(g), so the leading term
    // of every intermediate remainder must be divisible by LT(g).
    while (!rest.is_zero()) {
        const auto& [m, c] = rest.leading_term();
        Monomial qm(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < lead_m[i])
                throw DivisibilityError("'" + g.to_string() + "' does not divide '" + f.to_string() + "'");
            qm[i] = m[i] - lead_m[i];
        }
        auto q = Polynomial::monomial(f.ring(), std::move(qm), c / lead_c);
        rest -= q * g;
        quotient += q;
    }
    return quotient;
}

Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point)
{
    if (point.size() != f.ring()->arity()) throw ArityError("evaluation point has the wrong length");
    Scalar total = 0;
    for (const auto& [m, c] : f.terms()) {
        Scalar v = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

} // namespace p1146
