#include "omegact/laurent.hpp"

#include "omegact/error.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <unordered_map>

namespace omegact {

LaurentPoly::LaurentPoly(Rational constant) {
    if (!omegact::is_zero(constant))
        terms_.push_back({Monomial(), std::move(constant)});
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly::LaurentPoly(Rational coeff, Monomial mono) {
    if (!omegact::is_zero(coeff))
        terms_.push_back({std::move(mono), std::move(coeff)});
}

LaurentPoly LaurentPoly::variable(VarId v, Monomial::Exp e) {
    return LaurentPoly(Rational(1), Monomial(v, e));
}

LaurentPoly LaurentPoly::from_sorted_terms(std::vector<Term> terms) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < terms.size(); ++i) {
        assert(!omegact::is_zero(terms[i].coeff));
        assert(i == 0 || Monomial::compare(terms[i - 1].mono, terms[i].mono) < 0);
    }
#endif
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_unit() &&
           omegact::is_one(terms_[0].coeff);
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
            return Monomial::compare(t.mono, key) < 0;
        });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return Rational(0);
}

bool LaurentPoly::free_of(VarId v) const {
    for (const auto& t : terms_)
        if (t.mono.depends_on(v))
            return false;
    return true;
}

std::optional<Monomial::Exp> LaurentPoly::min_exponent(VarId v) const {
    std::optional<Monomial::Exp> out;
    for (const auto& t : terms_) {
        Monomial::Exp e = t.mono.exponent(v);
        if (!out || e < *out)
            out = e;
    }
    return out;
}

std::optional<Monomial::Exp> LaurentPoly::max_exponent(VarId v) const {
    std::optional<Monomial::Exp> out;
    for (const auto& t : terms_) {
        Monomial::Exp e = t.mono.exponent(v);
        if (!out || e > *out)
            out = e;
    }
    return out;
}

Monomial::Exp LaurentPoly::exponent_gcd(VarId v) const {
    Monomial::Exp g = 0;
    for (const auto& t : terms_)
        g = std::gcd(g, t.mono.exponent(v));
    return g;
}

LaurentPoly LaurentPoly::scale_variable_exponents(VarId v,
                                                  Monomial::Exp g) const {
    if (g == 1)
        return *this;
    if (g <= 0)
        throw Error(ErrorKind::Internal, "scale divisor must be positive");
    LaurentBuilder b;
    for (const auto& t : terms_) {
        Monomial::Exp e = t.mono.exponent(v);
        if (e % g != 0)
            throw Error(ErrorKind::Internal, "exponent not divisible by gcd");
        b.add(t.mono.without(v).with_shifted(v, e / g), t.coeff);
    }
    return b.build();
}

std::vector<VarId> LaurentPoly::variables() const {
    std::vector<VarId> vars;
    for (const auto& t : terms_)
        for (const auto& [var, exp] : t.mono.entries())
            vars.push_back(var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono, -t.coeff});
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::compare(terms_[i].mono, o.terms_[j].mono);
        if (c < 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c > 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational sum = terms_[i].coeff + o.terms_[j].coeff;
            if (!omegact::is_zero(sum))
                out.terms_.push_back({terms_[i].mono, std::move(sum)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        out.terms_.push_back(o.terms_[j]);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero())
        return LaurentPoly();
    if (terms_.size() == 1)
        return o.mul_term(terms_[0].coeff, terms_[0].mono);
    if (o.terms_.size() == 1)
        return mul_term(o.terms_[0].coeff, o.terms_[0].mono);

    // Accumulate into a hash map, then sort once.
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * 2);
    const LaurentPoly* a = this;
    const LaurentPoly* b = &o;
    if (a->terms_.size() < b->terms_.size())
        std::swap(a, b);
    for (const auto& ta : a->terms_)
        for (const auto& tb : b->terms_) {
            Monomial m = ta.mono * tb.mono;
            auto [it, fresh] = acc.emplace(std::move(m), Rational(0));
            it->second += ta.coeff * tb.coeff;
        }
    LaurentPoly out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!omegact::is_zero(c))
            out.terms_.push_back({m, std::move(c)});
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) {
                  return Monomial::compare(x.mono, y.mono) < 0;
              });
    return out;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m) const {
    if (m.is_unit())
        return *this;
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono * m, t.coeff});
    // Translation-invariant order: relative placement is unchanged.
    return out;
}

LaurentPoly LaurentPoly::mul_scalar(const Rational& c) const {
    if (omegact::is_zero(c))
        return LaurentPoly();
    if (omegact::is_one(c))
        return *this;
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

LaurentPoly LaurentPoly::mul_term(const Rational& c, const Monomial& m) const {
    if (omegact::is_zero(c))
        return LaurentPoly();
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = 0x9dc5bb2d;
    for (const auto& t : terms_) {
        h = hash_combine(h, t.mono.hash());
        h = hash_combine(h, hash_rational(t.coeff));
    }
    return h;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    // Print largest terms first; reads like handwritten polynomials.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool first = out.empty();
        Rational c = it->coeff;
        if (sgn(c) < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        if (it->mono.is_unit()) {
            out += format_rational(c);
        } else {
            if (!omegact::is_one(c)) {
                out += format_rational(c);
                out += "*";
            }
            out += it->mono.str();
        }
    }
    return out;
}

void LaurentBuilder::add(const Monomial& m, const Rational& c) {
    if (!omegact::is_zero(c))
        terms_.push_back({m, c});
}

void LaurentBuilder::add(const LaurentPoly& p) {
    for (const auto& t : p.terms())
        terms_.push_back(t);
}

void LaurentBuilder::add_scaled(const LaurentPoly& p, const Rational& c,
                                const Monomial& m) {
    if (omegact::is_zero(c))
        return;
    for (const auto& t : p.terms())
        terms_.push_back({t.mono * m, t.coeff * c});
}

LaurentPoly LaurentBuilder::build() {
    std::sort(terms_.begin(), terms_.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
                  return Monomial::compare(x.mono, y.mono) < 0;
              });
    std::vector<LaurentPoly::Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
            if (omegact::is_zero(merged.back().coeff))
                merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    return LaurentPoly::from_sorted_terms(std::move(merged));
}

namespace {

struct ExpBox {
    std::vector<std::pair<VarId, std::pair<Monomial::Exp, Monomial::Exp>>>
        bounds; // var -> [lo, hi]

    bool contains(const Monomial& m) const {
        for (const auto& [var, range] : bounds) {
            Monomial::Exp e = m.exponent(var);
            if (e < range.first || e > range.second)
                return false;
        }
        // Variables not listed must have exponent 0.
        for (const auto& [var, exp] : m.entries()) {
            bool known = false;
            for (const auto& [bvar, range] : bounds)
                if (bvar == var) {
                    known = true;
                    break;
                }
            if (!known && exp != 0)
                return false;
        }
        return true;
    }
};

// Support box of any Laurent quotient a/b: per variable,
// [min(a)-min(b), max(a)-max(b)].
ExpBox quotient_box(const LaurentPoly& a, const LaurentPoly& b) {
    ExpBox box;
    std::vector<VarId> vars = a.variables();
    for (VarId v : b.variables())
        vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (VarId v : vars) {
        Monomial::Exp lo = a.min_exponent(v).value_or(0) - b.min_exponent(v).value_or(0);
        Monomial::Exp hi = a.max_exponent(v).value_or(0) - b.max_exponent(v).value_or(0);
        box.bounds.push_back({v, {std::min(lo, hi), std::max(lo, hi)}});
    }
    return box;
}

} // namespace

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a,
                                         const LaurentPoly& b) {
    if (b.is_zero())
        throw Error(ErrorKind::Internal, "division by zero polynomial");
    if (a.is_zero())
        return LaurentPoly();
    if (b.terms().size() == 1) {
        const auto& t = b.terms()[0];
        return a.mul_term(Rational(1) / t.coeff, t.mono.inverse());
    }

    const ExpBox box = quotient_box(a, b);
    const LaurentPoly::Term& lead = b.terms().back();
    const Monomial lead_inv = lead.mono.inverse();

    LaurentPoly r = a;
    std::vector<LaurentPoly::Term> q;
    while (!r.is_zero()) {
        const LaurentPoly::Term& top = r.terms().back();
        Monomial tm = top.mono * lead_inv;
        if (!box.contains(tm))
            return std::nullopt;
        Rational tc = top.coeff / lead.coeff;
        q.push_back({tm, tc});
        r = r - b.mul_term(tc, tm);
    }
    std::sort(q.begin(), q.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
                  return Monomial::compare(x.mono, y.mono) < 0;
              });
    return LaurentPoly::from_sorted_terms(std::move(q));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_exact_div(a, b);
    if (!q)
        throw Error(ErrorKind::NotDivisible, "polynomial division has remainder");
    return *q;
}

std::optional<LaurentPoly> try_div_one_minus(const LaurentPoly& a,
                                             const Monomial& m) {
    if (m.is_unit())
        throw Error(ErrorKind::DegenerateFactor, "division by (1 - 1)");
    if (a.is_zero())
        return LaurentPoly();

    // Step direction along the coset: the first variable of m.
    const VarId v0 = m.entries().front().first;
    const Monomial::Exp a0 = m.entries().front().second;

    // Group terms by coset representative (exponent of v0 normalized into
    // [0, |a0|)), keeping the step index k with a*M^-k = rep.
    struct ClassTerm {
        Monomial::Exp k;
        const LaurentPoly::Term* term;
    };
    std::unordered_map<Monomial, std::vector<ClassTerm>, MonomialHash> classes;
    for (const auto& t : a.terms()) {
        Monomial::Exp e = t.mono.exponent(v0);
        // floor division by a0 (sign-safe)
        Monomial::Exp k = e / a0;
        if ((e % a0 != 0) && ((e < 0) != (a0 < 0)))
            --k;
        Monomial rep = t.mono * m.pow(-k);
        classes[rep].push_back({k, &t});
    }

    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size());
    for (auto& [rep, ts] : classes) {
        std::sort(ts.begin(), ts.end(),
                  [](const ClassTerm& x, const ClassTerm& y) { return x.k < y.k; });
        // a = q*(1 - m) within the coset: coefficients of q are prefix
        // sums of a's; the total must telescope to zero.
        Rational run(0);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            run += ts[i].term->coeff;
            if (omegact::is_zero(run))
                continue;
            if (i + 1 == ts.size())
                return std::nullopt; // nonzero tail: not divisible
            Monomial::Exp next_k = ts[i + 1].k;
            for (Monomial::Exp k = ts[i].k; k < next_k; ++k)
                out.push_back({rep * m.pow(k), run});
        }
        if (!omegact::is_zero(run))
            return std::nullopt;
    }
    std::sort(out.begin(), out.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
                  return Monomial::compare(x.mono, y.mono) < 0;
              });
    return LaurentPoly::from_sorted_terms(std::move(out));
}

std::vector<std::pair<Monomial::Exp, LaurentPoly>>
univariate_view(const LaurentPoly& p, VarId v) {
    std::map<Monomial::Exp, LaurentBuilder> slices;
    for (const auto& t : p.terms())
        slices[t.mono.exponent(v)].add(t.mono.without(v), t.coeff);
    std::vector<std::pair<Monomial::Exp, LaurentPoly>> out;
    out.reserve(slices.size());
    for (auto& [deg, builder] : slices) {
        LaurentPoly c = builder.build();
        if (!c.is_zero())
            out.emplace_back(deg, std::move(c));
    }
    return out;
}

LaurentPoly substitute(const LaurentPoly& p, VarId v, const Monomial& value) {
    LaurentBuilder b;
    for (const auto& t : p.terms()) {
        Monomial::Exp e = t.mono.exponent(v);
        if (e == 0)
            b.add(t.mono, t.coeff);
        else
            b.add(t.mono.without(v) * value.pow(e), t.coeff);
    }
    return b.build();
}

LaurentPoly substitute_zero(const LaurentPoly& p, VarId v) {
    LaurentBuilder b;
    for (const auto& t : p.terms()) {
        Monomial::Exp e = t.mono.exponent(v);
        if (e < 0)
            throw Error(ErrorKind::PoleAtZero,
                        "pole at zero: negative exponent of " + variable_name(v));
        if (e == 0)
            b.add(t.mono, t.coeff);
    }
    return b.build();
}

LaurentPoly pow(const LaurentPoly& p, unsigned long k) {
    LaurentPoly result(Rational(1));
    LaurentPoly base = p;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

} // namespace omegact
