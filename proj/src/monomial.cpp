#include "omegact/monomial.hpp"

#include "omegact/error.hpp"
#include "omegact/numeric.hpp"

#include <cassert>
#include <cstdlib>
#include <limits>

namespace omegact {

namespace {

// Exponents stay tiny (< 10^4 in every target run); the guard catches
// runaway powers before they wrap.
Monomial::Exp checked_add(Monomial::Exp a, Monomial::Exp b) {
    Monomial::Exp r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Internal, "exponent overflow in add");
    return r;
}

Monomial::Exp checked_mul(Monomial::Exp a, Monomial::Exp b) {
    Monomial::Exp r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Internal, "exponent overflow in mul");
    return r;
}

} // namespace

Monomial::Monomial(VarId v, Exp e) {
    if (e != 0)
        entries_.emplace_back(v, e);
}

Monomial Monomial::from_sorted(std::vector<Entry> entries) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < entries.size(); ++i) {
        assert(entries[i].second != 0);
        assert(i == 0 || entries[i - 1].first < entries[i].first);
    }
#endif
    Monomial m;
    m.entries_ = std::move(entries);
    return m;
}

Monomial::Exp Monomial::exponent(VarId v) const {
    for (const auto& [var, exp] : entries_)
        if (var == v)
            return exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + o.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first < o.entries_[j].first) {
            out.entries_.push_back(entries_[i++]);
        } else if (entries_[i].first > o.entries_[j].first) {
            out.entries_.push_back(o.entries_[j++]);
        } else {
            Exp e = checked_add(entries_[i].second, o.entries_[j].second);
            if (e != 0)
                out.entries_.emplace_back(entries_[i].first, e);
            ++i;
            ++j;
        }
    }
    for (; i < entries_.size(); ++i)
        out.entries_.push_back(entries_[i]);
    for (; j < o.entries_.size(); ++j)
        out.entries_.push_back(o.entries_[j]);
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out;
    out.entries_.reserve(entries_.size());
    for (const auto& [var, exp] : entries_)
        out.entries_.emplace_back(var, -exp);
    return out;
}

Monomial Monomial::pow(Exp k) const {
    if (k == 0)
        return Monomial();
    Monomial out;
    out.entries_.reserve(entries_.size());
    for (const auto& [var, exp] : entries_)
        out.entries_.emplace_back(var, checked_mul(exp, k));
    return out;
}

Monomial Monomial::without(VarId v) const {
    Monomial out;
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_)
        if (e.first != v)
            out.entries_.push_back(e);
    return out;
}

Monomial Monomial::with_shifted(VarId v, Exp delta) const {
    return *this * Monomial(v, delta);
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        VarId va = a.entries_[i].first;
        VarId vb = b.entries_[j].first;
        if (va == vb) {
            if (a.entries_[i].second != b.entries_[j].second)
                return a.entries_[i].second < b.entries_[j].second ? -1 : 1;
            ++i;
            ++j;
        } else if (va < vb) {
            // b has exponent 0 on va
            return a.entries_[i].second < 0 ? -1 : 1;
        } else {
            return 0 < b.entries_[j].second ? -1 : 1;
        }
    }
    if (i < a.entries_.size())
        return a.entries_[i].second < 0 ? -1 : 1;
    if (j < b.entries_.size())
        return 0 < b.entries_[j].second ? -1 : 1;
    return 0;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [var, exp] : entries_) {
        h = hash_combine(h, static_cast<std::size_t>(var) * 0x100000001b3ULL);
        h = hash_combine(h, static_cast<std::size_t>(exp));
    }
    return h;
}

std::string Monomial::str() const {
    if (entries_.empty())
        return "1";
    std::string out;
    bool first = true;
    for (const auto& [var, exp] : entries_) {
        if (!first)
            out += "*";
        first = false;
        out += variable_name(var);
        if (exp != 1) {
            out += "^";
            out += std::to_string(exp);
        }
    }
    return out;
}

} // namespace omegact
