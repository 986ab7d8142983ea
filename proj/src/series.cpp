#include "topvertex/series.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace topvertex {

std::shared_ptr<const SeriesContext> SeriesContext::make(std::vector<std::string> names, long cap) {
    Truncation t;
    t.weights.assign(names.size(), 1);
    t.cap = cap;
    return make(std::move(names), std::move(t));
}

std::shared_ptr<const SeriesContext> SeriesContext::make(std::vector<std::string> names, Truncation t) {
    assert(t.weights.size() == names.size());
    assert(t.var_caps.empty() || t.var_caps.size() == names.size());
    auto ctx = std::make_shared<SeriesContext>();
    ctx->names = std::move(names);
    ctx->trunc = std::move(t);
    return ctx;
}

int SeriesContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return int(i);
    throw std::out_of_range("unknown series variable: " + name);
}

QSeries::QSeries(Ctx ctx, const QRational& c) : ctx_(std::move(ctx)) {
    if (!c.is_zero()) terms_.emplace(Exp(ctx_->names.size(), 0), c);
}

QSeries QSeries::variable(Ctx ctx, int var) {
    QSeries s(std::move(ctx));
    Exp e(s.ctx_->names.size(), 0);
    e[size_t(var)] = 1;
    if (s.ctx_->trunc.admits(e)) s.terms_.emplace(std::move(e), QRational(1));
    return s;
}

QSeries QSeries::monomial(Ctx ctx, const QRational& c, const Exp& e) {
    QSeries s(std::move(ctx));
    if (!c.is_zero() && s.ctx_->trunc.admits(e)) s.terms_.emplace(e, c);
    return s;
}

QRational QSeries::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QRational(0) : it->second;
}

QRational QSeries::constant_term() const { return coeff(Exp(ctx_->names.size(), 0)); }

void QSeries::check_same(const QSeries& o) const {
    assert(ctx_ && o.ctx_);
    if (ctx_ == o.ctx_) return;
    assert(ctx_->names == o.ctx_->names);
    assert(ctx_->trunc.weights == o.ctx_->trunc.weights && ctx_->trunc.cap == o.ctx_->trunc.cap &&
           ctx_->trunc.var_caps == o.ctx_->trunc.var_caps);
}

void QSeries::add_term(const Exp& e, const QRational& c) {
    if (c.is_zero() || !ctx_->trunc.admits(e)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSeries QSeries::operator-() const {
    QSeries s(*this);
    for (auto& [e, c] : s.terms_) c = -c;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_same(b);
    QSeries out(a.ctx_);
    Exp e(a.ctx_->names.size(), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (!a.ctx_->trunc.admits(e)) continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

QSeries& QSeries::scale(const QRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

QSeries& QSeries::mul_monomial(const QRational& c, const Exp& e) {
    QSeries out(ctx_);
    if (!c.is_zero()) {
        Exp f(e.size(), 0);
        for (const auto& [ea, ca] : terms_) {
            for (size_t i = 0; i < f.size(); ++i) {
                f[i] = ea[i] + e[i];
                if (f[i] < 0) throw std::domain_error("mul_monomial: negative exponent");
            }
            out.add_term(f, ca * c);
        }
    }
    return *this = out;
}

QSeries QSeries::pow(long n) const {
    assert(n >= 0);
    QSeries acc = one(ctx_), base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if ((n >>= 1)) base = base * base;
    }
    return acc;
}

QSeries QSeries::inverse() const {
    QRational c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("QSeries::inverse: constant term is zero");
    // 1/s = (1/c0) * sum_n (1 - s/c0)^n ; the sum terminates because
    // (1 - s/c0) has no constant term and the region is finite.
    QSeries u = *this;
    u.scale(QRational(1) / c0);
    QSeries x = QSeries::one(ctx_) - u;
    QSeries acc = QSeries::one(ctx_), p = QSeries::one(ctx_);
    while (true) {
        p = p * x;
        if (p.is_zero()) break;
        acc += p;
    }
    acc.scale(QRational(1) / c0);
    return acc;
}

QSeries QSeries::log() const {
    if (!constant_term().is_one()) throw std::domain_error("log of non-unital series");
    QSeries x = *this - QSeries::one(ctx_);
    QSeries acc(ctx_), p = QSeries::one(ctx_);
    long n = 0;
    while (true) {
        p = p * x;
        ++n;
        if (p.is_zero()) break;
        QSeries term = p;
        term.scale(QRational(Rat((n % 2 == 1) ? 1 : -1, n)));
        acc += term;
    }
    return acc;
}

QSeries QSeries::exp() const {
    if (!constant_term().is_zero()) throw std::domain_error("exp of series with constant term");
    QSeries acc = QSeries::one(ctx_), p = QSeries::one(ctx_);
    Rat fact(1);
    long n = 0;
    while (true) {
        p = p * *this;
        ++n;
        if (p.is_zero()) break;
        fact *= n;
        QSeries term = p;
        term.scale(QRational(Rat(1) / fact));
        acc += term;
    }
    return acc;
}

QSeries QSeries::slice_zero(const std::vector<int>& vars) const {
    QSeries out(ctx_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int v : vars)
            if (e[size_t(v)] != 0) {
                keep = false;
                break;
            }
        if (keep) out.terms_.emplace(e, c);
    }
    return out;
}

QSeries QSeries::retruncate(Ctx ctx) const {
    assert(ctx->names == ctx_->names);
    QSeries out(std::move(ctx));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

std::string QSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool atomic = c.is_laurent() && c.as_laurent().raw().size() == 1;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << (atomic || c.is_laurent() ? cs : "(" + cs + ")");
        } else {
            if (c.is_one())
                os << mono;
            else if (atomic)
                os << cs << "*" << mono;
            else
                os << "(" << cs << ")*" << mono;
        }
    }
    return os.str();
}

}  // namespace topvertex
