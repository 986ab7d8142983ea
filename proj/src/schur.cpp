#include "topvertex/schur.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace topvertex {

void Alphabet::make_fp() {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Principal:
            os << "P(" << nu_.str() << (inverted_ ? ",inv" : "");
            if (nvars_ >= 0) os << ",n=" << nvars_;
            os << ")";
            break;
        case Kind::Scaled: {
            os << "S(" << base_->fingerprint() << ";" << scale_.coeff.str() << ";[";
            for (size_t i = 0; i < scale_.exps.size(); ++i) {
                if (i) os << ",";
                os << scale_.exps[i];
            }
            os << "])";
            break;
        }
        case Kind::Joined: {
            os << "J(";
            for (size_t i = 0; i < parts_.size(); ++i) {
                if (i) os << "|";
                os << parts_[i].fingerprint();
            }
            os << ")";
            break;
        }
    }
    fp_ = os.str();
}

Alphabet Alphabet::principal(Partition nu, bool inverted) {
    Alphabet a;
    a.kind_ = Kind::Principal;
    a.nu_ = std::move(nu);
    a.inverted_ = inverted;
    a.make_fp();
    return a;
}

Alphabet Alphabet::principal_finite(Partition nu, int nvars, bool inverted) {
    Alphabet a;
    a.kind_ = Kind::Principal;
    a.nu_ = std::move(nu);
    a.inverted_ = inverted;
    a.nvars_ = nvars;
    a.make_fp();
    return a;
}

Alphabet Alphabet::scaled(Alphabet base, ScaleMonomial m) {
    Alphabet a;
    a.kind_ = Kind::Scaled;
    a.base_ = std::make_shared<Alphabet>(std::move(base));
    a.scale_ = std::move(m);
    a.make_fp();
    return a;
}

Alphabet Alphabet::joined(std::vector<Alphabet> parts) {
    Alphabet a;
    a.kind_ = Kind::Joined;
    a.parts_ = std::move(parts);
    a.make_fp();
    return a;
}

QSeries Alphabet::power_sum(long r, const Ctx& ctx) const {
    assert(r >= 1);
    switch (kind_) {
        case Kind::Principal: {
            // x_i = q^{nu_i - i + 1/2} = t^{2(nu_i - i) + 1}
            QRational sum(0);
            int l = nu_.length();
            for (int i = 1; i <= std::min(l, nvars_ < 0 ? l : nvars_); ++i)
                sum += QRational::t_power(r * (2 * long(nu_.part(i) - i) + 1));
            if (nvars_ < 0) {
                sum += geometric_tail_t(r * (-2 * long(l) - 1), -2 * r);
            } else {
                for (int i = l + 1; i <= nvars_; ++i)
                    sum += QRational::t_power(r * (-2 * long(i) + 1));
            }
            if (inverted_) sum = sum.reversed();
            return QSeries(ctx, sum);
        }
        case Kind::Scaled: {
            QSeries p = base_->power_sum(r, ctx);
            QRational c = scale_.coeff.pow(r);
            Exp e(ctx->names.size(), 0);
            if (!scale_.exps.empty()) {
                assert(scale_.exps.size() == e.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = scale_.exps[i] * int(r);
            }
            p.mul_monomial(c, e);
            return p;
        }
        case Kind::Joined: {
            QSeries p(ctx);
            for (const auto& part : parts_) p += part.power_sum(r, ctx);
            return p;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

struct HCache {
    Ctx keepalive;
    std::vector<QSeries> h;  // h[0..]
};

std::map<std::pair<const SeriesContext*, std::string>, HCache>& h_cache() {
    static std::map<std::pair<const SeriesContext*, std::string>, HCache> cache;
    return cache;
}
std::mutex& h_mutex() {
    static std::mutex m;
    return m;
}

// determinant by column-subset dynamic programming (division-free)
QSeries subset_det(const std::vector<std::vector<QSeries>>& A, const Ctx& ctx) {
    size_t n = A.size();
    if (n == 0) return QSeries::one(ctx);
    std::vector<QSeries> dp(size_t(1) << n);
    dp[0] = QSeries::one(ctx);
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        size_t row = size_t(__builtin_popcountll(mask)) - 1;
        QSeries acc(ctx);
        // expand along the last row: sign is (-1)^{row + position of j in mask}
        int sign = (row % 2 == 0) ? 1 : -1;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask & (size_t(1) << j))) continue;
            const QSeries& sub = dp[mask ^ (size_t(1) << j)];
            if (!sub.is_zero() && !A[row][j].is_zero()) {
                QSeries t = sub * A[row][j];
                if (sign < 0) t = -t;
                acc += t;
            }
            sign = -sign;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

}  // namespace

QSeries complete_homogeneous(const Alphabet& a, long r, const Ctx& ctx) {
    if (r < 0) return QSeries(ctx);
    if (r == 0) return QSeries::one(ctx);
    std::lock_guard<std::mutex> lock(h_mutex());
    auto key = std::make_pair(ctx.get(), a.fingerprint());
    HCache& hc = h_cache()[key];
    if (hc.h.empty()) {
        hc.keepalive = ctx;
        hc.h.push_back(QSeries::one(ctx));
    }
    // r*h_r = sum_{k=1..r} p_k h_{r-k}
    while (long(hc.h.size()) <= r) {
        long m = long(hc.h.size());
        QSeries acc(ctx);
        for (long k = 1; k <= m; ++k) acc += a.power_sum(k, ctx) * hc.h[size_t(m - k)];
        acc.scale(QRational(Rat(1, m)));
        hc.h.push_back(std::move(acc));
    }
    return hc.h[size_t(r)];
}

QSeries skew_schur(const Partition& lambda, const Partition& mu, const Alphabet& a, const Ctx& ctx) {
    if (!lambda.contains(mu)) return QSeries(ctx);
    int n = lambda.length();
    if (n == 0) return QSeries::one(ctx);
    auto A = std::vector<std::vector<QSeries>>(size_t(n), std::vector<QSeries>(size_t(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            A[size_t(i - 1)][size_t(j - 1)] =
                complete_homogeneous(a, long(lambda.part(i)) - mu.part(j) - i + j, ctx);
    return subset_det(A, ctx);
}

const Ctx& scalar_ctx() {
    static Ctx ctx = SeriesContext::make({}, 0);
    return ctx;
}

QRational skew_schur_scalar(const Partition& lambda, const Partition& mu, const Alphabet& a) {
    QSeries s = skew_schur(lambda, mu, a, scalar_ctx());
    return s.coeff(Exp{});
}

}  // namespace topvertex
