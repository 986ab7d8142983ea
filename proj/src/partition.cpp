#include "topvertex/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace topvertex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unterminated partition: " + s);
        body = body.substr(1, body.size() - 2);
    }
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = item.find_last_not_of(" \t");
        parts.push_back(std::stoi(item.substr(a, b - a + 1)));
    }
    return Partition(std::move(parts));
}

long Partition::size() const {
    long s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition parts are 1-based");
    return i <= length() ? parts_[size_t(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(size_t(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) out[size_t(j)]++;
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

long kappa(const Partition& mu) {
    long k = mu.size();
    const auto& p = mu.parts();
    for (size_t j = 0; j < p.size(); ++j) k += long(p[j]) * (long(p[j]) - 2 * long(j + 1));
    return k;
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending lexicographic: largest first part first
    auto rec = [&](auto&& self, long rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = int(std::min<long>(maxpart, rem)); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, int(n));
    return out;
}

std::vector<Partition> enumerate_partitions(long max_size) {
    std::vector<Partition> out;
    for (long n = 0; n <= max_size; ++n) {
        auto block = partitions_of(n);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

long hook_exponent(const Partition& mu, const Partition& nu, int i, int j) {
    if (i < 1 || j < 1) throw std::out_of_range("hook_exponent: indices are 1-based");
    return long(mu.part(i)) - i + long(nu.part(j)) - j + 1;
}

QRational f_mu(const Partition& mu) {
    // q/(q-1) * sum_{i<=l} (q^{mu_i - i} - q^{-i}); summands vanish beyond l.
    QRational sum(0);
    for (int i = 1; i <= mu.length(); ++i) {
        sum += QRational::q_power(mu.part(i) - i) - QRational::q_power(-i);
    }
    QRational pref = QRational::q_power(1) / (QRational::q_power(1) - QRational(1));
    QRational f = pref * sum;
    if (!f.is_laurent())
        throw std::logic_error("f_mu is not a Laurent polynomial for " + mu.str());
    return f;
}

CkTable::CkTable(std::map<long, long> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) {
            it = coeffs_.erase(it);
            continue;
        }
        if (it->second < 0)
            throw std::logic_error("CkTable: negative coefficient C_" + std::to_string(it->first));
        ++it;
    }
}

long CkTable::total() const {
    long s = 0;
    for (auto& [k, c] : coeffs_) s += c;
    return s;
}

long CkTable::weighted_total() const {
    long s = 0;
    for (auto& [k, c] : coeffs_) s += k * c;
    return s;
}

CkTable c_table(const Partition& mu, const Partition& nu) {
    QRational fm = f_mu(mu), fn = f_mu(nu);
    QRational f = (QRational::q_power(1) - QRational(2) + QRational::q_power(-1)) * fm * fn + fm + fn;
    if (!f.is_laurent()) throw std::logic_error("f_{mu,nu} is not a Laurent polynomial");
    LaurentPoly p = f.as_laurent();
    std::map<long, long> coeffs;
    if (!p.is_zero()) {
        for (long e = p.val(); e <= p.deg(); ++e) {
            Rat c = p.coeff(e);
            if (c == 0) continue;
            if (e % 2 != 0)
                throw std::logic_error("f_{mu,nu} has a half-integer q-power");
            if (c.get_den() != 1)
                throw std::logic_error("f_{mu,nu} has a non-integer coefficient");
            coeffs[e / 2] = c.get_num().get_si();
        }
    }
    return CkTable(std::move(coeffs));
}

}  // namespace topvertex
