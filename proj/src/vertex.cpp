#include "topvertex/vertex.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace topvertex {

namespace {
using Key = std::tuple<Partition, Partition, Partition>;
std::map<Key, QRational>& memo() {
    static std::map<Key, QRational> m;
    return m;
}
std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

QRational schur_principal(const Partition& mu) {
    return skew_schur_scalar(mu, Partition(), Alphabet::principal(Partition()));
}

QRational vertex(const Partition& l1, const Partition& l2, const Partition& l3) {
    Key key{l1, l2, l3};
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo().find(key);
        if (it != memo().end()) return it->second;
    }
    Partition l2t = l2.conjugate();
    Partition l3t = l3.conjugate();
    Alphabet a1 = Alphabet::principal(l2t);
    Alphabet a2 = Alphabet::principal(l2);
    QRational sum(0);
    long bound = std::min(l1.size(), l3t.size());
    for (const Partition& mu : enumerate_partitions(bound)) {
        if (!l1.contains(mu) || !l3t.contains(mu)) continue;
        QRational s1 = skew_schur_scalar(l1, mu, a1);
        if (s1.is_zero()) continue;
        QRational s2 = skew_schur_scalar(l3t, mu, a2);
        if (s2.is_zero()) continue;
        sum += s1 * s2;
    }
    QRational result = QRational::t_power(kappa(l3)) * skew_schur_scalar(l2, Partition(), Alphabet::principal(Partition())) * sum;
    std::lock_guard<std::mutex> lock(memo_mutex());
    memo().emplace(std::move(key), result);
    return result;
}

}  // namespace topvertex
