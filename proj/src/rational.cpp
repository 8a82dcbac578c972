#include "subtile/rational.hpp"

#include <cctype>

namespace subtile {

QQ parse_rational(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) throw SchemaError("empty rational literal");
    for (char c : t) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw SchemaError("bad rational literal: " + s);
    }
    try {
        QQ q(t);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw SchemaError("bad rational literal: " + s);
    }
}

std::string to_string(const QQ& q) { return q.get_str(); }
std::string to_string(const ZZ& z) { return z.get_str(); }

ZZ floor_q(const QQ& q) {
    ZZ r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

ZZ round_nearest(const QQ& q) {
    return floor_q(q + QQ(1, 2));
}

QQ pow2_neg(unsigned bits) {
    ZZ d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
    return QQ(1, d);
}

double to_double(const QQ& q) { return q.get_d(); }

std::size_t hash_mpz(const mpz_class& z) {
    const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
    std::size_t n = mpz_size(z.get_mpz_t());
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(mpz_sgn(z.get_mpz_t()) + 2));
    for (std::size_t i = 0; i < n; ++i) mix(static_cast<std::uint64_t>(limbs[i]));
    return h;
}

std::size_t hash_combine(std::size_t h, std::size_t k) {
    h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::size_t hash_mpq(const QQ& q) {
    return hash_combine(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

std::string decimal_string(const QQ& q, int digits) {
    ZZ scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    QQ scaled = q * QQ(scale);
    ZZ fl = floor_q(scaled);
    QQ frac = scaled - QQ(fl);
    ZZ rounded = fl;
    if (frac > QQ(1, 2)) {
        rounded = fl + 1;
    } else if (frac == QQ(1, 2)) {
        // half-even
        if (mpz_odd_p(fl.get_mpz_t())) rounded = fl + 1;
    }
    bool neg = rounded < 0;
    ZZ mag = neg ? ZZ(-rounded) : rounded;
    ZZ ip, fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), mag.get_mpz_t(), scale.get_mpz_t());
    std::string fs = fp.get_str();
    while (static_cast<int>(fs.size()) < digits) fs.insert(fs.begin(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + fs;
    return out;
}

}  // namespace subtile
