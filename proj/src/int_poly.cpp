#include "int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace prescribed::detail {

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer content(const IntPoly& a) {
    Integer g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_exact(IntPoly& a, const Integer& c) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw std::domain_error("pseudo-remainder by zero");
    const int db = degree(b);
    IntPoly r = a;
    int steps = degree(a) - db + 1;
    if (steps <= 0) return r;
    const Integer& lb = b.back();
    while (!r.empty() && degree(r) >= db) {
        const int shift = degree(r) - db;
        const Integer lr = r.back();
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[shift + j] -= lr * b[j];
        trim(r);
        --steps;
    }
    if (steps > 0) {
        const Integer scale = pow(lb, static_cast<unsigned long>(steps));
        for (auto& x : r) x *= scale;
    }
    return r;
}

IntPoly subresultant_gcd(IntPoly a, IntPoly b) {
    if (degree(a) < degree(b)) std::swap(a, b);
    divide_exact(a, content(a));
    divide_exact(b, content(b));
    Integer g = 1;
    Integer h = 1;
    while (true) {
        const int delta = degree(a) - degree(b);
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (degree(r) == 0) return IntPoly{Integer(1)};
        a = std::move(b);
        b = std::move(r);
        divide_exact(b, g * pow(h, static_cast<unsigned long>(delta)));
        g = a.back();
        if (delta == 0) continue;
        // h <- g^delta / h^(delta-1)
        Integer num = pow(g, static_cast<unsigned long>(delta));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), pow(h, static_cast<unsigned long>(delta - 1)).get_mpz_t());
    }
    divide_exact(b, content(b));
    if (b.back() < 0) {
        for (auto& x : b) x = -x;
    }
    return b;
}

Integer subresultant_resultant(IntPoly a, IntPoly b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("resultant with a zero polynomial");
    int sign = 1;
    if (degree(a) < degree(b)) {
        std::swap(a, b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) sign = -1;
    }
    if (degree(b) == 0) return sign * pow(b[0], static_cast<unsigned long>(degree(a)));

    const Integer ca = content(a);
    const Integer cb = content(b);
    const Integer t = pow(ca, static_cast<unsigned long>(degree(b))) * pow(cb, static_cast<unsigned long>(degree(a)));
    divide_exact(a, ca);
    divide_exact(b, cb);

    Integer g = 1;
    Integer h = 1;
    while (true) {
        const int delta = degree(a) - degree(b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) return 0;
        a = std::move(b);
        b = std::move(r);
        divide_exact(b, g * pow(h, static_cast<unsigned long>(delta)));
        g = a.back();
        if (delta > 0) {
            Integer num = pow(g, static_cast<unsigned long>(delta));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), pow(h, static_cast<unsigned long>(delta - 1)).get_mpz_t());
        }
        if (degree(b) == 0) break;
    }
    // h <- lc(b)^deg(a) / h^(deg(a)-1)
    const unsigned long da = static_cast<unsigned long>(degree(a));
    Integer num = pow(b[0], da);
    Integer out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), pow(h, da - 1).get_mpz_t());
    return sign * t * out;
}

Integer evaluate_homogeneous(const IntPoly& a, const Integer& u, const Integer& v) {
    Integer acc = 0;
    Integer vpow = 1;
    // Horner in u with the v-powers folded in from the top coefficient down.
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * u + *it * vpow;
        vpow *= v;
    }
    return acc;
}

}  // namespace prescribed::detail
