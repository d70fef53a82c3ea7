#include "logdiv/rational.hpp"

namespace logdiv {

std::string rat_to_string(const Rat &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int denominator_lcm(const std::vector<Rat> &v) {
    Int l = 1;
    for (const Rat &q : v) {
        if (q == 0)
            continue;
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

Int numerator_gcd(const std::vector<Rat> &v) {
    Int g = 0;
    for (const Rat &q : v) {
        if (q == 0)
            continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    }
    return g;
}

void make_primitive(std::vector<Rat> &v) {
    Int l = denominator_lcm(v);
    for (Rat &q : v)
        q *= l;
    Int g = numerator_gcd(v);
    if (g == 0)
        return;
    for (Rat &q : v)
        q /= g;
    for (const Rat &q : v) {
        if (q != 0) {
            if (q < 0)
                for (Rat &r : v)
                    r = -r;
            break;
        }
    }
}

} // namespace logdiv
