#include "logdiv/monomial.hpp"

#include <functional>

namespace logdiv {

std::vector<Monomial> monomials_up_to(int nvars, int maxdeg) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            m.exp[static_cast<size_t>(var)] = left;
            out.push_back(m);
            m.exp[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.exp[static_cast<size_t>(var)] = e;
            rec(var + 1, left - e);
        }
        m.exp[static_cast<size_t>(var)] = 0;
    };
    for (int d = 0; d <= maxdeg; ++d)
        rec(0, d);
    return out;
}

} // namespace logdiv
