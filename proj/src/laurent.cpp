#include "schurcat/laurent.hpp"

#include <sstream>

namespace schurcat {

std::string LaurentQ::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rat c = it->second;
        int k = it->first;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        } else if (sgn(c) < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        bool unit = (c == 1);
        if (k == 0) {
            os << c.get_str();
        } else {
            if (!unit) os << c.get_str() << "*";
            os << "q";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

LaurentQ qint(int a) {
    if (a < 0) return -qint(-a);
    // [a] = q^{a-1} + q^{a-3} + ... + q^{1-a}
    LaurentQ r;
    for (int k = a - 1; k >= 1 - a; k -= 2) r += LaurentQ::q_power(k);
    return r;
}

LaurentQ qfact(int m) {
    LaurentQ r(1);
    for (int j = 1; j <= m; ++j) r *= qint(j);
    return r;
}

LaurentQ qbinom(int m, int k) {
    if (k < 0 || k > m) throw std::domain_error("qbinom: need 0 <= k <= m");
    // Recursion [m k] = q^k [m-1 k] + q^{k-m} [m-1 k-1] keeps everything
    // inside Laurent polynomials, no division needed.
    if (k == 0 || k == m) return LaurentQ(1);
    return LaurentQ::q_power(k) * qbinom(m - 1, k) +
           LaurentQ::q_power(k - m) * qbinom(m - 1, k - 1);
}

} // namespace schurcat
