#include "terai/triples.hpp"

#include <stdexcept>

namespace terai {

Instance make_instance(const Natural& m, const Natural& n) {
    if (n < 1) throw std::invalid_argument("make_instance: n must be >= 1");
    if (m <= n) throw std::invalid_argument("make_instance: m must exceed n");
    Natural g = gcd(m, n);
    if (g != 1)
        throw std::invalid_argument("make_instance: gcd(m, n) = " + g.get_str() + ", expected 1");
    if (mpz_even_p(Natural(m + n).get_mpz_t()))
        throw std::invalid_argument("make_instance: m and n must have opposite parity");
    Instance inst;
    inst.m = m;
    inst.n = n;
    inst.a = 2 * m * n;
    inst.b = m * m - n * n;
    inst.c = m * m + n * n;
    inst.p = m + n;
    inst.q = m - n;
    return inst;
}

HypothesisReport check_hypotheses(const Instance& inst) {
    HypothesisReport report;
    report.coprime = gcd(inst.m, inst.n) == 1;
    report.opposite_parity = mpz_odd_p(Natural(inst.m + inst.n).get_mpz_t());
    report.c_mod8_is_5 = mpz_fdiv_ui(inst.c.get_mpz_t(), 8) == 5;
    report.p_prime = is_prime(inst.p);
    report.q_prime = is_prime(inst.q);
    report.qualifies = report.coprime && report.opposite_parity && report.c_mod8_is_5 &&
                       report.p_prime && report.q_prime;
    return report;
}

std::vector<Instance> scan_instances(const Natural& m_max) {
    if (m_max < 2) throw std::invalid_argument("scan_instances: m_max must be >= 2");
    std::vector<Instance> out;
    for (Natural m = 2; m <= m_max; ++m) {
        for (Natural n = mpz_even_p(m.get_mpz_t()) ? 1 : 2; n < m; n += 2) {
            if (gcd(m, n) != 1) continue;
            Instance inst = make_instance(m, n);
            if (check_hypotheses(inst).qualifies) out.push_back(std::move(inst));
        }
    }
    return out;
}

}  // namespace terai
