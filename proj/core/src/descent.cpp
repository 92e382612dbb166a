#include "terai/descent.hpp"

#include <stdexcept>

namespace terai {

namespace {

Natural pow_nat(const Natural& base, const Natural& exp) {
    if (exp < 0) throw std::invalid_argument("pow_nat: negative exponent");
    if (!exp.fits_ulong_p()) throw std::invalid_argument("pow_nat: exponent out of range");
    Natural out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return out;
}

void require_odd(const Natural& v, const char* what) {
    if (v < 1 || mpz_even_p(v.get_mpz_t()))
        throw std::invalid_argument(std::string(what) + " must be odd and positive");
}

}  // namespace

Legs legs_from_solution(const Instance& inst, const Natural& x, const Natural& r,
                        const Natural& k) {
    const Natural br = pow_nat(inst.b, r);
    const Natural ck = pow_nat(inst.c, k);
    if (x * x + br * br != ck * ck)
        throw std::invalid_argument("legs_from_solution: x^2 + b^2r != c^2k");
    auto u = as_perfect_square((ck + br) / 2);
    auto v = as_perfect_square((ck - br) / 2);
    if (!u || !v)
        throw std::domain_error(
            "legs_from_solution: (c^k +- b^r)/2 is not a perfect square; "
            "no primitive-triple structure");
    return {*u, *v};
}

bool case_a_check(const Instance& inst, const Natural& r, const Natural& k) {
    require_odd(r, "case_a_check: r");
    require_odd(k, "case_a_check: k");
    return 2 * pow_nat(inst.c, k) == pow_nat(inst.b, 2 * r) + 1;
}

bool case_b_check(const Instance& inst, const Natural& r, const Natural& k) {
    require_odd(r, "case_b_check: r");
    require_odd(k, "case_b_check: k");
    return pow_nat(inst.p, 2 * r) + pow_nat(inst.q, 2 * r) == 2 * pow_nat(inst.c, k);
}

std::vector<CaseScanRow> scan_cases(const Instance& inst, const Natural& r_max,
                                    const Natural& k_max) {
    if (r_max < 1 || k_max < 1)
        throw std::invalid_argument("scan_cases: bounds must be >= 1");
    std::vector<CaseScanRow> rows;
    const Natural b2 = inst.b * inst.b;
    const Natural c2 = inst.c * inst.c;
    // b^2r and c^k advanced incrementally along the odd grid.
    Natural b_pow = inst.b * inst.b;  // b^(2r) at r
    for (Natural r = 1; r <= r_max; r += 2, b_pow *= b2 * b2) {
        const Natural p_pow = pow_nat(inst.p, 2 * r);
        const Natural q_pow = pow_nat(inst.q, 2 * r);
        Natural c_pow = inst.c;  // c^k at k
        for (Natural k = 1; k <= k_max; k += 2, c_pow *= c2) {
            CaseScanRow row;
            row.r = r;
            row.k = k;
            row.case_a_holds = 2 * c_pow == b_pow + 1;
            row.case_b_holds = p_pow + q_pow == 2 * c_pow;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::optional<FilterMatch> divisibility_filter(const Instance& inst, const TwoSquares& dec,
                                               const Natural& r, const Natural& k) {
    require_odd(r, "divisibility_filter: r");
    require_odd(k, "divisibility_filter: k");
    if (dec.g * dec.g + dec.h * dec.h != inst.c)
        throw std::invalid_argument("divisibility_filter: decomposition does not match c");
    if (inst.p < 2 || inst.q < 2)
        throw std::invalid_argument("divisibility_filter: requires p, q >= 2 (qualifying instances)");
    const int epsilon = mpz_fdiv_ui(k.get_mpz_t(), 4) == 1 ? 1 : -1;
    const Natural p_side = abs(Int(dec.g) + epsilon * Int(dec.h));
    const Natural q_side = abs(Int(dec.g) - epsilon * Int(dec.h));
    auto t1 = power_exponent_of(p_side, inst.p);
    if (!t1) return std::nullopt;
    auto t2 = power_exponent_of(q_side, inst.q);
    if (!t2) return std::nullopt;
    return FilterMatch{epsilon, *t1, *t2};
}

ASumCheck a_sum_congruence(const Instance& inst, const TwoSquares& dec, const Natural& k) {
    require_odd(k, "a_sum_congruence: k");
    if (dec.g * dec.g + dec.h * dec.h != inst.c)
        throw std::invalid_argument("a_sum_congruence: decomposition does not match c");
    if (!k.fits_ulong_p()) throw std::invalid_argument("a_sum_congruence: k out of range");
    const unsigned long kk = k.get_ui();
    const GaussianInt alpha_sq = gpow(GaussianInt{dec.g, dec.h}, 2);
    const GaussianInt neg_beta_sq = -alpha_sq.conj();
    // A = sum_{j=0}^{k-1} (alpha^2)^(k-1-j) (-beta^2)^j with running powers.
    std::vector<GaussianInt> alpha_pows(kk);
    alpha_pows[0] = GaussianInt{1, 0};
    for (unsigned long i = 1; i < kk; ++i) alpha_pows[i] = alpha_pows[i - 1] * alpha_sq;
    GaussianInt sum{0, 0};
    GaussianInt right{1, 0};  // (-beta^2)^j
    for (unsigned long j = 0; j < kk; ++j) {
        sum = sum + alpha_pows[kk - 1 - j] * right;
        if (j + 1 < kk) right = right * neg_beta_sq;
    }
    if (sum.im != 0) throw std::logic_error("a_sum_congruence: A is not a rational integer");

    ASumCheck check;
    check.a_sum = sum.re;
    Natural rhs = k * pow_nat(2, k - 1) * pow_nat(inst.m * inst.n, k - 1);
    mpz_fdiv_r(check.a_mod_b.get_mpz_t(), sum.re.get_mpz_t(), inst.b.get_mpz_t());
    mpz_fdiv_r(check.rhs_mod_b.get_mpz_t(), rhs.get_mpz_t(), inst.b.get_mpz_t());
    const bool plus = (check.a_mod_b - check.rhs_mod_b) % inst.b == 0;
    const bool minus = (check.a_mod_b + check.rhs_mod_b) % inst.b == 0;
    check.match_up_to_sign = plus || minus;
    check.sign = plus ? 1 : (minus ? -1 : 0);
    return check;
}

KDivisibilityVerdict k_divisibility_conclusion(const Instance& inst, const Natural& r,
                                               const Natural& k) {
    require_odd(r, "k_divisibility_conclusion: r");
    require_odd(k, "k_divisibility_conclusion: k");
    KDivisibilityVerdict verdict;
    if (r == 1 || k == 1) {
        verdict.branch = KDivisibilityVerdict::Branch::BaseCase;
        verdict.description = "base-case branch: r = 1 or k = 1 collapses to (1, 1)";
        return verdict;
    }
    if (!mpz_divisible_p(k.get_mpz_t(), inst.b.get_mpz_t())) {
        verdict.branch = KDivisibilityVerdict::Branch::Contradiction;
        verdict.description =
            "contradiction: " + inst.b.get_str() + " does not divide k = " + k.get_str();
        return verdict;
    }
    verdict.branch = KDivisibilityVerdict::Branch::OracleBranch;
    Natural a_prime = k / inst.b;
    verdict.description = "oracle branch: a' = " + a_prime.get_str() + ", refute 2*(" +
                          inst.c.get_str() + "^(" + Natural(inst.q * a_prime).get_str() +
                          "))^" + inst.p.get_str() + " = p^2r + q^2r";
    verdict.a_prime = std::move(a_prime);
    return verdict;
}

DescentTrace descent_trace(const Instance& inst, const Natural& x, const Natural& y,
                           const Natural& z) {
    if (y < 2 || z < 2 || mpz_odd_p(y.get_mpz_t()) || mpz_odd_p(z.get_mpz_t()))
        throw std::invalid_argument("descent_trace: y and z must be even and >= 2");
    if (x * x + pow_nat(inst.b, y) != pow_nat(inst.c, z))
        throw std::invalid_argument("descent_trace: (x, y, z) does not solve x^2 + b^y = c^z");

    DescentTrace trace;
    trace.instance = inst;
    trace.x = x;
    trace.y = y;
    trace.z = z;
    trace.r = y / 2;
    trace.k = z / 2;

    auto check = [&trace](std::string name, bool passed) {
        trace.identity_checks.push_back({std::move(name), passed});
        return passed;
    };

    bool ok = true;
    trace.legs = legs_from_solution(inst, x, trace.r, trace.k);
    const Natural& u = trace.legs.u;
    const Natural& v = trace.legs.v;
    ok &= check("legs: 2uv = x, u > v >= 1, gcd(u,v) = 1, opposite parity",
                2 * u * v == x && u > v && v >= 1 && gcd(u, v) == 1 &&
                    mpz_odd_p(Natural(u + v).get_mpz_t()));

    const Natural pr = pow_nat(inst.p, trace.r);
    const Natural qr = pow_nat(inst.q, trace.r);
    if (u + v == pr && u - v == qr)
        trace.case_tag = CaseTag::B;
    else if (u - v == 1 && u + v == pr * qr)
        trace.case_tag = CaseTag::A;
    ok &= check("case split: u+v = p^r and u-v = q^r (case B)", trace.case_tag == CaseTag::B);

    std::vector<TwoSquares> survivors;
    FilterMatch match{};
    for (const TwoSquares& dec : two_square_decompositions(inst.c)) {
        if (auto m = divisibility_filter(inst, dec, trace.r, trace.k)) {
            survivors.push_back(dec);
            match = *m;
        }
    }
    trace.surviving_decompositions = survivors.size();
    if (!check("decomposition filter: exactly one survivor", survivors.size() == 1)) {
        trace.verdict = "inconsistent: decomposition filter";
        return trace;
    }
    const TwoSquares& dec = survivors.front();
    trace.decomposition = dec;
    trace.epsilon = match.epsilon;
    trace.t1 = match.t1;
    trace.t2 = match.t2;
    ok &= check("exponents: t1 = t2 = 1", match.t1 == 1 && match.t2 == 1);
    ok &= check("product: g*h = m*n", dec.g * dec.h == inst.m * inst.n);

    const PqValues pq = eval_pq_identities(dec.g, dec.h, trace.k);
    const Natural abs_p = abs(pq.p_val);
    const Natural abs_q = abs(pq.q_val);
    ok &= check("unit identities: {|P|, |Q|} = {p^r, q^r}",
                (abs_p == pr && abs_q == qr) || (abs_p == qr && abs_q == pr));

    // 2*(alpha^2k + beta^2k) = +-4 b^r, i.e. |Re(alpha^2k)| = b^r.
    const GaussianInt alpha_2k = gpow(GaussianInt{dec.g, dec.h}, 2 * trace.k);
    ok &= check("power sum: |Re(alpha^2k)| = b^r", abs(Int(alpha_2k.re)) == pow_nat(inst.b, trace.r));

    const bool expected_solution = x == inst.a && y == 2 && z == 2;
    ok &= check("solution is (2mn, 2, 2)", expected_solution);

    if (ok) {
        trace.verdict = "theorem-consistent";
    } else {
        for (const auto& c : trace.identity_checks)
            if (!c.passed) {
                trace.verdict = "inconsistent: " + c.name;
                break;
            }
    }
    return trace;
}

}  // namespace terai
