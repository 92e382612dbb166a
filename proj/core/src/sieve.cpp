#include "terai/sieve.hpp"

namespace terai {

ParityCertificate parity_certificate(const Instance& inst) {
    ParityCertificate cert;
    cert.j_minus1_c = jacobi(-1, inst.c);
    cert.j_b_c = jacobi(inst.b, inst.c);
    cert.j_c_b = jacobi(inst.c, inst.b);
    cert.j_2_c = jacobi(2, inst.c);
    cert.j_2_b = jacobi(2, inst.b);
    if (cert.j_minus1_c != 1) cert.deviations.push_back("(-1/c)");
    if (cert.j_b_c != -1) cert.deviations.push_back("(b/c)");
    if (cert.j_c_b != -1) cert.deviations.push_back("(c/b)");
    if (cert.j_2_c != -1) cert.deviations.push_back("(2/c)");
    if (cert.j_2_b != -1) cert.deviations.push_back("(2/b)");
    cert.valid = cert.deviations.empty();
    return cert;
}

}  // namespace terai
