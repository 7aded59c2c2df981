#include "qdilog/admissible.hpp"

#include <cmath>
#include <numeric>

#include "qdilog/errors.hpp"

namespace qdilog {

std::pair<std::int64_t, std::int64_t> bezout(std::int64_t M, std::int64_t N) {
    if (M < 1 || N < 1) throw DomainError("bezout: M, N must be positive");
    if (std::gcd(M, N) != 1) throw NotCoprime("bezout: gcd(M, N) != 1");
    if (N == 1) return {0, 1};
    // extended Euclid for M^{-1} mod N
    std::int64_t t = 0, newt = 1, r = N, newr = M % N;
    while (newr != 0) {
        const std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    std::int64_t P = t % N;
    if (P < 0) P += N;                 // P in [0, N)
    if (P > N - P) P -= N;             // minimal |P|, ties -> positive
    const std::int64_t Q = (1 - M * P) / N;
    return {P, Q};
}

AdmissiblePair::AdmissiblePair(std::int64_t M_, std::int64_t N_) : M(M_), N(N_) {
    auto [p, q] = bezout(M, N);
    P = p;
    Q = q;
    b = std::sqrt(static_cast<double>(M) / static_cast<double>(N));
    s = std::sqrt(static_cast<double>(M) * static_cast<double>(N));
    c_b = cplx{0.0, 0.5 * (b + 1.0 / b)};
    q_plus = Unity(N, M);
    q_minus = Unity(M, N);
    q_tilde_inverse = q_minus.value;
}

AdmissiblePair AdmissiblePair::with_bezout(std::int64_t P_, std::int64_t Q_) const {
    if (M * P_ + N * Q_ != 1) throw DomainError("with_bezout: M*P + N*Q != 1");
    AdmissiblePair out = *this;
    out.P = P_;
    out.Q = Q_;
    return out;
}

} // namespace qdilog
