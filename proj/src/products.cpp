#include "voa/products.hpp"

#include <cassert>
#include <stdexcept>

namespace voa {

namespace {

// sum_i C(upper(d), i) u_{i-shift} w over homogeneous components u_d of u,
// with the i-range cut by the grading law u_k w = 0 for k > deg u + deg w - 1.
template <typename UpperFn>
GradedVector residue_sum(const GradedVector& u, const GradedVector& w, long shift,
                         UpperFn upper) {
    const Space& M = *w.space();
    GradedVector out(&M);
    if (u.zero() || w.zero()) return out;
    int dw = w.max_degree();
    for (const auto& [ukey, uc] : u.terms()) {
        long d = ukey.degree();
        long a = upper(d);
        long imax = d + dw - 1 + shift;  // grading cutoff
        if (a >= 0) imax = std::min(imax, a);
        for (long i = 0; i <= imax; ++i) {
            Rat c = binom(a, i);
            if (c == 0) continue;
            GradedVector term = M.apply_mode(ukey, i - shift, w);
            out.add_scaled(term, uc * c);
        }
    }
    return out;
}

}  // namespace

GradedVector mode_apply(const GradedVector& u, long k, const GradedVector& w) {
    assert(u.space() && u.space()->is_vacuum());
    const Space& M = *w.space();
    GradedVector out(&M);
    for (const auto& [ukey, uc] : u.terms()) out.add_scaled(M.apply_mode(ukey, k, w), uc);
    return out;
}

GradedVector circ(const GradedVector& u, const GradedVector& w, int n) {
    return residue_sum(u, w, 2L * n + 2, [&](long d) { return d + n; });
}

GradedVector star_left(const GradedVector& u, const GradedVector& w, int n) {
    GradedVector out(w.space());
    for (int m = 0; m <= n; ++m) {
        GradedVector part =
            residue_sum(u, w, m + n + 1, [&](long d) { return d + n; });
        Rat c = binom(m + n, n);
        if (m % 2 != 0) c = -c;
        out.add_scaled(part, c);
    }
    return out;
}

GradedVector star_right(const GradedVector& w, const GradedVector& u, int n) {
    GradedVector out(w.space());
    for (int m = 0; m <= n; ++m) {
        GradedVector part =
            residue_sum(u, w, m + n + 1, [&](long d) { return d + m - 1; });
        Rat c = binom(m + n, n);
        if (n % 2 != 0) c = -c;
        out.add_scaled(part, c);
    }
    return out;
}

GradedVector reduction_element(const GradedVector& u, const GradedVector& w,
                               int n, int a, int b) {
    if (b < a || a < 0) throw std::invalid_argument("reduction_element needs b >= a >= 0");
    return residue_sum(u, w, 2L * n + 2 + b, [&](long d) { return d + n + a; });
}

GradedVector ats_element(const GradedVector& u, const GradedVector& v,
                         int t, int s, int a, int b) {
    if (b < a || a < 0) throw std::invalid_argument("ats_element needs b >= a >= 0");
    return residue_sum(u, v, t + s + 2L + b, [&](long d) { return d + s + a; });
}

GradedVector l_shift_generator(const GradedVector& u, const Rat& shift) {
    const Space& S = *u.space();
    GradedVector out = S.apply_virasoro(-1, u);
    for (const auto& [key, c] : u.terms()) out.add(key, c * (Rat(key.degree()) + shift));
    return out;
}

GradedVector phi_map(const GradedVector& w) {
    const Space& M = *w.space();
    GradedVector sigma(&M);
    for (const auto& [key, c] : w.terms())
        sigma.add(key, key.degree() % 2 == 0 ? c : -c);

    GradedVector out(&M);
    GradedVector power = sigma;
    Rat fact(1);
    for (long j = 0; !power.zero(); ++j) {
        if (j > 0) fact *= j;
        out.add_scaled(power, 1 / fact);
        power = M.apply_virasoro(1, power);
    }
    return out;
}

GradedVector zero_mode(const GradedVector& v, const GradedVector& w) {
    assert(v.space() && v.space()->is_vacuum());
    const Space& M = *w.space();
    GradedVector out(&M);
    for (const auto& [vkey, vc] : v.terms())
        out.add_scaled(M.apply_mode(vkey, vkey.degree() - 1, w), vc);
    return out;
}

}  // namespace voa
