#pragma once

#include "voa/space.hpp"

namespace voa {

// u_k w for u in the vacuum space and w in any space of the same central
// charge. Extended bilinearly over the PBW expansions of both sides.
GradedVector mode_apply(const GradedVector& u, long k, const GradedVector& w);

// u o_n w = Res_z Y(u,z)w (1+z)^{wt u+n} / z^{2n+2}
//         = sum_i C(wt u+n, i) u_{i-2n-2} w.
GradedVector circ(const GradedVector& u, const GradedVector& w, int n);

// u *_n w = sum_{m=0}^n (-1)^m C(m+n,n) sum_i C(wt u+n, i) u_{i-m-n-1} w.
GradedVector star_left(const GradedVector& u, const GradedVector& w, int n);

// w *_n u = sum_{m=0}^n (-1)^n C(m+n,n) sum_i C(wt u+m-1, i) u_{i-m-n-1} w.
// The prefactor (-1)^n is constant across m; it is pinned by the exact
// identities w *_n 1 = w and omega *_n u - u *_n omega = (L(-1)+L(0))u.
GradedVector star_right(const GradedVector& w, const GradedVector& u, int n);

// Res_z Y(u,z)w (1+z)^{wt u+n+a} / z^{2n+2+b} for b >= a >= 0; the
// enriched generator family of the O_n(M) span ((0,0) is circ).
GradedVector reduction_element(const GradedVector& u, const GradedVector& w,
                               int n, int a, int b);

// u o_s^t v family: Res_z Y(u,z)v (1+z)^{wt u+s+a} / z^{t+s+2+b}, a <= b.
GradedVector ats_element(const GradedVector& u, const GradedVector& v,
                         int t, int s, int a, int b);

// (L(-1) + L(0) + shift) u.
GradedVector l_shift_generator(const GradedVector& u, const Rat& shift = Rat(0));

// e^{L(1)} sigma(w) where sigma scales the degree-d component by (-1)^d;
// the carrying module's global factor e^{pi i h} is stripped (it cancels
// in every identity this map participates in).
GradedVector phi_map(const GradedVector& w);

// o(v) w = v_{wt v-1} w summed over homogeneous components of v.
GradedVector zero_mode(const GradedVector& v, const GradedVector& w);

}  // namespace voa
