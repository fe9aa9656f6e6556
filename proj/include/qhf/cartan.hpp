#pragma once

#include <cmath>
#include <stdexcept>

#include "qhf/hform.hpp"

namespace qhf {

template <class S>
struct BoundaryTriple {
    ProjectivePoint<S> p1, p2, p3;
};

// Hermitian triple product <p1,p2><p3,p1><p2,p3>. The factors are ordered
// so that replacing the lifts p_i by p_i*l_i telescopes to
// |l_1|^2 |l_3|^2 conj(l_2) tau l_2 — a quaternion similarity — which is
// what makes |Re tau| / |tau| independent of the lifts. (The cyclic order
// <p1,p2><p2,p3><p3,p1> does not telescope over the quaternions.)
template <class S>
Quaternion<S> triple_product(const BoundaryTriple<S>& t) {
    return herm(t.p1.rep, t.p2.rep) * herm(t.p3.rep, t.p1.rep) * herm(t.p2.rep, t.p3.rep);
}

// Scale-free degeneracy gauge: |tau| is compared against the product of
// the squared representative norms.
template <class S>
bool triple_degenerate(const BoundaryTriple<S>& t, const S& eps) {
    S scale = S(vec_norm_sq(t.p1.rep) * vec_norm_sq(t.p2.rep) * vec_norm_sq(t.p3.rep));
    return norm_sq(triple_product(t)) <= S(eps * eps * scale * scale);
}

// Quaternionic Cartan angular invariant: the angle in [0, pi/2] between
// the coordinate LINE R*1 in H ~ R^4 (both directions, hence the absolute
// value on the real part) and the triple product.
inline double cartan_invariant(const BoundaryTriple<double>& t, double eps = 1e-12) {
    if (triple_degenerate(t, eps)) throw std::invalid_argument("degenerate boundary triple");
    Quaternion<double> tau = triple_product(t);
    double c = std::fabs(re(tau)) / abs(tau);
    return std::acos(std::min(1.0, c));
}

// Exact-backend predicates for the two extreme angles.
template <class S>
bool triple_product_is_real(const BoundaryTriple<S>& t, const S& eps = S(0)) {
    Quaternion<S> tau = triple_product(t);
    return S(tau.x * tau.x + tau.y * tau.y + tau.z * tau.z) <= S(eps * eps * norm_sq(tau));
}

template <class S>
bool triple_product_is_pure_imaginary(const BoundaryTriple<S>& t, const S& eps = S(0)) {
    Quaternion<S> tau = triple_product(t);
    return S(tau.w * tau.w) <= S(eps * eps * norm_sq(tau));
}

}  // namespace qhf
