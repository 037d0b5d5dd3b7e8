#pragma once

// Structure-preserving maps between dual quaternion objects and their dual
// complex adjoints.
//
// Writing Q = (A1 + A2 j) + (A3 + A4 j) eps with complex A1..A4, the adjoint is
//
//     J(Q) = [ A1  A2 ; -conj(A2) conj(A1) ] + [ A3  A4 ; -conj(A4) conj(A3) ] eps
//
// J is a ring isomorphism onto the block-structured 2m x 2n dual complex
// matrices. For vectors, F(v1 + v2 j) = [v1; -conj(v2)] (per part), and
// H([u1; u2]) = [conj(u2); -conj(u1)] maps F(v) to F(v j).

#include "dqeig/matrix.hpp"

namespace dqeig {

DCMatrix adjoint(const DQMatrix& q);

/// Largest deviation of m from the [A B; -conj(B) conj(A)] block pattern,
/// over both parts. Infinity for odd dimensions.
double adjoint_structure_deviation(const DCMatrix& m);

/// Inverse of adjoint(). The redundant blocks are averaged before
/// conversion; throws NotAdjointStructured when the pattern deviation
/// exceeds tol * max(1, max |m_ij|).
DQMatrix adjoint_inverse(const DCMatrix& m, double tol = 1e-12);

DCVector vec_map_F(const DQVector& v);
/// Throws OddLength for odd-length input.
DQVector vec_map_F_inverse(const DCVector& u);
/// Throws OddLength for odd-length input.
DCVector vec_map_H(const DCVector& u);

struct EigenEquivalenceReport {
    double dq_residual = 0.0;  ///< ||Q v - v lambda||_{2R}
    double u1_residual = 0.0;  ///< ||P F(v) - lambda F(v)||_{2R}
    double u2_residual = 0.0;  ///< ||P F(v j) - conj(lambda) F(v j)||_{2R}
    bool consistent = false;   ///< all three agree within the tolerance
};

/// Evaluates the three equivalent forms of the right eigen-equation
/// Q v = v lambda on the quaternion side and on the adjoint side.
EigenEquivalenceReport check_eigen_equivalence(const DQMatrix& q, const DualComplex& lambda,
                                               const DQVector& v, double tol = 1e-10);

}  // namespace dqeig
