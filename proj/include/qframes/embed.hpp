#pragma once

#include <vector>

#include "qframes/qmatrix.hpp"

namespace qframes {

// Field-transfer maps. Complex and real data are QMatrix values whose
// unused components vanish; the validators below enforce that on inputs.
//
//   [v]_R = (Re v, Im v)                    C^d -> R^{2d}
//   [A]_R = [[Re A, -Im A], [Im A, Re A]]
//   [v]_C = (z, conj w)      for v = z + w j, H^d -> C^{2d}
//   [L]_C = [[A, -B], [conj B, conj A]]      for L = A + B j

void require_real(const QMat& a, const Tolerance& tol = {});
void require_complex(const QMat& a, const Tolerance& tol = {});

QMat cvec_to_real(const QMat& v, const Tolerance& tol = {});
QMat real_to_cvec(const QMat& r, const Tolerance& tol = {});

QMat cmat_to_real(const QMat& a, const Tolerance& tol = {});
/// Inverse of cmat_to_real on matrices of the right block shape.
QMat real_to_cmat(const QMat& r, const Tolerance& tol = {});

QMat qvec_to_complex(const QMat& v);
QMat complex_to_qvec(const QMat& c, const Tolerance& tol = {});

QMat qmat_to_complex(const QMat& l);
QMat complex_to_qmat(const QMat& c, const Tolerance& tol = {});

/// J_l = [[0, -I], [I, 0]] of size 2l; [L]_C satisfies J_m [L]_C = conj([L]_C) J_n.
QMat j_matrix(Eigen::Index l);

/// Columns [v_1]_C..[v_n]_C, [v_1 j]_C..[v_n j]_C.
QMat frame_double_complex(const QMat& v);

struct BlockGram {
  /// blocks[a][b] = V_a* V_b with V_a = [[v_a]_C, [v_a j]_C].
  std::vector<std::vector<QMat>> blocks;
  /// max over a != b of ||B* B - |<v_a, v_b>|^2 I_2||_F.
  double max_defect = 0.0;
};

BlockGram block_gram_check(const QMat& v, const Tolerance& tol = {});

}  // namespace qframes
