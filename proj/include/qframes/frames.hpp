#pragma once

#include <string>

#include "qframes/qmatrix.hpp"

namespace qframes {

/// A finite sequence of vectors v_1..v_n in H^d, stored as the columns of
/// its synthesis map V (d x n).
struct Frame {
  QMat synthesis;
  Tolerance tol;

  Frame() = default;
  explicit Frame(QMat v, Tolerance t = {}) : synthesis(std::move(v)), tol(t) {}

  Eigen::Index dim() const { return synthesis.rows(); }
  Eigen::Index size() const { return synthesis.cols(); }
  QMat vec(Eigen::Index j) const { return synthesis.col(j); }
};

/// G = V*V, so G_jk = <v_k, v_j>.
QMat gramian(const Frame& f);
/// S = VV*.
QMat frame_operator(const Frame& f);

/// <v_j, v_k> read off a Gramian.
inline Quatd gram_inner(const QMat& g, Eigen::Index j, Eigen::Index k) { return g(k, j); }

struct TightnessReport {
  double frame_bound = 0.0;          // A = sum ||v_j||^2 / d
  double variational_defect = 0.0;   // sum |<v_j,v_k>|^2 - (sum ||v_j||^2)^2 / d
  double operator_defect = 0.0;      // ||S - A I||_F
  double gramian_projection_defect = 0.0;  // ||(G/A)^2 - G/A||_F
  double scale = 0.0;                // (sum ||v_j||^2)^2
  bool is_tight = false;
};

TightnessReport tightness(const Frame& f);
inline bool is_tight(const Frame& f) { return tightness(f).is_tight; }

/// Same Gramian to tolerance.
bool unitarily_equivalent(const Frame& f, const Frame& g);

enum class Field { Real, Complex, Quaternionic };

Field classify_field(const Frame& f);
std::string to_string(Field field);
/// Parse "R"/"C"/"H" (also "real"/"complex"/"quaternionic").
Field parse_field(const std::string& s);

/// G_c = n/(n-d) I - d/(n-d) G for a tight frame of unit vectors.
QMat complement_gramian(const Frame& f);

/// W ((n-d) x n) with V*V + W*W = A I and W W* = A I.
Frame complement_synthesis(const Frame& f);

/// Every column scaled to unit norm. Zero columns are an error.
Frame normalised(const Frame& f);

struct RealDescent {
  bool descends = false;
  double sum_squares = 0.0;  // |sum_jk <v_j,v_k>^2|
  double re_norm = 0.0;      // ||Re G||_F
  double im_norm = 0.0;      // ||Im G||_F
};

struct ComplexDescent {
  bool descends = false;
  double co1_sq = 0.0;  // sum |Co1 <v_j,v_k>|^2 = ||Co1(G)||_F^2
  double co2_sq = 0.0;  // sum |Co2 <v_j,v_k>|^2 = ||Co2(G)||_F^2
  /// Equivalent forms for V = V1 + V2 j, A = sum ||v_j||^2 / d:
  /// max(||V1V1* - A/2 I||, ||V2V2* - A/2 I||, ||V1V2^T||)
  double split_operator_defect = 0.0;
  /// ||H^2 - (A/2) H||_F with H = V1*V1 + V2^T conj(V2), the image Gramian.
  double image_gramian_defect = 0.0;
};

/// Whether [v_j]_R is a tight frame for R^{2d}. Requires a tight complex frame.
RealDescent descends_to_real(const Frame& f);
/// Whether [v_j]_C is a tight frame for C^{2d}. Requires a tight frame.
ComplexDescent descends_to_complex(const Frame& f);

/// <v, w> recovered from norms via polarisation over the given field.
Quatd polarisation_inner(const QMat& v, const QMat& w, Field field);

}  // namespace qframes
