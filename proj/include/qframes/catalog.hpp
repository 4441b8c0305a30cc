#pragma once

#include <map>
#include <string>
#include <vector>

#include "qframes/frames.hpp"

namespace qframes::catalog {

/// Standard basis of H^d.
Frame onb(int d);
/// d + 1 real unit vectors with pairwise inner product -1/d.
Frame simplex(int d);

/// Four equiangular lines in C^2 at angle 1/3 (Hoggar's presentation).
Frame hoggar4();
/// Weyl-Heisenberg SIC in C^2: v, Sv, Omega v, iS Omega v.
Frame wh_sic2();
/// Fiducial of wh_sic2 and the unitary taking hoggar4 to (v, Omega v, Sv, iS Omega v).
QMat wh_fiducial();
QMat hoggar_to_sic_unitary();

/// v_r = (t, sqrt(1-t^2) i_r) for i_r = 1, i, j, k, followed by e_1.
/// Equiangular (at 1/2) only for t = 1/sqrt(2).
Frame five_h2(double t = 0.70710678118654752440);
/// Five tight equiangular lines in H^2, angle 3/8.
Frame b20_five_h2();
/// Five tight equiangular lines in H^3, angle 1/6.
Frame five_h3();
/// Six tight equiangular lines in H^2, angle 2/5.
Frame six_h2();
/// Six tight equiangular lines in H^4, angle 1/10: normalised complement of six_h2.
Frame six_h4();

/// The unitaries U_a, U_b of the symmetries (12)(34) and (1235)(46) of six_h2.
QMat six_h2_ua();
QMat six_h2_ub();

/// Look up by name; params: onb/simplex take "d", five_h2 takes "t", hopf takes "n".
Frame by_name(const std::string& name, const std::map<std::string, double>& params = {});
std::vector<std::string> names();

}  // namespace qframes::catalog
