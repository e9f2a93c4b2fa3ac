#pragma once

#include <vector>

#include "bym/core.hpp"

namespace bym {

/// Bundle projection pi(W) = WW^*.
DensityMatrix project(const Purification& w);

/// Connection form omega(T): the antihermitian solution A of
/// D~ A + A D~ = W^* T - T^* W with D~ = W^* W. Identity on vertical
/// directions WA, zero on horizontal directions GW.
Matrix connection_form(const Purification& w, const Matrix& t);

struct VerticalHorizontalSplit {
  Matrix vertical;    // W omega(T), of the form W A
  Matrix horizontal;  // T - vertical, of the form G W
};

/// Orthogonal splitting of a tangent at W. The horizontal part is
/// cross-checked internally against the Sylvester construction
/// G = (L+R)^{-1}(TW^* + WT^*).
VerticalHorizontalSplit split_tangent(const Purification& w, const Matrix& t);

/// Horizontal lift of a base tangent X at D = WW^*: the vector GW with
/// DG + GD = X.
Matrix horizontal_lift(const Purification& w, const Matrix& x);

/// Curvature two-form with horizontal first argument GW and arbitrary
/// second argument T:
///   Omega(GW, T) = 2 W^* (1/(1+x)) [G, (1/(1+x))(T W^{-1} + x(W^{-1*} T^*))] W^{*-1}.
/// Vanishes when T is vertical.
Matrix curvature(const Purification& w, const Matrix& g, const Matrix& t);

/// Curvature on two horizontal arguments GW, G'W:
///   Omega(GW, G'W) = 2 W^* (1/(1+x))([G, G']) W^{*-1}.
/// Equal to curvature(w, g, g' W); antisymmetric in (G, G').
Matrix curvature_hh(const Purification& w, const Matrix& g, const Matrix& gp);

/// Orthonormal basis of horizontal vectors {G_a Lambda} at a diagonal
/// positive Lambda. Ordering: diagonal family first, then the symmetric
/// off-diagonal family row-major (i<j), then the antisymmetric family
/// row-major. In the normalized case (Tr Lambda^2 = 1) the diagonal family
/// is re-orthonormalized against the normal direction Lambda itself and the
/// frame has n^2 - 1 members; otherwise n^2.
struct HorizontalFrame {
  Purification base;
  std::vector<Matrix> generators;
  bool normalized_case;
};

HorizontalFrame horizontal_frame(const Purification& lambda, bool normalized_case);

/// Discrete Uhlmann transport: first-order horizontal stepping along a curve
/// of density matrices with an exact polar re-projection onto each target
/// fiber. The result projects to the final curve point exactly (to roundoff);
/// accuracy of the transported frame is O(step).
Purification transport(const std::vector<DensityMatrix>& curve, const Purification& w0);

/// Unitary relating W_m to W_0 inside one fiber: the polar-unitary factor of
/// W_0^{-1} W_m. For a closed transported loop this is the holonomy.
Matrix holonomy(const Purification& w0, const Purification& wm);

}  // namespace bym
