#pragma once

#include "qlat/laurent.hpp"
#include "qlat/matrix.hpp"
#include "qlat/qfraction.hpp"
#include "qlat/qt_element.hpp"

namespace qlat {

using IntMatrix = Matrix<Integer>;
using LaurentMatrix = Matrix<LaurentPoly>;
using QTMatrix = Matrix<QTElement>;
using FractionMatrix = Matrix<QFraction>;

// Transpose composed with the entrywise bar involution.
template <class T>
Matrix<T> star(const Matrix<T>& m) {
  return m.transpose().map([](const T& x) { return bar(x); });
}

template <class T>
Matrix<T> bar(const Matrix<T>& m) {
  return m.map([](const T& x) { return bar(x); });
}

LaurentMatrix to_laurent(const IntMatrix& m);
QTMatrix to_qt(const LaurentMatrix& m);
FractionMatrix to_fraction(const LaurentMatrix& m);
LaurentMatrix at_t(const QTMatrix& m, int t_sign);
QTMatrix specialize(const QTMatrix& m, Spec q, Spec t);
// Entrywise q -> -q^-1.
QTMatrix koszul_substitute(const QTMatrix& m);

// Determinants. All throw DimensionError on non-square input; the 0x0
// determinant is 1.
LaurentPoly det(const LaurentMatrix& m);
LaurentPoly det_cofactor(const LaurentMatrix& m);
LaurentPoly det_bareiss(const LaurentMatrix& m);
QTElement det(const QTMatrix& m);
QFraction det(const FractionMatrix& m);

// Inverse over Z[q,q^-1] via adjugate / det. Requires det = ±q^k.
LaurentMatrix inverse_unit(const LaurentMatrix& m);
// Inverse over Z[q,q^-1,t]/(t^2-1); requires both t-specializations to be unimodular.
QTMatrix inverse_unit(const QTMatrix& m);
// Inverse over Q(q) by Gauss-Jordan elimination.
FractionMatrix inverse_fraction(const LaurentMatrix& m);
FractionMatrix inverse_fraction(const FractionMatrix& m);

// True when every entry of a fraction matrix lies in Z[q, q^-1].
bool is_laurent(const FractionMatrix& m);
LaurentMatrix to_laurent(const FractionMatrix& m);

}  // namespace qlat
