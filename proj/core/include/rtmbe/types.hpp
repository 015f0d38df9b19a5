#pragma once

#include <Eigen/Core>

namespace rtmbe {

/// Fixed-size column vector. All estimator arithmetic uses these so that the
/// hot path never touches the heap.
template <int N>
using Vector = Eigen::Matrix<double, N, 1>;

template <int Rows, int Cols>
using Matrix = Eigen::Matrix<double, Rows, Cols>;

inline constexpr int kStateDim = 4;
inline constexpr int kInputDim = 2;
inline constexpr int kMeasurementDim = 4;

/// (cA [mol/L], cB [mol/L], TR [degC], TK [degC])
using StateVector = Vector<kStateDim>;
/// (F [1/h], Qdot [kJ/h])
using InputVector = Vector<kInputDim>;
/// Noisy observation of the four states, same units as StateVector.
using MeasurementVector = Vector<kMeasurementDim>;

using StateMatrix = Matrix<kStateDim, kStateDim>;
using MeasurementMatrix = Matrix<kMeasurementDim, kMeasurementDim>;

}  // namespace rtmbe
