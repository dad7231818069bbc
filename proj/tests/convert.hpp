#pragma once

#include "discarr/matrix.hpp"
#include "oracles.hpp"

inline oracle::Mat to_oracle(const discarr::RatMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).value();
  return out;
}

inline discarr::RatMatrix from_oracle(const oracle::Mat& m) {
  discarr::RatMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = discarr::Rational(m[i][j]);
  return out;
}

inline discarr::RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  return from_oracle(oracle::random_int_matrix(rng, rows, cols, bound));
}
