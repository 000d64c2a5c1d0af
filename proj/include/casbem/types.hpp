// Core scalar and dense types shared across the library.
#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace casbem {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

// Thrown when an operation's preconditions are violated (bad geometry,
// point too close to a boundary, invalid quadrature budget, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numerical process fails to meet its contract
// (singular collocation matrix, non-convergent series, ...).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Dimensionality { two_d, three_d };

enum class ForceComponent { normal, tangential };

}  // namespace casbem
