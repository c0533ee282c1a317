#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

using BigInt = boost::multiprecision::cpp_int;

/// Absolute accuracy guaranteed per eigenvalue by the in-repo solver for
/// 0/1 symmetric matrices with n <= 62.
inline constexpr double kEigenTolerance = 1e-10;

/// Adjacency eigenvalues sorted descending plus the derived quantities the
/// energy bounds consume. All fields come from one solve so they are
/// mutually consistent.
struct Spectrum {
    std::vector<double> eigenvalues;  // lambda_1 >= ... >= lambda_n
    double energy = 0.0;              // sum of |lambda_i|
    double mu1 = 0.0;                 // largest absolute eigenvalue (= lambda_1)
    double mu2 = 0.0;                 // second-largest absolute eigenvalue; 0 when n = 1
    double tolerance = kEigenTolerance;
};

/// Householder tridiagonalization followed by implicit-shift QL iteration,
/// capped at 50 sweeps per eigenvalue. Throws std::runtime_error on
/// failure to converge.
Spectrum eigenvalues(const Graph& g);

double energy(const Graph& g);

/// Exact integer determinant of the adjacency matrix.
struct ExactDet {
    BigInt value;
};

/// Fraction-free (Bareiss) elimination over arbitrary-precision integers;
/// never decided from floating-point eigenvalues.
ExactDet exact_determinant(const Graph& g);

bool is_nonsingular(const Graph& g);

/// det(xI - A) with exact integer coefficients; coefficients[k] multiplies x^k.
struct CharPoly {
    std::vector<BigInt> coefficients;
};

/// Faddeev-LeVerrier over big integers; n <= 32.
CharPoly char_poly(const Graph& g);

}  // namespace genergy
