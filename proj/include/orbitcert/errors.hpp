#ifndef ORBITCERT_ERRORS_HPP
#define ORBITCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitcert {

/// Base class for all input/math errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- structure-constant and element-level errors ------------------------------

struct AntisymmetryViolation : Error {
  int i, j, k;
  AntisymmetryViolation(int i_, int j_, int k_)
      : Error("antisymmetry violated at c[" + std::to_string(k_) + "][" +
              std::to_string(i_) + "][" + std::to_string(j_) + "]"),
        i(i_), j(j_), k(k_) {}
};

struct JacobiViolation : Error {
  int i, j, k;
  JacobiViolation(int i_, int j_, int k_)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i_) +
              ", " + std::to_string(j_) + ", " + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct DegenerateKillingForm : Error {
  explicit DegenerateKillingForm(const std::string& detail)
      : Error("Killing form is degenerate (not semisimple): " + detail) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& detail)
      : Error("dimension mismatch: " + detail) {}
};

struct UnsupportedParameter : Error {
  explicit UnsupportedParameter(const std::string& detail)
      : Error("unsupported parameter: " + detail) {}
};

// -- subalgebra errors ---------------------------------------------------------

struct LinearDependenceError : Error {
  explicit LinearDependenceError(const std::string& detail)
      : Error("linearly dependent basis: " + detail) {}
};

struct NotClosed : Error {
  int i, j;
  NotClosed(int i_, int j_)
      : Error("subspace is not bracket-closed: [b" + std::to_string(i_) +
              ", b" + std::to_string(j_) + "] leaves the span"),
        i(i_), j(j_) {}
};

struct NotAlgebraicSubalgebra : Error {
  explicit NotAlgebraicSubalgebra(const std::string& detail)
      : Error("no rational Levi split found (subalgebra may not be algebraic); "
              "declare levi_basis/unipotent_radical_basis explicitly. " +
              detail) {}
};

// -- grading errors ------------------------------------------------------------

struct NotSemisimple : Error {
  explicit NotSemisimple(const std::string& detail)
      : Error("element is not semisimple: " + detail) {}
};

struct IrrationalEigenvalue : Error {
  explicit IrrationalEigenvalue(const std::string& detail)
      : Error("ad-eigenvalues are not all rational: " + detail) {}
};

// -- orbit-engine errors -------------------------------------------------------

struct NonCommutingTorus : Error {
  int a, b;
  NonCommutingTorus(int a_, int b_)
      : Error("torus elements " + std::to_string(a_) + " and " +
              std::to_string(b_) + " do not commute"),
        a(a_), b(b_) {}
};

struct NonReductiveActingAlgebra : Error {
  NonReductiveActingAlgebra() : Error("acting subalgebra is not reductive") {}
};

struct NotReductiveInput : Error {
  NotReductiveInput()
      : Error("orthogonal centralizer requires a reductive subalgebra") {}
};

// -- io errors -----------------------------------------------------------------

struct SchemaError : Error {
  std::string path;
  SchemaError(const std::string& path_, const std::string& detail)
      : Error("schema error at " + path_ + ": " + detail), path(path_) {}
};

struct RationalParseError : Error {
  explicit RationalParseError(const std::string& detail)
      : Error("cannot parse exact rational: " + detail) {}
};

}  // namespace orbitcert

#endif
