#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdl {

/** Base class for all library errors. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Base for all "a configured resource cap was hit" errors (CLI exit code 2). */
struct CapError : Error {
  using Error::Error;
};

/** A breadth-first closure (group or symplectic enumeration) exceeded its cap. */
struct CapExceeded : CapError {
  std::int64_t reached;
  std::int64_t cap;
  CapExceeded(std::int64_t reached_, std::int64_t cap_)
      : CapError("closure exceeded cap: reached " + std::to_string(reached_) +
                 " elements, cap " + std::to_string(cap_)),
        reached(reached_), cap(cap_) {}
};

/** The ambient group of a conjugation quandle is larger than the quandle size cap. */
struct GroupTooLarge : CapError {
  using CapError::CapError;
};

/** The conjugacy closure of a Dehn quandle subset exceeded the quandle size cap. */
struct ClosureTooLarge : CapError {
  using CapError::CapError;
};

/** The congruence-lattice search exceeded its configured budget. */
struct BudgetExceeded : CapError {
  using CapError::CapError;
};

enum class Axiom { Idempotency, RightTranslation, Distributivity };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Idempotency: return "idempotency";
    case Axiom::RightTranslation: return "right-translation bijectivity";
    default: return "right self-distributivity";
  }
}

/** A table failed one of the three quandle axioms; carries the first witness found. */
struct AxiomViolation : Error {
  Axiom axiom;
  int x, y, z;  ///< witness (z unused for the first two axioms)
  AxiomViolation(Axiom a, int x_, int y_, int z_ = -1)
      : Error(std::string("axiom violation: ") + axiom_name(a) + " at x=" +
              std::to_string(x_) + " y=" + std::to_string(y_) +
              (z_ >= 0 ? " z=" + std::to_string(z_) : std::string())),
        axiom(a), x(x_), y(y_), z(z_) {}
};

/** An integer vector that is not primitive where primitivity is required. */
struct NonPrimitive : Error {
  using Error::Error;
};

/** A Coxeter matrix outside the supported catalogue of realizations. */
struct UnsupportedType : Error {
  using Error::Error;
};

/** DSL syntax error with 1-based source position. */
struct SyntaxError : Error {
  int line, col;
  SyntaxError(int line_, int col_, const std::string& what_)
      : Error("syntax error at line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ": " + what_),
        line(line_), col(col_) {}
};

/** A word refers to a generator that the presentation does not declare. */
struct UnknownGenerator : Error {
  std::string name;
  UnknownGenerator(const std::string& name_, int line, int col)
      : Error("unknown generator '" + name_ + "' at line " + std::to_string(line) +
              ", column " + std::to_string(col)),
        name(name_) {}
  explicit UnknownGenerator(const std::string& name_)
      : Error("unknown generator '" + name_ + "'"), name(name_) {}
};

}  // namespace qdl
