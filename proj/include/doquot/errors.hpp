/*
   Copyright 2026 the doquot authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DOQUOT_ERRORS_HPP
#define DOQUOT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace doquot {

/* Common base so callers can catch any library error in one clause. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Inversion of the zero residue or the zero field element. */
class ZeroInversionError : public Error {
public:
    ZeroInversionError() : Error("inversion of zero") {}
};

/* Polynomial division with a zero divisor. */
class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("polynomial division by zero") {}
};

/* An operation that needs a nonzero polynomial received the zero polynomial. */
class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("zero polynomial not allowed here") {}
};

/* Matrix or vector shapes do not line up. */
class DimensionMismatchError : public Error {
public:
    DimensionMismatchError() : Error("dimension mismatch") {}
};

/* Operands live over different prime fields (or extension fields). */
class ModulusMismatchError : public Error {
public:
    ModulusMismatchError() : Error("operands have different moduli") {}
};

/* Attempt to invert a singular matrix; carries the rank found. */
class SingularError : public Error {
public:
    explicit SingularError(std::size_t rank)
        : Error("singular matrix (rank " + std::to_string(rank) + ")"), rank_(rank) {}
    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

/* Relative trace with a subfield degree that does not divide the top degree. */
class NonDivisorError : public Error {
public:
    NonDivisorError() : Error("subfield degree does not divide extension degree") {}
};

/* An input that must be invertible is not. */
class NotInvertibleError : public Error {
public:
    NotInvertibleError() : Error("input matrix is not invertible") {}
};

/* An operation that needs at least one element received an empty collection. */
class EmptyInputError : public Error {
public:
    EmptyInputError() : Error("empty input") {}
};

/* Planarity-style analysis is only defined in odd characteristic. */
class EvenCharacteristicError : public Error {
public:
    EvenCharacteristicError() : Error("operation requires odd characteristic") {}
};

/* A map that must be a permutation of the field is not bijective. */
class NotAPermutationError : public Error {
public:
    NotAPermutationError() : Error("linearized map is not a permutation") {}
};

/* Twist parameters (p, n, k) outside the planar parameter range. */
class NotPlanarParametersError : public Error {
public:
    NotPlanarParametersError() : Error("parameters do not give a planar monomial") {}
};

/* A direction element that must be nonzero is zero. */
class ZeroDirectionError : public Error {
public:
    ZeroDirectionError() : Error("direction element must be nonzero") {}
};

/* Twist parameters for which the twisted linear map is not invertible. */
class NotInvertibleParametersError : public Error {
public:
    NotInvertibleParametersError() : Error("twisted map is not invertible for these parameters") {}
};

/* Refusal to run an enumeration whose size exceeds the configured limit. */
class SizeGuardError : public Error {
public:
    explicit SizeGuardError(const std::string& what) : Error("size guard: " + what) {}
};

/* Malformed textual or JSON input. */
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace doquot

#endif
