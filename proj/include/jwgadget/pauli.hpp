#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jwgadget/errors.hpp"

namespace jwg {

using cplx = std::complex<double>;

enum class Pauli : std::uint8_t { X = 1, Y = 2, Z = 3 };

char pauli_letter(Pauli p);

/// A weighted tensor product of single-qubit Paulis over a register of
/// `width` qubits. `letters` is sparse and kept sorted by qubit index;
/// qubits not listed carry the identity. An empty letter list is the
/// (scaled) identity string.
struct PauliString {
  cplx coefficient{1.0, 0.0};
  std::vector<std::pair<std::uint32_t, Pauli>> letters;
  std::uint32_t width = 0;

  bool is_identity() const { return letters.empty(); }

  /// Comparison key ignoring the coefficient.
  bool same_letters(const PauliString& other) const { return letters == other.letters; }
};

/// Product of two strings, tracking the phase from single-qubit Pauli
/// products (XY = iZ and cyclic).
PauliString multiply(const PauliString& a, const PauliString& b);

/// A sum of Pauli strings over a common width. Kept normalized: strings
/// sorted by letters, duplicates merged, and coefficients below a 1e-12
/// relative magnitude pruned (cancellations are exact in exact arithmetic;
/// the tolerance only absorbs float roundoff).
struct PauliSum {
  std::uint32_t width = 0;
  std::vector<PauliString> strings;
};

/// Relative pruning threshold applied during normalization.
inline constexpr double kPruneRelativeTolerance = 1e-12;

PauliSum make_pauli_sum(std::uint32_t width, std::vector<PauliString> strings);
PauliSum identity_sum(std::uint32_t width, cplx coefficient = {1.0, 0.0});

PauliSum add(const PauliSum& a, const PauliSum& b);
PauliSum multiply(const PauliSum& a, const PauliSum& b);
PauliSum commutator(const PauliSum& a, const PauliSum& b);
PauliSum adjoint(const PauliSum& a);
PauliSum scaled(const PauliSum& a, cplx factor);

enum class PauliOp { Add, Multiply, Commutator };

/// Dispatch wrapper over the three binary operations.
PauliSum pauli_sum_algebra(const PauliSum& a, const PauliSum& b, PauliOp op);

bool strings_commute(const PauliString& a, const PauliString& b);

/// One string per line, `<re> <im> <letters>`, letters like `Z0 Z1 X2`.
std::string pauli_string_to_text(const PauliString& s);
std::string pauli_sum_to_text(const PauliSum& sum);

}  // namespace jwg
