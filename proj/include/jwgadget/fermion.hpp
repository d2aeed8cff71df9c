#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "jwgadget/errors.hpp"

namespace jwg {

/// The five term shapes the compiler accepts, named by their action on
/// occupation-number states. Non-diagonal families always stand for the
/// stored operator plus its Hermitian conjugate.
enum class TermFamily : std::uint8_t {
  Number,            // a+_p a_p
  Hopping,           // a+_p a_q + a+_q a_p, p < q
  NumberNumber,      // a+_p a+_q a_q a_p, p < q
  NumberExcitation,  // a+_p a+_q a_p a_r + h.c., q < r (p may sit anywhere)
  DoubleExcitation,  // a+_p a+_q a_r a_s + h.c., p < q < r < s
};

const char* family_name(TermFamily family);
bool family_is_diagonal(TermFamily family);

/// A canonicalized Hamiltonian term. `orbitals` holds `orbital_count()`
/// 0-based indices in the family's canonical order; `sign` carries the
/// parity accumulated while reordering the raw operators, and multiplies
/// the effective rotation direction downstream.
struct FermionTerm {
  TermFamily family = TermFamily::Number;
  std::array<std::uint32_t, 4> orbitals{};
  double coefficient = 0.0;
  int sign = 1;
  std::uint32_t num_orbitals = 0;

  std::uint32_t orbital_count() const;
  double effective_coefficient() const { return sign * coefficient; }
  bool same_shape(const FermionTerm& other) const;
};

/// Classifies a raw product of creation and annihilation operators (given
/// in operator order, creations first) into its canonical family form.
/// The returned sign is the permutation parity needed to reach that form;
/// for non-diagonal families the representative may be the conjugate of
/// the raw input, which is free because the stored term always means
/// term + conjugate.
FermionTerm classify_raw(const std::vector<std::uint32_t>& creation_indices,
                         const std::vector<std::uint32_t>& annihilation_indices,
                         double coefficient, std::uint32_t num_orbitals);

/// The canonical raw operator lists (creations, annihilations) whose
/// classification reproduces the term with sign +1.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> raw_form(
    const FermionTerm& term);

struct Hamiltonian {
  std::uint32_t num_orbitals = 0;
  std::vector<FermionTerm> terms;
  /// Original input text per term, for traceability in reports. Merged
  /// duplicates concatenate their source lines with " ; ".
  std::vector<std::string> sources;
};

/// Parses the line-oriented Hamiltonian format:
///   orbitals <M>
///   two <i> <j> <coeff>          # h a+_i a_j (+ h.c. when i != j)
///   four <i> <j> <k> <l> <coeff> # h a+_i a+_j a_k a_l (+ h.c.)
/// '#' starts a comment. Duplicate canonical terms have their effective
/// coefficients summed; exact zero sums are dropped.
Hamiltonian parse_hamiltonian(std::istream& in);
Hamiltonian parse_hamiltonian_text(const std::string& text);

/// Canonical single-line form, e.g. "four 0 1 2 3 0.25", with the sign
/// folded into the printed coefficient.
std::string canonical_line(const FermionTerm& term);

std::string serialize(const Hamiltonian& hamiltonian);

}  // namespace jwg
