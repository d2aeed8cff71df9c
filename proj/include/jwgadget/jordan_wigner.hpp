#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jwgadget/fermion.hpp"
#include "jwgadget/pauli.hpp"

namespace jwg {

/// The swap-between-two-bitstrings (x) Z-string normal form of a mapped
/// term pair: scale * (|a><b| + |b><a|)_{swap_qubits} (x) Z_{z_string},
/// or, when diagonal, scale * |a><a|. Pattern bits are listed in
/// swap_qubits order, leftmost bit first; the z_string is disjoint from
/// the swap qubits (any overlap is folded into the scale). `scale`
/// includes the term's coefficient and canonicalization sign.
struct ProjectorForm {
  std::vector<std::uint32_t> swap_qubits;
  std::vector<std::uint8_t> pattern_a;
  std::vector<std::uint8_t> pattern_b;
  std::vector<std::uint32_t> z_string;
  double scale = 0.0;
  bool diagonal = false;
  std::uint32_t width = 0;

  std::string pattern_a_text() const;
  std::string pattern_b_text() const;
};

/// Jordan-Wigner image of a single ladder operator: two strings,
/// (X_p -+ i Y_p)/2 tensored with Z on every t < p (minus for creation).
PauliSum jw_ladder(std::uint32_t p, bool dagger, std::uint32_t M);

/// Jordan-Wigner image of the whole (Hermitian-paired) term, built as the
/// operator product of jw_ladder factors. The common string magnitude is
/// whatever that product yields: h/8 for double excitations, h/4 for
/// number excitations, h/2 for hopping.
PauliSum jw_pauli_expansion(const FermionTerm& term);

ProjectorForm jw_projector_form(const FermionTerm& term);

std::string projector_form_to_text(const ProjectorForm& form);

}  // namespace jwg
