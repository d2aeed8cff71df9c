#include "jwgadget/fermion.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>

namespace jwg {

const char* family_name(TermFamily family) {
  switch (family) {
    case TermFamily::Number: return "number";
    case TermFamily::Hopping: return "hopping";
    case TermFamily::NumberNumber: return "number-number";
    case TermFamily::NumberExcitation: return "number-excitation";
    case TermFamily::DoubleExcitation: return "double-excitation";
  }
  return "?";
}

bool family_is_diagonal(TermFamily family) {
  return family == TermFamily::Number || family == TermFamily::NumberNumber;
}

std::uint32_t FermionTerm::orbital_count() const {
  switch (family) {
    case TermFamily::Number: return 1;
    case TermFamily::Hopping:
    case TermFamily::NumberNumber: return 2;
    case TermFamily::NumberExcitation: return 3;
    case TermFamily::DoubleExcitation: return 4;
  }
  return 0;
}

bool FermionTerm::same_shape(const FermionTerm& other) const {
  if (family != other.family || num_orbitals != other.num_orbitals) return false;
  const std::uint32_t n = orbital_count();
  return std::equal(orbitals.begin(), orbitals.begin() + n, other.orbitals.begin());
}

namespace {

void check_indices(const std::vector<std::uint32_t>& indices, std::uint32_t num_orbitals) {
  for (std::uint32_t i : indices)
    if (i >= num_orbitals)
      throw IndexOutOfRange("orbital index " + std::to_string(i) + " >= register size " +
                            std::to_string(num_orbitals));
}

// Parity of reordering a two-operator list into (first, second).
int parity_to(const std::array<std::uint32_t, 2>& raw, std::uint32_t first) {
  return raw[0] == first ? 1 : -1;
}

FermionTerm make_term(TermFamily family, std::array<std::uint32_t, 4> orbs, double coefficient,
                      int sign, std::uint32_t num_orbitals) {
  FermionTerm t;
  t.family = family;
  t.orbitals = orbs;
  t.coefficient = coefficient;
  t.sign = sign;
  t.num_orbitals = num_orbitals;
  return t;
}

FermionTerm classify_two_body(std::array<std::uint32_t, 2> cre, std::array<std::uint32_t, 2> ann,
                              double coefficient, std::uint32_t num_orbitals) {
  if (cre[0] == cre[1])
    throw UnclassifiableTerm("repeated creation index " + std::to_string(cre[0]) +
                             " annihilates the term");
  if (ann[0] == ann[1])
    throw UnclassifiableTerm("repeated annihilation index " + std::to_string(ann[0]) +
                             " annihilates the term");

  const bool c0_shared = ann[0] == cre[0] || ann[1] == cre[0];
  const bool c1_shared = ann[0] == cre[1] || ann[1] == cre[1];
  const int shared = int(c0_shared) + int(c1_shared);

  if (shared == 2) {
    // n_p n_q up to reordering. Canonical operator order is a+_p a+_q a_q a_p.
    const std::uint32_t p = std::min(cre[0], cre[1]);
    const std::uint32_t q = std::max(cre[0], cre[1]);
    const int sign = parity_to(cre, p) * parity_to(ann, q);
    return make_term(TermFamily::NumberNumber, {p, q, 0, 0}, coefficient, sign, num_orbitals);
  }

  if (shared == 1) {
    // One repeated index p; the distinct creation and annihilation indices
    // become q and r with q < r, conjugating the raw term if needed.
    const std::uint32_t p = c0_shared ? cre[0] : cre[1];
    const std::uint32_t qc = c0_shared ? cre[1] : cre[0];
    const std::uint32_t ra = (ann[0] == p) ? ann[1] : ann[0];
    if (qc < ra) {
      const int sign = parity_to(cre, p) * parity_to(ann, p);
      return make_term(TermFamily::NumberExcitation, {p, qc, ra, 0}, coefficient, sign,
                       num_orbitals);
    }
    // Conjugate of (c1 c2 | a1 a2) is (a2 a1 | c2 c1).
    const std::array<std::uint32_t, 2> conj_cre{ann[1], ann[0]};
    const std::array<std::uint32_t, 2> conj_ann{cre[1], cre[0]};
    const int sign = parity_to(conj_cre, p) * parity_to(conj_ann, p);
    return make_term(TermFamily::NumberExcitation, {p, ra, qc, 0}, coefficient, sign,
                     num_orbitals);
  }

  // All four indices distinct; requires creations strictly below (or strictly
  // above, via conjugation) the annihilations.
  const std::uint32_t cmin = std::min(cre[0], cre[1]);
  const std::uint32_t cmax = std::max(cre[0], cre[1]);
  const std::uint32_t amin = std::min(ann[0], ann[1]);
  const std::uint32_t amax = std::max(ann[0], ann[1]);
  if (cmax < amin) {
    const int sign = parity_to(cre, cmin) * parity_to(ann, amin);
    return make_term(TermFamily::DoubleExcitation, {cmin, cmax, amin, amax}, coefficient, sign,
                     num_orbitals);
  }
  if (amax < cmin) {
    const std::array<std::uint32_t, 2> conj_cre{ann[1], ann[0]};
    const std::array<std::uint32_t, 2> conj_ann{cre[1], cre[0]};
    const int sign = parity_to(conj_cre, amin) * parity_to(conj_ann, cmin);
    return make_term(TermFamily::DoubleExcitation, {amin, amax, cmin, cmax}, coefficient, sign,
                     num_orbitals);
  }
  throw UnclassifiableTerm(
      "four distinct indices interleave; the creation pair must sit entirely below or above "
      "the annihilation pair");
}

}  // namespace

FermionTerm classify_raw(const std::vector<std::uint32_t>& creation_indices,
                         const std::vector<std::uint32_t>& annihilation_indices,
                         double coefficient, std::uint32_t num_orbitals) {
  check_indices(creation_indices, num_orbitals);
  check_indices(annihilation_indices, num_orbitals);
  if (creation_indices.size() != annihilation_indices.size() || creation_indices.empty() ||
      creation_indices.size() > 2)
    throw UnclassifiableTerm("expected 1 or 2 creation indices matched by annihilations");

  if (creation_indices.size() == 1) {
    const std::uint32_t p = creation_indices[0];
    const std::uint32_t q = annihilation_indices[0];
    if (p == q) return make_term(TermFamily::Number, {p, 0, 0, 0}, coefficient, 1, num_orbitals);
    // a+_p a_q + h.c. is symmetric in (p, q); no sign is picked up.
    return make_term(TermFamily::Hopping, {std::min(p, q), std::max(p, q), 0, 0}, coefficient, 1,
                     num_orbitals);
  }
  return classify_two_body({creation_indices[0], creation_indices[1]},
                           {annihilation_indices[0], annihilation_indices[1]}, coefficient,
                           num_orbitals);
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> raw_form(
    const FermionTerm& t) {
  switch (t.family) {
    case TermFamily::Number: return {{t.orbitals[0]}, {t.orbitals[0]}};
    case TermFamily::Hopping: return {{t.orbitals[0]}, {t.orbitals[1]}};
    case TermFamily::NumberNumber:
      return {{t.orbitals[0], t.orbitals[1]}, {t.orbitals[1], t.orbitals[0]}};
    case TermFamily::NumberExcitation:
      return {{t.orbitals[0], t.orbitals[1]}, {t.orbitals[0], t.orbitals[2]}};
    case TermFamily::DoubleExcitation:
      return {{t.orbitals[0], t.orbitals[1]}, {t.orbitals[2], t.orbitals[3]}};
  }
  throw std::logic_error("unknown family");
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool parse_u32(const std::string& token, std::uint32_t& out) {
  if (token.empty()) return false;
  std::uint64_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
    if (value > 0xffffffffull) return false;
  }
  out = static_cast<std::uint32_t>(value);
  return true;
}

bool parse_real(const std::string& token, double& out) {
  std::size_t consumed = 0;
  try {
    out = std::stod(token, &consumed);
  } catch (const std::exception&) {
    return false;
  }
  return consumed == token.size();
}

}  // namespace

Hamiltonian parse_hamiltonian(std::istream& in) {
  Hamiltonian result;
  bool have_header = false;
  std::string line;
  std::size_t line_number = 0;
  // Maps canonical (family, orbitals) to index in result.terms.
  std::map<std::pair<int, std::array<std::uint32_t, 4>>, std::size_t> seen;

  while (std::getline(in, line)) {
    ++line_number;
    const std::string original = line;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    std::string tok;
    while (tokens >> tok) fields.push_back(tok);
    if (fields.empty()) continue;

    if (!have_header) {
      if (fields[0] != "orbitals" || fields.size() != 2)
        throw ParseError(line_number, "expected header `orbitals <M>`");
      if (!parse_u32(fields[1], result.num_orbitals) || result.num_orbitals == 0)
        throw ParseError(line_number, "invalid register size `" + fields[1] + "`");
      have_header = true;
      continue;
    }

    std::vector<std::uint32_t> cre, ann;
    double coefficient = 0.0;
    if (fields[0] == "two") {
      if (fields.size() != 4) throw ParseError(line_number, "expected `two <i> <j> <coeff>`");
      std::uint32_t i, j;
      if (!parse_u32(fields[1], i) || !parse_u32(fields[2], j))
        throw ParseError(line_number, "invalid orbital index");
      if (!parse_real(fields[3], coefficient))
        throw ParseError(line_number, "invalid coefficient `" + fields[3] + "`");
      cre = {i};
      ann = {j};
    } else if (fields[0] == "four") {
      if (fields.size() != 6)
        throw ParseError(line_number, "expected `four <i> <j> <k> <l> <coeff>`");
      std::uint32_t i, j, k, l;
      if (!parse_u32(fields[1], i) || !parse_u32(fields[2], j) || !parse_u32(fields[3], k) ||
          !parse_u32(fields[4], l))
        throw ParseError(line_number, "invalid orbital index");
      if (!parse_real(fields[5], coefficient))
        throw ParseError(line_number, "invalid coefficient `" + fields[5] + "`");
      cre = {i, j};
      ann = {k, l};
    } else {
      throw ParseError(line_number, "unknown record `" + fields[0] + "`");
    }

    FermionTerm term;
    try {
      term = classify_raw(cre, ann, coefficient, result.num_orbitals);
    } catch (const UnclassifiableTerm& e) {
      throw ParseError(line_number, e.what());
    } catch (const IndexOutOfRange& e) {
      throw IndexOutOfRange("line " + std::to_string(line_number) + ": " + e.what());
    }

    const auto key = std::make_pair(static_cast<int>(term.family), term.orbitals);
    const double effective = term.effective_coefficient();
    if (auto it = seen.find(key); it != seen.end()) {
      result.terms[it->second].coefficient += effective;
      result.sources[it->second] += " ; " + original;
    } else {
      term.coefficient = effective;
      term.sign = 1;
      seen.emplace(key, result.terms.size());
      result.terms.push_back(term);
      result.sources.push_back(original);
    }
  }
  if (!have_header) throw ParseError(line_number + 1, "missing `orbitals <M>` header");

  // Drop terms whose duplicates summed to exactly zero.
  Hamiltonian pruned;
  pruned.num_orbitals = result.num_orbitals;
  for (std::size_t i = 0; i < result.terms.size(); ++i) {
    if (result.terms[i].coefficient == 0.0) continue;
    pruned.terms.push_back(result.terms[i]);
    pruned.sources.push_back(result.sources[i]);
  }
  return pruned;
}

Hamiltonian parse_hamiltonian_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hamiltonian(in);
}

std::string canonical_line(const FermionTerm& term) {
  const auto [cre, ann] = raw_form(term);
  std::string out = cre.size() == 1 ? "two" : "four";
  for (std::uint32_t i : cre) out += " " + std::to_string(i);
  for (std::uint32_t i : ann) out += " " + std::to_string(i);
  out += " " + format_double(term.effective_coefficient());
  return out;
}

std::string serialize(const Hamiltonian& hamiltonian) {
  std::string out = "orbitals " + std::to_string(hamiltonian.num_orbitals) + "\n";
  for (const auto& term : hamiltonian.terms) out += canonical_line(term) + "\n";
  return out;
}

}  // namespace jwg
