#include "jwgadget/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace jwg {

char pauli_letter(Pauli p) {
  switch (p) {
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

namespace {

// Phase and result of a single-qubit product a*b, for non-identity a, b.
// XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i; equal letters
// multiply to the identity.
struct LocalProduct {
  cplx phase;
  Pauli letter;  // meaningful only when `identity` is false
  bool identity;
};

LocalProduct local_product(Pauli a, Pauli b) {
  if (a == b) return {cplx{1.0, 0.0}, a, true};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const Pauli third = static_cast<Pauli>(6 - ia - ib);
  const bool cyclic = (ib - ia + 3) % 3 == 1;  // X->Y->Z->X
  return {cyclic ? cplx{0.0, 1.0} : cplx{0.0, -1.0}, third, false};
}

bool letters_less(const PauliString& a, const PauliString& b) {
  return a.letters < b.letters;
}

}  // namespace

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.width != b.width)
    throw WidthMismatch("pauli string widths differ: " + std::to_string(a.width) + " vs " +
                        std::to_string(b.width));
  PauliString out;
  out.width = a.width;
  out.coefficient = a.coefficient * b.coefficient;
  out.letters.reserve(a.letters.size() + b.letters.size());

  auto ia = a.letters.begin();
  auto ib = b.letters.begin();
  while (ia != a.letters.end() && ib != b.letters.end()) {
    if (ia->first < ib->first) {
      out.letters.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.letters.push_back(*ib++);
    } else {
      const LocalProduct lp = local_product(ia->second, ib->second);
      out.coefficient *= lp.phase;
      if (!lp.identity) out.letters.emplace_back(ia->first, lp.letter);
      ++ia;
      ++ib;
    }
  }
  out.letters.insert(out.letters.end(), ia, a.letters.end());
  out.letters.insert(out.letters.end(), ib, b.letters.end());
  return out;
}

PauliSum make_pauli_sum(std::uint32_t width, std::vector<PauliString> strings) {
  for (auto& s : strings) {
    if (s.width != width)
      throw WidthMismatch("string width " + std::to_string(s.width) +
                          " does not match sum width " + std::to_string(width));
    for (const auto& [q, p] : s.letters) {
      (void)p;
      if (q >= width)
        throw IndexOutOfRange("qubit " + std::to_string(q) + " outside width " +
                              std::to_string(width));
    }
    if (!std::is_sorted(s.letters.begin(), s.letters.end(),
                        [](const auto& l, const auto& r) { return l.first < r.first; }))
      std::sort(s.letters.begin(), s.letters.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
  }
  std::sort(strings.begin(), strings.end(), letters_less);

  std::vector<PauliString> merged;
  merged.reserve(strings.size());
  for (auto& s : strings) {
    if (!merged.empty() && merged.back().same_letters(s)) {
      merged.back().coefficient += s.coefficient;
    } else {
      merged.push_back(std::move(s));
    }
  }

  double max_mag = 0.0;
  for (const auto& s : merged) max_mag = std::max(max_mag, std::abs(s.coefficient));
  const double threshold = max_mag * kPruneRelativeTolerance;
  std::vector<PauliString> pruned;
  pruned.reserve(merged.size());
  for (auto& s : merged)
    if (std::abs(s.coefficient) > threshold) pruned.push_back(std::move(s));

  PauliSum out;
  out.width = width;
  out.strings = std::move(pruned);
  return out;
}

PauliSum identity_sum(std::uint32_t width, cplx coefficient) {
  PauliString s;
  s.width = width;
  s.coefficient = coefficient;
  return make_pauli_sum(width, {std::move(s)});
}

PauliSum add(const PauliSum& a, const PauliSum& b) {
  if (a.width != b.width)
    throw WidthMismatch("pauli sum widths differ: " + std::to_string(a.width) + " vs " +
                        std::to_string(b.width));
  std::vector<PauliString> all = a.strings;
  all.insert(all.end(), b.strings.begin(), b.strings.end());
  return make_pauli_sum(a.width, std::move(all));
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  if (a.width != b.width)
    throw WidthMismatch("pauli sum widths differ: " + std::to_string(a.width) + " vs " +
                        std::to_string(b.width));
  std::vector<PauliString> products;
  products.reserve(a.strings.size() * b.strings.size());
  for (const auto& sa : a.strings)
    for (const auto& sb : b.strings) products.push_back(multiply(sa, sb));
  return make_pauli_sum(a.width, std::move(products));
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return add(multiply(a, b), scaled(multiply(b, a), cplx{-1.0, 0.0}));
}

PauliSum adjoint(const PauliSum& a) {
  // Every letter tensor is Hermitian, so only coefficients conjugate.
  PauliSum out = a;
  for (auto& s : out.strings) s.coefficient = std::conj(s.coefficient);
  return out;
}

PauliSum scaled(const PauliSum& a, cplx factor) {
  std::vector<PauliString> strings = a.strings;
  for (auto& s : strings) s.coefficient *= factor;
  return make_pauli_sum(a.width, std::move(strings));
}

PauliSum pauli_sum_algebra(const PauliSum& a, const PauliSum& b, PauliOp op) {
  switch (op) {
    case PauliOp::Add: return add(a, b);
    case PauliOp::Multiply: return multiply(a, b);
    case PauliOp::Commutator: return commutator(a, b);
  }
  throw std::invalid_argument("unknown pauli operation");
}

bool strings_commute(const PauliString& a, const PauliString& b) {
  // Strings commute iff they anticommute on an even number of qubits.
  std::size_t odd_overlap = 0;
  auto ia = a.letters.begin();
  auto ib = b.letters.begin();
  while (ia != a.letters.end() && ib != b.letters.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second != ib->second) ++odd_overlap;
      ++ia;
      ++ib;
    }
  }
  return odd_overlap % 2 == 0;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string pauli_string_to_text(const PauliString& s) {
  std::string out = format_double(s.coefficient.real()) + " " + format_double(s.coefficient.imag());
  for (const auto& [q, p] : s.letters) {
    out += ' ';
    out += pauli_letter(p);
    out += std::to_string(q);
  }
  return out;
}

std::string pauli_sum_to_text(const PauliSum& sum) {
  std::string out;
  for (const auto& s : sum.strings) {
    out += pauli_string_to_text(s);
    out += '\n';
  }
  return out;
}

}  // namespace jwg
