// Copyright 2026 The fermicode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fermicode {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are treated as zero.
inline constexpr double kZeroThreshold = 1e-12;

/// Phase-tracked Pauli operator on n qubits in symplectic form.
///
/// The stored operator is i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}. The
/// letter Y on a qubit is therefore (x,z) = (1,1) together with one unit of
/// phase, since Y = i X Z. Qubits are 0-based in memory.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  /// Single-letter operator ('I', 'X', 'Y' or 'Z') on qubit q.
  static PauliString single(std::size_t n_qubits, std::size_t q, char letter);
  /// Letter string, qubit 0 first, with optional leading sign ("-XZIY").
  static PauliString from_letters(std::string_view letters);

  std::size_t n_qubits() const { return n_qubits_; }
  unsigned phase_exp() const { return phase_; }

  bool x(std::size_t q) const;
  bool z(std::size_t q) const;
  /// 'I', 'X', 'Y' or 'Z' on qubit q, ignoring the global phase.
  char letter(std::size_t q) const;
  /// Replaces the letter on qubit q and keeps the letter-form coefficient.
  void set_letter(std::size_t q, char letter);

  std::size_t weight() const;
  std::size_t y_count() const;
  bool is_identity_up_to_phase() const;
  bool is_hermitian() const;
  bool commutes_with(const PauliString& other) const;

  /// The operator equals i^letter_phase() times the product of its letters.
  unsigned letter_phase() const { return (phase_ + 4 - (y_count() % 4)) % 4; }
  /// i^letter_phase() as a complex number.
  Complex letter_coefficient() const;

  PauliString& mul_phase(unsigned k) {
    phase_ = (phase_ + k) & 3u;
    return *this;
  }
  PauliString with_phase(unsigned k) const {
    PauliString r = *this;
    r.phase_ = k & 3u;
    return r;
  }
  /// Same (x,z) with the phase that makes the letter coefficient +1.
  PauliString letters_only() const;

  /// Copies this operator onto qubits [offset, offset+n) of a larger register.
  PauliString embedded(std::size_t n_total, std::size_t offset) const;

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }
  /// Bit masks for registers of at most 64 qubits.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(const PauliString&, const PauliString&) = default;

  /// Orders by (x,z) bits only; the phase is ignored.
  bool support_less(const PauliString& other) const;
  bool same_support(const PauliString& other) const {
    return n_qubits_ == other.n_qubits_ && x_ == other.x_ && z_ == other.z_;
  }

  /// Compact form such as "-i X1 Z2 Y3"; 1-based qubit labels.
  std::string to_string() const;

 private:
  std::size_t n_qubits_ = 0;
  unsigned phase_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

PauliString pauli_multiply(const PauliString& a, const PauliString& b);
bool pauli_commutes(const PauliString& a, const PauliString& b);
std::size_t pauli_weight(const PauliString& a);
bool pauli_is_hermitian(const PauliString& a);

/// Rank over GF(2) of the symplectic (x|z) vectors.
std::size_t symplectic_rank(std::span<const PauliString> ops);

/// Linear combination of Hermitian Pauli letter strings.
///
/// Every key is stored with letter coefficient +1, so the coefficient is the
/// weight of the plain letter product (Y as a letter, not i X Z). A Hermitian
/// operator therefore has real coefficients.
class PauliSum {
 public:
  struct KeyLess {
    bool operator()(const PauliString& a, const PauliString& b) const {
      return a.support_less(b);
    }
  };
  using TermMap = std::map<PauliString, Complex, KeyLess>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c * p; the phase of p is folded into the coefficient.
  void add(Complex c, const PauliString& p);
  void add(const PauliSum& other, Complex scale = 1.0);
  /// Coefficient of the letter string with the same support as p.
  Complex coefficient(const PauliString& p) const;
  /// Largest |Im c| over all terms.
  double max_imag() const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  std::size_t n_qubits_ = 0;
  TermMap terms_;
};

/// Returns s with c * p accumulated.
PauliSum sum_accumulate(PauliSum s, Complex c, const PauliString& p);

/// Shortest round-trip decimal form of a double; "-0" prints as "0".
std::string format_double(double v);
/// "(re,im)".
std::string format_complex(Complex c);

/// Splits "(re,im) rest" into the coefficient and the remainder.
std::pair<Complex, std::string_view> split_coefficient(std::string_view line);

/// One `.pauli` term line: `(<re>,<im>) X1 Z2 Y3` or `(<re>,<im>) I`.
std::string format_term(Complex c, const PauliString& letters);
/// An operator as a term line with its own phase as the coefficient.
std::string format_operator(const PauliString& p);
/// Parses one term line. Qubit labels are 1-based.
std::pair<Complex, PauliString> parse_term(std::string_view line,
                                           std::size_t n_qubits);
/// Parses an operator written by format_operator; the coefficient must be a
/// power of i.
PauliString parse_operator(std::string_view line, std::size_t n_qubits);

/// `.pauli` document: a "# qubits <n>" header then one term per line.
void write_pauli_sum(std::ostream& os, const PauliSum& sum);
PauliSum read_pauli_sum(std::istream& is);

}  // namespace fermicode
