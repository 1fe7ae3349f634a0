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

#include "fermicode/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "fermicode/errors.hpp"

namespace fermicode {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

void check_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("Pauli size mismatch: " +
                         std::to_string(a.n_qubits()) + " vs " +
                         std::to_string(b.n_qubits()));
  }
}

Complex i_pow(unsigned k) {
  switch (k & 3u) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

// Splits "(re,im) rest" into the coefficient and the remainder.
std::pair<Complex, std::string_view> split_coefficient(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() != '(') {
    throw ParseError("term must start with '(re,im)': '" + std::string(line) +
                     "'");
  }
  auto close = line.find(')');
  auto comma = line.find(',');
  if (close == std::string_view::npos || comma == std::string_view::npos ||
      comma > close) {
    throw ParseError("malformed coefficient in '" + std::string(line) + "'");
  }
  Complex c{parse_double(line.substr(1, comma - 1)),
            parse_double(line.substr(comma + 1, close - comma - 1))};
  return {c, line.substr(close + 1)};
}

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits),
      x_(word_count(n_qubits), 0),
      z_(word_count(n_qubits), 0) {}

PauliString PauliString::single(std::size_t n_qubits, std::size_t q,
                                char letter) {
  if (q >= n_qubits) {
    throw DimensionError("qubit " + std::to_string(q) + " out of range");
  }
  PauliString p(n_qubits);
  p.set_letter(q, letter);
  return p;
}

PauliString PauliString::from_letters(std::string_view letters) {
  unsigned phase = 0;
  if (!letters.empty() && (letters.front() == '-' || letters.front() == '+')) {
    phase = letters.front() == '-' ? 2 : 0;
    letters.remove_prefix(1);
  }
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) p.set_letter(q, letters[q]);
  return p.mul_phase(phase);
}

bool PauliString::x(std::size_t q) const { return (x_[q / 64] >> (q % 64)) & 1u; }
bool PauliString::z(std::size_t q) const { return (z_[q / 64] >> (q % 64)) & 1u; }

char PauliString::letter(std::size_t q) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[static_cast<int>(x(q)) | (static_cast<int>(z(q)) << 1)];
}

void PauliString::set_letter(std::size_t q, char letter) {
  if (q >= n_qubits_) {
    throw DimensionError("qubit " + std::to_string(q) + " out of range");
  }
  const unsigned keep = letter_phase();
  bool xb = false;
  bool zb = false;
  switch (letter) {
    case 'I':
      break;
    case 'X':
      xb = true;
      break;
    case 'Y':
      xb = zb = true;
      break;
    case 'Z':
      zb = true;
      break;
    default:
      throw ParseError(std::string("unknown Pauli letter '") + letter + "'");
  }
  const std::uint64_t bit = std::uint64_t{1} << (q % 64);
  x_[q / 64] = xb ? (x_[q / 64] | bit) : (x_[q / 64] & ~bit);
  z_[q / 64] = zb ? (z_[q / 64] | bit) : (z_[q / 64] & ~bit);
  phase_ = (keep + y_count()) & 3u;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
  return w;
}

std::size_t PauliString::y_count() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] & z_[i]);
  return w;
}

bool PauliString::is_identity_up_to_phase() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto w) { return w == 0; });
}

// (i^p X^x Z^z)^dagger = i^-p (-1)^{x.z} X^x Z^z, so Hermitian iff p = x.z mod 2.
bool PauliString::is_hermitian() const { return (phase_ % 2) == (y_count() % 2); }

bool PauliString::commutes_with(const PauliString& other) const {
  check_same_size(*this, other);
  std::size_t s = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    s += std::popcount((x_[i] & other.z_[i]) ^ (z_[i] & other.x_[i]));
  }
  return s % 2 == 0;
}

Complex PauliString::letter_coefficient() const { return i_pow(letter_phase()); }

PauliString PauliString::letters_only() const {
  return with_phase(static_cast<unsigned>(y_count() % 4));
}

PauliString PauliString::embedded(std::size_t n_total,
                                  std::size_t offset) const {
  if (offset + n_qubits_ > n_total) {
    throw DimensionError("embedding does not fit in register");
  }
  PauliString r(n_total);
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    const std::size_t t = offset + q;
    const std::uint64_t bit = std::uint64_t{1} << (t % 64);
    if (x(q)) r.x_[t / 64] |= bit;
    if (z(q)) r.z_[t / 64] |= bit;
  }
  r.phase_ = phase_;
  return r;
}

std::uint64_t PauliString::x_mask() const {
  if (n_qubits_ > 64) throw DimensionError("mask needs <= 64 qubits");
  return x_.empty() ? 0 : x_[0];
}

std::uint64_t PauliString::z_mask() const {
  if (n_qubits_ > 64) throw DimensionError("mask needs <= 64 qubits");
  return z_.empty() ? 0 : z_[0];
}

// X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1.x2} X^{x1^x2} Z^{z1^z2}.
PauliString& PauliString::operator*=(const PauliString& rhs) {
  check_same_size(*this, rhs);
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    swaps += std::popcount(z_[i] & rhs.x_[i]);
    x_[i] ^= rhs.x_[i];
    z_[i] ^= rhs.z_[i];
  }
  phase_ = static_cast<unsigned>((phase_ + rhs.phase_ + 2 * swaps) & 3u);
  return *this;
}

bool PauliString::support_less(const PauliString& other) const {
  if (n_qubits_ != other.n_qubits_) return n_qubits_ < other.n_qubits_;
  if (x_ != other.x_) return x_ < other.x_;
  return z_ < other.z_;
}

std::string PauliString::to_string() const {
  static constexpr std::string_view kPrefix[4] = {"", "i", "-", "-i"};
  std::string out(kPrefix[letter_phase()]);
  bool any = false;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    const char l = letter(q);
    if (l == 'I') continue;
    if (any || !out.empty()) out += ' ';
    out += l;
    out += std::to_string(q + 1);
    any = true;
  }
  if (!any) out += out.empty() ? "I" : " I";
  return out;
}

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  return a * b;
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
  return a.commutes_with(b);
}

std::size_t pauli_weight(const PauliString& a) { return a.weight(); }

bool pauli_is_hermitian(const PauliString& a) { return a.is_hermitian(); }

std::size_t symplectic_rank(std::span<const PauliString> ops) {
  if (ops.empty()) return 0;
  const std::size_t n = ops.front().n_qubits();
  std::vector<std::vector<bool>> rows;
  rows.reserve(ops.size());
  for (const auto& p : ops) {
    if (p.n_qubits() != n) throw DimensionError("rank: mixed register sizes");
    std::vector<bool> r(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      r[q] = p.x(q);
      r[n + q] = p.z(q);
    }
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                              [col](const auto& r) { return r[col]; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<long>(rank), pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t c = 0; c < 2 * n; ++c) rows[r][c] = rows[r][c] ^ rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

void PauliSum::add(Complex c, const PauliString& p) {
  if (n_qubits_ == 0 && terms_.empty()) n_qubits_ = p.n_qubits();
  if (p.n_qubits() != n_qubits_) {
    throw DimensionError("PauliSum size mismatch");
  }
  const Complex folded = c * p.letter_coefficient();
  auto key = p.letters_only();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (std::abs(folded) >= kZeroThreshold) terms_.emplace(std::move(key), folded);
    return;
  }
  it->second += folded;
  if (std::abs(it->second) < kZeroThreshold) terms_.erase(it);
}

void PauliSum::add(const PauliSum& other, Complex scale) {
  for (const auto& [p, c] : other.terms_) add(scale * c, p);
}

Complex PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Complex{} : it->second;
}

double PauliSum::max_imag() const {
  double m = 0.0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

PauliSum sum_accumulate(PauliSum s, Complex c, const PauliString& p) {
  s.add(c, p);
  return s;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_complex(Complex c) {
  return "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
}

std::string format_term(Complex c, const PauliString& letters) {
  std::string out = format_complex(c);
  bool any = false;
  for (std::size_t q = 0; q < letters.n_qubits(); ++q) {
    const char l = letters.letter(q);
    if (l == 'I') continue;
    out += ' ';
    out += l;
    out += std::to_string(q + 1);
    any = true;
  }
  if (!any) out += " I";
  return out;
}

std::string format_operator(const PauliString& p) {
  return format_term(p.letter_coefficient(), p);
}

std::pair<Complex, PauliString> parse_term(std::string_view line,
                                           std::size_t n_qubits) {
  auto [c, rest] = split_coefficient(line);
  PauliString p(n_qubits);
  std::istringstream tokens{std::string(rest)};
  std::string tok;
  bool identity = false;
  bool any = false;
  while (tokens >> tok) {
    if (tok == "I") {
      identity = true;
      continue;
    }
    const char l = tok.front();
    if (l != 'X' && l != 'Y' && l != 'Z') {
      throw ParseError("bad Pauli factor '" + tok + "'");
    }
    std::size_t q = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || q == 0) {
      throw ParseError("bad qubit label in '" + tok + "'");
    }
    if (q > n_qubits) {
      throw DimensionError("qubit " + std::to_string(q) + " exceeds register of " +
                           std::to_string(n_qubits));
    }
    if (p.letter(q - 1) != 'I') {
      throw ParseError("qubit " + std::to_string(q) + " repeated in term");
    }
    p.set_letter(q - 1, l);
    any = true;
  }
  if (identity && any) throw ParseError("identity mixed with Pauli factors");
  if (!identity && !any) throw ParseError("empty term");
  return {c, p};
}

PauliString parse_operator(std::string_view line, std::size_t n_qubits) {
  auto [c, p] = parse_term(line, n_qubits);
  for (unsigned k = 0; k < 4; ++k) {
    if (std::abs(c - i_pow(k)) < kZeroThreshold) return p.mul_phase(k);
  }
  throw ParseError("operator coefficient must be a power of i");
}

void write_pauli_sum(std::ostream& os, const PauliSum& sum) {
  os << "# qubits " << sum.n_qubits() << '\n';
  for (const auto& [p, c] : sum.terms()) os << format_term(c, p) << '\n';
}

PauliSum read_pauli_sum(std::istream& is) {
  std::vector<std::string> lines;
  std::size_t n_qubits = 0;
  bool have_header = false;
  std::string line;
  while (std::getline(is, line)) {
    auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      std::istringstream hs{std::string(t.substr(1))};
      std::string key;
      if (hs >> key && key == "qubits") {
        if (!(hs >> n_qubits)) throw ParseError("bad '# qubits' header");
        have_header = true;
      }
      continue;
    }
    lines.emplace_back(t);
  }
  if (!have_header) {
    // Infer the register from the largest qubit label.
    for (const auto& l : lines) {
      std::istringstream tokens{std::string(split_coefficient(l).second)};
      std::string tok;
      while (tokens >> tok) {
        if (tok.size() > 1) n_qubits = std::max<std::size_t>(n_qubits, std::stoul(tok.substr(1)));
      }
    }
  }
  PauliSum sum(n_qubits);
  for (const auto& l : lines) {
    auto [c, p] = parse_term(l, n_qubits);
    sum.add(c, p);
  }
  return sum;
}

}  // namespace fermicode
