#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace gkplab {

enum class BellLetter : std::uint8_t { phi, psi };
enum class BellSign : std::uint8_t { plus, minus };

struct BellLabel {
  BellLetter letter = BellLetter::phi;
  BellSign sign = BellSign::plus;

  friend bool operator==(const BellLabel&, const BellLabel&) = default;

  BellLabel with_letter_flipped() const {
    return {letter == BellLetter::phi ? BellLetter::psi : BellLetter::phi, sign};
  }
  BellLabel with_sign_flipped() const {
    return {letter, sign == BellSign::plus ? BellSign::minus : BellSign::plus};
  }
};

std::string to_string(const BellLabel& label);

/// Discrete class of one folded homodyne syndrome.
enum class ParityClass : std::uint8_t { zero, even, odd };

/// Maps the (q-sum, p-difference) syndrome classes to a Bell label:
///   (even, zero) -> phi+     (odd, zero) -> phi-
///   (zero, even) -> psi+     (zero, odd) -> psi-
/// Any other combination does not identify a Bell letter; it throws
/// std::invalid_argument ("inconsistent outcome").
BellLabel classify_physical(ParityClass q_sum_parity_bin, ParityClass p_diff_parity_bin);

/// One beam-splitter-plus-homodyne Bell measurement outcome. A clipped
/// letter syndrome leaves only the relative sign resolvable (sign_only); a
/// lost mode or a clipped sign syndrome yields fail.
struct PhysicalOutcome {
  enum class Kind : std::uint8_t { full, sign_only, fail };

  Kind kind = Kind::fail;
  BellLabel label;  // meaningful when kind == full; label.sign when sign_only

  static PhysicalOutcome full(BellLabel label) { return {Kind::full, label}; }
  static PhysicalOutcome sign_only(BellSign sign) {
    return {Kind::sign_only, BellLabel{BellLetter::phi, sign}};
  }
  static PhysicalOutcome fail() { return {Kind::fail, {}}; }

  bool has_letter() const { return kind == Kind::full; }
  bool has_sign() const { return kind != Kind::fail; }
  BellSign sign() const { return label.sign; }
};

/// Result of one block of physical measurements. The letter requires every
/// physical outcome to carry a letter; the sign survives as long as at least
/// one sign is available and the vote is untied. `contributing` counts the
/// outcomes that supplied a sign.
struct BlockOutcome {
  enum class Kind : std::uint8_t { full, fail };

  Kind kind = Kind::fail;
  BellLabel label;                // meaningful when kind == full
  std::optional<BellSign> sign;   // set whenever an untied sign vote exists
  int contributing = 0;

  static BlockOutcome full(BellLabel label, int contributing) {
    return {Kind::full, label, label.sign, contributing};
  }
};

struct LogicalOutcome {
  enum class Kind : std::uint8_t { full, fail };

  Kind kind = Kind::fail;
  BellLabel label;
  int contributing = 0;  // blocks that decoded a letter
};

/// Block decode: sign by majority vote over the available signs (ties fail
/// the block); letter by the parity of psi-letter outcomes, available only
/// when all physical measurements carry letters.
BlockOutcome decode_block(std::span<const PhysicalOutcome> outcomes);

/// Logical decode: sign from the parity of minus signs across all blocks
/// (every block must carry a sign); letter by majority vote over the letters
/// of non-failed blocks. Fails when all blocks failed, the letter vote ties,
/// or any block lost its sign.
LogicalOutcome decode_logical(std::span<const BlockOutcome> blocks);

struct EnumerationReport {
  std::uint64_t branches = 0;
  std::uint64_t failures = 0;
  std::uint64_t misidentified = 0;
};

/// Walks every decomposition branch of an encoded Bell state with n blocks
/// of m physical pairs (lossless, no clipping) and decodes it. For an exact
/// code the report shows zero failures and zero misidentifications on all
/// 2^(n-1) * 2^(n(m-1)) branches. Requires 1 <= n, m <= 6; beyond roughly a
/// million branches the walk factorises into block-level and logical-level
/// passes, which cover the same product space.
EnumerationReport enumerate_lossless(int n, int m, BellLabel input);

}  // namespace gkplab
