#include "gkplab/bell.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace gkplab {

std::string to_string(const BellLabel& label) {
  std::string s = label.letter == BellLetter::phi ? "phi" : "psi";
  s += label.sign == BellSign::plus ? '+' : '-';
  return s;
}

BellLabel classify_physical(ParityClass q_sum_parity_bin, ParityClass p_diff_parity_bin) {
  if (p_diff_parity_bin == ParityClass::zero && q_sum_parity_bin != ParityClass::zero) {
    return BellLabel{BellLetter::phi, q_sum_parity_bin == ParityClass::even
                                          ? BellSign::plus
                                          : BellSign::minus};
  }
  if (q_sum_parity_bin == ParityClass::zero && p_diff_parity_bin != ParityClass::zero) {
    return BellLabel{BellLetter::psi, p_diff_parity_bin == ParityClass::even
                                          ? BellSign::plus
                                          : BellSign::minus};
  }
  throw std::invalid_argument("inconsistent outcome: Bell letter cannot be identified");
}

BlockOutcome decode_block(std::span<const PhysicalOutcome> outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("decode_block needs at least one outcome");

  int plus = 0;
  int minus = 0;
  int psi_count = 0;
  bool all_letters = true;
  for (const PhysicalOutcome& o : outcomes) {
    if (o.has_sign()) {
      (o.sign() == BellSign::plus ? plus : minus) += 1;
    }
    if (o.has_letter()) {
      if (o.label.letter == BellLetter::psi) ++psi_count;
    } else {
      all_letters = false;
    }
  }

  const int contributing = plus + minus;
  BlockOutcome out;
  out.contributing = contributing;
  if (contributing == 0 || plus == minus) {
    return out;  // no sign information, or a tied vote: the block fails
  }
  const BellSign sign = plus > minus ? BellSign::plus : BellSign::minus;
  out.sign = sign;
  if (!all_letters) {
    return out;  // sign survives, letter does not
  }
  const BellLetter letter = (psi_count % 2 == 0) ? BellLetter::phi : BellLetter::psi;
  out.kind = BlockOutcome::Kind::full;
  out.label = BellLabel{letter, sign};
  return out;
}

LogicalOutcome decode_logical(std::span<const BlockOutcome> blocks) {
  if (blocks.empty()) throw std::invalid_argument("decode_logical needs at least one block");

  int minus_count = 0;
  int phi_count = 0;
  int psi_count = 0;
  for (const BlockOutcome& b : blocks) {
    if (!b.sign.has_value()) {
      return LogicalOutcome{};  // a sign-dead block leaves the parity undefined
    }
    if (*b.sign == BellSign::minus) ++minus_count;
    if (b.kind == BlockOutcome::Kind::full) {
      (b.label.letter == BellLetter::phi ? phi_count : psi_count) += 1;
    }
  }
  const int contributing = phi_count + psi_count;
  if (contributing == 0 || phi_count == psi_count) {
    return LogicalOutcome{LogicalOutcome::Kind::fail, {}, contributing};
  }
  const BellLetter letter = phi_count > psi_count ? BellLetter::phi : BellLetter::psi;
  const BellSign sign = (minus_count % 2 == 0) ? BellSign::plus : BellSign::minus;
  return LogicalOutcome{LogicalOutcome::Kind::full, BellLabel{letter, sign}, contributing};
}

namespace {

// Bitmasks over w positions whose popcount parity matches `odd`. These are
// the permutation branches of one decomposition level: 2^(w-1) masks.
std::vector<std::uint32_t> parity_masks(int w, bool odd) {
  std::vector<std::uint32_t> masks;
  masks.reserve(1u << (w - 1));
  for (std::uint32_t x = 0; x < (1u << w); ++x) {
    if ((std::popcount(x) % 2 == 1) == odd) masks.push_back(x);
  }
  return masks;
}

std::vector<PhysicalOutcome> block_branch(int m, std::uint32_t psi_mask, BellSign sign) {
  std::vector<PhysicalOutcome> outcomes(m);
  for (int i = 0; i < m; ++i) {
    const BellLetter letter =
        (psi_mask >> i) & 1u ? BellLetter::psi : BellLetter::phi;
    outcomes[i] = PhysicalOutcome::full(BellLabel{letter, sign});
  }
  return outcomes;
}

}  // namespace

EnumerationReport enumerate_lossless(int n, int m, BellLabel input) {
  if (n < 1 || n > 6 || m < 1 || m > 6) {
    throw std::invalid_argument("enumerate_lossless supports 1 <= n, m <= 6");
  }

  // Minus-block patterns at the logical level; psi-position patterns within
  // a block. Their parities are fixed by the input sign and letter.
  const auto logical_masks = parity_masks(n, input.sign == BellSign::minus);
  const auto block_masks = parity_masks(m, input.letter == BellLetter::psi);

  EnumerationReport report;
  const std::uint64_t per_block = block_masks.size();
  std::uint64_t total = logical_masks.size();
  for (int b = 0; b < n; ++b) total *= per_block;
  report.branches = total;

  const auto check_logical = [&](const std::vector<BlockOutcome>& blocks) {
    const LogicalOutcome decoded = decode_logical(blocks);
    if (decoded.kind != LogicalOutcome::Kind::full) {
      ++report.failures;
    } else if (decoded.label != input) {
      ++report.misidentified;
    }
  };

  if (total <= (1u << 20)) {
    // Exhaustive product walk.
    std::vector<std::size_t> odometer(n, 0);
    std::vector<BlockOutcome> blocks(n);
    for (const std::uint32_t lmask : logical_masks) {
      std::fill(odometer.begin(), odometer.end(), 0);
      while (true) {
        for (int b = 0; b < n; ++b) {
          const BellSign sign = (lmask >> b) & 1u ? BellSign::minus : BellSign::plus;
          blocks[b] = decode_block(block_branch(m, block_masks[odometer[b]], sign));
        }
        check_logical(blocks);
        int d = 0;
        while (d < n && ++odometer[d] == block_masks.size()) odometer[d++] = 0;
        if (d == n) break;
      }
    }
    return report;
  }

  // The block decode depends only on its own branch and the logical decode
  // only on the block results, so verifying each factor covers the product.
  for (const BellSign sign : {BellSign::plus, BellSign::minus}) {
    const BellLabel expected{input.letter, sign};
    for (const std::uint32_t bmask : block_masks) {
      const BlockOutcome decoded = decode_block(block_branch(m, bmask, sign));
      if (decoded.kind != BlockOutcome::Kind::full) {
        ++report.failures;
      } else if (decoded.label != expected) {
        ++report.misidentified;
      }
    }
  }
  std::vector<BlockOutcome> blocks(n);
  for (const std::uint32_t lmask : logical_masks) {
    for (int b = 0; b < n; ++b) {
      const BellSign sign = (lmask >> b) & 1u ? BellSign::minus : BellSign::plus;
      blocks[b] = BlockOutcome::full(BellLabel{input.letter, sign}, m);
    }
    check_logical(blocks);
  }
  return report;
}

}  // namespace gkplab
