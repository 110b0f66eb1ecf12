#pragma once

#include <string>
#include <vector>

namespace superrtt {

struct Residue {
  std::string label;     ///< index tuple or word, e.g. "(12,21)"
  std::string rendered;  ///< canonical text of the reduced residue
  bool zero = true;
  std::string note;      ///< optional classification
};

/// Outcome of a residual check; passed iff every residue is zero.
struct VerificationReport {
  std::string identity_name;
  std::vector<Residue> residues;
  bool passed = true;
  std::vector<std::string> notes;

  void add(Residue r) {
    if (!r.zero) passed = false;
    residues.push_back(std::move(r));
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : residues) n += r.zero ? 0 : 1;
    return n;
  }
};

}  // namespace superrtt
