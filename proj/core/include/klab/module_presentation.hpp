#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "klab/module_element.hpp"
#include "klab/ring.hpp"

namespace klab {

/// Cokernel of a relation matrix: S^ambient_rank / <relations>, with S the
/// ambient polynomial ring of `ring`.
///
/// The ring's quotient relations are always folded in as q * e_i for every
/// relation q and generator i, so the presentation is honest over S.
class ModulePresentation {
 public:
  ModulePresentation(RingSpec ring, std::size_t ambient_rank, std::vector<ModuleElement> relations,
                     std::string label = {});

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<ModuleElement>& relations() const noexcept { return relations_; }
  const std::string& label() const noexcept { return label_; }

  /// The free module S^rank over the ring (quotient relations still folded in).
  static ModulePresentation free(const RingSpec& ring, std::size_t rank, std::string label = {});

 private:
  RingSpec ring_;
  std::size_t rank_;
  std::vector<ModuleElement> relations_;
  std::string label_;
};

}  // namespace klab
