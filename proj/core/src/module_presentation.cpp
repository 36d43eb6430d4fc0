#include "klab/module_presentation.hpp"

#include <algorithm>

#include "klab/error.hpp"

namespace klab {

ModulePresentation::ModulePresentation(RingSpec ring, std::size_t ambient_rank, std::vector<ModuleElement> relations,
                                       std::string label)
    : ring_(std::move(ring)), rank_(ambient_rank), label_(std::move(label)) {
  for (auto& r : relations) {
    if (r.rank() != rank_) throw StructuralError("relation rank differs from the presentation's ambient rank");
    if (r.nvars() != ring_.nvars() || !(r.field() == ring_.field())) {
      throw StructuralError("relation does not live over the presentation's ring");
    }
    if (!r.is_zero()) relations_.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    for (const auto& q : ring_.quotient_relations()) {
      ModuleElement col = ModuleElement::basis(q, rank_, i);
      if (std::find(relations_.begin(), relations_.end(), col) == relations_.end()) relations_.push_back(col);
    }
  }
}

ModulePresentation ModulePresentation::free(const RingSpec& ring, std::size_t rank, std::string label) {
  return ModulePresentation(ring, rank, {}, std::move(label));
}

}  // namespace klab
