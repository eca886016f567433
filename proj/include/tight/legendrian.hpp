#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tight/kirby.hpp"
#include "tight/snf.hpp"

namespace tight {

/// One Legendrian surgery presentation of an all-integer diagram: per
/// component, tb = framing + 1 and a rotation number from the symmetric
/// stabilization range {framing+2, framing+4, ..., -framing-2}.
struct LegendrianRealization {
  std::vector<Int> tb;
  std::vector<Int> rot;
};

/// Streams the Cartesian product of the per-component rotation sets in
/// lexicographic order (component id major, rotation ascending). Every
/// framing must be an integer <= -2.
class RealizationEnumerator {
 public:
  explicit RealizationEnumerator(const SurgeryDiagram& d);

  /// Next realization, or nullopt when exhausted.
  std::optional<LegendrianRealization> next();

  const std::vector<Int>& framings() const { return framings_; }

 private:
  std::vector<Int> framings_;
  std::vector<Int> rot_;  // current rotation vector
  bool done_ = false;
  bool first_ = true;
};

/// prod |c_i + 1| without materializing the enumeration.
Int count_realizations(const SurgeryDiagram& d);

/// Canonical residue of a rotation vector in coker(L), computed through the
/// Smith transforms: the class of r is (U r)_i mod d_i componentwise (taken
/// verbatim where d_i = 0). Two vectors get equal residues iff their
/// difference lies in the image of L.
std::vector<Int> spinc_class(const std::vector<Int>& rot, const SmithForm& snf);

/// Partition of the full realization set by spin-c class; a distinctness
/// lower bound, not an isotopy classification. Keys are canonical residue
/// vectors, values are multiplicities.
std::map<std::vector<Int>, Int> spinc_partition(const SurgeryDiagram& d);

}  // namespace tight
