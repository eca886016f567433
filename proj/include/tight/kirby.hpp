#pragma once

#include <string>
#include <vector>

#include "tight/rational.hpp"
#include "tight/seifert.hpp"
#include "tight/snf.hpp"

namespace tight {

/// A framed link of unknot components: rational framings on the diagonal,
/// symmetric integer linking numbers off it, plus a stage label. Components
/// are identified by their dense index.
class SurgeryDiagram {
 public:
  SurgeryDiagram(std::vector<Rational> framings, IntMatrix linking, std::string stage);

  size_t size() const { return framings_.size(); }
  const Rational& framing(size_t id) const { return framings_.at(id); }
  const Int& linking(size_t i, size_t j) const { return linking_.at(i).at(j); }
  const IntMatrix& linking_matrix() const { return linking_; }
  const std::string& stage() const { return stage_; }

  /// Integer linking matrix with the framings on the diagonal; requires all
  /// framings integral.
  IntMatrix integer_matrix() const;
  bool all_integer() const;

  SurgeryDiagram with_stage(std::string stage) const {
    SurgeryDiagram d = *this;
    d.stage_ = std::move(stage);
    return d;
  }

 private:
  std::vector<Rational> framings_;
  IntMatrix linking_;  // symmetric, zero diagonal
  std::string stage_;
};

/// Star diagram of M(r1, r2, r3): a 0-framed center (id 0) with three
/// meridians (ids 1-3) framed -1/r_i, each linking the center once.
SurgeryDiagram standard_diagram(const SeifertInvariants& s);

/// n-fold Rolfsen twist on a component framed p/q: its framing becomes
/// p/(q + n p); every other component j gains n*lk(c,j)^2 in framing and
/// every pair j,k gains n*lk(c,j)*lk(c,k) in linking.
SurgeryDiagram rolfsen_twist(const SurgeryDiagram& d, size_t comp, const Int& n);

/// Deletes a meridian (links only its host, once) and subtracts the
/// reciprocal of its framing from the host framing.
SurgeryDiagram slam_dunk(const SurgeryDiagram& d, size_t meridian, size_t host);

/// Replaces a negative non-integral framing by the head of its continued
/// fraction expansion and appends the tail as a chain of new components.
/// Integral framings are left untouched.
SurgeryDiagram inverse_slam_dunk_expand(const SurgeryDiagram& d, size_t comp);

/// |det| of the rational linking matrix times the framing denominators;
/// 0 encodes infinite first homology.
Int h1_order(const SurgeryDiagram& d);

struct PipelineTrace {
  std::vector<SurgeryDiagram> stages;
  std::vector<Int> h1_orders;  // one per stage, all equal

  const SurgeryDiagram& final_stage() const { return stages.back(); }
};

/// Rolfsen-twist pipeline for the e0 <= -3 form: standard diagram, one
/// twist per leg (center accumulates e0), then integer expansion of each
/// leg. Every stage is audited against the homology oracle and the
/// continued fraction predictions.
PipelineTrace pipeline_thm1(const TheoremForm& form);

/// Slam-dunk pipeline for the e0 >= 1 form: standard diagram, slam-dunk of
/// the third meridian, a (-1)-twist on the resulting center (the two outer
/// legs acquire mutual linking -1), then integer expansion of all three
/// rational framings.
PipelineTrace pipeline_thm2(const TheoremForm& form);

}  // namespace tight
