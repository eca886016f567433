#include "tight/kirby.hpp"

#include <utility>

#include "tight/contfrac.hpp"

namespace tight {
namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

std::string id_str(size_t i) { return std::to_string(i); }

}  // namespace

SurgeryDiagram::SurgeryDiagram(std::vector<Rational> framings, IntMatrix linking,
                               std::string stage)
    : framings_(std::move(framings)), linking_(std::move(linking)), stage_(std::move(stage)) {
  size_t n = framings_.size();
  if (linking_.size() != n) throw ParseError("linking matrix size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (linking_[i].size() != n) throw ParseError("linking matrix is not square");
    if (linking_[i][i] != 0)
      throw ParseError("linking matrix diagonal must be zero at " + id_str(i));
    for (size_t j = 0; j < i; ++j)
      if (linking_[i][j] != linking_[j][i])
        throw ParseError("linking matrix not symmetric at (" + id_str(i) + "," + id_str(j) + ")");
  }
}

bool SurgeryDiagram::all_integer() const {
  for (const auto& f : framings_)
    if (!f.is_integer()) return false;
  return true;
}

IntMatrix SurgeryDiagram::integer_matrix() const {
  if (!all_integer())
    throw ParseError("diagram '" + stage_ + "' still has rational framings");
  IntMatrix m = linking_;
  for (size_t i = 0; i < size(); ++i) m[i][i] = framings_[i].num();
  return m;
}

SurgeryDiagram standard_diagram(const SeifertInvariants& s) {
  std::vector<Rational> framings{Rational(0)};
  for (const Rational& r : s.r) {
    if (r.is_zero()) throw ParseError("standard_diagram: zero surgery coefficient");
    framings.push_back(-r.reciprocal());
  }
  IntMatrix lk(4, std::vector<Int>(4, Int(0)));
  for (size_t i = 1; i <= 3; ++i) lk[0][i] = lk[i][0] = 1;
  return SurgeryDiagram(std::move(framings), std::move(lk), "standard");
}

SurgeryDiagram rolfsen_twist(const SurgeryDiagram& d, size_t comp, const Int& n) {
  if (comp >= d.size()) throw ParseError("rolfsen_twist: no component " + id_str(comp));
  const Rational& f = d.framing(comp);
  Int new_den = f.den() + n * f.num();
  if (new_den == 0)
    throw ParseError("rolfsen_twist by " + n.get_str() + " on framing " + f.str() +
                     " would make the framing infinite");

  std::vector<Rational> framings;
  framings.reserve(d.size());
  for (size_t j = 0; j < d.size(); ++j) {
    if (j == comp)
      framings.push_back(Rational(f.num(), new_den));
    else
      framings.push_back(d.framing(j) +
                         Rational(Int(n * d.linking(comp, j) * d.linking(comp, j))));
  }
  IntMatrix lk = d.linking_matrix();
  for (size_t j = 0; j < d.size(); ++j)
    for (size_t k = 0; k < j; ++k) {
      if (j == comp || k == comp) continue;
      Int delta = n * d.linking(comp, j) * d.linking(comp, k);
      lk[j][k] += delta;
      lk[k][j] += delta;
    }
  return SurgeryDiagram(std::move(framings), std::move(lk), d.stage());
}

SurgeryDiagram slam_dunk(const SurgeryDiagram& d, size_t meridian, size_t host) {
  if (meridian >= d.size() || host >= d.size() || meridian == host)
    throw ParseError("slam_dunk: bad component ids");
  if (abs_int(d.linking(meridian, host)) != 1)
    throw ParseError("slam_dunk: lk(meridian, host) = " +
                     d.linking(meridian, host).get_str() + ", need +/-1");
  for (size_t k = 0; k < d.size(); ++k)
    if (k != host && k != meridian && d.linking(meridian, k) != 0)
      throw ParseError("slam_dunk: meridian also links component " + id_str(k) + " (lk = " +
                       d.linking(meridian, k).get_str() + ")");
  if (d.framing(meridian).is_zero()) throw ParseError("slam_dunk: meridian framed 0");

  std::vector<Rational> framings;
  IntMatrix lk;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i == meridian) continue;
    Rational f = d.framing(i);
    if (i == host) f -= d.framing(meridian).reciprocal();
    framings.push_back(std::move(f));
    std::vector<Int> row;
    for (size_t j = 0; j < d.size(); ++j) {
      if (j == meridian) continue;
      row.push_back(d.linking(i, j));
    }
    lk.push_back(std::move(row));
  }
  return SurgeryDiagram(std::move(framings), std::move(lk), d.stage());
}

SurgeryDiagram inverse_slam_dunk_expand(const SurgeryDiagram& d, size_t comp) {
  if (comp >= d.size()) throw ParseError("inverse_slam_dunk_expand: no component " + id_str(comp));
  const Rational& f = d.framing(comp);
  if (f.is_integer()) return d;
  if (f > Rational(0))
    throw ParseError("inverse_slam_dunk_expand: positive non-integral framing " + f.str());

  NegContFrac cf = expand(-f);
  size_t n = d.size();
  size_t extra = cf.size() - 1;
  std::vector<Rational> framings;
  framings.reserve(n + extra);
  for (size_t i = 0; i < n; ++i)
    framings.push_back(i == comp ? Rational(cf[0]) : d.framing(i));
  for (size_t j = 1; j < cf.size(); ++j) framings.push_back(Rational(cf[j]));

  IntMatrix lk(n + extra, std::vector<Int>(n + extra, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) lk[i][j] = d.linking(i, j);
  size_t prev = comp;
  for (size_t t = 0; t < extra; ++t) {
    size_t cur = n + t;
    lk[prev][cur] = lk[cur][prev] = 1;
    prev = cur;
  }
  return SurgeryDiagram(std::move(framings), std::move(lk), d.stage());
}

Int h1_order(const SurgeryDiagram& d) {
  // Scale row i by its framing denominator: the determinant of the resulting
  // integer matrix is det(L) times the product of denominators.
  size_t n = d.size();
  IntMatrix m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = d.framing(i).den() * d.linking(i, j);
    m[i][i] = d.framing(i).num();
  }
  return abs_int(mat_det(m));
}

namespace {

struct PipelineBuilder {
  PipelineTrace trace;
  Int expected_h1;

  void push(SurgeryDiagram d) {
    Int h1 = h1_order(d);
    if (!trace.stages.empty() && h1 != expected_h1)
      throw AuditError("homology changed at stage '" + d.stage() + "': " + h1.get_str() +
                       " != " + expected_h1.get_str());
    expected_h1 = h1;
    trace.h1_orders.push_back(std::move(h1));
    trace.stages.push_back(std::move(d));
  }
};

void check_framing(const SurgeryDiagram& d, size_t id, const Rational& expected,
                   const std::string& what) {
  if (d.framing(id) != expected)
    throw AuditError("stage '" + d.stage() + "': " + what + " framing " + d.framing(id).str() +
                     " != predicted " + expected.str());
}

// The expansion of `comp` must produce exactly the coefficients of `cf`:
// the head on comp itself, the tail on the components appended at old_size.
void check_chain(const SurgeryDiagram& d, size_t comp, size_t old_size, const NegContFrac& cf,
                 const std::string& what) {
  check_framing(d, comp, Rational(cf[0]), what + " head");
  for (size_t j = 1; j < cf.size(); ++j)
    check_framing(d, old_size + j - 1, Rational(cf[j]), what + " chain entry " + id_str(j));
}

}  // namespace

PipelineTrace pipeline_thm1(const TheoremForm& form) {
  if (form.variant != Variant::ClassNeg)
    throw ParseError("pipeline_thm1 requires the e0 <= -3 form");
  SeifertInvariants s = to_invariants(form);
  if (s.e0 != form.e0)
    throw ParseError("theorem form e0 " + form.e0.get_str() +
                     " does not match its triple (e0 = " + s.e0.get_str() + ")");

  std::array<NegContFrac, 3> cf = {expand(Rational(form.pq[0].second, form.pq[0].first)),
                                   expand(Rational(form.pq[1].second, form.pq[1].first)),
                                   expand(Rational(form.pq[2].second, form.pq[2].first))};

  PipelineBuilder b;
  b.expected_h1 = h1_order_from_invariants(s);
  b.push(standard_diagram(s));

  SurgeryDiagram d = b.trace.stages.back();
  for (size_t i = 0; i < 3; ++i) d = rolfsen_twist(d, i + 1, cf[i][0]);
  check_framing(d, 0, Rational(form.e0), "center");
  b.push(d.with_stage("post-twist"));

  std::array<size_t, 3> chain_start{};
  for (size_t i = 0; i < 3; ++i) {
    chain_start[i] = d.size();
    d = inverse_slam_dunk_expand(d, i + 1);
  }
  d = d.with_stage("final-integer");
  check_framing(d, 0, Rational(form.e0), "center");
  for (size_t i = 0; i < 3; ++i) {
    // Leg i carries <a_1, ..., a_m> of its expansion.
    std::vector<Int> tail(cf[i].coeffs().begin() + 1, cf[i].coeffs().end());
    if (tail.empty())
      throw AuditError("leg " + id_str(i + 1) + " expansion has no tail; p_i >= 2 violated");
    check_chain(d, i + 1, chain_start[i], NegContFrac(std::move(tail)),
                "leg " + id_str(i + 1));
  }
  b.push(std::move(d));
  return b.trace;
}

PipelineTrace pipeline_thm2(const TheoremForm& form) {
  if (form.variant != Variant::ClassPos)
    throw ParseError("pipeline_thm2 requires the e0 >= 1 form");
  SeifertInvariants s = to_invariants(form);
  if (s.e0 != form.e0)
    throw ParseError("theorem form e0 " + form.e0.get_str() +
                     " does not match its triple (e0 = " + s.e0.get_str() + ")");

  PipelineBuilder b;
  b.expected_h1 = h1_order_from_invariants(s);
  b.push(standard_diagram(s));

  SurgeryDiagram d = slam_dunk(b.trace.stages.back(), 3, 0);
  check_framing(d, 0, s.r[2], "center");
  b.push(d.with_stage("post-dunk"));

  d = rolfsen_twist(d, 0, Int(-1));
  const auto& [p3, q3] = form.pq[2];
  check_framing(d, 0, Rational(-(q3 + form.e0 * p3), q3 + (form.e0 - 1) * p3), "middle");
  for (size_t i = 1; i <= 2; ++i)
    check_framing(d, i, -Rational(form.pq[i - 1].first, form.pq[i - 1].second) - Rational(1),
                  "leg " + id_str(i));
  b.push(d.with_stage("post-twist"));

  std::array<NegContFrac, 3> pred = {
      decrement_head(expand(Rational(form.pq[0].first, form.pq[0].second))),
      decrement_head(expand(Rational(form.pq[1].first, form.pq[1].second))),
      e0_chain_expansion(p3, q3, form.e0)};
  std::array<size_t, 3> comp{1, 2, 0};
  std::array<size_t, 3> chain_start{};
  for (size_t i = 0; i < 3; ++i) {
    chain_start[i] = d.size();
    d = inverse_slam_dunk_expand(d, comp[i]);
  }
  d = d.with_stage("final-integer");
  for (size_t i = 0; i < 3; ++i)
    check_chain(d, comp[i], chain_start[i], pred[i],
                i < 2 ? "leg " + id_str(i + 1) : "middle");
  b.push(std::move(d));
  return b.trace;
}

}  // namespace tight
