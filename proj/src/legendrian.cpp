#include "tight/legendrian.hpp"

namespace tight {
namespace {

std::vector<Int> checked_framings(const SurgeryDiagram& d) {
  std::vector<Int> out;
  out.reserve(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    const Rational& f = d.framing(i);
    if (!f.is_integer() || f.num() > -2)
      throw ParseError("component " + std::to_string(i) + " framed " + f.str() +
                       " is not Legendrian-surgery-realizable (need an integer <= -2)");
    out.push_back(f.num());
  }
  return out;
}

}  // namespace

RealizationEnumerator::RealizationEnumerator(const SurgeryDiagram& d)
    : framings_(checked_framings(d)) {
  rot_.reserve(framings_.size());
  for (const Int& c : framings_) rot_.push_back(c + 2);  // smallest rotation
}

std::optional<LegendrianRealization> RealizationEnumerator::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    // Odometer step: rightmost component varies fastest.
    size_t i = rot_.size();
    while (i > 0) {
      --i;
      rot_[i] += 2;
      if (rot_[i] <= -framings_[i] - 2) break;
      rot_[i] = framings_[i] + 2;
      if (i == 0) {
        done_ = true;
        return std::nullopt;
      }
    }
    if (rot_.empty()) {
      done_ = true;
      return std::nullopt;
    }
  }
  first_ = false;
  LegendrianRealization r;
  r.rot = rot_;
  r.tb.reserve(framings_.size());
  for (const Int& c : framings_) r.tb.push_back(c + 1);
  return r;
}

Int count_realizations(const SurgeryDiagram& d) {
  Int total = 1;
  for (const Int& c : checked_framings(d)) total *= -(c + 1);
  return total;
}

std::vector<Int> spinc_class(const std::vector<Int>& rot, const SmithForm& snf) {
  size_t n = rot.size();
  if (snf.U.size() != n) throw ParseError("spinc_class: dimension mismatch");
  std::vector<Int> out(n, Int(0));
  for (size_t i = 0; i < n; ++i) {
    Int y = 0;
    for (size_t j = 0; j < n; ++j) y += snf.U[i][j] * rot[j];
    if (snf.diagonal[i] != 0) {
      mpz_fdiv_r(y.get_mpz_t(), y.get_mpz_t(), snf.diagonal[i].get_mpz_t());
    }
    out[i] = std::move(y);
  }
  return out;
}

std::map<std::vector<Int>, Int> spinc_partition(const SurgeryDiagram& d) {
  SmithForm snf = smith_normal_form(d.integer_matrix());
  std::map<std::vector<Int>, Int> classes;
  RealizationEnumerator en(d);
  while (auto r = en.next()) classes[spinc_class(r->rot, snf)] += 1;
  return classes;
}

}  // namespace tight
