#include "tight/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

namespace tight {
namespace {

PipelineTrace run_pipeline(const TheoremForm& form) {
  return form.variant == Variant::ClassNeg ? pipeline_thm1(form) : pipeline_thm2(form);
}

// Random unimodular matrix: a short product of shears and swaps.
IntMatrix random_unimodular(size_t n, std::mt19937_64& rng) {
  IntMatrix m = identity_matrix(n);
  if (n < 2) return m;
  std::uniform_int_distribution<size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 8; ++step) {
    size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    if (rng() & 1) {
      Int c(coef(rng));
      for (size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];  // row shear
    } else {
      std::swap(m[i], m[j]);
    }
  }
  return m;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& x) {
  std::vector<Int> y(m.size(), Int(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

// The spin-c partition must not depend on which Smith transforms were used.
// Re-derive it through a randomized unimodular change of presentation:
// x lies in im(L) iff P*x lies in im(P*L*Q).
bool spinc_partition_stable(const SurgeryDiagram& d, std::mt19937_64& rng) {
  IntMatrix L = d.integer_matrix();
  size_t n = L.size();
  SmithForm base = smith_normal_form(L);
  IntMatrix P = random_unimodular(n, rng), Q = random_unimodular(n, rng);
  SmithForm alt = smith_normal_form(mat_mul(mat_mul(P, L), Q));

  std::map<std::vector<Int>, std::vector<Int>> fwd, bwd;
  RealizationEnumerator en(d);
  while (auto r = en.next()) {
    auto c1 = spinc_class(r->rot, base);
    auto c2 = spinc_class(mat_vec(P, r->rot), alt);
    auto [it1, fresh1] = fwd.emplace(c1, c2);
    if (!fresh1 && it1->second != c2) return false;
    auto [it2, fresh2] = bwd.emplace(c2, c1);
    if (!fresh2 && it2->second != c1) return false;
  }
  return fwd.size() == bwd.size();
}

std::string checks_failed(const AuditReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.pass) out += (out.empty() ? "" : ", ") + c.name;
  return out;
}

}  // namespace

bool AuditReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

AuditReport run_audit(const SeifertInvariants& s, const std::string& input_echo) {
  AuditReport r;
  r.input = input_echo;
  r.form = normalize(s);
  r.h1_formula = h1_order_from_invariants(s);

  PipelineTrace trace = run_pipeline(r.form);
  for (const auto& stage : trace.stages) r.stage_labels.push_back(stage.stage());
  r.h1_orders = trace.h1_orders;
  const SurgeryDiagram& fin = trace.final_stage();
  for (size_t i = 0; i < fin.size(); ++i) r.final_framings.push_back(fin.framing(i));

  bool h1_const = true;
  for (const Int& h : r.h1_orders) h1_const = h1_const && (h == r.h1_orders.front());
  r.checks.push_back({"h1-constant", h1_const, ""});
  r.checks.push_back({"h1-matches-formula", r.h1_orders.front() == r.h1_formula,
                      r.h1_orders.front().get_str() + " vs " + r.h1_formula.get_str()});

  r.count_closed_form = count_tight(r.form).total;
  r.count_enumeration = count_realizations(fin);
  r.checks.push_back({"count-agreement", r.count_closed_form == r.count_enumeration,
                      r.count_closed_form.get_str() + " vs " + r.count_enumeration.get_str()});

  r.spinc_classes = static_cast<long>(spinc_partition(fin).size());
  r.checks.push_back({"spinc-bound", r.spinc_classes <= r.count_enumeration,
                      r.spinc_classes.get_str() + " classes"});
  return r;
}

json report_to_json(const AuditReport& r) {
  json stages = json::array();
  for (size_t i = 0; i < r.stage_labels.size(); ++i)
    stages.push_back(json{{"stage", r.stage_labels[i]}, {"h1", int_to_json(r.h1_orders[i])}});
  json framings = json::array();
  for (const auto& f : r.final_framings) framings.push_back(rational_to_json(f));
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"input", r.input},
              {"form", form_to_json(r.form)},
              {"stages", stages},
              {"h1_formula", int_to_json(r.h1_formula)},
              {"final_framings", framings},
              {"count_closed_form", r.count_closed_form.get_str()},
              {"count_enumeration", r.count_enumeration.get_str()},
              {"spinc_classes", int_to_json(r.spinc_classes)},
              {"checks", checks},
              {"pass", r.pass()}};
}

namespace cli {
namespace {

enum class Format { text, json, dot };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  throw ParseError("unknown format '" + name + "' (expected text, json or dot)");
}

void print_diagram_text(const SurgeryDiagram& d, std::ostream& out) {
  out << "stage: " << d.stage() << "\n";
  for (size_t i = 0; i < d.size(); ++i)
    out << "  component " << i << ": framing " << d.framing(i).str() << "\n";
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j)
      if (d.linking(i, j) != 0)
        out << "  lk(" << i << "," << j << ") = " << d.linking(i, j).get_str() << "\n";
}

void print_report_text(const AuditReport& r, std::ostream& out) {
  out << "input: " << r.input << "\n";
  out << "variant: " << variant_name(r.form.variant) << "  e0: " << r.form.e0.get_str() << "\n";
  for (size_t i = 0; i < r.stage_labels.size(); ++i)
    out << "h1[" << r.stage_labels[i] << "] = " << r.h1_orders[i].get_str() << "\n";
  out << "h1 formula = " << r.h1_formula.get_str() << "\n";
  out << "final framings:";
  for (const auto& f : r.final_framings) out << " " << f.str();
  out << "\n";
  out << "count closed-form = " << r.count_closed_form.get_str()
      << ", enumeration = " << r.count_enumeration.get_str() << "\n";
  out << "spin-c classes (distinctness lower bound) = " << r.spinc_classes.get_str() << "\n";
  for (const auto& c : r.checks)
    out << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL")
        << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  out << "overall: " << (r.pass() ? "pass" : "FAIL") << "\n";
}

int run_sweep(long pmax, long qmax, long e0max, long samples, std::ostream& out) {
  if (pmax < 2 || qmax < 1 || e0max < 1 || samples < 1)
    throw ParseError("sweep bounds must satisfy pmax >= 2, qmax >= 1, e0max >= 1");
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<long> pd(2, pmax), qd(1, qmax), ed(1, e0max), kd(-3, 3);
  auto gcd1 = [](long p, long q) {
    Int g;
    Int pp(p), qq(q);
    mpz_gcd(g.get_mpz_t(), pp.get_mpz_t(), qq.get_mpz_t());
    return g == 1;
  };

  long failures = 0;
  for (long it = 0; it < samples; ++it) {
    SeifertInvariants s;
    if (it % 2 == 0) {
      std::array<Rational, 3> r;
      for (auto& x : r) {
        long p, q;
        do {
          p = pd(rng);
          q = qd(rng);
        } while (q % p == 0 || !gcd1(p, q));
        x = Rational(-q, p);
      }
      s = make_invariants(r[0], r[1], r[2]);
    } else {
      long e0 = ed(rng);
      std::array<Rational, 3> r;
      for (auto& x : r) {
        long p, q;
        do {
          p = pd(rng);
          q = 1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1));
        } while (!gcd1(p, q));
        x = Rational(q, p);
      }
      s = make_invariants(r[0], r[1], Rational(e0) + r[2]);
    }

    AuditReport rep = run_audit(s, "sweep#" + std::to_string(it));
    bool ok = rep.pass();

    // Representative invariance: (r1 + k, r2 - k, r3) for random integer k.
    long k = kd(rng);
    SeifertInvariants shifted = make_invariants(s.r[0] + Rational(k), s.r[1] - Rational(k), s.r[2]);
    ok = ok && shifted.e0 == s.e0 &&
         count_tight(normalize(shifted)).total == rep.count_closed_form;

    // Spin-c partition stability under re-derived Smith transforms.
    PipelineTrace trace = run_pipeline(rep.form);
    ok = ok && spinc_partition_stable(trace.final_stage(), rng);

    if (!ok) {
      ++failures;
      out << "FAIL M(" << s.r[0].str() << "," << s.r[1].str() << "," << s.r[2].str() << ")"
          << (rep.pass() ? "" : ": " + checks_failed(rep)) << "\n";
    }
  }
  out << "sweep: " << (samples - failures) << "/" << samples << " inputs passed\n";
  return failures == 0 ? 0 : 4;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight contact structure counts on small Seifert spaces"};
  app.require_subcommand(1);

  std::string format_name;
  const char* env = std::getenv("SEIFERT_TIGHT_FORMAT");
  app.add_option("--format", format_name, "Output format: text, json or dot")
      ->default_val(env != nullptr ? env : "text");

  std::string space, rational_text;
  bool all_stages = false, with_spinc = false;
  long limit = -1;
  std::vector<long> sweep_bounds;
  long samples = 500;

  CLI::App* c_expand = app.add_subcommand("expand", "Negative continued fraction of a rational");
  c_expand->add_option("rational", rational_text, "Positive rational r; expands -r")->required();

  CLI::App* c_count = app.add_subcommand("count", "Number of tight contact structures");
  c_count->add_option("space", space, "M(r1,r2,r3)")->required();

  CLI::App* c_norm = app.add_subcommand("normalize", "Theorem-form normalization");
  c_norm->add_option("space", space, "M(r1,r2,r3)")->required();

  CLI::App* c_h1 = app.add_subcommand("h1", "Order of first homology");
  c_h1->add_option("space", space, "M(r1,r2,r3)")->required();

  CLI::App* c_diag = app.add_subcommand("diagram", "Surgery diagram pipeline output");
  c_diag->add_option("space", space, "M(r1,r2,r3)")->required();
  c_diag->add_flag("--all-stages", all_stages, "Print every pipeline stage");

  CLI::App* c_enum = app.add_subcommand("enumerate", "Legendrian realizations, one JSON line each");
  c_enum->add_option("space", space, "M(r1,r2,r3)")->required();
  c_enum->add_option("--limit", limit, "Stop after N realizations");
  c_enum->add_flag("--spinc", with_spinc, "Append the spin-c class of each realization");

  CLI::App* c_verify = app.add_subcommand("verify", "Cross-oracle audit");
  c_verify->add_option("space", space, "M(r1,r2,r3)");
  c_verify->add_option("--sweep", sweep_bounds, "pmax qmax e0max: randomized property sweep")
      ->expected(3);
  c_verify->add_option("--samples", samples, "Sweep sample count");

  std::vector<const char*> argv;
  argv.push_back("seifert-tight");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Format format = parse_format(format_name);
  if (format == Format::dot && !c_diag->parsed())
    throw ParseError("dot output is only available for the diagram subcommand");

  if (c_expand->parsed()) {
    NegContFrac cf = expand(Rational::parse(rational_text));
    ConvergentTable t = convergents(cf);
    if (format == Format::json) {
      out << convergents_to_json(cf, t).dump() << "\n";
    } else {
      out << "coeffs:";
      for (const Int& a : cf.coeffs()) out << " " << a.get_str();
      out << "\np:";
      for (long j = 0; j <= t.order(); ++j) out << " " << t.p_at(j).get_str();
      out << "\nq:";
      for (long j = 0; j <= t.order(); ++j) out << " " << t.q_at(j).get_str();
      out << "\nvalue: " << evaluate(cf).str() << "\n";
    }
    return 0;
  }

  if (c_verify->parsed()) {
    if (!sweep_bounds.empty())
      return run_sweep(sweep_bounds[0], sweep_bounds[1], sweep_bounds[2], samples, out);
    if (space.empty()) throw ParseError("verify needs a space or --sweep bounds");
  }

  SeifertInvariants s = parse_seifert(space);

  if (c_count->parsed()) {
    TheoremForm form = normalize(s);
    TightCount count = count_tight(form);
    if (format == Format::json) {
      out << count_to_json(form, count).dump() << "\n";
    } else {
      out << "variant: " << variant_name(form.variant) << "\ne0: " << form.e0.get_str() << "\n";
      out << "factors:";
      for (const auto& [label, factor] : count.factors)
        out << " " << label << "=" << factor.get_str();
      out << "\ntotal: " << count.total.get_str() << "\n";
    }
    return 0;
  }

  if (c_norm->parsed()) {
    TheoremForm form = normalize(s);
    if (format == Format::json) {
      out << form_to_json(form).dump() << "\n";
    } else {
      out << "variant: " << variant_name(form.variant) << "\ne0: " << form.e0.get_str() << "\n";
      for (size_t i = 0; i < 3; ++i)
        out << "fiber" << (i + 1) << ": p=" << form.pq[i].first.get_str()
            << " q=" << form.pq[i].second.get_str() << "\n";
    }
    return 0;
  }

  if (c_h1->parsed()) {
    Int h1 = h1_order_from_invariants(s);
    if (format == Format::json)
      out << json{{"h1", int_to_json(h1)}}.dump() << "\n";
    else
      out << h1.get_str() << "\n";
    return 0;
  }

  if (c_diag->parsed()) {
    PipelineTrace trace = run_pipeline(normalize(s));
    std::vector<const SurgeryDiagram*> stages;
    if (all_stages)
      for (const auto& st : trace.stages) stages.push_back(&st);
    else
      stages.push_back(&trace.final_stage());
    if (format == Format::json) {
      json arr = json::array();
      for (const auto* st : stages) arr.push_back(diagram_to_json(*st));
      out << (all_stages ? arr : arr[0]).dump() << "\n";
    } else if (format == Format::dot) {
      for (const auto* st : stages) out << emit_dot(*st);
    } else {
      for (const auto* st : stages) print_diagram_text(*st, out);
    }
    return 0;
  }

  if (c_enum->parsed()) {
    PipelineTrace trace = run_pipeline(normalize(s));
    const SurgeryDiagram& fin = trace.final_stage();
    std::optional<SmithForm> snf;
    if (with_spinc) snf = smith_normal_form(fin.integer_matrix());
    RealizationEnumerator en(fin);
    long emitted = 0;
    while (auto r = en.next()) {
      if (limit >= 0 && emitted >= limit) break;
      json line{{"tb", json::array()}, {"rot", json::array()}};
      for (const Int& t : r->tb) line["tb"].push_back(int_to_json(t));
      for (const Int& x : r->rot) line["rot"].push_back(int_to_json(x));
      if (with_spinc) {
        line["class"] = json::array();
        for (const Int& x : spinc_class(r->rot, *snf)) line["class"].push_back(int_to_json(x));
      }
      out << line.dump() << "\n";
      ++emitted;
    }
    return 0;
  }

  // verify
  AuditReport rep = run_audit(s, space);
  if (format == Format::json)
    out << report_to_json(rep).dump() << "\n";
  else
    print_report_text(rep, out);
  return rep.pass() ? 0 : 4;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli
}  // namespace tight
