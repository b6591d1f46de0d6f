#include "queerhom/verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "queerhom/homology.hpp"
#include "queerhom/lie.hpp"

namespace qh {

using json = nlohmann::json;

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

Status Report::overall() const {
  bool any_run = false;
  for (const auto& r : rows) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::pass) any_run = true;
  }
  return any_run ? Status::pass : Status::skip;
}

int exit_code(const Report& report) {
  if (report.overall() == Status::fail) return 1;
  if (!report.unmet_requirement.empty()) return 2;
  return 0;
}

// ------------------------------------------------------------ algebra files

namespace {

std::size_t index_field(const json& v, const GradedSpace& space, const char* what) {
  if (v.is_number_unsigned()) {
    auto i = v.get<std::size_t>();
    if (i >= space.dim()) throw std::invalid_argument(std::string(what) + " index " + std::to_string(i) + " out of range");
    return i;
  }
  if (v.is_string()) {
    auto i = space.index_of(v.get<std::string>());
    if (!i) throw std::invalid_argument(std::string(what) + " names unknown basis label '" + v.get<std::string>() + "'");
    return *i;
  }
  throw std::invalid_argument(std::string(what) + " must be a basis index or label");
}

Scalar scalar_field(const json& v, const FieldSpec& field) {
  if (v.is_string()) return parse_scalar(v.get<std::string>(), field);
  if (v.is_number_integer()) return Scalar::from_int(field, v.get<long>());
  throw std::invalid_argument("scalar entries must be strings or integers, got " + v.dump());
}

}  // namespace

SuperAlgebra parse_algebra_json(const std::string& text, std::optional<FieldSpec> field) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("algebra description must be a JSON object");
  for (const char* key : {"name", "basis", "unit"})
    if (!doc.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");

  FieldSpec f = FieldSpec::rationals();
  if (doc.contains("scalars")) {
    f = FieldSpec::parse(doc.at("scalars").get<std::string>());
    if (field && !(*field == f))
      throw std::invalid_argument("description declares scalars " + f.name() + " but the field " + field->name() +
                                  " was requested");
  } else if (field) {
    f = *field;
  }

  std::vector<std::string> labels;
  std::vector<std::uint8_t> parities;
  for (const auto& b : doc.at("basis")) {
    if (!b.contains("label") || !b.contains("parity")) throw std::invalid_argument("basis entries need label and parity");
    auto p = b.at("parity");
    if (!p.is_number_integer() || (p.get<long>() != 0 && p.get<long>() != 1))
      throw std::invalid_argument("basis element '" + b.at("label").get<std::string>() + "' has parity " + p.dump() +
                                  "; parities are 0 or 1");
    labels.push_back(b.at("label").get<std::string>());
    parities.push_back(static_cast<std::uint8_t>(p.get<long>()));
  }
  GradedSpace space(std::move(labels), std::move(parities));
  const std::size_t d = space.dim();

  const auto& unit_json = doc.at("unit");
  if (!unit_json.is_array() || unit_json.size() != d)
    throw std::invalid_argument("unit must list one coefficient per basis element");
  std::vector<SparseVector::Entry> unit_entries;
  for (std::size_t k = 0; k < d; ++k) unit_entries.emplace_back(k, scalar_field(unit_json[k], f));

  std::vector<SparseVector> products(d * d);
  std::vector<bool> seen(d * d, false);
  if (doc.contains("products")) {
    for (const auto& e : doc.at("products")) {
      std::size_t i = index_field(e.at("i"), space, "product i");
      std::size_t j = index_field(e.at("j"), space, "product j");
      if (seen[i * d + j])
        throw std::invalid_argument("duplicate product entry for (" + space.label(i) + ", " + space.label(j) + ")");
      seen[i * d + j] = true;
      std::vector<SparseVector::Entry> entries;
      if (e.contains("coefficients")) {
        for (const auto& [key, value] : e.at("coefficients").items()) {
          // decimal keys are basis indices, anything else a label
          std::size_t k = 0;
          bool numeric = !key.empty() && key.find_first_not_of("0123456789") == std::string::npos;
          if (numeric) {
            k = std::stoul(key);
            if (k >= d) throw std::invalid_argument("coefficient index " + key + " out of range");
          } else if (auto idx = space.index_of(key)) {
            k = *idx;
          } else {
            throw std::invalid_argument("coefficient key '" + key + "' is neither a basis index nor a label");
          }
          entries.emplace_back(k, scalar_field(value, f));
        }
      }
      products[i * d + j] = SparseVector(std::move(entries));
    }
  }
  return SuperAlgebra::make_validated(doc.at("name").get<std::string>(), f, std::move(space), std::move(products),
                                      SparseVector(std::move(unit_entries)));
}

SuperAlgebra load_algebra(const std::string& path, std::optional<FieldSpec> field) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_json(ss.str(), field);
}

// ---------------------------------------------------------------- scenarios

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Input {
  SuperAlgebra r;
  std::optional<BuiltinSpec> builtin;
  FieldSpec field;
};

Input resolve_input(const ScenarioOptions& opt) {
  Input in;
  try {
    if (opt.algebra.rfind("builtin:", 0) == 0) {
      in.builtin = BuiltinSpec::parse(std::string_view(opt.algebra).substr(8));
      in.field = opt.field.value_or(FieldSpec::rationals());
      in.r = build_builtin(*in.builtin, in.field);
    } else {
      in.r = load_algebra(opt.algebra, opt.field);
      in.field = in.r.field();
    }
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
  return in;
}

class Runner {
 public:
  Runner(Report& rep, const FieldSpec& field) : rep_(rep), field_(field.name()) {}

  void set_prefix(std::string p) { prefix_ = std::move(p); }
  void row(const std::string& id, bool ok, std::string expected, std::string computed, std::string note = {},
           const std::string& field = {}) {
    rep_.rows.push_back({prefix_ + id, ok ? Status::pass : Status::fail, std::move(expected), std::move(computed),
                         std::move(note), field.empty() ? field_ : field});
  }
  void skip(const std::string& id, std::string expected, std::string note, const std::string& field = {}) {
    rep_.rows.push_back({prefix_ + id, Status::skip, std::move(expected), "", std::move(note),
                         field.empty() ? field_ : field});
  }
  void time(const std::string& phase, double s) { rep_.timings.emplace_back(prefix_ + phase, s); }
  void note(std::string n) { rep_.notes.push_back(std::move(n)); }
  /// Records an unmet requirement with a SKIP row; returns false so callers can bail out.
  bool require(bool met, const std::string& id, const std::string& what) {
    if (met) return true;
    rep_.unmet_requirement = what;
    skip(id, "requirement: " + what, "not run: " + what);
    return false;
  }

 private:
  Report& rep_;
  std::string field_;
  std::string prefix_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string prefix_for(unsigned n) { return "n=" + std::to_string(n) + "/"; }

void iso_rows(Runner& run, const VerifiedHomomorphism& h) {
  std::size_t pairs = h.source().dim() * h.source().dim();
  run.row("parity-preserving", h.parity_preserving(), "true", yes_no(h.parity_preserving()));
  std::string note;
  for (const auto& f : h.failures()) note += (note.empty() ? "" : "; ") + f.detail;
  run.row("bracket-preserving", h.bracket_preserving(), "all " + std::to_string(pairs) + " basis pairs",
          std::to_string(h.pairs_checked()) + " checked, " + std::to_string(h.bracket_preserving() ? 0 : h.failures().size()) +
              (h.failures().size() >= 10 ? "+" : "") + " failures",
          note);
  run.row("bijective", h.injective() && h.surjective(),
          "rank " + std::to_string(h.source().dim()) + " = dim target " + std::to_string(h.target().dim()),
          "rank " + std::to_string(h.rank()));
}

using ScenarioFn = std::function<void(Runner&, const Input&, const ScenarioOptions&, const std::vector<unsigned>&)>;

void scenario_iso_queer_gl(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>& ns) {
  const SuperAlgebra s = tensor(in.r, q1(in.field));
  for (unsigned n : ns) {
    run.set_prefix(prefix_for(n));
    auto t0 = std::chrono::steady_clock::now();
    LieSuperAlgebra q = build_q(n, in.r);
    LieSuperAlgebra qf = build_q_from_formulas(n, in.r);
    run.row("q-formula-table", q.same_structure(qf), "block matrix brackets = closed formulas",
            q.same_structure(qf) ? "identical" : "differ");
    auto v = q.validate();
    run.row("q-lie-invariants", v.ok(), "no violations", v.ok() ? "none" : v.summary(5));
    run.time("build_q", seconds_since(t0));

    t0 = std::chrono::steady_clock::now();
    VerifiedHomomorphism h = iso_q_to_gl(n, in.r);
    iso_rows(run, h);
    Subspace image = h.image(derived_subalgebra(h.source()));
    Subspace sl = build_sl(n, s);
    run.row("sq-image-equals-sl", image == sl, "sl_n(R (x) Q1) " + sl.graded_dim().to_string(),
            "image(sq_n(R)) " + image.graded_dim().to_string() + (image == sl ? "" : ", different subspace"));
    run.time("isomorphism", seconds_since(t0));
  }
}

void scenario_perfectness(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>& ns) {
  for (unsigned n : ns) {
    run.set_prefix(prefix_for(n));
    auto t0 = std::chrono::steady_clock::now();
    LieSuperAlgebra q = build_q(n, in.r);
    Subspace der = derived_subalgebra(q);
    Subspace chr = build_sq_by_characterization(n, in.r);
    run.row("derived-equals-characterization", der == chr, "Tr(B) in [R,R]: " + chr.graded_dim().to_string(),
            "[q_n, q_n]: " + der.graded_dim().to_string() + (der == chr ? "" : ", different subspace"));
    SubLieAlgebra sq = induced_subalgebra(q, der, "sq");
    bool perfect = is_perfect(sq.algebra);
    std::string note;
    if (n == 2) note = "n = 2 sits below the n >= 3 range sometimes quoted for perfectness; computed directly";
    if (n == 1) note = "sq_1 is outside the perfect range";
    if (n >= 2)
      run.row("sq-perfect", perfect, "true", yes_no(perfect), note);
    else
      run.row("sq-perfect", true, "not required for n = 1", yes_no(perfect), note);
    run.time("derived", seconds_since(t0));
    if (n == 2) run.note(note);
  }
}

void scenario_sq1_abelian(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>&) {
  if (!run.require(in.r.is_super_commutative(), "sq1-abelian", "super-commutative R")) return;
  run.set_prefix(prefix_for(1));
  LieSuperAlgebra q = build_q(1, in.r);
  Subspace der = derived_subalgebra(q);
  QueerBasis qb{1, in.r.dim()};
  std::vector<SparseVector> diag;
  for (std::size_t a = 0; a < in.r.dim(); ++a) diag.push_back(SparseVector::unit(qb.u(0, 0, a), in.field));
  Subspace diagonal = Subspace::span(q.space_ptr(), in.field, diag);
  run.row("sq1-equals-diagonal", der == diagonal, "{diag(a, rho(a))} " + diagonal.graded_dim().to_string(),
          der.graded_dim().to_string() + (der == diagonal ? "" : ", different subspace"));
  SubLieAlgebra sq = induced_subalgebra(q, der, "sq_1");
  bool abelian = sq.algebra.is_abelian();
  run.row("sq1-abelian", abelian, "[sq_1, sq_1] = 0", derived_subalgebra(sq.algebra).graded_dim().to_string());
  bool perfect = is_perfect(sq.algebra);
  bool nonzero = sq.algebra.dim() > 0;
  run.row("sq1-not-perfect", nonzero && !perfect, "false", yes_no(perfect));
}

void scenario_loop_iso(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>& ns) {
  if (!run.require(in.r.is_super_commutative(), "loop-iso", "super-commutative R")) return;
  for (unsigned n : ns) {
    run.set_prefix(prefix_for(n));
    auto t0 = std::chrono::steady_clock::now();
    VerifiedHomomorphism h = loop_relabeling(n, in.r, true);
    iso_rows(run, h);
    bool permutation = true;
    std::vector<bool> hit(h.target().dim(), false);
    for (std::size_t k = 0; k < h.source().dim() && permutation; ++k) {
      SparseVector c = h.apply(SparseVector::unit(k, in.field));
      if (c.nnz() != 1 || hit[c.leading()]) {
        permutation = false;
        break;
      }
      hit[c.leading()] = true;
      const Scalar& v = c.leading_value();
      permutation = v.is_one() || (-v).is_one();
    }
    run.row("signed-relabeling", permutation, "basis -> +/- basis", permutation ? "signed permutation" : "not a signed permutation");
    auto lv = h.source().validate();
    run.row("tensor-lie-invariants", lv.ok(), "no violations", lv.ok() ? "none" : lv.summary(5));
    VerifiedHomomorphism plain = loop_relabeling(n, in.r, false);
    run.note(prefix_for(n) + "relabeling x(x)a -> x(a) without the sign (-1)^{|x||a|} " +
             (plain.is_isomorphism() ? "is also an isomorphism" : "is not bracket preserving"));
    run.time("relabeling", seconds_since(t0));
  }
}

void scenario_qtogl(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>& ns) {
  if (!run.require(in.field.has_sqrt_minus_one(), "qtogl-sqrt-1", "a field containing sqrt(-1) (Qi or Fp with p = 1 mod 4)"))
    return;
  for (unsigned n : ns) {
    run.set_prefix(prefix_for(n));
    auto t0 = std::chrono::steady_clock::now();
    VerifiedHomomorphism h = iso_qQ1_to_glnn(n, in.r);
    iso_rows(run, h);
    Subspace image = h.image(derived_subalgebra(h.source()));
    Subspace sl = derived_subalgebra(h.target());
    run.row("sq-image-equals-sl", image == sl, "sl_{n|n}(R) " + sl.graded_dim().to_string(),
            "image(sq_n(R (x) Q1)) " + image.graded_dim().to_string() + (image == sl ? "" : ", different subspace"));
    run.time("isomorphism", seconds_since(t0));
  }
}

void scenario_pair_relations(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>&) {
  auto t0 = std::chrono::steady_clock::now();
  RelationReport rr = check_h_relations(in.r);
  run.time("relations", seconds_since(t0));
  std::map<std::string, std::pair<std::size_t, std::vector<const RelationRow*>>> by;
  for (const auto& row : rr.rows) {
    auto& [count, bad] = by[row.relation];
    ++count;
    if (!row.holds) bad.push_back(&row);
  }
  for (const auto& [rel, entry] : by) {
    const auto& [count, bad] = entry;
    std::string note;
    for (std::size_t i = 0; i < bad.size() && i < 5; ++i)
      note += (i ? "; " : "") + bad[i]->instance + " leaves " + bad[i]->residue;
    if (bad.size() > 5) note += "; ...";
    run.row(rel, bad.empty(), "zero residue on all " + std::to_string(count) + " instances",
            std::to_string(bad.size()) + " nonzero residues", note);
  }
}

void scenario_hc1_shift(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>&) {
  auto t0 = std::chrono::steady_clock::now();
  PhiPsiResult pp = phi_psi(in.r);
  run.time("phi_psi", seconds_since(t0));
  std::string fails;
  for (const auto& f : pp.failures) fails += (fails.empty() ? "" : "; ") + f;
  const GradedDim target = pp.hc1_r.graded_dim().swapped();
  run.row("phi-psi-well-defined", pp.psi_well_defined && pp.phi_well_defined, "true",
          "psi " + yes_no(pp.psi_well_defined) + ", phi " + yes_no(pp.phi_well_defined), fails);
  run.row("phi-psi-odd", pp.psi_odd && pp.phi_odd, "true", "psi " + yes_no(pp.psi_odd) + ", phi " + yes_no(pp.phi_odd));
  run.row("phi-psi-land-in-hc1", pp.psi_lands_in_hc1 && pp.phi_lands_in_hc1, "true",
          "psi " + yes_no(pp.psi_lands_in_hc1) + ", phi " + yes_no(pp.phi_lands_in_hc1));
  run.row("phi-psi-inverse", pp.phi_after_psi_identity && pp.psi_after_phi_identity, "true",
          "phi.psi " + yes_no(pp.phi_after_psi_identity) + ", psi.phi " + yes_no(pp.psi_after_phi_identity));
  bool image_ok = pp.psi_image == pp.hc1_s.cycles;
  run.row("hc1-swap-phi-psi", image_ok && pp.psi_image.graded_dim() == target, "swap(HC1(R)) = " + target.to_string(),
          "psi(HC1(R)) = " + pp.psi_image.graded_dim().to_string() + (image_ok ? "" : ", not all of HC1(R (x) Q1)"));
  t0 = std::chrono::steady_clock::now();
  GradedDim brute = hc1(tensor(in.r, q1(in.field))).graded_dim();
  run.time("hc1_brute_force", seconds_since(t0));
  run.row("hc1-swap-brute-force", brute == target, "swap(HC1(R)) = " + target.to_string(),
          "HC1(R (x) Q1) = " + brute.to_string(), "HC1(R) = " + pp.hc1_r.graded_dim().to_string());
}

void scenario_kahler(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>&) {
  std::optional<KahlerPresentation> pres;
  if (in.builtin) {
    try {
      pres = kahler_presentation(*in.builtin, in.field);
    } catch (const std::invalid_argument&) {
    }
  }
  if (!run.require(pres.has_value(), "kahler-equals-hc1",
                   "a commutative builtin with a known presentation (base-field, monogenic, truncated-poly, "
                   "group-algebra, square-zero-plane)"))
    return;
  auto t0 = std::chrono::steady_clock::now();
  KahlerResult k = kahler_hc1_oracle(*pres);
  run.time("kahler", seconds_since(t0));
  t0 = std::chrono::steady_clock::now();
  GradedDim h = hc1(in.r).graded_dim();
  run.time("hc1", seconds_since(t0));
  run.row("kahler-equals-hc1", h == k.quotient, "Omega^1/dR = " + k.quotient.to_string(), "HC1(R) = " + h.to_string(),
          "dim Omega^1 = " + std::to_string(k.omega1) + ", dim dR = " + std::to_string(k.exact));
}

std::string details_note(const TheoremReport& t) {
  std::string s;
  for (const auto& [k, v] : t.details) s += (s.empty() ? "" : ", ") + k + " " + v;
  return s;
}

void theorem_row(Runner& run, const std::string& id, const TheoremReport& t, const std::string& field = {}) {
  std::string expected = t.expected.to_string();
  std::string computed = t.computed.to_string();
  std::string note = details_note(t);
  if (t.exploratory && !t.pass) {
    run.skip(id, expected, "exploratory, outside n >= 3; computed " + computed + " differs; " + note, field);
    return;
  }
  if (t.exploratory) note = "exploratory, outside n >= 3; " + note;
  run.row(id, t.pass, expected, computed, note, field);
}

using TheoremFn = TheoremReport (*)(const SuperAlgebra&, unsigned);

void theorem_scenario(Runner& run, const Input& in, const ScenarioOptions& opt, const std::vector<unsigned>& ns,
                      const std::string& id, TheoremFn fn, const std::function<GradedDim(const SuperAlgebra&, unsigned)>& dims) {
  for (unsigned n : ns) {
    run.set_prefix(prefix_for(n));
    std::size_t w3 = wedge3_dimension(dims(in.r, n));
    if (w3 > opt.budget) {
      run.skip(id, "", "dim Lambda^3 = " + std::to_string(w3) + " exceeds the budget " + std::to_string(opt.budget));
      continue;
    }
    if (opt.precheck_prime) {
      FieldSpec fp = FieldSpec::prime(*opt.precheck_prime);
      if (!in.builtin) {
        run.skip(id, "", "F_p pre-check needs a builtin algebra", fp.name());
      } else if (!in.field.has_sqrt_minus_one() || fp.has_sqrt_minus_one()) {
        TheoremReport t = fn(build_builtin(*in.builtin, fp), n);
        for (const auto& [phase, s] : t.timings) run.time("precheck/" + phase, s);
        theorem_row(run, id, t, fp.name());
      } else {
        run.skip(id, "", "F_p pre-check needs sqrt(-1) in F_p", fp.name());
      }
    }
    TheoremReport t = fn(in.r, n);
    for (const auto& [phase, s] : t.timings) run.time(phase, s);
    theorem_row(run, id, t);
  }
}

void scenario_h2_main(Runner& run, const Input& in, const ScenarioOptions& opt, const std::vector<unsigned>& ns) {
  theorem_scenario(run, in, opt, ns, "h2-equals-swapped-hc1", &verify_main_theorem, &sq_dimension);
}

void scenario_psq(Runner& run, const Input& in, const ScenarioOptions& opt, const std::vector<unsigned>& ns) {
  if (!run.require(in.r.is_super_commutative(), "h2-psq-formula", "super-commutative R")) return;
  theorem_scenario(run, in, opt, ns, "h2-psq-formula", &verify_psq_formula,
                   [](const SuperAlgebra& r, unsigned n) { return sq_dimension(r, n) - r.space().graded_dim(); });
}

void scenario_slnn(Runner& run, const Input& in, const ScenarioOptions& opt, const std::vector<unsigned>& ns) {
  if (!run.require(in.field.has_sqrt_minus_one(), "h2-slnn-equals-hc1",
                   "a field containing sqrt(-1) (Qi or Fp with p = 1 mod 4)"))
    return;
  theorem_scenario(run, in, opt, ns, "h2-slnn-equals-hc1", &verify_slnn_identity,
                   [](const SuperAlgebra& s, unsigned n) { return sq_dimension(tensor(s, q1(s.field())), n); });
}

void scenario_an_vanishing(Runner& run, const Input& in, const ScenarioOptions&, const std::vector<unsigned>& ns) {
  for (unsigned n : ns) {
    run.set_prefix(prefix_for(n));
    if (!in.field.coprime_to(n)) {
      run.skip("A_n-vanishes", "(0|0)", "the characteristic divides n");
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    GradedDim a = an_vanishing_check(in.r, n);
    run.time("quotient", seconds_since(t0));
    run.row("A_n-vanishes", a == GradedDim{}, "(0|0)", a.to_string(),
            "(R (x) Q1) / (n, [S,S]) for S = R (x) Q1");
  }
}

struct ScenarioDef {
  ScenarioFn fn;
  std::vector<unsigned> default_n;  // empty: n is not used
};

const std::map<std::string, ScenarioDef>& catalog() {
  static const std::map<std::string, ScenarioDef> c = {
      {"iso-queer-gl", {scenario_iso_queer_gl, {1, 2, 3}}},
      {"perfectness", {scenario_perfectness, {2, 3}}},
      {"sq1-abelian", {scenario_sq1_abelian, {}}},
      {"loop-iso", {scenario_loop_iso, {2}}},
      {"qtogl-sqrt-1", {scenario_qtogl, {1, 2}}},
      {"pair-relations", {scenario_pair_relations, {}}},
      {"hc1-shift", {scenario_hc1_shift, {}}},
      {"kahler-oracle", {scenario_kahler, {}}},
      {"h2-main", {scenario_h2_main, {3}}},
      {"psq-central", {scenario_psq, {3}}},
      {"slnn-identity", {scenario_slnn, {3}}},
      {"an-vanishing", {scenario_an_vanishing, {2, 3}}},
  };
  return c;
}

std::string join(const std::vector<unsigned>& ns) {
  std::string s;
  for (unsigned n : ns) s += (s.empty() ? "" : ",") + std::to_string(n);
  return s;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"iso-queer-gl", "perfectness", "sq1-abelian",   "loop-iso",
                                                 "qtogl-sqrt-1", "pair-relations", "hc1-shift",   "kahler-oracle",
                                                 "h2-main",      "psq-central",   "slnn-identity", "an-vanishing"};
  return names;
}

Report run_scenario(const std::string& name, const ScenarioOptions& options) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw PreconditionError("unknown scenario '" + name + "'");
  const ScenarioDef& def = it->second;
  std::vector<unsigned> ns = options.n.empty() ? def.default_n : options.n;
  if (def.default_n.empty() && !options.n.empty())
    throw PreconditionError("scenario '" + name + "' takes no --n");
  for (unsigned n : ns)
    if (n == 0 || n > 16) throw PreconditionError("n must lie in 1..16");

  Input in = resolve_input(options);
  Report rep;
  rep.scenario = name;
  rep.input.emplace_back("algebra", in.r.name());
  rep.input.emplace_back("source", options.algebra);
  rep.input.emplace_back("field", in.field.name());
  rep.input.emplace_back("algebra_dim", in.r.space().graded_dim().to_string());
  if (!ns.empty()) rep.input.emplace_back("n", join(ns));
  if (options.precheck_prime) rep.input.emplace_back("precheck", "Fp:" + std::to_string(*options.precheck_prime));
  rep.input.emplace_back("budget", std::to_string(options.budget));

  Runner run(rep, in.field);
  auto t0 = std::chrono::steady_clock::now();
  try {
    def.fn(run, in, options, ns);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
  rep.timings.emplace_back("total", seconds_since(t0));
  return rep;
}

std::string report_json(const Report& report) {
  json j;
  j["scenario"] = report.scenario;
  j["status"] = status_name(report.overall());
  j["tool_version"] = kToolVersion;
  json input = json::object();
  for (const auto& [k, v] : report.input) input[k] = v;
  j["input"] = input;
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"id", r.id},
                    {"status", status_name(r.status)},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"note", r.note},
                    {"field", r.field}});
  j["checks"] = rows;
  json timings = json::object();
  for (const auto& [k, v] : report.timings) timings[k] = v;
  j["timings"] = timings;
  j["notes"] = report.notes;
  if (!report.unmet_requirement.empty()) j["unmet_requirement"] = report.unmet_requirement;
  return j.dump(2) + "\n";
}

void emit_report(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << report_json(report);
  if (!out) throw std::runtime_error("failed writing report to " + path);
}

}  // namespace qh
