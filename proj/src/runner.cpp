#include "qdeform/runner.hpp"

#include <sstream>

#include "qdeform/deform.hpp"
#include "qdeform/double.hpp"
#include "qdeform/expr.hpp"

namespace qdeform {

namespace {

DeformedPresentation build_dp(const JobSpec& job, int degree,
                              ExecPolicy policy) {
  return build_deformation(job.datum, job.lambda, job.component_relations,
                           degree, policy);
}

const Presentation& select_pres(const JobSpec& job,
                                const DeformedPresentation& dp,
                                const std::string& target) {
  if (target == "h") return dp.h();
  if (target == "hlambda") return dp.hlam();
  if (target == "cleft") return dp.a();
  if (!target.empty()) throw error("unknown target '" + target + "'");
  return job.use_lambda_rules ? dp.hlam() : dp.h();
}

void dump_rules(std::ostringstream& os, const std::string& head,
                const Presentation& pres) {
  os << head << " (" << pres.rules().size() << " rules)\n";
  for (const auto& r : pres.rules())
    os << "  " << rule_str(*pres.datum(), r) << "\n";
}

int run_build(const JobSpec& job, const RunOptions& opts,
              std::ostringstream& os) {
  auto dp = build_dp(job, job.degree, opts.policy);
  os << "preset " << job.name << ", completed to degree " << dp.degree
     << "\n";
  dump_rules(os, "H", dp.h());
  dump_rules(os, "H^lambda", dp.hlam());
  dump_rules(os, "A", dp.a());
  if (opts.emit == "dims") os << graded_dims(dp, job.degree).str();
  return 0;
}

int run_reduce(const JobSpec& job, const RunOptions& opts,
               std::ostringstream& os) {
  if (opts.argument.empty()) throw error("reduce needs an expression");
  auto dp = build_dp(job, job.degree, opts.policy);
  const Presentation& pres = select_pres(job, dp, opts.target);
  NcPoly p = parse_expression(job.datum, opts.argument);
  os << reduce(p, pres).str() << "\n";
  return 0;
}

int run_dims(const JobSpec& job, const RunOptions& opts,
             std::ostringstream& os) {
  int n_max = opts.max_degree >= 0 ? opts.max_degree : job.degree;
  auto dp = build_dp(job, std::max(job.degree, n_max), opts.policy);
  auto table = graded_dims(dp, n_max);
  os << table.str();
  bool ok = true;
  for (const auto& r : table.rows) ok = ok && r.equal;
  return ok ? 0 : 1;
}

int run_primitives(const JobSpec& job, const RunOptions& opts,
                   std::ostringstream& os) {
  int n = opts.degree >= 0 ? opts.degree : 3;
  std::vector<RewriteRule> rules;
  for (const auto& rel : job.component_relations) rules.push_back(orient(rel));
  auto pres = complete(Presentation(job.datum, std::move(rules), 0),
                       std::max(job.degree, n), opts.policy);
  auto prim = find_primitives(pres, n);
  os << "primitives at degree " << n << ": " << prim.size() << "\n";
  for (const auto& p : prim) os << "  " << p.str() << "\n";
  return 0;
}

int run_deform(const JobSpec& job, const RunOptions& opts,
               std::ostringstream& os) {
  int degree = opts.max_degree >= 0 ? opts.max_degree : 3;
  auto dp = build_dp(job, std::max(job.degree, 2 * degree), opts.policy);
  auto table = extract_cocycle(dp, degree);
  os << "sigma extracted to total degree " << degree << " ("
     << table.entries.size() << " entries)\n";
  if (opts.emit == "cocycle" || opts.emit.empty()) {
    for (const auto& [m1, m2, v] : table.entries)
      os << "sigma(" << mono_str(*job.datum, m1) << " ; "
         << mono_str(*job.datum, m2) << ") = " << v.str() << "\n";
  }
  return 0;
}

int run_double(const JobSpec& job, const RunOptions& opts,
               std::ostringstream& os) {
  int depth = opts.max_degree >= 0 ? opts.max_degree : 5;
  int degree = std::max(job.degree, depth);
  SkewPairing tau(job.datum, job.lambda, job.component_relations, degree);
  auto dbl = build_double(tau, degree, opts.policy);
  os << "double over " << dbl.double_datum->group()->rank()
     << " group generators, " << dbl.hopf.pres().rules().size()
     << " rules\n";
  dump_rules(os, "double", dbl.hopf.pres());
  int code = 0;
  if (opts.quotient || opts.verify) {
    auto quotient = quotient_central(tau, dbl);
    dump_rules(os, "quotient", quotient.pres());
    if (opts.verify) {
      auto dp = build_dp(job, degree, opts.policy);
      auto rep = verify_double_iso(quotient, dp, depth);
      for (const auto& l : rep.lines) os << l << "\n";
      os << (rep.pass ? "DOUBLE-ISO PASS" : "DOUBLE-ISO FAIL") << "\n";
      code = rep.pass ? 0 : 1;
    }
  }
  return code;
}

int verify_hopf(const JobSpec& job, const RunOptions& opts,
                std::ostringstream& os) {
  int depth = opts.max_degree >= 0 ? opts.max_degree : 4;
  auto dp = build_dp(job, std::max(job.degree, depth), opts.policy);
  const HopfPres& hp = job.use_lambda_rules || opts.target == "hlambda"
                           ? dp.hopf_hlam
                           : dp.hopf_h;
  auto rep = check_hopf_axioms(hp, depth, opts.policy);
  int failures = 0;
  for (const auto& l : rep.lines)
    if (l.find(" FAIL") != std::string::npos) {
      os << l << "\n";
      ++failures;
    }
  // S^2 on the generators, reported for documentation (bijectivity of the
  // antipode is assumed, not checked)
  for (int i = 0; i < job.datum->letter_count(); ++i) {
    NcPoly x = NcPoly::letter(job.datum, i);
    os << "S^2(" << job.datum->letter(i).name
       << ") = " << hp.antipode(hp.antipode(x)).str() << "\n";
  }
  os << "hopf axioms to degree " << depth << ": " << rep.lines.size()
     << " checks, " << failures << " failures\n";
  os << (rep.pass ? "HOPF PASS" : "HOPF FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int verify_cocycle(const JobSpec& job, const RunOptions& opts,
                   std::ostringstream& os) {
  int depth = opts.max_degree >= 0 ? opts.max_degree : 3;
  auto dp = build_dp(job, std::max(job.degree, 2 * depth), opts.policy);
  const DatumPtr& d = dp.datum;
  const Field& F = d->field();
  ExtractedCocycle sig(dp);
  auto basis = generating_basis(dp.h(), depth);
  auto delta = [&](const Monomial& m) {
    return coproduct_in(NcPoly::monomial(d, m, Scalar::one(F)), dp.h(),
                        dp.h());
  };
  int identity_checks = 0, identity_failures = 0;
  for (const auto& g : basis) {
    for (const auto& h : basis) {
      for (const auto& l : basis) {
        if (static_cast<int>(g.word.size() + h.word.size() + l.word.size()) >
            depth)
          continue;
        Scalar lhs = Scalar::zero(F), rhs = Scalar::zero(F);
        TensorElem dg = delta(g), dh = delta(h), dl = delta(l);
        for (const auto& [kg, cg] : dg.terms()) {
          for (const auto& [kh, ch] : dh.terms()) {
            NcPoly prod =
                reduce(NcPoly::monomial(d, kg.second, Scalar::one(F)) *
                           NcPoly::monomial(d, kh.second, Scalar::one(F)),
                       dp.h());
            lhs += sig.sigma(kg.first, kh.first) *
                   sig.sigma(prod, NcPoly::monomial(d, l, Scalar::one(F))) *
                   cg * ch;
          }
        }
        for (const auto& [kh, ch] : dh.terms()) {
          for (const auto& [kl, cl] : dl.terms()) {
            NcPoly prod =
                reduce(NcPoly::monomial(d, kh.second, Scalar::one(F)) *
                           NcPoly::monomial(d, kl.second, Scalar::one(F)),
                       dp.h());
            rhs += sig.sigma(kh.first, kl.first) *
                   sig.sigma(NcPoly::monomial(d, g, Scalar::one(F)), prod) *
                   ch * cl;
          }
        }
        ++identity_checks;
        if (!(lhs == rhs)) {
          ++identity_failures;
          os << "COCYCLE-IDENTITY FAIL at (" << mono_str(*d, g) << ", "
             << mono_str(*d, h) << ", " << mono_str(*d, l) << ")\n";
        }
      }
    }
  }
  // transport: the deformed product is the H^lambda product on the basis
  int transport_checks = 0, transport_failures = 0;
  for (const auto& p : generating_basis(dp.h(), 2)) {
    for (const auto& r : generating_basis(dp.h(), 2)) {
      if (static_cast<int>(p.word.size() + r.word.size()) > 2) continue;
      NcPoly via_sigma = deformed_product(p, r, sig, dp.hopf_h);
      NcPoly via_eta = reduce(NcPoly::monomial(d, p, Scalar::one(F)) *
                                  NcPoly::monomial(d, r, Scalar::one(F)),
                              dp.hlam());
      ++transport_checks;
      if (!(via_sigma == via_eta)) {
        ++transport_failures;
        os << "TRANSPORT FAIL at (" << mono_str(*d, p) << ", "
           << mono_str(*d, r) << ")\n";
      }
    }
  }
  os << "cocycle identities on triples <= " << depth << ": "
     << identity_checks << " checks, " << identity_failures << " failures\n";
  os << "deformed-product transport on pairs <= 2: " << transport_checks
     << " checks, " << transport_failures << " failures\n";
  bool pass = identity_failures == 0 && transport_failures == 0;
  os << (pass ? "COCYCLE PASS" : "COCYCLE FAIL") << "\n";
  return pass ? 0 : 1;
}

int verify_confluence(const JobSpec& job, const RunOptions& opts,
                      std::ostringstream& os) {
  int depth = opts.max_degree >= 0 ? opts.max_degree : job.degree;
  auto dp = build_dp(job, std::max(job.degree, depth), opts.policy);
  bool pass = true;
  for (auto [name, pres] :
       {std::pair<const char*, const Presentation*>{"H", &dp.h()},
        {"H^lambda", &dp.hlam()},
        {"A", &dp.a()}}) {
    auto rep = check_confluence(*pres, depth, opts.policy);
    os << name << ": " << rep.overlaps_checked << " overlap words <= "
       << depth << ", " << rep.failures.size() << " failures\n";
    for (const auto& f : rep.failures) os << "  " << f << "\n";
    pass = pass && rep.pass;
  }
  os << (pass ? "CONFLUENCE PASS" : "CONFLUENCE FAIL") << "\n";
  return pass ? 0 : 1;
}

int verify_double(const JobSpec& job, const RunOptions& opts,
                  std::ostringstream& os) {
  RunOptions o = opts;
  o.quotient = true;
  o.verify = true;
  return run_double(job, o, os);
}

int run_verify(const JobSpec& job, const RunOptions& opts,
               std::ostringstream& os) {
  const std::string& what = opts.argument;
  if (what == "hopf") return verify_hopf(job, opts, os);
  if (what == "cocycle") return verify_cocycle(job, opts, os);
  if (what == "confluence") return verify_confluence(job, opts, os);
  if (what == "double") return verify_double(job, opts, os);
  if (what == "all" || what.empty()) {
    RunOptions o = opts;
    int code = 0;
    o.max_degree = opts.max_degree >= 0 ? opts.max_degree : 4;
    code |= verify_hopf(job, o, os);
    o.max_degree = 3;
    code |= verify_cocycle(job, o, os);
    o.max_degree = std::min(job.degree, 5);
    code |= verify_confluence(job, o, os);
    o.max_degree = std::min(job.degree, 5);
    code |= verify_double(job, o, os);
    auto dims_opts = opts;
    dims_opts.max_degree = job.degree;
    code |= run_dims(job, dims_opts, os);
    os << (code == 0 ? "ALL PASS" : "ALL FAIL") << "\n";
    return code;
  }
  throw error("unknown verify target '" + what + "'");
}

}  // namespace

RunResult run(const JobSpec& job, const RunOptions& opts) {
  std::ostringstream os;
  int code = 0;
  if (opts.command == "build") {
    code = run_build(job, opts, os);
  } else if (opts.command == "reduce") {
    code = run_reduce(job, opts, os);
  } else if (opts.command == "dims") {
    code = run_dims(job, opts, os);
  } else if (opts.command == "primitives") {
    code = run_primitives(job, opts, os);
  } else if (opts.command == "deform") {
    code = run_deform(job, opts, os);
  } else if (opts.command == "double") {
    code = run_double(job, opts, os);
  } else if (opts.command == "verify") {
    code = run_verify(job, opts, os);
  } else {
    throw error("unknown command '" + opts.command + "'");
  }
  return {code, os.str()};
}

}  // namespace qdeform
