#include "diaghook/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <ostream>

#include "diaghook/abacus.hpp"
#include "diaghook/bisequence.hpp"
#include "diaghook/diagonal_formula.hpp"
#include "diaghook/verify.hpp"

namespace diaghook::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  fail(ErrorCode::ParseError, "at position " + std::to_string(pos) + ": " + what);
}

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int number() {
    skip_space();
    Int value = 0;
    const char* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == first) parse_fail(pos, "expected an integer");
    pos += static_cast<std::size_t>(ptr - first);
    return value;
  }
};

std::vector<Int> parse_list(std::string_view text, bool allow_exponent) {
  Scanner s{text};
  std::vector<Int> values;
  const bool wrapped = s.eat('(');
  if (!(wrapped ? s.eat(')') : s.done())) {
    for (;;) {
      const Int value = s.number();
      Int mult = 1;
      if (allow_exponent && s.eat('^')) {
        const std::size_t at = s.pos;
        mult = s.number();
        if (mult < 1) parse_fail(at, "multiplicity must be positive");
      }
      values.insert(values.end(), static_cast<std::size_t>(mult), value);
      if (s.eat(',')) continue;
      if (wrapped && !s.eat(')')) parse_fail(s.pos, "expected ',' or ')'");
      break;
    }
  }
  if (!s.done()) parse_fail(s.pos, "unexpected trailing text");
  return values;
}

json to_json(const Partition& p) { return p.vector(); }

json to_json(const std::vector<Partition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

std::string list_text(const std::vector<Partition>& ps) {
  std::string out = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out + "]";
}

std::vector<Int> weights_of(const std::vector<Partition>& ps) {
  std::vector<Int> w;
  for (const auto& p : ps) w.push_back(p.weight());
  return w;
}

struct Options {
  std::string partition;
  std::vector<std::string> from_delta_raw;
  Int p = 0;
  bool json = false;
  std::string method = "both";
  std::string core;
  std::vector<std::string> quotient;
  Int n_max = 20;
  std::vector<Int> primes{3, 5, 7};
  unsigned threads = 0;
};

Partition input_partition(const Options& o) {
  if (!o.from_delta_raw.empty()) {
    std::string joined;
    for (const auto& piece : o.from_delta_raw) joined += (joined.empty() ? "" : ",") + piece;
    return symmetric_from_delta(parse_delta(joined));
  }
  return parse_partition(o.partition);
}

int cmd_core(const Options& o, std::ostream& out, bool core_too) {
  const Partition lambda = input_partition(o);
  const auto cq = core_and_quotient(lambda, o.p);
  if (o.json) {
    json j{{"partition", to_json(lambda)}, {"p", o.p}, {"quotient", to_json(cq.quotient)}};
    if (core_too) {
      j["core"] = to_json(cq.core);
      j["weights"] = {{"partition", lambda.weight()}, {"core", cq.core.weight()}, {"quotient", weights_of(cq.quotient)}};
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << "partition: " << lambda.to_string() << '\n' << "p: " << o.p << '\n';
  if (core_too) out << "core: " << cq.core.to_string() << '\n';
  out << "quotient: " << list_text(cq.quotient) << '\n';
  return kOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
  if (o.method != "formula" && o.method != "oracle" && o.method != "both")
    fail(ErrorCode::ParseError, "--method must be formula, oracle or both");
  const Partition core = parse_partition(o.core);
  std::vector<Partition> quotient;
  for (const auto& q : o.quotient) quotient.push_back(parse_partition(q));
  if (o.p < 2) fail(ErrorCode::BadModulus, "p = " + std::to_string(o.p) + " must be at least 2");
  if (static_cast<Int>(quotient.size()) != o.p)
    fail(ErrorCode::WrongQuotientLength,
         "expected " + std::to_string(o.p) + " quotient entries, got " + std::to_string(quotient.size()));
  if (!is_symmetric(core)) fail(ErrorCode::NotSymmetric, core.to_string() + " is not self-conjugate");
  if (!is_p_core(core, o.p)) fail(ErrorCode::NotACore, core.to_string() + " has a hook of length " + std::to_string(o.p));
  if (!is_symmetric_quotient(quotient, o.p))
    fail(ErrorCode::NotSymmetricQuotient, "quotient entries g and p-1-g are not conjugate");

  const Partition lambda = from_core_and_quotient(core, quotient, o.p);
  const bool want_formula = o.method != "oracle";
  const bool want_oracle = o.method != "formula";
  std::optional<DeltaSet> formula, oracle;
  if (want_formula) formula = delta_general(core, quotient, o.p);
  if (want_oracle) oracle = delta_oracle(lambda);

  const DeltaSet& shown = formula ? *formula : *oracle;
  const bool conserved = shown.sum() == lambda.weight() && (!oracle || oracle->sum() == lambda.weight());
  const bool compared = formula && oracle;
  const bool agree = compared && *formula == *oracle;
  const bool ok = conserved && (!compared || agree);

  if (o.json) {
    json j{{"p", o.p},
           {"core", to_json(core)},
           {"quotient", to_json(quotient)},
           {"partition", to_json(lambda)},
           {"n", lambda.weight()},
           {"method", o.method},
           {"conservation", conserved}};
    if (formula) j["delta_formula"] = formula->lengths();
    if (oracle) j["delta_oracle"] = oracle->lengths();
    if (compared) j["agreement"] = agree;
    out << j.dump() << '\n';
  } else {
    out << "p: " << o.p << '\n'
        << "core: " << core.to_string() << '\n'
        << "quotient: " << list_text(quotient) << '\n'
        << "partition: " << lambda.to_string() << " (n = " << lambda.weight() << ")\n";
    if (formula) out << "delta (formula): " << formula->to_string() << '\n';
    if (oracle) out << "delta (oracle): " << oracle->to_string() << '\n';
    out << "conservation: " << (conserved ? "OK" : "FAILED") << " (sum " << shown.sum() << ", n " << lambda.weight()
        << ")\n";
    if (compared) out << "verdict: " << (agree ? "AGREE" : "DISAGREE") << '\n';
  }
  return ok ? kOk : kDisagree;
}

int cmd_check_core(const Options& o, std::ostream& out) {
  const Partition lambda = input_partition(o);
  if (o.p < 2) fail(ErrorCode::BadModulus, "p = " + std::to_string(o.p) + " must be at least 2");
  if (!is_symmetric(lambda)) fail(ErrorCode::NotSymmetric, lambda.to_string() + " is not self-conjugate");
  const bool criterion = is_symmetric_p_core(d_of(lambda), o.p);
  const bool direct = is_p_core(lambda, o.p);
  const auto word = [](bool b) { return b ? "CORE" : "NOT A CORE"; };
  if (o.json) {
    out << json{{"partition", to_json(lambda)}, {"p", o.p}, {"criterion", criterion}, {"direct", direct},
                {"agreement", criterion == direct}}
               .dump()
        << '\n';
  } else {
    out << "partition: " << lambda.to_string() << '\n'
        << "p: " << o.p << '\n'
        << "criterion: " << word(criterion) << '\n'
        << "direct: " << word(direct) << '\n'
        << "verdict: " << (criterion == direct ? word(direct) : "DISAGREE") << '\n';
  }
  return criterion == direct ? kOk : kDisagree;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Partition lambda = input_partition(o);
  const std::string grid = render_ascii(lambda, o.p);
  if (o.json)
    out << json{{"partition", to_json(lambda)}, {"p", o.p}, {"abacus", grid}}.dump() << '\n';
  else
    out << grid;
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.n_max < 0) fail(ErrorCode::ParseError, "--n-max must be non-negative");
  for (Int p : o.primes)
    if (p < 2) fail(ErrorCode::BadModulus, "p = " + std::to_string(p) + " must be at least 2");
  const VerifyReport r = run_verify(o.n_max, o.primes, o.threads);
  if (o.json) {
    json j{{"n_max", r.n_max}, {"primes", r.primes}, {"cells", r.cells}, {"failures", r.failures}};
    if (r.first_failure) {
      const auto& f = *r.first_failure;
      j["first_counterexample"] = {{"partition", to_json(f.lambda)},     {"p", f.p},
                                   {"formula_agrees", f.formula_agrees}, {"conserved", f.conserved},
                                   {"roundtrip", f.roundtrip},           {"criterion_agrees", f.criterion_agrees},
                                   {"error", f.error}};
    } else {
      j["first_counterexample"] = nullptr;
    }
    out << j.dump() << '\n';
  } else {
    out << "checked " << r.cells << " (λ,p) cells, " << r.failures << " failures\n";
    if (r.first_failure) {
      const auto& f = *r.first_failure;
      out << "first counterexample: " << f.lambda.to_string() << " p=" << f.p << " formula=" << f.formula_agrees
          << " conservation=" << f.conserved << " roundtrip=" << f.roundtrip << " criterion=" << f.criterion_agrees
          << (f.error.empty() ? "" : " error=" + f.error) << '\n';
    }
  }
  return r.failures == 0 ? kOk : kDisagree;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NonMonotonic:
    case ErrorCode::NonPositivePart:
    case ErrorCode::InvalidDeltaSet:
      return kParse;
    case ErrorCode::BadModulus:
      return kBadModulus;
    case ErrorCode::NotACore:
      return kNotACore;
    case ErrorCode::WrongQuotientLength:
    case ErrorCode::NotSymmetricQuotient:
      return kBadQuotient;
    case ErrorCode::NotSymmetric:
      return kNotSymmetric;
    default:
      return kDisagree;
  }
}

Partition parse_partition(std::string_view text) { return Partition(parse_list(text, true)); }

DeltaSet parse_delta(std::string_view text) { return DeltaSet(parse_list(text, false)); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diagonal hook lengths of symmetric partitions from p-core and p-quotient"};
  app.require_subcommand(1);
  Options o;

  const auto add_partition_input = [&](CLI::App* sub) {
    sub->add_option("partition", o.partition, "Partition, e.g. \"6^2,2\" (empty string = empty partition)");
    sub->add_option("--from-delta", o.from_delta_raw, "Symmetric partition given by its diagonal hook lengths")
        ->delimiter(',');
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p,-p", o.p, "Modulus (>= 2)")->required();
    sub->add_flag("--json", o.json, "Emit JSON");
  };

  auto* core = app.add_subcommand("core", "Print p-core and p-quotient");
  add_partition_input(core);
  add_common(core);
  auto* quotient = app.add_subcommand("quotient", "Print the p-quotient");
  add_partition_input(quotient);
  add_common(quotient);
  auto* delta = app.add_subcommand("delta", "Diagonal hook lengths from core and quotient");
  delta->add_option("--core", o.core, "Symmetric p-core (default empty)");
  delta->add_option("--quotient,-q", o.quotient, "Quotient component; repeat once per runner")->allow_extra_args(false);
  delta->add_option("--method", o.method, "formula, oracle or both")->check(CLI::IsMember({"formula", "oracle", "both"}));
  add_common(delta);
  auto* check = app.add_subcommand("check-core", "Compare the diagonal p-core criterion with a direct check");
  add_partition_input(check);
  add_common(check);
  auto* render = app.add_subcommand("render", "ASCII abacus");
  add_partition_input(render);
  add_common(render);
  auto* verify = app.add_subcommand("verify", "Exhaustive formula-vs-oracle sweep");
  verify->add_option("--n-max", o.n_max, "Largest weight to sweep");
  verify->add_option("--primes", o.primes, "Moduli to sweep, e.g. 3,5,7")->delimiter(',');
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--json", o.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (core->parsed()) return cmd_core(o, out, true);
    if (quotient->parsed()) return cmd_core(o, out, false);
    if (delta->parsed()) return cmd_delta(o, out);
    if (check->parsed()) return cmd_check_core(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParse;
}

}  // namespace diaghook::cli
