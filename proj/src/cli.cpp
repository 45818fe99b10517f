#include "lierig/cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lierig/error.hpp"
#include "lierig/rigidity.hpp"
#include "lierig/weyl_char.hpp"

namespace lierig::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string type;
  int rank = 0;
  std::string format = "tsv";
  std::string weight, left, right, lambda, mu;
  int cutoff = 3;
  std::string mode = "full";
  int k_bound = 3;
  long long delta = 1;
  bool failures_only = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& text, std::size_t rank, const std::string& flag) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    while (first < last && *first == ' ') ++first;
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      throw UsageError(flag + ": cannot parse '" + text + "' as comma-separated integers");
    coords.push_back(v);
    pos = comma + 1;
  }
  if (coords.size() != rank)
    throw UsageError(flag + ": expected " + std::to_string(rank) + " coordinates, got " +
                     std::to_string(coords.size()));
  return Weight::from(coords);
}

Weight parse_dominant(const std::string& text, std::size_t rank, const std::string& flag) {
  Weight w = parse_weight(text, rank, flag);
  if (!w.is_dominant()) throw UsageError(flag + ": " + w.str() + " is not dominant");
  return w;
}

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) a.push_back(w[i]);
  return a;
}

Json to_json(const RootVector& v) {
  Json a = Json::array();
  for (const Rational& c : v.coeffs) {
    if (c.is_integer())
      a.push_back(c.num());
    else
      a.push_back(c.str());
  }
  return a;
}

std::string tsv(const RootVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) s += (i ? "," : "") + v.coeffs[i].str();
  return s;
}

Json header(const RootSystem& rs) {
  Json j;
  j["type"] = std::string(1, static_cast<char>(rs.lie_type()->series));
  j["rank"] = rs.rank();
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json violation_json(const ViolationReport& v) {
  Json j;
  j["result"] = "violation";
  j["condition"] = std::string(to_string(v.condition));
  Json w = Json::object();
  for (const auto& [name, weight] : v.witness) w[name] = to_json(weight);
  j["witness"] = w;
  j["expected"] = v.expected;
  j["found"] = v.found;
  return j;
}

std::string violation_tsv(const ViolationReport& v) {
  std::string s = "VIOLATION\t" + std::string(to_string(v.condition)) + "\t";
  for (std::size_t k = 0; k < v.witness.size(); ++k)
    s += (k ? ";" : "") + v.witness[k].first + "=" + v.witness[k].second.str();
  s += "\texpected=" + std::to_string(v.expected) + "\tfound=" + std::to_string(v.found);
  return s;
}

VerifyMode parse_mode(const std::string& m) {
  if (m == "full") return VerifyMode::Full;
  if (m == "fundamental" || m == "fundamental-only") return VerifyMode::FundamentalOnly;
  throw UsageError("--mode: expected full or fundamental-only");
}

int cmd_char(const RootSystem& rs, const Options& o, std::ostream& out) {
  const Weight lambda = parse_dominant(o.weight, rs.rank(), "--weight");
  const WInvariant row = freudenthal_char(rs, lambda);
  if (o.format == "json") {
    Json j = header(rs);
    j["lambda"] = to_json(lambda);
    Json entries = Json::array();
    for (const Weight& mu : row.keys_by_rho(rs)) entries.push_back(Json{{"mu", to_json(mu)}, {"mult", row.at(mu)}});
    j["entries"] = entries;
    emit(out, j);
  } else {
    for (const Weight& mu : row.keys_by_rho(rs)) out << mu.str() << '\t' << row.at(mu) << '\n';
  }
  return 0;
}

int cmd_dim(const RootSystem& rs, const Options& o, std::ostream& out) {
  const Weight lambda = parse_dominant(o.weight, rs.rank(), "--weight");
  const std::int64_t d = weyl_dimension(rs, lambda);
  if (o.format == "json") {
    Json j = header(rs);
    j["lambda"] = to_json(lambda);
    j["dim"] = d;
    emit(out, j);
  } else {
    out << d << '\n';
  }
  return 0;
}

int cmd_tensor(const RootSystem& rs, const Options& o, std::ostream& out) {
  const Weight a = parse_dominant(o.left, rs.rank(), "--left");
  const Weight b = parse_dominant(o.right, rs.rank(), "--right");
  const Decomposition dec = tensor_coeffs(rs, a, b);
  std::vector<Weight> keys;
  for (const auto& [w, c] : dec)
    if (c != 0) keys.push_back(w);
  std::sort(keys.begin(), keys.end(), RhoDescending{&rs});
  if (o.format == "json") {
    Json j = header(rs);
    j["left"] = to_json(a);
    j["right"] = to_json(b);
    Json comps = Json::array();
    for (const Weight& w : keys) comps.push_back(Json{{"lambda", to_json(w)}, {"mult", dec.at(w)}});
    j["components"] = comps;
    emit(out, j);
  } else {
    for (const Weight& w : keys) out << w.str() << '\t' << dec.at(w) << '\n';
  }
  return 0;
}

int cmd_orbit(const RootSystem& rs, const Options& o, std::ostream& out) {
  const Weight w = parse_weight(o.weight, rs.rank(), "--weight");
  const std::vector<Weight> orbit = weyl_orbit(rs, dominant_rep(rs, w));
  if (o.format == "json") {
    Json j = header(rs);
    j["weight"] = to_json(w);
    Json arr = Json::array();
    for (const Weight& x : orbit) arr.push_back(to_json(x));
    j["orbit"] = arr;
    emit(out, j);
  } else {
    for (const Weight& x : orbit) out << x.str() << '\n';
  }
  return 0;
}

int cmd_reconstruct(const RootSystem& rs, const Options& o, std::ostream& out, std::ostream& err) {
  BoundaryOracle oracle = BoundaryOracle::reference(rs);
  FamilyTable fam;
  try {
    fam = reconstruct_up_to(rs, oracle, o.cutoff);
  } catch (const ReconstructionError& e) {
    err << "reconstruction stopped: " << e.what() << '\n';
    if (o.format == "json") {
      Json j = header(rs);
      j["cutoff"] = o.cutoff;
      j["result"] = "error";
      j["code"] = std::string(to_string(e.code()));
      j["lambda"] = to_json(e.lambda());
      j["mu"] = to_json(e.mu());
      emit(out, j);
    }
    return 1;
  }

  CharacterCache truth(rs);
  std::size_t mismatches = 0;
  Json entries = Json::array();
  std::ostringstream rows;
  std::vector<Weight> lambdas;
  for (const auto& [lambda, row] : fam.rows) lambdas.push_back(lambda);
  std::sort(lambdas.begin(), lambdas.end(), RhoAscending{&rs});
  for (const Weight& lambda : lambdas) {
    const WInvariant& row = fam.rows.at(lambda);
    for (const Weight& mu : saturated_dominants(rs, lambda)) {
      const std::int64_t value = row.at(mu);
      const std::int64_t expected = truth.multiplicity(lambda, mu);
      if (value != expected) ++mismatches;
      auto it = fam.provenance.find({lambda, mu});
      const std::string route = it == fam.provenance.end() ? "leading" : it->second.str();
      entries.push_back(Json{{"lambda", to_json(lambda)},
                             {"mu", to_json(mu)},
                             {"value", value},
                             {"freudenthal", expected},
                             {"route", route}});
      rows << lambda.str() << '\t' << mu.str() << '\t' << value << '\t' << expected << '\t' << route << '\n';
    }
  }
  if (o.format == "json") {
    Json j = header(rs);
    j["cutoff"] = o.cutoff;
    j["result"] = mismatches == 0 ? "match" : "mismatch";
    j["rows"] = fam.rows.size();
    j["reconstructed_entries"] = fam.reconstructed_entries();
    j["oracle_queries"] = oracle.distinct_queries();
    j["entries"] = entries;
    emit(out, j);
  } else {
    out << rows.str();
  }
  if (mismatches != 0) err << mismatches << " entries differ from the Freudenthal table\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_verify(const RootSystem& rs, const Options& o, std::ostream& out) {
  const VerifyMode mode = parse_mode(o.mode);
  const FamilyTable fam = freudenthal_family(rs, verification_coverage(rs, o.cutoff, mode));
  const VerifyOutcome outcome = verify_conditions(rs, fam, o.cutoff, mode);
  if (o.format == "json") {
    emit(out, outcome.pass() ? Json{{"result", "pass"}} : violation_json(*outcome.violation));
  } else {
    out << (outcome.pass() ? std::string("PASS") : violation_tsv(*outcome.violation)) << '\n';
  }
  return outcome.pass() ? 0 : 1;
}

int cmd_supp(const RootSystem& rs, const Options& o, std::ostream& out) {
  if (o.k_bound < 0) throw UsageError("--k-bound must be nonnegative");
  const SuppLemmaReport report = lemma_supp_check(rs, o.k_bound);
  Json instances = Json::array();
  for (const SuppInstance& in : report.instances) {
    if (o.failures_only && in.pass) continue;
    std::string k;
    for (std::size_t m = 0; m < in.k.size(); ++m) k += (m ? "," : "") + std::to_string(in.k[m]);
    if (o.format == "json") {
      instances.push_back(Json{{"item", in.item},
                               {"i", in.index + 1},
                               {"k", in.k},
                               {"alpha_coeffs", to_json(in.difference)},
                               {"support_size", in.support_size},
                               {"pass", in.pass}});
    } else {
      out << in.item << '\t' << in.index + 1 << '\t' << k << '\t' << tsv(in.difference) << '\t' << in.support_size
          << '\t' << (in.pass ? "pass" : "FAIL") << '\n';
    }
  }
  if (o.format == "json") {
    Json j = header(rs);
    j["k_bound"] = o.k_bound;
    j["result"] = report.all_pass() ? "pass" : "violation";
    j["instances_checked"] = report.instances.size();
    j["failures"] = report.failures();
    j["instances"] = instances;
    emit(out, j);
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_identities(const RootSystem& rs, const Options& o, std::ostream& out) {
  const std::vector<IdentityRow> rows = fundamental_identities(rs);
  bool all = true;
  Json arr = Json::array();
  for (const IdentityRow& r : rows) {
    all = all && r.agrees;
    if (o.format == "json") {
      arr.push_back(Json{{"i", r.index + 1},
                         {"alpha_coeffs", to_json(r.computed)},
                         {"stated", r.stated_form},
                         {"agrees", r.agrees}});
    } else {
      out << r.index + 1 << '\t' << tsv(r.computed) << '\t' << r.stated_form << '\t'
          << (r.agrees ? "agrees" : "FLAGGED") << '\n';
    }
  }
  if (o.format == "json") {
    Json j = header(rs);
    j["result"] = all ? "pass" : "flagged";
    j["identities"] = arr;
    emit(out, j);
  }
  return all ? 0 : 1;
}

int cmd_falsify(const RootSystem& rs, const Options& o, std::ostream& out) {
  Perturbation p{parse_dominant(o.lambda, rs.rank(), "--lambda"), parse_dominant(o.mu, rs.rank(), "--mu"), o.delta};
  if (p.delta == 0) throw UsageError("--delta must be nonzero");
  try {
    const ViolationReport v = falsify(rs, p, o.cutoff);
    if (o.format == "json")
      emit(out, violation_json(v));
    else
      out << violation_tsv(v) << '\n';
    return 0;
  } catch (const Error& e) {
    if (e.code() != Errc::NoViolationFound) throw;
    if (o.format == "json")
      emit(out, Json{{"result", "no-violation"}, {"detail", e.detail()}});
    else
      out << "NO-VIOLATION\t" << e.detail() << '\n';
    return 1;
  }
}

bool is_usage(Errc c) {
  switch (c) {
    case Errc::RankOutOfRange:
    case Errc::DimensionMismatch:
    case Errc::NotDominant:
    case Errc::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Characters of simple Lie algebras and a rigidity reconstruction of them", "lierig"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Series: A, B, C or D")->required();
    sub->add_option("--rank", o.rank, "Rank of the root system")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  };

  auto* c_char = app.add_subcommand("char", "Weight multiplicities of an irreducible character.\n"
                                            "TSV columns: mu, multiplicity (dominant mu, descending (mu,rho))");
  common(c_char);
  c_char->add_option("--weight", o.weight, "Highest weight, e.g. 1,0,2")->required();

  auto* c_dim = app.add_subcommand("dim", "Weyl dimension. TSV: a single integer");
  common(c_dim);
  c_dim->add_option("--weight", o.weight, "Highest weight")->required();

  auto* c_tensor = app.add_subcommand("tensor", "Tensor product decomposition.\n"
                                                "TSV columns: highest weight, multiplicity");
  common(c_tensor);
  c_tensor->add_option("--left", o.left, "First highest weight")->required();
  c_tensor->add_option("--right", o.right, "Second highest weight")->required();

  auto* c_orbit = app.add_subcommand("orbit", "Weyl group orbit. TSV: one weight per line, dominant first");
  common(c_orbit);
  c_orbit->add_option("--weight", o.weight, "Any integral weight")->required();

  auto* c_rec = app.add_subcommand("reconstruct", "Rebuild characters from boundary data and tensor duality.\n"
                                                  "TSV columns: lambda, mu, reconstructed, freudenthal, route");
  common(c_rec);
  c_rec->add_option("--cutoff", o.cutoff, "Largest coordinate sum of lambda")->check(CLI::NonNegativeNumber);

  auto* c_ver = app.add_subcommand("verify", "Check conditions (1)-(4) on the true characters.\n"
                                             "TSV: PASS, or VIOLATION, condition, witness, expected, found");
  common(c_ver);
  c_ver->add_option("--cutoff", o.cutoff, "Largest coordinate sum")->check(CLI::NonNegativeNumber);
  c_ver->add_option("--mode", o.mode, "full or fundamental-only");

  auto* c_supp = app.add_subcommand("supp-lemma", "Support bound on omega_i - w0 omega_i - beta.\n"
                                                  "TSV columns: item, i, k, alpha_coeffs, support size, pass");
  common(c_supp);
  c_supp->add_option("--k-bound", o.k_bound, "Largest k_j enumerated");
  c_supp->add_flag("--failures-only", o.failures_only, "List failing instances only");

  auto* c_id = app.add_subcommand("identities", "omega_i - w0 omega_i in root coordinates against the closed forms.\n"
                                                "TSV columns: i, alpha_coeffs, stated form, agrees|FLAGGED");
  common(c_id);

  auto* c_fal = app.add_subcommand("falsify", "Perturb one multiplicity and report the violated condition.\n"
                                              "TSV: VIOLATION line as for verify, or NO-VIOLATION");
  common(c_fal);
  c_fal->add_option("--lambda", o.lambda, "Row to perturb")->required();
  c_fal->add_option("--mu", o.mu, "Entry to perturb")->required();
  c_fal->add_option("--delta", o.delta, "Amount added");
  c_fal->add_option("--cutoff", o.cutoff, "Search range")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
      return 0;
    }
    err << "lierig: " << e.what() << '\n';
    return 2;
  }

  try {
    std::string series = o.type;
    const RootSystem rs = build_root_system({parse_series(series), o.rank});
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "char") return cmd_char(rs, o, out);
    if (name == "dim") return cmd_dim(rs, o, out);
    if (name == "tensor") return cmd_tensor(rs, o, out);
    if (name == "orbit") return cmd_orbit(rs, o, out);
    if (name == "reconstruct") return cmd_reconstruct(rs, o, out, err);
    if (name == "verify") return cmd_verify(rs, o, out);
    if (name == "supp-lemma") return cmd_supp(rs, o, out);
    if (name == "identities") return cmd_identities(rs, o, out);
    return cmd_falsify(rs, o, out);
  } catch (const UsageError& e) {
    err << "lierig: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "lierig: " << e.what() << '\n';
    return is_usage(e.code()) ? 2 : 1;
  }
}

}  // namespace lierig::cli
