#include "macdual_cli/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "macdual/duality.hpp"
#include "macdual/error.hpp"
#include "macdual/limit_system.hpp"
#include "macdual/parse.hpp"
#include "macdual/rees.hpp"
#include "macdual_cli/io.hpp"

namespace macdual::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string output;
  std::string field;
  std::string order;
  std::string m;
  unsigned mmax = 3;
  unsigned degcap = 10;
  std::uint64_t seed = 0;
  bool trust_regular = false;
  bool json = false;
  unsigned jobs = 1;
  std::string poly;
  std::string g;
  unsigned l = 4;
  std::string gens;
};

struct Output {
  std::string command;
  json inputs = json::object();
  RingPtr ring;
  std::vector<std::string> results;
  json diagnostics = json::object();
  /// text mode lines; results are printed when empty
  std::vector<std::string> text;
  int status = 0;
};

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::Usage, msg); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
    usage("bad " + what + " '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

RingOverrides overrides_of(const Options& o) {
  RingOverrides r;
  if (!o.field.empty()) {
    if (o.field == "q" || o.field == "Q") {
      r.field = Field::rationals();
    } else if (o.field.rfind("fp:", 0) == 0) {
      r.field = Field::prime(parse_unsigned(o.field.substr(3), "prime"));
    } else {
      usage("--field expects q or fp:<p>");
    }
  }
  if (!o.order.empty()) {
    if (o.order == "grevlex") {
      r.order = OrderKind::GradedReverseLex;
    } else if (o.order == "lex") {
      r.order = OrderKind::Lex;
    } else {
      usage("--order expects grevlex or lex");
    }
  }
  return r;
}

std::string render(const std::vector<unsigned>& v) { return to_string(MultiIndex(v)); }

std::string render(const Exponent& e) {
  std::vector<unsigned> v(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
  return render(v);
}

IdealFile load_ideal(const Options& o, Output& out) {
  if (o.input.empty()) usage("missing -i <ideal file>");
  auto file = parse_ideal_file(read_text(o.input), overrides_of(o));
  out.inputs["file"] = o.input;
  out.ring = file.ring;
  return file;
}

LimitInverseSystem load_system(const Options& o, Output& out, bool validate) {
  if (o.input.empty()) usage("missing -i <limit system file>");
  json j;
  try {
    j = json::parse(read_text(o.input));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("limit system file: ") + e.what());
  }
  auto sys = limit_system_from_json(j, validate, overrides_of(o));
  out.inputs["file"] = o.input;
  out.ring = sys.ring;
  return sys;
}

/// I_m when --m is given, else I itself; both made Artinian.
Ideal target_ideal(const Options& o, const IdealFile& file, Output& out) {
  const auto d = file.ring->dimension();
  if (o.m.empty()) {
    if (d > 0) {
      MultiIndex ones(d, 1);
      out.inputs["m"] = ones;
      return artinian_reduction(file.ideal, ones);
    }
    return make_artinian(file.ideal);
  }
  MultiIndex m;
  for (const auto& part : split(o.m, ',')) m.push_back(parse_unsigned(part, "--m entry"));
  if (m.size() != d) {
    usage("--m has " + std::to_string(m.size()) + " entries but the ring has " +
          std::to_string(d) + " z-variables");
  }
  out.inputs["m"] = m;
  return artinian_reduction(file.ideal, m);
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps, Polynomial::Notation n) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(n));
  return out;
}

void cmd_perp(const Options& o, Output& out) {
  const auto file = load_ideal(o, out);
  const auto ideal = target_ideal(o, file, out);
  const auto w = perp_ideal(ideal);
  out.results = strings(w.basis(), Polynomial::Notation::Dual);
  out.diagnostics["dimension"] = w.dimension();
  out.diagnostics["max_degree"] = w.max_degree();
}

void cmd_socle(const Options& o, Output& out) {
  const auto file = load_ideal(o, out);
  const auto ideal = target_ideal(o, file, out);
  out.results = strings(socle_basis(ideal), Polynomial::Notation::Ring);
  out.diagnostics["type"] = out.results.size();
}

void cmd_hilbert(const Options& o, Output& out) {
  const auto file = load_ideal(o, out);
  const auto ideal = target_ideal(o, file, out);
  const auto h = hilbert_data(ideal);
  for (auto v : h.values) out.results.push_back(std::to_string(v));
  out.diagnostics["length"] = h.length;
  out.diagnostics["socle_degree"] = h.socle_degree();
  out.diagnostics["type"] = socle_basis(ideal).size();
  std::string line = "(";
  for (std::size_t i = 0; i < h.values.size(); ++i) line += (i ? "," : "") + std::to_string(h.values[i]);
  out.text.push_back(line + ")");
}

void cmd_reduce(const Options& o, Output& out) {
  const auto file = load_ideal(o, out);
  const Ideal ideal = (o.m.empty() && file.ring->dimension() > 0) ? file.ideal
                                                                  : target_ideal(o, file, out);
  if (!o.poly.empty()) {
    out.inputs["poly"] = o.poly;
    const auto p = parse_polynomial(file.ring, o.poly);
    out.results.push_back(normal_form(p, ideal).to_string());
    out.diagnostics["member"] = contains(ideal, p);
  } else {
    out.results = strings(ideal.basis(), Polynomial::Notation::Ring);
    out.diagnostics["basis_size"] = ideal.basis().size();
  }
}

void cmd_limit(const Options& o, Output& out) {
  const auto file = load_ideal(o, out);
  if (o.mmax == 0) usage("--mmax must be positive");
  out.inputs["mmax"] = o.mmax;
  out.inputs["trust_regular"] = o.trust_regular;
  const auto tower = dual_tower(file.ideal, o.mmax, {o.trust_regular, std::max(1u, o.jobs)});
  const auto sys = section_lift(file.ring, tower, o.mmax);
  const auto j = limit_system_to_json(sys);
  for (const auto& [m, h] : sys.family) {
    auto hs = strings(h, Polynomial::Notation::Dual);
    std::string line = "H" + to_string(m) + " =";
    for (std::size_t i = 0; i < hs.size(); ++i) line += (i ? ", " : " ") + hs[i];
    out.text.push_back(line);
    out.results.insert(out.results.end(), hs.begin(), hs.end());
  }
  out.diagnostics["d"] = sys.d;
  out.diagnostics["r"] = sys.r;
  out.diagnostics["s"] = sys.s;
  out.diagnostics["family"] = j["family"];
  if (!o.output.empty()) {
    write_text(o.output, j.dump(2) + "\n");
    out.diagnostics["written"] = o.output;
  }
}

void cmd_reconstruct(const Options& o, Output& out) {
  const auto sys = load_system(o, out, true);
  const auto rec = reconstruct(sys);
  out.results = strings(rec.ideal.generators(), Polynomial::Notation::Ring);
  out.diagnostics["stage"] = rec.stage;
  out.diagnostics["stable"] = rec.stable;
  if (!rec.stable) out.status = 1;
  if (!o.output.empty()) {
    write_text(o.output, print_ideal_file({sys.ring, rec.ideal}));
    out.diagnostics["written"] = o.output;
  }
}

void cmd_verify(const Options& o, Output& out) {
  const auto sys = load_system(o, out, false);
  const auto report = verify_lis(sys);
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    std::string line = c.name + ": " + (c.passed ? "pass" : "FAIL");
    if (!c.passed && !c.witnesses.empty()) line += " (" + c.witnesses.front() + ")";
    out.results.push_back(line);
    conditions.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
  }
  out.diagnostics["conditions"] = conditions;
  out.diagnostics["passed"] = report.passed();
  if (!report.passed()) out.status = 1;
}

void cmd_rees(const Options& o, Output& out) {
  const auto file = load_ideal(o, out);
  std::vector<Polynomial> g;
  if (o.g.empty()) {
    for (auto i : file.ring->z_block()) g.push_back(Polynomial::variable(file.ring, i));
    if (g.empty()) usage("no --g given and the file declares no zvars");
  } else {
    out.inputs["g"] = o.g;
    for (const auto& part : split(o.g, ',')) g.push_back(parse_polynomial(file.ring, part));
  }
  out.inputs["l"] = o.l;
  out.inputs["degcap"] = o.degcap;
  bool ok = true;
  for (unsigned l = 0; l <= o.l; ++l) {
    const auto r = rees_dimension_check(g, file.ideal, l, o.degcap);
    if (!r.regular || !r.checked) {
      out.diagnostics["regular"] = r.regular;
      out.diagnostics["note"] = r.note;
      out.status = 1;
      return;
    }
    out.results.push_back("l=" + std::to_string(l) + ": " + std::to_string(r.graded_piece) +
                          (r.passed ? " = " : " != ") + std::to_string(r.polynomial_piece));
    out.diagnostics["note"] = r.note;
    ok = ok && r.passed;
  }
  out.diagnostics["regular"] = true;
  out.diagnostics["passed"] = ok;
  if (!ok) out.status = 1;
}

void cmd_monoid_socle(const Options& o, Output& out) {
  if (o.gens.empty()) usage("missing --gens");
  out.inputs["gens"] = o.gens;
  std::vector<Exponent> gens;
  std::size_t t = 0;
  for (const auto& part : split(o.gens, ';')) {
    const auto entries = split(part, ',');
    if (gens.empty()) t = entries.size();
    if (entries.size() != t) usage("monoid generators of different lengths");
    Exponent e(t);
    for (std::size_t i = 0; i < t; ++i) e.set(i, parse_unsigned(entries[i], "exponent"));
    gens.push_back(e);
  }
  const MonoidIdeal monoid(t, gens);
  for (const auto& n : monoid_socle(monoid)) out.results.push_back(render(n));
  out.diagnostics["size"] = out.results.size();
}

void emit(const Output& o, bool as_json, std::ostream& os) {
  if (as_json) {
    json j = {{"command", o.command},
              {"inputs", o.inputs},
              {"ring", o.ring ? ring_to_json(*o.ring) : json(nullptr)},
              {"results", o.results},
              {"diagnostics", o.diagnostics}};
    os << j.dump(2) << "\n";
    return;
  }
  for (const auto& line : o.text.empty() ? o.results : o.text) os << line << "\n";
  for (const auto& [k, v] : o.diagnostics.items()) {
    if (k == "family" || k == "conditions") continue;
    os << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse systems of Artinian and Cohen-Macaulay quotients", "macdual"};
  app.require_subcommand(1);
  Options o;

  auto ring_flags = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "q or fp:<p>");
    sub->add_option("--order", o.order, "grevlex or lex");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto ideal_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", o.input, "ideal file")->required();
    ring_flags(sub);
    return sub;
  };

  auto* perp = ideal_cmd("perp", "inverse system of I_m");
  perp->add_option("--m", o.m, "index m, comma separated");
  auto* socle = ideal_cmd("socle", "socle of P/I_m");
  socle->add_option("--m", o.m, "index m, comma separated");
  auto* hilbert = ideal_cmd("hilbert", "Hilbert function of P/I_m");
  hilbert->add_option("--m", o.m, "index m, comma separated");
  auto* reduce = ideal_cmd("reduce", "reduced basis or normal form");
  reduce->add_option("--m", o.m, "index m, comma separated");
  reduce->add_option("--poly", o.poly, "polynomial to reduce");
  auto* limit = ideal_cmd("limit", "limit inverse system up to --mmax");
  limit->add_option("--mmax", o.mmax, "box bound B");
  limit->add_flag("--trust-regular", o.trust_regular, "skip the regular sequence check");
  limit->add_option("--jobs", o.jobs, "worker threads for the tower");
  limit->add_option("-o,--output", o.output, "write the limit system file");
  auto* recon = app.add_subcommand("reconstruct", "ideal from a limit system file");
  recon->add_option("-i,--input", o.input, "limit system file")->required();
  recon->add_option("-o,--output", o.output, "write the ideal file");
  ring_flags(recon);
  auto* verify = app.add_subcommand("verify", "check a limit system file");
  verify->add_option("-i,--input", o.input, "limit system file")->required();
  ring_flags(verify);
  auto* rees = ideal_cmd("rees-check", "dimension check of the Rees map");
  rees->add_option("--g", o.g, "sequence, comma separated (default: zvars)");
  rees->add_option("--l", o.l, "largest degree l");
  rees->add_option("--degcap", o.degcap, "degree cap for graded slices");
  auto* monoid = app.add_subcommand("monoid-socle", "socle of a monoid ideal in N^t");
  monoid->add_option("--gens", o.gens, "generators like 2,0;0,2")->required();
  monoid->add_flag("--json", o.json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output result;
  try {
    auto* sub = app.get_subcommands().front();
    result.command = sub->get_name();
    if (sub->get_name() != "monoid-socle") {
      if (!o.field.empty()) result.inputs["field"] = o.field;
      if (!o.order.empty()) result.inputs["order"] = o.order;
      result.inputs["seed"] = o.seed;
    }
    if (sub == perp) cmd_perp(o, result);
    if (sub == socle) cmd_socle(o, result);
    if (sub == hilbert) cmd_hilbert(o, result);
    if (sub == reduce) cmd_reduce(o, result);
    if (sub == limit) cmd_limit(o, result);
    if (sub == recon) cmd_reconstruct(o, result);
    if (sub == verify) cmd_verify(o, result);
    if (sub == rees) cmd_rees(o, result);
    if (sub == monoid) cmd_monoid_socle(o, result);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_mathematical() ? 1 : 2;
  }
  emit(result, o.json, out);
  return result.status;
}

}  // namespace macdual::cli
