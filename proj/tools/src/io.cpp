#include "macdual_cli/io.hpp"

#include <fstream>
#include <sstream>

#include "macdual/error.hpp"
#include "macdual/parse.hpp"

namespace macdual::cli {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(ErrorKind::Parse, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

Field parse_field(const std::string& token, std::size_t line, std::size_t col) {
  if (token == "Q") return Field::rationals();
  std::string digits;
  if (token.size() > 1 && token[0] == 'F') {
    digits = token.substr(1);
    if (digits.size() > 2 && digits.front() == '<' && digits.back() == '>') {
      digits = digits.substr(1, digits.size() - 2);
    }
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 10) {
    fail(line, col, "expected 'Q' or 'F<p>', got '" + token + "'");
  }
  try {
    return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  } catch (const Error& e) {
    fail(line, col, e.what());
  }
}

MonomialOrder make_order(OrderKind kind, std::size_t n) {
  return kind == OrderKind::Lex ? MonomialOrder::lex(n) : MonomialOrder::grevlex(n);
}

std::string order_name(const MonomialOrder& order) {
  switch (order.kind()) {
    case OrderKind::GradedReverseLex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::BlockElimination: return "block";
  }
  return "grevlex";
}

RingPtr build_ring(Field field, const std::vector<std::string>& vars, RingMode mode,
                   const std::vector<std::string>& zvars, OrderKind order) {
  std::vector<std::size_t> z;
  for (const auto& name : zvars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw Error(ErrorKind::Parse, "unknown z-variable '" + name + "'");
    z.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  return std::make_shared<const Ring>(field, vars, make_order(order, vars.size()), mode, z);
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text, const RingOverrides& overrides) {
  std::optional<Field> field;
  std::optional<RingMode> mode;
  std::vector<std::string> vars;
  std::vector<std::string> zvars;
  std::size_t zvars_line = 0;
  bool in_ideal = false;
  RingPtr ring;
  std::vector<Polynomial> gens;

  auto ensure_ring = [&](std::size_t line) {
    if (ring) return;
    if (!mode) fail(line, 1, "missing 'ring' line before the ideal block");
    try {
      ring = build_ring(overrides.field ? *overrides.field : field.value_or(Field::rationals()),
                        vars, *mode, zvars, overrides.order.value_or(OrderKind::GradedReverseLex));
    } catch (const Error& e) {
      fail(zvars_line ? zvars_line : line, 1, e.what());
    }
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto indent = raw.find_first_not_of(" \t\r");
    const std::string line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t col = indent + 1;

    if (in_ideal) {
      try {
        gens.push_back(parse_polynomial(ring, line, Polynomial::Notation::Ring, lineno));
      } catch (const Error& e) {
        // shift the column reported by the expression parser by the indentation
        std::string msg = e.what();
        const auto c1 = msg.find(':');
        const auto c2 = msg.find(':', c1 + 1);
        const auto inner = std::stoul(msg.substr(c1 + 1, c2 - c1 - 1));
        fail(lineno, inner + indent, trim(msg.substr(c2 + 1)));
      }
      if (end == text.size()) break;
      continue;
    }

    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    if (keyword == "field") {
      if (field) fail(lineno, col, "duplicate 'field' line");
      field = parse_field(rest, lineno, col + 6);
    } else if (keyword == "ring") {
      if (mode) fail(lineno, col, "duplicate 'ring' line");
      std::istringstream rw(rest);
      std::string m;
      std::string kw;
      rw >> m >> kw;
      if (m == "local") {
        mode = RingMode::Local;
      } else if (m == "graded") {
        mode = RingMode::Graded;
      } else {
        fail(lineno, col + 5, "expected 'local' or 'graded', got '" + m + "'");
      }
      if (kw != "vars") fail(lineno, col, "expected 'vars' after the ring mode");
      std::string list;
      std::getline(rw, list);
      vars = split_csv(list);
      if (vars.empty()) fail(lineno, col, "ring has no variables");
    } else if (keyword == "zvars") {
      if (zvars_line) fail(lineno, col, "duplicate 'zvars' line");
      zvars = split_csv(rest);
      zvars_line = lineno;
      for (const auto& z : zvars) {
        if (std::find(vars.begin(), vars.end(), z) == vars.end()) {
          fail(lineno, col + line.find(z, 5), "unknown z-variable '" + z + "'");
        }
      }
    } else if (keyword == "ideal:" || (keyword == "ideal" && rest == ":")) {
      ensure_ring(lineno);
      in_ideal = true;
    } else {
      fail(lineno, col, "unexpected '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  if (!in_ideal) fail(lineno, 1, "missing 'ideal:' block");
  return {ring, Ideal(ring, std::move(gens))};
}

std::string print_ideal_file(const IdealFile& file) {
  const auto& ring = *file.ring;
  std::ostringstream os;
  os << "field " << ring.field().to_string() << "\n";
  os << "ring " << (ring.is_local() ? "local" : "graded") << " vars ";
  for (std::size_t i = 0; i < ring.size(); ++i) os << (i ? "," : "") << ring.name(i);
  os << "\n";
  if (!ring.z_block().empty()) {
    os << "zvars ";
    for (std::size_t i = 0; i < ring.z_block().size(); ++i) {
      os << (i ? "," : "") << ring.name(ring.z_block()[i]);
    }
    os << "\n";
  }
  os << "ideal:\n";
  for (const auto& g : file.ideal.generators()) os << g.to_string() << "\n";
  return os.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Usage, "cannot write '" + path + "'");
  out << text;
}

nlohmann::json ring_to_json(const Ring& ring) {
  nlohmann::json z = nlohmann::json::array();
  for (auto i : ring.z_block()) z.push_back(ring.name(i));
  return {{"field", ring.field().to_string()},
          {"mode", ring.is_local() ? "local" : "graded"},
          {"order", order_name(ring.order())},
          {"vars", ring.names()},
          {"zvars", z}};
}

nlohmann::json limit_system_to_json(const LimitInverseSystem& system) {
  nlohmann::json family = nlohmann::json::array();
  for (const auto& [m, h] : system.family) {
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& f : h) hs.push_back(f.to_string(Polynomial::Notation::Dual));
    family.push_back({{"m", m}, {"H", hs}});
  }
  return {{"format", "macdual-limit-system"},
          {"version", 1},
          {"ring", ring_to_json(*system.ring)},
          {"d", system.d},
          {"r", system.r},
          {"s", system.s},
          {"bound", system.bound},
          {"family", family}};
}

LimitInverseSystem limit_system_from_json(const nlohmann::json& j, bool validate,
                                          const RingOverrides& overrides) {
  LimitInverseSystem sys;
  try {
    if (j.value("format", "") != "macdual-limit-system") {
      throw Error(ErrorKind::Parse, "not a limit system file");
    }
    const auto& r = j.at("ring");
    const std::string mode = r.at("mode").get<std::string>();
    if (mode != "local" && mode != "graded") throw Error(ErrorKind::Parse, "bad ring mode");
    OrderKind order = OrderKind::GradedReverseLex;
    if (r.value("order", "grevlex") == "lex") order = OrderKind::Lex;
    if (overrides.order) order = *overrides.order;
    Field field = parse_field(r.at("field").get<std::string>(), 0, 0);
    if (overrides.field) field = *overrides.field;
    sys.ring = build_ring(field, r.at("vars").get<std::vector<std::string>>(),
                          mode == "local" ? RingMode::Local : RingMode::Graded,
                          r.at("zvars").get<std::vector<std::string>>(), order);
    sys.d = j.at("d").get<std::size_t>();
    sys.r = j.at("r").get<std::size_t>();
    sys.s = j.at("s").get<unsigned>();
    sys.bound = j.at("bound").get<unsigned>();
    if (sys.d != sys.ring->dimension()) {
      throw Error(ErrorKind::Parse, "header d = " + std::to_string(sys.d) + " but " +
                                        std::to_string(sys.ring->dimension()) + " z-variables");
    }
    for (const auto& entry : j.at("family")) {
      const auto m = entry.at("m").get<MultiIndex>();
      if (m.size() != sys.d) throw Error(ErrorKind::Parse, "index " + to_string(m) + " has wrong length");
      std::vector<Polynomial> h;
      for (const auto& s : entry.at("H")) {
        h.push_back(parse_polynomial(sys.ring, s.get<std::string>(), Polynomial::Notation::Dual));
      }
      if (!sys.family.emplace(m, std::move(h)).second) {
        throw Error(ErrorKind::Parse, "duplicate index " + to_string(m));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("limit system file: ") + e.what());
  }
  if (validate) {
    const auto report = verify_lis(sys);
    for (const auto& c : report.conditions) {
      if (!c.passed) {
        throw Error(ErrorKind::Inconsistency,
                    "limit system fails condition '" + c.name + "': " + c.witnesses.front());
      }
    }
  }
  return sys;
}

}  // namespace macdual::cli
