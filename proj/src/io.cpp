#include "atlas/io.hpp"

#include <fstream>
#include <sstream>

namespace atlas {

namespace {

Rat rat_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected integer or \"num/den\" string");
}

Int int_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError(where + ": expected integer");
}

}  // namespace

SlotMonomial parse_slot(const std::string& s, Flavor f, int rank) {
  SlotMonomial out;
  if (s.empty() || s == "1") return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    int pow = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      pow = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    if (tok.empty()) throw ParseError("empty factor in slot \"" + s + "\"");
    int var;
    try {
      if (tok[0] == 'e') {
        var = var_abelian(std::stoi(tok.substr(1)));
      } else if (tok[0] == 'c') {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw ParseError("central factor needs \"cJ,K\": " + tok);
        int j = std::stoi(tok.substr(1, comma - 1));
        int k = std::stoi(tok.substr(comma + 1));
        var = var_central(j, k);
      } else {
        throw ParseError("bad factor \"" + tok + "\"");
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad factor \"" + tok + "\"");
    }
    if (pow < 1) throw ParseError("bad exponent in \"" + s + "\"");
    for (int t = 0; t < pow; ++t) out = slot_mul(out, {{var, 1}});
  }
  (void)f;
  (void)rank;
  return out;
}

PolyCochain parse_cochain(const Json& j) {
  if (!j.is_object()) throw ParseError("cochain: expected object");
  Flavor f;
  try {
    f = flavor_parse(j.value("flavor", "G"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!j.contains("rank") || !j.contains("arity")) throw ParseError("cochain: rank/arity required");
  int rank = j.at("rank").get<int>();
  int arity = j.at("arity").get<int>();
  if (rank < 1 || arity < 0) throw ParseError("cochain: bad rank/arity");
  PolyCochain c(f, rank, arity);
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      Rat coeff = rat_field(t.at("coeff"), "cochain coeff");
      const auto& slots = t.at("slots");
      if (static_cast<int>(slots.size()) != arity) throw ParseError("cochain: slot count != arity");
      Monomial m;
      for (const auto& s : slots) m.push_back(parse_slot(s.get<std::string>(), f, rank));
      try {
        c.add_term(m, coeff);
      } catch (const std::domain_error& e) {
        throw ParseError(std::string("cochain: ") + e.what());
      }
    }
  }
  return c;
}

ProblemSpec parse_problem(const Json& j) {
  if (!j.is_object()) throw ParseError("problem: expected a JSON object");
  ProblemSpec ps;
  if (j.contains("rank")) ps.rank = j.at("rank").get<int>();

  if (j.contains("p")) {
    std::vector<Int> p, q;
    for (const auto& v : j.at("p")) p.push_back(int_field(v, "p"));
    if (ps.rank == 0) ps.rank = static_cast<int>(p.size());
    if (j.contains("q")) {
      for (const auto& v : j.at("q")) q.push_back(int_field(v, "q"));
    } else {
      q.assign(p.size(), Int(0));
    }
    try {
      ps.modulus = ModulusData(static_cast<int>(p.size()), p, q);
    } catch (const std::domain_error& e) {
      throw ParseError(std::string("modulus: ") + e.what());
    }
  }
  if (ps.rank == 0) throw ParseError("problem: rank is required (directly or via p)");

  if (j.contains("a")) {
    ParameterA a(ps.rank);
    for (const auto& e : j.at("a")) {
      const auto& idx = e.at("ijk");
      if (idx.size() != 3) throw ParseError("a: ijk must have three entries");
      try {
        a.set(idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(),
              rat_field(e.at("value"), "a value"));
      } catch (const std::domain_error& err) {
        throw ParseError(std::string("a: ") + err.what());
      }
    }
    ps.a = a;
  }
  if (j.contains("b")) {
    ParameterB b(ps.rank);
    for (const auto& e : j.at("b")) {
      const auto& idx = e.at("ij");
      if (idx.size() != 2) throw ParseError("b: ij must have two entries");
      try {
        b.set(idx[0].get<int>(), idx[1].get<int>(), rat_field(e.at("value"), "b value"));
      } catch (const std::domain_error& err) {
        throw ParseError(std::string("b: ") + err.what());
      }
    }
    ps.b = b;
  }
  if (j.contains("cochain")) ps.cochain = parse_cochain(j.at("cochain"));
  if (j.contains("character")) {
    const auto& ch = j.at("character");
    ps.character = std::make_pair(rat_field(ch.at("x"), "character x"),
                                  rat_field(ch.at("y"), "character y"));
  }
  if (j.contains("options")) {
    const auto& o = j.at("options");
    ps.seed = o.value("seed", 0ull);
    ps.samples = o.value("samples", 100);
    ps.grid_bound = o.value("grid_bound", 2);
    ps.witness = o.value("witness", false);
  }
  return ps;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

Json cochain_json(const PolyCochain& c) {
  Json terms = Json::array();
  for (const auto& [m, v] : c.terms) {
    Json slots = Json::array();
    for (const auto& s : m) slots.push_back(slot_str(s));
    terms.push_back({{"coeff", rat_str(v)}, {"slots", slots}});
  }
  return Json{{"flavor", flavor_name(c.flavor)},
              {"rank", c.rank},
              {"arity", c.arity},
              {"terms", terms}};
}

Json class_json(const MultiCharacterClass& cls) {
  Json arr = Json::array();
  for (const auto& [key, v] : cls.w) {
    Json idx = Json::array();
    for (int i : key) idx.push_back(i);
    arr.push_back({{"indices", idx}, {"circle", rat_str(v)}});
  }
  return Json{{"arity", cls.arity}, {"components", arr}};
}

namespace {

Json cyclic_json(const CyclicCoord& c) {
  return Json{{"mod", c.mod.get_str()}, {"value", c.value.get_str()}};
}

}  // namespace

Json coordinates_json(const ClassCoordinates& cc) {
  Json a_triples = Json::array();
  for (const auto& [ijk, c] : cc.a_triples)
    a_triples.push_back({{"pattern", {ijk[0], ijk[1], ijk[2]}},
                         {"cyclic", cyclic_json(c.cyc)},
                         {"circle", {rat_str(c.c1), rat_str(c.c2)}}});
  Json a_pairs = Json::array();
  for (const auto& [ik, c] : cc.a_pairs)
    a_pairs.push_back({{"pattern", {ik.first, ik.second}},
                       {"mod2", {rat_str(c.first), rat_str(c.second)}}});
  Json b_diag = Json::array();
  for (const auto& [i, c] : cc.b_diag)
    b_diag.push_back({{"pattern", {i, i}},
                      {"cyclic", cyclic_json(c.cyc)},
                      {"circle", rat_str(c.circ)}});
  Json b_off = Json::array();
  for (const auto& [ij, c] : cc.b_off)
    b_off.push_back({{"pattern", {ij.first, ij.second}},
                     {"d_circle", {{"den", c.zz.D.get_str()}, {"value", rat_str(c.d_circ)}}},
                     {"circle", {rat_str(c.c1), rat_str(c.c2)}}});
  return Json{{"a_triples", a_triples},
              {"a_pairs", a_pairs},
              {"b_diagonal", b_diag},
              {"b_offdiagonal", b_off},
              {"zero", cc.zero()}};
}

Json obstruction_json(const ModularObstruction& ob) {
  Json a = Json::array();
  for (const auto& [ijk, v] : ob.a_sector)
    a.push_back({{"pattern", {ijk[0], ijk[1], ijk[2]}}, {"circle", rat_str(v)}});
  Json bd = Json::array();
  for (const auto& [i, c] : ob.b_diag)
    bd.push_back({{"pattern", {i, i}},
                  {"cyclic", cyclic_json(c.cyc)},
                  {"circle", rat_str(c.circ)}});
  Json bo = Json::array();
  for (const auto& [ij, c] : ob.b_off)
    bo.push_back({{"pattern", {ij.first, ij.second}},
                  {"d_circle", {{"den", c.zz.D.get_str()}, {"value", rat_str(c.d_circ)}}},
                  {"circle", {rat_str(c.c1), rat_str(c.c2)}}});
  Json nu = Json::array();
  for (size_t i = 0; i < ob.nu.size(); ++i)
    nu.push_back({{"generator", static_cast<int>(i + 1)},
                  {"normalized", rat_str(ob.nu[i])},
                  {"times_T", rat_str(ob.nu[i]) + " T"}});
  return Json{{"a_sector", a},
              {"b_diagonal", bd},
              {"b_offdiagonal", bo},
              {"nu", nu},
              {"zero", ob.zero()}};
}

Json rank1_json(const SingleAutoInvariants& inv, const std::optional<Int>& outer) {
  Json j{{"p1", inv.p1.get_str()},
         {"q1", inv.q1.get_str()},
         {"D1", inv.D1.get_str()},
         {"bezout", {{"u1", inv.u1.get_str()}, {"v1", inv.v1.get_str()}}},
         {"basis",
          {{"w0", {inv.w0[0].get_str(), inv.w0[1].get_str()}},
           {"w1", {inv.w1[0].get_str(), inv.w1[1].get_str()}}}},
         {"Qm", "Z + Z_" + inv.D1.get_str()},
         {"Lambda", "T + Z_" + inv.D1.get_str()}};
  if (outer) j["outer_period"] = outer->get_str();
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace atlas
