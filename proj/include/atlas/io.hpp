#ifndef ATLAS_IO_HPP
#define ATLAS_IO_HPP

#include <optional>
#include <string>

// vendored nlohmann/json
#include <json.hpp>

#include "atlas/hjr.hpp"
#include "atlas/invariants.hpp"

namespace atlas {

using Json = nlohmann::json;

// input parse failures (“exit 2” class)
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProblemSpec {
  int rank = 0;
  std::optional<ModulusData> modulus;
  std::optional<ParameterA> a;
  std::optional<ParameterB> b;
  std::optional<PolyCochain> cochain;
  std::optional<std::pair<Rat, Rat>> character;  // (x, y) for the rank-1 record
  std::uint64_t seed = 0;
  int samples = 100;
  int grid_bound = 2;
  bool witness = false;
};

ProblemSpec parse_problem(const Json& j);
ProblemSpec load_problem(const std::string& path);

// slot monomial grammar: "" | factor ("*" factor)*,
// factor = ("e" INT | "c" INT "," INT) ("^" INT)?
SlotMonomial parse_slot(const std::string& s, Flavor f, int rank);
PolyCochain parse_cochain(const Json& j);

Json cochain_json(const PolyCochain& c);
Json class_json(const MultiCharacterClass& cls);
Json coordinates_json(const ClassCoordinates& cc);
Json obstruction_json(const ModularObstruction& ob);
Json rank1_json(const SingleAutoInvariants& inv, const std::optional<Int>& outer);

std::string dump_report(const Json& j);  // deterministic serialization

}  // namespace atlas

#endif
