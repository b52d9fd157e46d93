#include "relmix/io.hpp"

#include <json.hpp>
#include <sstream>

#include "relmix/classify.hpp"
#include "relmix/interlace.hpp"

namespace relmix {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(where + ": unknown field \"" + it.key() + "\"");
    }
  }
}

int parse_dim(const json& obj, const std::string& where) {
  if (!obj.contains("dim")) throw ParseError(where + ": missing \"dim\"");
  const json& d = obj["dim"];
  if (!d.is_number_integer()) {
    throw ParseError(where + ": \"dim\" must be a decimal integer");
  }
  long long dim = d.get<long long>();
  if (dim < 1 || dim > 16) {
    throw ParseError(where + ": \"dim\" out of range");
  }
  return static_cast<int>(dim);
}

std::vector<IntVector> parse_generators(const json& obj, int dim,
                                        const std::string& where) {
  if (!obj.contains("generators")) {
    throw ParseError(where + ": missing \"generators\"");
  }
  const json& gens = obj["generators"];
  if (!gens.is_array() || gens.empty()) {
    throw ParseError(where + ": \"generators\" must be a nonempty array");
  }
  std::vector<IntVector> out;
  out.reserve(gens.size());
  for (size_t g = 0; g < gens.size(); ++g) {
    const json& row = gens[g];
    std::string field = where + ": generators[" + std::to_string(g) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(field + " must be an array of " + std::to_string(dim) +
                       " integers");
    }
    std::vector<Int> coords;
    coords.reserve(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_number_integer()) {
        throw ParseError(field + "[" + std::to_string(i) +
                         "] must be a decimal integer");
      }
      coords.emplace_back(static_cast<long>(row[i].get<long long>()));
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

json parse_strict(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string generators_json(const OrthantPolyhedron& b) {
  std::ostringstream out;
  out << "[";
  const std::vector<IntVector>& gens = b.generators();
  for (size_t g = 0; g < gens.size(); ++g) {
    if (g) out << ",";
    out << "[";
    for (int i = 0; i < b.dim(); ++i) {
      if (i) out << ",";
      out << gens[g][i];
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace

OrthantPolyhedron parse_polyhedron(const std::string& text) {
  json doc = parse_strict(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  reject_unknown_fields(doc, {"dim", "generators"}, "polyhedron");
  int dim = parse_dim(doc, "polyhedron");
  std::vector<IntVector> gens = parse_generators(doc, dim, "polyhedron");
  return OrthantPolyhedron(dim, std::move(gens));
}

PolyTuple parse_tuple(const std::string& text) {
  json doc = parse_strict(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  reject_unknown_fields(doc, {"dim", "polyhedra"}, "tuple");
  int dim = parse_dim(doc, "tuple");
  if (!doc.contains("polyhedra")) throw ParseError("tuple: missing \"polyhedra\"");
  const json& polys = doc["polyhedra"];
  if (!polys.is_array()) throw ParseError("tuple: \"polyhedra\" must be an array");
  if (static_cast<int>(polys.size()) != dim) {
    throw ParseError("tuple: expected " + std::to_string(dim) +
                     " polyhedra, found " + std::to_string(polys.size()));
  }
  std::vector<OrthantPolyhedron> members;
  members.reserve(polys.size());
  for (size_t k = 0; k < polys.size(); ++k) {
    std::string where = "polyhedra[" + std::to_string(k) + "]";
    const json& body = polys[k];
    if (!body.is_object()) throw ParseError(where + " must be an object");
    reject_unknown_fields(body, {"generators"}, where);
    members.emplace_back(dim, parse_generators(body, dim, where));
  }
  return PolyTuple(std::move(members));
}

std::string serialize_polyhedron(const OrthantPolyhedron& b) {
  std::ostringstream out;
  out << "{\"dim\":" << b.dim() << ",\"generators\":" << generators_json(b)
      << "}";
  return out.str();
}

std::string serialize_tuple(const PolyTuple& t) {
  std::ostringstream out;
  out << "{\"dim\":" << t.dim() << ",\"polyhedra\":[";
  for (int i = 0; i < t.size(); ++i) {
    if (i) out << ",";
    out << "{\"generators\":" << generators_json(t[i]) << "}";
  }
  out << "]}";
  return out.str();
}

std::uint64_t canonical_hash(const PolyTuple& t) {
  std::string text = serialize_tuple(t);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string canonical_hash_hex(const PolyTuple& t) {
  std::uint64_t h = canonical_hash(t);
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string classify_report(const PolyTuple& t) {
  std::ostringstream out;
  Int volume = rmv(t, RmvMode::Both);
  out << "rmv: " << volume << "\n";
  out << "interlaced: " << (is_interlaced(t).interlaced ? "true" : "false")
      << "\n";
  MatchingCertificate cert = volume_one_certificate(t);
  if (cert.permutation) {
    out << "matching:";
    for (int row : *cert.permutation) out << " " << (row + 1);
    out << "\n";
  } else {
    out << "matching: none\n";
    out << "obstruction-rows:";
    for (int r : cert.obstruction->rows) out << " " << (r + 1);
    out << "\n";
    out << "obstruction-cols:";
    for (int c : cert.obstruction->cols) out << " " << (c + 1);
    out << "\n";
  }
  if (volume >= 1) {
    out << "minimal: " << (is_minimal(t, volume).minimal ? "true" : "false")
        << "\n";
  } else {
    out << "minimal: false\n";
  }
  return out.str();
}

}  // namespace relmix
