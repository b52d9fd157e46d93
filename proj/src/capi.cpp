#include "relmix.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "relmix/classify.hpp"
#include "relmix/interlace.hpp"
#include "relmix/io.hpp"
#include "relmix/render.hpp"
#include "relmix/verify.hpp"

using namespace relmix;

struct relmix_poly {
  OrthantPolyhedron value;
};

struct relmix_tuple {
  PolyTuple value;
};

struct relmix_classes {
  std::vector<TupleClass> classes;
  std::vector<Int> volumes;
};

namespace {

thread_local std::string g_last_error;

relmix_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Input:
      return RELMIX_ERR_INPUT;
    case ErrorKind::SearchTooLarge:
      return RELMIX_ERR_SEARCH_TOO_LARGE;
    case ErrorKind::OracleMismatch:
      return RELMIX_ERR_ORACLE_MISMATCH;
    case ErrorKind::Consistency:
      return RELMIX_ERR_PROPERTY_VIOLATION;
  }
  return RELMIX_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
relmix_status guarded(Fn&& fn) {
  try {
    fn();
    return RELMIX_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RELMIX_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return RELMIX_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

RELMIX_API const char* relmix_version(void) { return "0.1.0"; }

RELMIX_API const char* relmix_last_error(void) { return g_last_error.c_str(); }

RELMIX_API void relmix_string_free(char* s) { std::free(s); }

RELMIX_API relmix_status relmix_poly_parse(const char* json_text,
                                           relmix_poly** out) {
  if (!json_text || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new relmix_poly{parse_polyhedron(json_text)}; });
}

RELMIX_API relmix_status relmix_poly_create(int dim, const long long* coords,
                                            size_t count, relmix_poly** out) {
  if (!coords || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::vector<IntVector> gens;
    gens.reserve(count);
    for (size_t g = 0; g < count; ++g) {
      std::vector<Int> row(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        row[static_cast<size_t>(i)] =
            Int(static_cast<long>(coords[g * static_cast<size_t>(dim) +
                                         static_cast<size_t>(i)]));
      }
      gens.emplace_back(std::move(row));
    }
    *out = new relmix_poly{OrthantPolyhedron(dim, std::move(gens))};
  });
}

RELMIX_API void relmix_poly_free(relmix_poly* p) { delete p; }

RELMIX_API int relmix_poly_dim(const relmix_poly* p) {
  return p ? p->value.dim() : 0;
}

RELMIX_API relmix_status relmix_poly_to_json(const relmix_poly* p, char** out) {
  if (!p || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(serialize_polyhedron(p->value)); });
}

RELMIX_API relmix_status relmix_poly_complement_volume(const relmix_poly* p,
                                                       char** out) {
  if (!p || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(complement_volume(p->value).get_str()); });
}

RELMIX_API relmix_status relmix_tuple_parse(const char* json_text,
                                            relmix_tuple** out) {
  if (!json_text || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new relmix_tuple{parse_tuple(json_text)}; });
}

RELMIX_API void relmix_tuple_free(relmix_tuple* t) { delete t; }

RELMIX_API int relmix_tuple_dim(const relmix_tuple* t) {
  return t ? t->value.dim() : 0;
}

RELMIX_API relmix_status relmix_tuple_to_json(const relmix_tuple* t,
                                              char** out) {
  if (!t || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(serialize_tuple(t->value)); });
}

RELMIX_API relmix_status relmix_tuple_rmv(const relmix_tuple* t,
                                          relmix_method method, char** out) {
  if (!t || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] {
    RmvMode mode = RmvMode::Both;
    if (method == RELMIX_METHOD_IE) mode = RmvMode::InclusionExclusion;
    if (method == RELMIX_METHOD_SUPPORT) mode = RmvMode::Support;
    *out = dup_string(rmv(t->value, mode).get_str());
  });
}

RELMIX_API relmix_status relmix_tuple_classify(const relmix_tuple* t,
                                               char** out) {
  if (!t || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(classify_report(t->value)); });
}

RELMIX_API relmix_status relmix_enumerate_minimal(int dim, int volume,
                                                  uint64_t cap, int jobs,
                                                  relmix_classes** out) {
  if (!out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] {
    EnumerationOptions options;
    if (cap > 0) options.cap = cap;
    options.jobs = jobs > 0 ? jobs : 1;
    auto classes = enumerate_minimal(dim, volume, options);
    auto* result = new relmix_classes;
    result->classes = std::move(classes);
    result->volumes.reserve(result->classes.size());
    for (const TupleClass& c : result->classes) {
      result->volumes.push_back(rmv(c.representative, RmvMode::InclusionExclusion));
    }
    *out = result;
  });
}

RELMIX_API void relmix_classes_free(relmix_classes* c) { delete c; }

RELMIX_API size_t relmix_classes_count(const relmix_classes* c) {
  return c ? c->classes.size() : 0;
}

RELMIX_API relmix_status relmix_classes_tuple_json(const relmix_classes* c,
                                                   size_t index, char** out) {
  if (!c || !out) return RELMIX_ERR_NULL_ARGUMENT;
  if (index >= c->classes.size()) {
    g_last_error = "class index out of range";
    return RELMIX_ERR_INPUT;
  }
  return guarded([&] {
    *out = dup_string(serialize_tuple(c->classes[index].representative));
  });
}

RELMIX_API relmix_status relmix_classes_hash(const relmix_classes* c,
                                             size_t index, char** out) {
  if (!c || !out) return RELMIX_ERR_NULL_ARGUMENT;
  if (index >= c->classes.size()) {
    g_last_error = "class index out of range";
    return RELMIX_ERR_INPUT;
  }
  return guarded([&] {
    *out = dup_string(canonical_hash_hex(c->classes[index].representative));
  });
}

RELMIX_API relmix_status relmix_classes_rmv(const relmix_classes* c,
                                            size_t index, char** out) {
  if (!c || !out) return RELMIX_ERR_NULL_ARGUMENT;
  if (index >= c->classes.size()) {
    g_last_error = "class index out of range";
    return RELMIX_ERR_INPUT;
  }
  return guarded([&] { *out = dup_string(c->volumes[index].get_str()); });
}

RELMIX_API relmix_status relmix_verify(const char* suite, int dim, int bound,
                                       char** out_report) {
  if (!suite || !out_report) return RELMIX_ERR_NULL_ARGUMENT;
  SuiteReport report;
  relmix_status status = guarded([&] {
    std::string name(suite);
    if (name == "v1") {
      report = run_suite_v1(dim, bound);
    } else if (name == "int") {
      report = run_suite_int(dim, bound);
    } else if (name == "lemma3") {
      report = run_suite_lemma3(dim, bound);
    } else if (name == "stability") {
      report = run_suite_stability(dim, bound);
    } else {
      throw Error(ErrorKind::Input, "unknown suite \"" + name + "\"");
    }
    *out_report = dup_string(report.str());
  });
  if (status != RELMIX_OK) return status;
  if (!report.ok()) {
    g_last_error = "suite reported " + std::to_string(report.failures) +
                   " failure(s)";
    return RELMIX_ERR_PROPERTY_VIOLATION;
  }
  return RELMIX_OK;
}

RELMIX_API relmix_status relmix_render_svg(const relmix_poly* const* polys,
                                           size_t count, char** out) {
  if (!polys || !out) return RELMIX_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::vector<OrthantPolyhedron> values;
    values.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!polys[i]) throw Error(ErrorKind::Input, "null polyhedron handle");
      values.push_back(polys[i]->value);
    }
    *out = dup_string(render_svg(values));
  });
}

} /* extern "C" */
