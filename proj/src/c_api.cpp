#include "starfact/starfact.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "starfact/bijection.hpp"
#include "starfact/noncrossing.hpp"
#include "starfact/oracles.hpp"
#include "starfact/permutation.hpp"
#include "starfact/poset.hpp"
#include "starfact/star.hpp"

struct sf_perm {
  starfact::Permutation value;
};

struct sf_factorization {
  starfact::StarFactorization value;
};

struct sf_poset {
  starfact::HasseDiagram value;
};

namespace {

thread_local std::string last_error;

sf_status status_of(starfact::ErrorKind kind) {
  using starfact::ErrorKind;
  switch (kind) {
    case ErrorKind::kParse: return SF_ERR_PARSE;
    case ErrorKind::kInvalidArgument: return SF_ERR_INVALID_ARGUMENT;
    case ErrorKind::kDomain: return SF_ERR_DOMAIN;
    case ErrorKind::kBoundExceeded: return SF_ERR_BOUND;
    case ErrorKind::kDefect: return SF_ERR_DEFECT;
  }
  return SF_ERR_INTERNAL;
}

template <typename F>
sf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SF_OK;
  } catch (const starfact::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SF_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) starfact::fail(starfact::ErrorKind::kInvalidArgument, std::string("null ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  require(out, "output pointer");
  *out = copy_string(s);
}

void emit(sf_text_callback visit, void* user, const std::string& line, bool& keep_going) {
  if (keep_going && visit) keep_going = visit(line.c_str(), user) != 0;
}

}  // namespace

extern "C" {

const char* sf_last_error(void) { return last_error.c_str(); }

const char* sf_status_name(sf_status status) {
  switch (status) {
    case SF_OK: return "ok";
    case SF_ERR_PARSE: return "parse error";
    case SF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SF_ERR_DOMAIN: return "domain error";
    case SF_ERR_BOUND: return "bound exceeded";
    case SF_ERR_DEFECT: return "defect";
    case SF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sf_string_free(char* text) { std::free(text); }

sf_status sf_perm_parse(const char* text, int n, sf_perm** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    std::optional<int> size;
    if (n > 0) size = n;
    *out = new sf_perm{starfact::parse_permutation(text, size)};
  });
}

void sf_perm_free(sf_perm* perm) { delete perm; }

int sf_perm_size(const sf_perm* perm) { return perm ? perm->value.size() : 0; }

int sf_perm_cycle_count(const sf_perm* perm) { return perm ? perm->value.cycle_count() : 0; }

sf_status sf_perm_format(const sf_perm* perm, char** out) {
  return guarded([&] {
    require(perm, "permutation");
    put(out, perm->value.to_string());
  });
}

sf_status sf_factorization_parse(const char* text, int n, int pivot_if_empty, sf_factorization** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new sf_factorization{starfact::parse_factorization(text, n, pivot_if_empty)};
  });
}

void sf_factorization_free(sf_factorization* delta) { delete delta; }

int sf_factorization_pivot(const sf_factorization* delta) { return delta ? delta->value.pivot() : 0; }

size_t sf_factorization_length(const sf_factorization* delta) { return delta ? delta->value.length() : 0; }

sf_status sf_factorization_format(const sf_factorization* delta, char** out) {
  return guarded([&] {
    require(delta, "factorization");
    put(out, delta->value.to_string());
  });
}

sf_status sf_count_factorizations(const sf_perm* perm, char** decimal) {
  return guarded([&] {
    require(perm, "permutation");
    put(decimal, starfact::count_factorizations(perm->value).str());
  });
}

sf_status sf_enumerate_factorizations(const sf_perm* perm, int pivot, sf_text_callback visit, void* user) {
  return guarded([&] {
    require(perm, "permutation");
    starfact::for_each_factorization(perm->value, pivot, [&](const starfact::StarFactorization& delta) {
      return !visit || visit(delta.to_string().c_str(), user) != 0;
    });
  });
}

sf_status sf_verify(const sf_factorization* delta, const sf_perm* perm, int* valid) {
  return guarded([&] {
    require(delta, "factorization");
    require(perm, "permutation");
    require(valid, "output pointer");
    *valid = starfact::verify_star_factorization(delta->value, perm->value) ? 1 : 0;
  });
}

sf_status sf_cycle_word(const sf_factorization* delta, const sf_perm* perm, char** word) {
  return guarded([&] {
    require(delta, "factorization");
    require(perm, "permutation");
    put(word, starfact::format_word(starfact::cycle_word(delta->value, perm->value)));
  });
}

sf_status sf_preimage(const sf_factorization* delta, const sf_perm* perm, char** preimage) {
  return guarded([&] {
    require(delta, "factorization");
    require(perm, "permutation");
    put(preimage, starfact::to_string(starfact::sf_inverse(delta->value, perm->value)));
  });
}

sf_status sf_from_preimage(const char* preimage, const sf_perm* perm, int pivot, sf_factorization** out) {
  return guarded([&] {
    require(preimage, "preimage");
    require(perm, "permutation");
    require(out, "output pointer");
    const auto pre = starfact::parse_preimage(preimage, perm->value, pivot);
    *out = new sf_factorization{starfact::sf(pre)};
  });
}

sf_status sf_shift_preimage(const char* preimage, const sf_perm* perm, int pivot, int new_pivot, int inverse,
                            char** out) {
  return guarded([&] {
    require(preimage, "preimage");
    require(perm, "permutation");
    const auto pre = starfact::parse_preimage(preimage, perm->value, pivot);
    put(out, starfact::to_string(inverse ? starfact::shift_inverse(pre, new_pivot) : starfact::shift(pre, new_pivot)));
  });
}

sf_status sf_repivot(const sf_factorization* delta, const sf_perm* perm, int new_pivot, sf_factorization** out) {
  return guarded([&] {
    require(delta, "factorization");
    require(perm, "permutation");
    require(out, "output pointer");
    if (!starfact::verify_star_factorization(delta->value, perm->value))
      starfact::fail(starfact::ErrorKind::kDomain, "not a minimal transitive star factorization of " +
                                                      perm->value.to_string());
    *out = new sf_factorization{starfact::pivot_change(delta->value, perm->value, new_pivot)};
  });
}

sf_status sf_lnc_count(const char* type, char** decimal) {
  return guarded([&] {
    require(type, "type");
    put(decimal, starfact::count_lnc(starfact::parse_type_vector(type)).str());
  });
}

sf_status sf_lnc_enumerate(const char* type, sf_text_callback visit, void* user) {
  return guarded([&] {
    require(type, "type");
    bool keep_going = true;
    for (const auto& p : starfact::enumerate_lnc(starfact::parse_type_vector(type)))
      emit(visit, user, starfact::to_string(p), keep_going);
  });
}

sf_status sf_lncn_count(const char* type, char** decimal) {
  return guarded([&] {
    require(type, "type");
    put(decimal, starfact::count_lncn(starfact::parse_type_vector(type)).str());
  });
}

sf_status sf_lncn_enumerate(const char* type, sf_text_callback visit, void* user) {
  return guarded([&] {
    require(type, "type");
    bool keep_going = true;
    for (const auto& necklace : starfact::enumerate_lncn(starfact::parse_type_vector(type)))
      emit(visit, user, starfact::format_word(necklace.beads), keep_going);
  });
}

sf_status sf_leq(const sf_perm* lower, const sf_perm* upper, int* result) {
  return guarded([&] {
    require(lower, "permutation");
    require(upper, "permutation");
    require(result, "output pointer");
    *result = starfact::leq(lower->value, upper->value) ? 1 : 0;
  });
}

sf_status sf_covers(const sf_perm* perm, int upward, sf_text_callback visit, void* user) {
  return guarded([&] {
    require(perm, "permutation");
    bool keep_going = true;
    for (const auto& p : upward ? starfact::covers_up(perm->value) : starfact::covers_down(perm->value))
      emit(visit, user, p.to_string(), keep_going);
  });
}

sf_status sf_poset_build(int n, sf_poset** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new sf_poset{starfact::build_poset(n)};
  });
}

sf_status sf_poset_interval(const sf_perm* lower, const sf_perm* upper, sf_poset** out) {
  return guarded([&] {
    require(lower, "permutation");
    require(upper, "permutation");
    require(out, "output pointer");
    *out = new sf_poset{starfact::interval(lower->value, upper->value).diagram};
  });
}

sf_status sf_poset_cover_star(const sf_perm* perm, int upward, sf_poset** out) {
  return guarded([&] {
    require(perm, "permutation");
    require(out, "output pointer");
    *out = new sf_poset{starfact::cover_diagram(perm->value, upward != 0)};
  });
}

void sf_poset_free(sf_poset* poset) { delete poset; }

size_t sf_poset_vertex_count(const sf_poset* poset) { return poset ? poset->value.vertices.size() : 0; }

size_t sf_poset_edge_count(const sf_poset* poset) { return poset ? poset->value.edges.size() : 0; }

sf_status sf_poset_vertex(const sf_poset* poset, size_t index, char** out) {
  return guarded([&] {
    require(poset, "poset");
    if (index >= poset->value.vertices.size())
      starfact::fail(starfact::ErrorKind::kInvalidArgument, "vertex index out of range");
    put(out, poset->value.vertices[index].to_string());
  });
}

sf_status sf_poset_dot(const sf_poset* poset, char** out) {
  return guarded([&] {
    require(poset, "poset");
    put(out, starfact::to_dot(poset->value));
  });
}

sf_status sf_poset_json(const sf_poset* poset, char** out) {
  return guarded([&] {
    require(poset, "poset");
    put(out, starfact::to_json(poset->value));
  });
}

sf_status sf_interval_iso(const sf_perm* lower, const sf_perm* upper, char** structure, int* pass) {
  return guarded([&] {
    require(lower, "permutation");
    require(upper, "permutation");
    require(pass, "output pointer");
    const auto cert = starfact::interval_nc_iso(lower->value, upper->value);
    put(structure, cert.structure());
    *pass = cert.pass ? 1 : 0;
  });
}

sf_status sf_interval_type(const sf_perm* lower, const sf_perm* upper, char** structure) {
  return guarded([&] {
    require(lower, "permutation");
    require(upper, "permutation");
    std::string text;
    for (int b : starfact::interval_nc_type(lower->value, upper->value))
      text += (text.empty() ? "" : " x ") + ("NC(" + std::to_string(b) + ")");
    put(structure, text.empty() ? "NC(1)" : text);
  });
}

sf_status sf_is_boolean_interval(const sf_perm* lower, const sf_perm* upper, int* result) {
  return guarded([&] {
    require(lower, "permutation");
    require(upper, "permutation");
    require(result, "output pointer");
    *result = starfact::is_boolean_interval(lower->value, upper->value) ? 1 : 0;
  });
}

sf_status sf_count_boolean_above(const sf_perm* perm, char** decimal) {
  return guarded([&] {
    require(perm, "permutation");
    put(decimal, starfact::count_boolean_above(perm->value).str());
  });
}

sf_status sf_count_boolean_below(const sf_perm* perm, char** decimal) {
  return guarded([&] {
    require(perm, "permutation");
    put(decimal, starfact::count_boolean_below(perm->value).str());
  });
}

sf_status sf_selftest(int max_n, sf_text_callback on_report, void* user, int* all_pass) {
  return guarded([&] {
    require(all_pass, "output pointer");
    bool ok = true;
    starfact::oracles::run_selftest(max_n, [&](const starfact::oracles::OracleReport& r) {
      ok = ok && r.pass;
      if (on_report) on_report(r.to_json_line().c_str(), user);
    });
    *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
