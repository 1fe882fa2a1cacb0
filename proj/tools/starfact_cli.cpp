// Command-line front end over the C interface.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starfact/starfact.h"

namespace {

using json = nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

void check(sf_status status) {
  if (status == SF_OK) return;
  const int code = (status == SF_ERR_PARSE || status == SF_ERR_INVALID_ARGUMENT) ? kExitUsage : kExitDomain;
  throw Failure{code, std::string(sf_status_name(status)) + ": " + sf_last_error()};
}

std::string take(char* text) {
  std::string out(text ? text : "");
  sf_string_free(text);
  return out;
}

struct PermDeleter {
  void operator()(sf_perm* p) const { sf_perm_free(p); }
};
struct FactorizationDeleter {
  void operator()(sf_factorization* p) const { sf_factorization_free(p); }
};
struct PosetDeleter {
  void operator()(sf_poset* p) const { sf_poset_free(p); }
};
using Perm = std::unique_ptr<sf_perm, PermDeleter>;
using Factorization = std::unique_ptr<sf_factorization, FactorizationDeleter>;
using Poset = std::unique_ptr<sf_poset, PosetDeleter>;

Perm parse_perm(const std::string& text, int n) {
  sf_perm* p = nullptr;
  check(sf_perm_parse(text.c_str(), n, &p));
  return Perm(p);
}

Factorization parse_delta(const std::string& text, const sf_perm* perm, int pivot_if_empty = 1) {
  sf_factorization* d = nullptr;
  check(sf_factorization_parse(text.c_str(), sf_perm_size(perm), pivot_if_empty, &d));
  return Factorization(d);
}

std::string format(const sf_perm* p) {
  char* out = nullptr;
  check(sf_perm_format(p, &out));
  return take(out);
}

std::string format(const sf_factorization* d) {
  char* out = nullptr;
  check(sf_factorization_format(d, &out));
  return take(out);
}

int collect_line(const char* text, void* user) {
  static_cast<std::vector<std::string>*>(user)->emplace_back(text);
  return 1;
}

// Prints text lines, or one JSON document in machine mode.
class Output {
 public:
  explicit Output(const bool& json_mode) : json_mode_(json_mode) {}

  bool json_mode() const { return json_mode_; }

  void line(const std::string& text) { lines_.push_back(text); }
  json& doc() { return doc_; }

  void flush() {
    if (json_mode_) {
      std::cout << doc_.dump() << '\n';
    } else {
      for (const auto& l : lines_) std::cout << l << '\n';
    }
  }

 private:
  const bool& json_mode_;
  json doc_ = json::object();
  std::vector<std::string> lines_;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

Poset interval_poset(const sf_perm* lower, const sf_perm* upper) {
  sf_poset* p = nullptr;
  check(sf_poset_interval(lower, upper, &p));
  return Poset(p);
}

std::string poset_dot(const sf_poset* p) {
  char* out = nullptr;
  check(sf_poset_dot(p, &out));
  return take(out);
}

json poset_json(const sf_poset* p) {
  char* out = nullptr;
  check(sf_poset_json(p, &out));
  return json::parse(take(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal transitive star factorizations, noncrossing necklaces and the poset Star(n)."};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  int size_override = 0;
  app.add_flag("--json", json_mode, "Emit a single JSON document");
  app.add_option("--n", size_override, "Size n of every permutation argument (default: largest element)")
      ->check(CLI::NonNegativeNumber);

  Output out(json_mode);
  std::function<void()> action;

  std::string perm_text, delta_text, lower_text, upper_text, type_text, preimage_text;
  int pivot = 0, target = 0, max_n = 0, poset_n = 0;
  bool flag_a = false, flag_b = false;

  auto* count = app.add_subcommand("count", "Number of minimal transitive star factorizations of PERM");
  count->add_option("perm", perm_text, "Permutation in cycle notation")->required();
  count->callback([&] {
    action = [&] {
      auto perm = parse_perm(perm_text, size_override);
      char* c = nullptr;
      check(sf_count_factorizations(perm.get(), &c));
      const std::string value = take(c);
      out.line(value);
      out.doc() = {{"perm", format(perm.get())}, {"count", value}};
    };
  });

  auto* enumerate = app.add_subcommand("enum", "List the factorizations of PERM with pivot K");
  enumerate->add_option("perm", perm_text, "Permutation in cycle notation")->required();
  enumerate->add_option("--pivot,-k", pivot, "Pivot k")->required();
  enumerate->callback([&] {
    action = [&] {
      auto perm = parse_perm(perm_text, size_override);
      std::vector<std::string> found;
      check(sf_enumerate_factorizations(perm.get(), pivot, collect_line, &found));
      for (const auto& f : found) out.line(f);
      out.doc() = {{"perm", format(perm.get())}, {"pivot", pivot}, {"factorizations", found}};
    };
  });

  auto* verify = app.add_subcommand("verify", "Check that DELTA is a minimal transitive star factorization of PERM");
  verify->add_option("delta", delta_text, "Factorization \"(k i1)(k i2)...\"")->required();
  verify->add_option("--perm", perm_text, "Target permutation")->required();
  verify->add_option("--pivot,-k", pivot, "Pivot for the empty factorization");
  verify->callback([&] {
    action = [&] {
      auto perm = parse_perm(perm_text, size_override);
      auto delta = parse_delta(delta_text, perm.get(), pivot > 0 ? pivot : 1);
      int valid = 0;
      check(sf_verify(delta.get(), perm.get(), &valid));
      out.line(bool_text(valid));
      out.doc() = {{"valid", valid != 0}};
    };
  });

  auto* word = app.add_subcommand("word", "Cycle word of DELTA, its necklace preimage, or the factorization of a preimage");
  word->add_option("delta", delta_text, "Factorization \"(k i1)(k i2)...\"");
  word->add_option("--perm", perm_text, "Target permutation")->required();
  auto* show_preimage = word->add_flag("--preimage", flag_a, "Print the necklace preimage of DELTA instead");
  auto* from_preimage =
      word->add_option("--from", preimage_text, "Build the factorization of a preimage \"necklace=...;origin=...;d=...\"");
  word->add_option("--pivot,-k", pivot, "Pivot for --from");
  from_preimage->excludes(show_preimage);
  word->callback([&] {
    action = [&] {
      auto perm = parse_perm(perm_text, size_override);
      if (!preimage_text.empty()) {
        if (pivot <= 0) throw Failure{kExitUsage, "--from needs --pivot"};
        sf_factorization* d = nullptr;
        check(sf_from_preimage(preimage_text.c_str(), perm.get(), pivot, &d));
        Factorization delta(d);
        const std::string text = format(delta.get());
        out.line(text);
        out.doc() = {{"factorization", text}};
        return;
      }
      if (delta_text.empty() && !word->count("delta")) throw Failure{kExitUsage, "word needs DELTA or --from"};
      auto delta = parse_delta(delta_text, perm.get(), pivot > 0 ? pivot : 1);
      char* text = nullptr;
      if (flag_a) {
        check(sf_preimage(delta.get(), perm.get(), &text));
        const std::string value = take(text);
        out.line(value);
        out.doc() = {{"preimage", value}};
      } else {
        check(sf_cycle_word(delta.get(), perm.get(), &text));
        const std::string value = take(text);
        out.line(value);
        out.doc() = {{"word", value}};
      }
    };
  });

  auto* repivot = app.add_subcommand("repivot", "Carry DELTA to the pivot given by --to");
  repivot->add_option("delta", delta_text, "Factorization \"(k i1)(k i2)...\"")->required();
  repivot->add_option("--perm", perm_text, "Target permutation")->required();
  repivot->add_option("--to", target, "New pivot k'")->required();
  repivot->add_flag("--trace", flag_a, "Also print the preimage before and after the shift");
  repivot->callback([&] {
    action = [&] {
      auto perm = parse_perm(perm_text, size_override);
      auto delta = parse_delta(delta_text, perm.get());
      sf_factorization* d = nullptr;
      check(sf_repivot(delta.get(), perm.get(), target, &d));
      Factorization moved(d);
      const std::string text = format(moved.get());
      out.doc() = {{"factorization", text}};
      if (flag_a) {
        char* before = nullptr;
        check(sf_preimage(delta.get(), perm.get(), &before));
        const std::string pre = take(before);
        json trace = {{"preimage", pre}};
        out.line("preimage: " + pre);
        if (sf_perm_cycle_count(perm.get()) > 1) {
          char* after = nullptr;
          check(sf_shift_preimage(pre.c_str(), perm.get(), sf_factorization_pivot(delta.get()), target, 0, &after));
          const std::string shifted = take(after);
          out.line("shifted: " + shifted);
          trace["shifted"] = shifted;
        }
        out.doc()["trace"] = trace;
      }
      out.line(text);
    };
  });

  auto add_type_command = [&](const char* name, const char* help, bool necklaces) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("type", type_text, "Type vector \"x1,x2,...\"")->required();
    auto* count_flag = sub->add_flag("--count", flag_b, "Print the count only");
    sub->callback([&, necklaces, count_flag] {
      action = [&, necklaces, count_flag] {
        if (count_flag->count()) {
          char* c = nullptr;
          check(necklaces ? sf_lncn_count(type_text.c_str(), &c) : sf_lnc_count(type_text.c_str(), &c));
          const std::string value = take(c);
          out.line(value);
          out.doc() = {{"type", type_text}, {"count", value}};
          return;
        }
        std::vector<std::string> found;
        check(necklaces ? sf_lncn_enumerate(type_text.c_str(), collect_line, &found)
                        : sf_lnc_enumerate(type_text.c_str(), collect_line, &found));
        for (const auto& f : found) out.line(f);
        out.doc() = {{"type", type_text}, {necklaces ? "necklaces" : "partitions", found}};
      };
    });
  };
  add_type_command("lnc", "Labeled noncrossing partitions of a type", false);
  add_type_command("lncn", "Labeled noncrossing necklaces of a type", true);

  auto* leq = app.add_subcommand("leq", "Is SIGMA below PI in Star(n)?");
  leq->add_option("sigma", lower_text, "Lower permutation")->required();
  leq->add_option("pi", upper_text, "Upper permutation")->required();
  leq->callback([&] {
    action = [&] {
      auto lower = parse_perm(lower_text, size_override);
      auto upper = parse_perm(upper_text, size_override);
      int result = 0;
      check(sf_leq(lower.get(), upper.get(), &result));
      out.line(bool_text(result));
      out.doc() = {{"leq", result != 0}};
    };
  });

  auto* covers = app.add_subcommand("covers", "Upper covers of PERM (or lower covers with --down)");
  covers->add_option("perm", perm_text, "Permutation")->required();
  covers->add_flag("--down", flag_a, "List the elements covered by PERM");
  covers->add_flag("--dot", flag_b, "Emit the cover star as a DOT digraph");
  covers->callback([&] {
    action = [&] {
      auto perm = parse_perm(perm_text, size_override);
      if (flag_b) {
        sf_poset* p = nullptr;
        check(sf_poset_cover_star(perm.get(), flag_a ? 0 : 1, &p));
        Poset star(p);
        out.line(poset_dot(star.get()));
        out.doc() = poset_json(star.get());
        return;
      }
      std::vector<std::string> found;
      check(sf_covers(perm.get(), flag_a ? 0 : 1, collect_line, &found));
      for (const auto& f : found) out.line(f);
      out.doc() = {{"perm", format(perm.get())}, {flag_a ? "covered" : "covers", found}};
    };
  });

  auto* interval = app.add_subcommand("interval", "The interval [SIGMA, PI] and its noncrossing structure");
  interval->add_option("sigma", lower_text, "Lower endpoint")->required();
  interval->add_option("pi", upper_text, "Upper endpoint")->required();
  interval->add_flag("--dot", flag_b, "Emit the interval as a DOT digraph");
  interval->callback([&] {
    action = [&] {
      auto lower = parse_perm(lower_text, size_override);
      auto upper = parse_perm(upper_text, size_override);
      auto poset = interval_poset(lower.get(), upper.get());
      char* structure = nullptr;
      int pass = 0;
      check(sf_interval_iso(lower.get(), upper.get(), &structure, &pass));
      const std::string shape = take(structure);
      char* type_text = nullptr;
      check(sf_interval_type(lower.get(), upper.get(), &type_text));
      const std::string type = take(type_text);
      out.doc() = poset_json(poset.get());
      out.doc()["structure"] = shape;
      out.doc()["type"] = type;
      out.doc()["certificate"] = pass != 0;
      if (flag_b) {
        out.line(poset_dot(poset.get()));
        return;
      }
      out.line("elements: " + std::to_string(sf_poset_vertex_count(poset.get())));
      out.line("structure: " + shape);
      out.line("type: " + type);
      out.line(std::string("certificate: ") + (pass ? "pass" : "fail"));
      for (std::size_t v = 0; v < sf_poset_vertex_count(poset.get()); ++v) {
        char* text = nullptr;
        check(sf_poset_vertex(poset.get(), v, &text));
        out.line(take(text));
      }
    };
  });

  std::vector<std::string> pair;
  std::string above_text, below_text;
  auto* boolean = app.add_subcommand("boolean", "Boolean interval test, or boolean interval counts");
  boolean->add_option("endpoints", pair, "SIGMA PI")->expected(0, 2);
  auto* above = boolean->add_option("--above", above_text, "Count boolean intervals with PERM as top");
  auto* below = boolean->add_option("--below", below_text, "Count boolean intervals with PERM as bottom");
  above->excludes(below);
  boolean->callback([&] {
    action = [&] {
      if (above->count() || below->count()) {
        if (!pair.empty()) throw Failure{kExitUsage, "--above/--below take no endpoints"};
        auto perm = parse_perm(above->count() ? above_text : below_text, size_override);
        char* c = nullptr;
        check(above->count() ? sf_count_boolean_above(perm.get(), &c) : sf_count_boolean_below(perm.get(), &c));
        const std::string value = take(c);
        out.line(value);
        out.doc() = {{"perm", format(perm.get())}, {above->count() ? "above" : "below", value}};
        return;
      }
      if (pair.size() != 2) throw Failure{kExitUsage, "boolean needs SIGMA PI, --above PERM or --below PERM"};
      auto lower = parse_perm(pair[0], size_override);
      auto upper = parse_perm(pair[1], size_override);
      int result = 0;
      check(sf_is_boolean_interval(lower.get(), upper.get(), &result));
      out.line(bool_text(result));
      out.doc() = {{"boolean", result != 0}};
    };
  });

  auto* dot = app.add_subcommand("dot", "Hasse diagram of Star(N) as DOT (or JSON with --json)");
  dot->add_option("n", poset_n, "Size N")->required();
  dot->callback([&] {
    action = [&] {
      sf_poset* p = nullptr;
      check(sf_poset_build(poset_n, &p));
      Poset poset(p);
      out.line(poset_dot(poset.get()));
      out.doc() = poset_json(poset.get());
    };
  });

  auto* selftest = app.add_subcommand("selftest", "Run the oracle agreement suite");
  selftest->add_option("--max-n", max_n, "Largest n to check")->required();
  selftest->callback([&] {
    action = [&] {
      std::vector<std::string> reports;
      int all_pass = 0;
      check(sf_selftest(max_n, collect_line, &reports, &all_pass));
      json list = json::array();
      for (const auto& r : reports) {
        out.line(r);
        list.push_back(json::parse(r));
      }
      out.line(std::string("selftest: ") + (all_pass ? "pass" : "fail"));
      out.doc() = {{"reports", list}, {"pass", all_pass != 0}};
      if (!all_pass) {
        out.flush();
        throw Failure{kExitDomain, "selftest found disagreements"};
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
    out.flush();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
