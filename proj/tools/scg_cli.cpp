// Command-line front end: check / schlafli / dual / reduce / augment /
// enumerate / table1 / render over representation JSON records or CPR text.
//
// Exit codes: 0 success, 1 a checked property fails, 2 usage or format
// error, 3 resource limit hit (intersection walk or enumeration abort).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scg/cpr.hpp"
#include "scg/enumerate.hpp"
#include "scg/json_io.hpp"
#include "scg/rat.hpp"
#include "scg/rrt.hpp"

namespace {

using namespace scg;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

std::uint64_t intersection_limit_from_env() {
  const char* env = std::getenv("SCG_INTERSECTION_LIMIT");
  if (!env) return kDefaultIntersectionLimit;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw std::invalid_argument("SCG_INTERSECTION_LIMIT must be a positive integer");
  return static_cast<std::uint64_t>(v);
}

std::string schlafli_string(const SchlafliType& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

int cmd_check(const std::string& file, bool verbose, std::uint64_t limit) {
  GeneratorTuple t = load_tuple_file(file);
  CheckReport r = is_string_c_group(t, limit);
  std::cout << "degree:           " << t.degree << "\n";
  std::cout << "rank:             " << t.rank() << " (labels " << t.label_offset << ".."
            << t.label_offset + t.rank() - 1 << ")\n";
  if (r.string_ok) {
    std::cout << "string property:  ok\n";
  } else {
    const auto& w = *r.sp_witness;
    if (w.i == w.j)
      std::cout << "string property:  FAIL (generator " << t.label(w.i)
                << " is not a non-identity involution)\n";
    else
      std::cout << "string property:  FAIL (generators " << t.label(w.i) << " and "
                << t.label(w.j) << " do not commute)\n";
  }
  if (!r.string_ok) {
    std::cout << "intersection:     not evaluated\n";
  } else if (r.ip_ok) {
    std::cout << "intersection:     ok\n";
  } else {
    const auto& w = *r.ip_witness;
    std::cout << "intersection:     FAIL (subtuple labels";
    for (int i : w.sub_indices) std::cout << " " << t.label(i);
    std::cout << ": |G_first cap G_last| ";
    if (w.found > w.expected)
      std::cout << ">= " << w.found;
    else
      std::cout << "= " << w.found;
    std::cout << ", expected " << w.expected << ")\n";
  }
  std::cout << "group order:      " << r.group_order << "\n";
  std::cout << "full symmetric:   " << (r.is_full_symmetric ? "yes" : "no") << "\n";
  if (r.string_ok) std::cout << "schlafli type:    " << schlafli_string(schlafli(t)) << "\n";
  if (verbose) {
    std::cout << "generators:\n";
    for (int i = 0; i < t.rank(); ++i)
      std::cout << "  rho_" << t.label(i) << " = " << t.gens[i].cycle_string() << "\n";
    std::cout << "orbits:";
    for (const auto& o : orbits(t.gens, t.degree)) {
      std::cout << " {";
      for (std::size_t i = 0; i < o.size(); ++i) std::cout << (i ? "," : "") << o[i];
      std::cout << "}";
    }
    std::cout << "\n";
  }
  return (r.string_ok && r.ip_ok) ? kExitOk : kExitPropertyFail;
}

int cmd_schlafli(const std::string& file) {
  GeneratorTuple t = load_tuple_file(file);
  StringCheck sc = is_string(t);
  if (!sc.ok) {
    std::cerr << "error: the string property fails at pair (" << t.label(sc.witness->i) << ","
              << t.label(sc.witness->j) << ")\n";
    return kExitPropertyFail;
  }
  std::cout << schlafli_string(schlafli(t)) << "\n";
  return kExitOk;
}

int cmd_dual(const std::string& file, const std::string& out) {
  write_output(tuple_to_json(dual(load_tuple_file(file))), out);
  return kExitOk;
}

int cmd_reduce(const std::string& file, bool check, const std::string& out,
               std::uint64_t limit) {
  GeneratorTuple t = load_tuple_file(file);
  RrtApplicability a = rrt_applicable(t);
  if (!a.applicable) {
    std::cerr << "error: rank reduction does not apply: " << a.reason << "\n";
    return kExitPropertyFail;
  }
  GeneratorTuple r = rrt_reduce(t);
  write_output(tuple_to_json(r), out);
  if (check) {
    CheckReport rep = is_string_c_group(r, limit);
    bool ok = rep.string_ok && rep.ip_ok;
    std::cerr << "reduced tuple: rank " << r.rank() << ", order " << rep.group_order
              << ", string C-group: " << (ok ? "yes" : "NO") << "\n";
    if (!ok) return kExitPropertyFail;
  }
  return kExitOk;
}

void print_hypotheses(std::ostream& os, const HypothesisReport& rep) {
  os << "  rho_1 not a transposition:      "
     << (rep.rho1_not_transposition ? "pass" : "FAIL") << "\n";
  os << "  Gamma_{-1,2} orbits of size <=3: " << (rep.orbit_bound_ok ? "pass" : "FAIL") << "\n";
  if (rep.case_orbit_size)
    os << "  case: the Gamma_2 orbit containing the edge has size " << rep.case_orbit_size
       << "\n";
  else
    os << "  case: none (the Gamma_2 orbit containing the edge has size outside {4,5,6})\n";
  if (rep.parity_ok.has_value())
    os << "  parity (rho_0, rho_1, rho_2 all even): " << (*rep.parity_ok ? "pass" : "FAIL")
       << "\n";
  if (rep.imprimitivity_ok.has_value()) {
    os << "  imprimitivity of Gamma_{-1}:    "
       << (*rep.imprimitivity_ok ? "pass" : "FAIL");
    if (rep.orbit_checks.empty()) os << " (no orbit with two size-3 suborbits; vacuous)";
    os << "\n";
    for (const auto& oc : rep.orbit_checks) {
      os << "    orbit {";
      for (std::size_t i = 0; i < oc.orbit.size(); ++i) os << (i ? "," : "") << oc.orbit[i];
      os << "}: " << (oc.imprimitive ? "imprimitive" : "primitive");
      if (oc.witness) {
        os << ", blocks";
        for (const auto& b : oc.witness->blocks) {
          os << " {";
          for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
          os << "}";
        }
      }
      os << "\n";
    }
  }
}

int cmd_augment(const std::string& file, const std::string& edge_spec, bool all, bool check,
                bool explain, std::uint64_t limit) {
  GeneratorTuple t = load_tuple_file(file);
  if (!edge_spec.empty()) {
    auto comma = edge_spec.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--edge expects 'a,b' with 1-based points");
    Edge edge{std::stoi(edge_spec.substr(0, comma)), std::stoi(edge_spec.substr(comma + 1))};
    GeneratorTuple aug = rat_augment(t, edge);
    HypothesisReport rep = check_hypotheses(t, edge);
    std::cout << tuple_to_json(aug);
    std::cerr << "candidate edge {" << edge.first << "," << edge.second << "}\n";
    if (explain) print_hypotheses(std::cerr, rep);
    std::cerr << "  theorem applies:                " << (rep.theorem_applies ? "yes" : "no")
              << "\n";
    if (check) {
      CheckReport cr = is_string_c_group(aug, limit);
      std::cerr << "  verified string C-group:        "
                << (cr.string_ok && cr.ip_ok ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }
  (void)all;  // --all is the default mode
  auto results = augment_all(t, check, limit);
  int predicted = 0, verified = 0;
  for (const auto& r : results) {
    std::cout << "candidate edge {" << r.edge.first << "," << r.edge.second << "}\n";
    if (explain) print_hypotheses(std::cout, r.report);
    std::cout << "  theorem applies:                "
              << (r.report.theorem_applies ? "yes" : "no") << "\n";
    predicted += r.report.theorem_applies;
    if (r.verified.has_value()) {
      std::cout << "  verified string C-group:        " << (*r.verified ? "yes" : "no")
                << "\n";
      verified += *r.verified;
    }
  }
  std::cout << "candidates: " << results.size() << ", theorem applies: " << predicted;
  if (check) std::cout << ", verified: " << verified;
  std::cout << "\n";
  return kExitOk;
}

int cmd_enumerate(int n, int rank, const std::string& out, int jobs, bool big,
                  std::uint64_t limit) {
  if (n >= 9 && !big)
    throw CLI::ValidationError("enumerate",
                               "n >= 9 is expensive; pass --big to run it anyway");
  EnumConfig cfg;
  cfg.n = n;
  cfg.rank = rank;
  cfg.jobs = jobs;
  cfg.intersection_limit = limit;
  std::ofstream partial;
  if (big) {
    cfg.progress = &std::cerr;
    if (!out.empty()) {
      partial.open(out + ".partial", std::ios::binary);
      if (partial) cfg.checkpoint = &partial;
    }
  }
  RepDatabase db = enumerate_reps(cfg);

  std::string text;
  for (const auto& [key, info] : db.reps) {
    std::string hex = key_hex(key);
    nlohmann::json j = nlohmann::json::parse(tuple_to_jsonl(info.rep, &hex));
    j["schlafli"] = info.schlafli_type;
    j["self_dual"] = info.self_dual;
    if (rank == 4) {
      j["rrt_count"] = info.rrt_count;
      j["merge_ok"] = info.merge_ok;
    }
    text += j.dump() + "\n";
  }
  nlohmann::json meta;
  meta["meta"] = true;
  meta["n"] = n;
  meta["rank"] = rank;
  meta["classes"] = db.size();
  meta["dedup"] = "iso+duality";
  meta["s6_outer"] = cfg.include_s6_outer;
  text += meta.dump() + "\n";
  write_output(text, out);
  return kExitOk;
}

int cmd_table1(int from, int to, int jobs, bool big, const std::string& json_out,
               std::uint64_t limit) {
  if (to >= 9 && !big)
    throw CLI::ValidationError("table1", "n >= 9 is expensive; pass --big to run it anyway");
  EnumConfig base;
  base.jobs = jobs;
  base.intersection_limit = limit;
  Table1Result res = table1(from, to, base);
  std::cout << "   G    Rk 3   Rk 4   RRT   RAT\n";
  for (const auto& r : res.rows) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "S_%-3d %6llu %6llu %5llu %5llu\n", r.n,
                  static_cast<unsigned long long>(r.rank3),
                  static_cast<unsigned long long>(r.rank4),
                  static_cast<unsigned long long>(r.rrt),
                  static_cast<unsigned long long>(r.rat));
    std::cout << buf;
  }
  for (const auto& note : res.notes) std::cerr << "note: " << note << "\n";
  if (!json_out.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : res.rows)
      rows.push_back({{"n", r.n},
                      {"rank3", r.rank3},
                      {"rank4", r.rank4},
                      {"rrt", r.rrt},
                      {"rat", r.rat}});
    nlohmann::json j;
    j["rows"] = std::move(rows);
    j["notes"] = res.notes;
    write_output(j.dump(2) + "\n", json_out);
  }
  return kExitOk;
}

int cmd_render(const std::string& file, const std::string& format) {
  GeneratorTuple t = load_tuple_file(file);
  CprGraph g = from_tuple(t);
  if (format == "dot")
    std::cout << emit_dot(g);
  else
    std::cout << emit_cpr_text(g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string C-group representations of symmetric groups"};
  app.require_subcommand(1);

  std::string file, out, edge_spec, format = "text", json_out;
  bool verbose = false, check = false, explain = false, all = false, big = false;
  int n = 5, rank = 3, jobs = 1, from = 5, to = 8;

  CLI::App* c_check = app.add_subcommand("check", "decide the string C-group properties");
  c_check->add_option("file", file)->required();
  c_check->add_flag("--verbose", verbose);

  CLI::App* c_schlafli = app.add_subcommand("schlafli", "print the Schlafli type");
  c_schlafli->add_option("file", file)->required();

  CLI::App* c_dual = app.add_subcommand("dual", "reverse the generator sequence");
  c_dual->add_option("file", file)->required();
  c_dual->add_option("--out", out);

  CLI::App* c_reduce = app.add_subcommand("reduce", "apply the rank reduction");
  c_reduce->add_option("file", file)->required();
  c_reduce->add_flag("--check", check);
  c_reduce->add_option("--out", out);

  CLI::App* c_augment = app.add_subcommand("augment", "split the middle generator (rank 3 -> 4)");
  c_augment->add_option("file", file)->required();
  c_augment->add_option("--edge", edge_spec, "split at this 1-edge, e.g. 1,2");
  c_augment->add_flag("--all", all, "report every candidate edge (default)");
  c_augment->add_flag("--check", check, "verify the augmented tuples");
  c_augment->add_flag("--explain", explain, "print each hypothesis with witnesses");

  CLI::App* c_enum = app.add_subcommand("enumerate", "enumerate representations of S_n");
  c_enum->add_option("--n", n)->required()->check(CLI::Range(3, kMaxDegree));
  c_enum->add_option("--rank", rank)->required()->check(CLI::IsMember({3, 4}));
  c_enum->add_option("--out", out, "JSONL output path (default stdout)");
  c_enum->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  c_enum->add_flag("--big", big, "allow n >= 9 (progress + checkpointing)");

  CLI::App* c_table = app.add_subcommand("table1", "published-table reproduction");
  c_table->add_option("--from", from)->required();
  c_table->add_option("--to", to)->required();
  c_table->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  c_table->add_flag("--big", big, "allow rows with n >= 9");
  c_table->add_option("--json", json_out, "also write machine-readable rows");

  CLI::App* c_render = app.add_subcommand("render", "emit the permutation representation graph");
  c_render->add_option("file", file)->required();
  c_render->add_option("--format", format)->check(CLI::IsMember({"dot", "text"}));

  try {
    app.parse(argc, argv);
    std::uint64_t limit = intersection_limit_from_env();
    if (c_check->parsed()) return cmd_check(file, verbose, limit);
    if (c_schlafli->parsed()) return cmd_schlafli(file);
    if (c_dual->parsed()) return cmd_dual(file, out);
    if (c_reduce->parsed()) return cmd_reduce(file, check, out, limit);
    if (c_augment->parsed()) return cmd_augment(file, edge_spec, all, check, explain, limit);
    if (c_enum->parsed()) return cmd_enumerate(n, rank, out, jobs, big, limit);
    if (c_table->parsed()) return cmd_table1(from, to, jobs, big, json_out, limit);
    if (c_render->parsed()) return cmd_render(file, format);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
