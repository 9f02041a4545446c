#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdim/affine.hpp"
#include "qdim/certificate.hpp"
#include "qdim/icosian.hpp"
#include "qdim/quotients.hpp"
#include "qdim/smith.hpp"
#include "qdim/two_bridge.hpp"
#include "qdim/version.hpp"

namespace qdim::cli {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

enum class Format { Text, Json };

struct KnotInput {
  std::string knot;          // "p/q", may be empty when a presentation is given
  std::optional<long> surgery;
  std::string presentation;  // overrides knot when nonempty
};

struct ResolvedInput {
  Presentation presentation;
  std::optional<KnotGroup> knot;
  std::optional<long> surgery;
  std::string label;
};

ResolvedInput resolve(const KnotInput& in) {
  if (!in.presentation.empty()) {
    if (!in.knot.empty()) throw InputError("give either a knot p/q or --presentation, not both");
    if (in.surgery) throw InputError("--surgery needs a knot p/q");
    return {parse_presentation(in.presentation), std::nullopt, std::nullopt, "presentation"};
  }
  if (in.knot.empty()) throw InputError("missing knot p/q or --presentation");
  KnotSpec spec = parse_knot_spec(in.knot);
  ResolvedInput r{{}, knot_presentation(spec.p, spec.q), in.surgery, "K(" + in.knot + ")"};
  r.presentation = in.surgery ? filled_presentation(*r.knot, *in.surgery) : r.knot->presentation;
  if (in.surgery) r.label += " 1/" + std::to_string(*in.surgery) + " filling";
  return r;
}

std::string signs(const std::vector<int>& e) {
  std::string s;
  for (int v : e) s += v > 0 ? '+' : '-';
  return s;
}

FiniteGroup make_target(const std::string& spec) {
  if (spec == "a5") return alternating_group_5();
  if (spec == "2i") return binary_icosahedral().group();
  if (spec.rfind("c:", 0) == 0) {
    std::size_t d = 0;
    try {
      std::size_t used = 0;
      d = std::stoul(spec.substr(2), &used);
      if (used != spec.size() - 2) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw InputError("bad cyclic target '" + spec + "', expected c:<d>");
    }
    return cyclic_group(d);
  }
  throw InputError("unknown target '" + spec + "' (expected a5, 2i or c:<d>)");
}

int cmd_present(const KnotInput& in, Format format, std::ostream& out) {
  ResolvedInput r = resolve(in);
  const Presentation& p = r.presentation;
  const auto homology = first_homology(p);
  if (format == Format::Json) {
    Json j = {{"presentation", render_presentation(p)},
              {"generators", p.generators},
              {"homology", {{"invariant_factors", homology}, {"rendered", render_homology(homology)}}}};
    Json rels = Json::array();
    for (const Word& w : p.relators) rels.push_back(render_word(w, p.generators));
    j["relators"] = rels;
    if (r.knot) {
      const TwoBridgeData& d = r.knot->data;
      j["p"] = d.p;
      j["q"] = d.q;
      j["word_q"] = d.word_q;
      j["e"] = d.e;
      j["sigma"] = d.sigma;
      j["w"] = render_word(d.w, p.generators);
      j["w_star"] = render_word(d.w_star, p.generators);
      j["meridian"] = render_word(d.meridian, p.generators);
      j["longitude"] = render_word(d.longitude, p.generators);
      j["surgery_n"] = r.surgery ? Json(*r.surgery) : Json();
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "group: " << r.label << '\n';
  out << "generators: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out << (i ? ", " : "") << p.generators[i];
  out << '\n';
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out << "relator " << i + 1 << ": " << render_word(p.relators[i], p.generators) << '\n';
  if (r.knot) {
    const TwoBridgeData& d = r.knot->data;
    if (d.word_q != d.q) out << "words built from mirror " << d.p << '/' << d.word_q << '\n';
    out << "e: " << signs(d.e) << '\n';
    out << "sigma: " << d.sigma << '\n';
    out << "w: " << render_word(d.w, p.generators) << '\n';
    out << "w_star: " << render_word(d.w_star, p.generators) << '\n';
    out << "meridian: " << render_word(d.meridian, p.generators) << '\n';
    out << "longitude: " << render_word(d.longitude, p.generators) << '\n';
  }
  out << "H_1: " << render_homology(homology) << '\n';
  return kExitOk;
}

struct HomsFlags {
  std::string target;
  bool surjective = false;
  bool exact_count = false;
  unsigned jobs = 1;
  std::size_t bound = 360;
  std::size_t max_list = 50;
};

int cmd_homs(const KnotInput& in, const HomsFlags& flags, Format format, std::ostream& out) {
  ResolvedInput r = resolve(in);
  FiniteGroup g = make_target(flags.target);
  HomSearchOptions options{flags.surjective, flags.exact_count, flags.jobs, flags.bound};
  const auto start = Clock::now();
  HomSearchResult result = enumerate_homs(r.presentation, g, options);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  const auto& gens = r.presentation.generators;
  if (format == Format::Json) {
    Json homs = Json::array();
    for (const GroupHom& h : result.homs) {
      Json images = Json::object();
      for (std::size_t i = 0; i < gens.size(); ++i)
        images[gens[i]] = {{"index", h.images()[i]}, {"value", g.label(h.images()[i])}};
      homs.push_back(images);
    }
    Json j = {{"presentation", render_presentation(r.presentation)},
              {"target", g.name()},
              {"target_order", g.size()},
              {"surjective_only", flags.surjective},
              {"count", result.count},
              {"reduced_count", result.reduced_count},
              {"reduced_candidates", result.reduced_candidates},
              {"exact_count", result.exact_count ? Json(*result.exact_count) : Json()},
              {"homs", homs},
              {"timing", {{"elapsed_ms", ms}}}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "group: " << r.label << '\n';
  out << "target: " << g.name() << " (order " << g.size() << ")"
      << (flags.surjective ? ", surjections only" : "") << '\n';
  out << "count: " << result.count << '\n';
  out << "reduced count: " << result.reduced_count << " of " << result.reduced_candidates
      << " candidates\n";
  if (result.exact_count) out << "exact count: " << *result.exact_count << '\n';
  std::size_t shown = 0;
  for (const GroupHom& h : result.homs) {
    if (shown++ == flags.max_list) {
      out << "... " << result.homs.size() - flags.max_list << " more\n";
      break;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      out << (i ? ", " : "  ") << gens[i] << " -> " << g.label(h.images()[i]);
    out << '\n';
  }
  return kExitOk;
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot open '" + path + "' for writing");
  file << j.dump(2) << '\n';
}

void print_qdim2(const QDim2Certificate& c, std::ostream& out) {
  out << "family N = " << c.N << ", k = " << c.k << ": K(" << c.p << "," << c.q << ") 1/" << c.n
      << " filling\n";
  out << "H_1: " << render_homology(c.homology) << '\n';
  for (const auto& im : c.hom_images)
    out << "f(" << im.generator << ") = " << im.label << " (order " << im.order << ")\n";
  out << "surjective onto 2I: " << (c.surjective ? "yes" : "no")
      << (c.fallback_used ? " (fallback search)" : "") << '\n';
  out << "relator coefficients vanish: " << (c.relators_lift ? "yes" : "no") << '\n';
  if (!c.commutator_coefficients.empty()) {
    out << "commutator " << c.commutator_word << " translation:\n";
    for (std::size_t i = 0; i < c.commutator_coefficients.size(); ++i)
      out << "  coefficient of " << c.generators[i] << ": " << c.commutator_coefficients[i].to_string()
          << '\n';
  }
  out << "unchecked: " << c.unchecked_hypotheses.front() << '\n';
  out << "conclusion: " << to_string(c.conclusion);
  if (c.failing_stage) out << " (failed at " << *c.failing_stage << ")";
  out << '\n';
}

void print_qdim3(const QDim3Certificate& c, std::ostream& out) {
  out << "group: " << c.label << '\n';
  out << "H_1: " << render_homology(c.homology) << '\n';
  out << "surjections onto A5: " << c.surjection_count << '\n';
  if (c.example_surjection) {
    out << "example:";
    for (const auto& im : *c.example_surjection) out << ' ' << im.generator << " -> " << im.label;
    out << '\n';
  }
  out << "unchecked: " << c.unchecked_hypotheses.front() << '\n';
  out << "conclusion: " << to_string(c.conclusion) << '\n';
}

struct CertifyFlags {
  std::string kind;
  std::optional<long> family;
  std::optional<long> k;
  std::string json_path;
  unsigned jobs = 1;
};

int cmd_certify(const CertifyFlags& flags, const KnotInput& in, std::ostream& out) {
  CertifyOptions options{flags.jobs};
  if (flags.kind == "2") {
    if (!flags.family || !flags.k) throw InputError("certify 2 needs --family N and --k k");
    if (!in.knot.empty() || !in.presentation.empty())
      throw InputError("certify 2 takes --family/--k, not a knot");
    QDim2Certificate c = certify_qdim2(*flags.family, *flags.k, options);
    if (!flags.json_path.empty()) write_json(to_json(c), flags.json_path, out);
    if (flags.json_path != "-") print_qdim2(c, out);
    return c.conclusion == Conclusion::QDim2 ? kExitOk : kExitFailed;
  }
  if (flags.kind == "3") {
    if (flags.family || flags.k) throw InputError("certify 3 takes a knot p/q, not --family/--k");
    if (in.surgery) throw InputError("certify 3 works on the knot group; drop --surgery");
    QDim3Certificate c;
    if (!in.presentation.empty()) {
      c = certify_qdim3_criterion(parse_presentation(in.presentation), "presentation", options);
    } else {
      if (in.knot.empty()) throw InputError("certify 3 needs a knot p/q");
      KnotSpec spec = parse_knot_spec(in.knot);
      c = certify_qdim3_criterion(spec.p, spec.q, options);
    }
    if (!flags.json_path.empty()) write_json(to_json(c), flags.json_path, out);
    if (flags.json_path != "-") print_qdim3(c, out);
    return c.conclusion == Conclusion::QDim3Criterion ? kExitOk : kExitFailed;
  }
  throw InputError("certify kind must be 2 or 3, got '" + flags.kind + "'");
}

int cmd_table(bool with_control, unsigned jobs, Format format, std::ostream& out) {
  struct Row {
    std::string name;
    long p, q;
  };
  std::vector<Row> rows;
  for (const auto& r : knot_table()) rows.push_back({std::string(r.name), r.p, r.q});
  if (with_control) rows.push_back({"control", 27, 13});

  const auto start = Clock::now();
  std::size_t failures = 0;
  Json j_rows = Json::array();
  for (const Row& row : rows) {
    QDim3Certificate c = certify_qdim3_criterion(row.p, row.q, CertifyOptions{jobs});
    const bool pass = c.conclusion == Conclusion::QDim3Criterion;
    failures += pass ? 0 : 1;
    if (format == Format::Json) {
      Json j = to_json(c);
      j["name"] = row.name;
      j["status"] = pass ? "PASS" : "FAIL";
      j_rows.push_back(j);
    } else {
      out << (pass ? "PASS " : "FAIL ") << row.name << " [" << row.p << ", " << row.q
          << "]: " << c.surjection_count << " surjections onto A5";
      if (c.word_q && *c.word_q != row.q) out << " [words from " << row.p << '/' << *c.word_q << ']';
      if (c.example_surjection) {
        out << " (e.g.";
        for (const auto& im : *c.example_surjection) out << ' ' << im.generator << " -> " << im.label;
        out << ')';
      }
      out << '\n';
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (format == Format::Json) {
    out << Json{{"rows", j_rows},
                {"passed", rows.size() - failures},
                {"failed", failures},
                {"timing", {{"elapsed_ms", ms}}}}
               .dump(2)
        << '\n';
  } else {
    out << rows.size() - failures << "/" << rows.size() << " rows pass\n";
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  auto golden = [&] { return GoldenNum(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))); };
  return Quaternion(golden(), golden(), golden(), golden());
}

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank - 1));
  std::uniform_int_distribution<int> exp(-3, 3);
  Word w(rank);
  for (std::size_t i = len(rng); i > 0; --i) w.push({gen(rng), exp(rng)});
  return w;
}

int cmd_selfcheck(Format format, std::ostream& out) {
  std::vector<std::pair<std::string, bool>> checks;
  auto check = [&](std::string name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    checks.emplace_back(std::move(name), ok);
  };

  const IcosianGroup& ico = binary_icosahedral();
  const FiniteGroup& g = ico.group();
  const Quaternion s = IcosianGroup::generator_s();
  const Quaternion t = IcosianGroup::generator_t();
  const GoldenNum phi = GoldenNum::phi();
  const Quaternion one = Quaternion::one();

  check("2I has order 120", [&] { return g.size() == 120; });
  check("2I group axioms", [&] { return g.satisfies_group_axioms(); });
  check("every icosian has norm 1", [&] {
    for (const auto& q : ico.elements())
      if (q.norm() != GoldenNum(1)) return false;
    return true;
  });
  check("center of 2I is {1, -1}", [&] {
    auto z = center(g);
    return z.size() == 2 && z[0] == g.identity() && z[1] == ico.minus_one();
  });
  check("2I/{1,-1} has order 60, nonabelian, simple", [&] {
    CentralQuotient cq = central_quotient(ico);
    return cq.group.size() == 60 && !is_abelian(cq.group) && is_simple(cq.group);
  });
  check("s^3 = -1, t^5 = -1, (st)^2 = -1", [&] {
    return quat_pow(s, 3) == -one && quat_pow(t, 5) == -one && quat_pow(s * t, 2) == -one;
  });
  const Quaternion x5 = one - quat_pow(t, 2) + quat_pow(t, 4) - quat_pow(t, 6) + quat_pow(t, 8);
  const Quaternion y_image = s * s * t * t * s;
  check("1 - t^2 + t^4 - t^6 + t^8 = 1 + (phi-2)i + (1-phi)j",
        [&] { return x5 == Quaternion(1, phi - 2, GoldenNum(1) - phi, 0); });
  check("(1 - t^2 + t^4 - t^6 + t^8)(1 - s^2 t^2 s) = phi + (1-phi)j + k",
        [&] { return x5 * (one - y_image) == Quaternion(phi, 0, GoldenNum(1) - phi, 1); });
  check("affine specialization (200 random words)", [&] {
    std::mt19937_64 rng(20231);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<Element> pick(0, 119);
      std::vector<Quaternion> images{ico.quaternion(pick(rng)), ico.quaternion(pick(rng))};
      std::vector<Quaternion> u{random_quaternion(rng), random_quaternion(rng)};
      Word w = random_word(rng, 2, 12);
      std::vector<AffineElement> gens{{u[0], images[0]}, {u[1], images[1]}};
      AffineElement concrete = eval_word(w, std::span<const AffineElement>(gens), AffineGroupOps{});
      if (specialize(symbolic_eval(w, images), u) != concrete) return false;
    }
    return true;
  });
  check("family map kills both relators for N = 0, k = 5", [&] {
    GroupHom h = family_hom(0, 5);
    return h.verified() && is_surjective(h, g);
  });

  bool all = true;
  for (const auto& [name, ok] : checks) all = all && ok;
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& [name, ok] : checks) arr.push_back({{"check", name}, {"pass", ok}});
    out << Json{{"checks", arr}, {"all_pass", all}}.dump(2) << '\n';
  } else {
    for (const auto& [name, ok] : checks) out << (ok ? "PASS " : "FAIL ") << name << '\n';
    out << (all ? "all checks pass" : "selfcheck FAILED") << '\n';
  }
  return all ? kExitOk : kExitFailed;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw InputError("unknown format '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of quotient-dimension computations for 2-bridge knot surgeries", "qdim"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string format_name = "text";
  KnotInput knot;
  HomsFlags homs;
  CertifyFlags certify;
  bool with_control = false;
  unsigned table_jobs = 1;

  auto add_knot_options = [&](CLI::App* cmd) {
    cmd->add_option("knot", knot.knot, "2-bridge knot as p/q, e.g. 27/13");
    cmd->add_option("--surgery", knot.surgery, "1/n Dehn filling coefficient n");
    cmd->add_option("--presentation", knot.presentation,
                    "explicit presentation 'gens: x, y ; rels: <word> , <word>'");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* present = app.add_subcommand("present", "print a knot or filling presentation");
  add_knot_options(present);
  add_format(present);

  auto* homs_cmd = app.add_subcommand("homs", "enumerate homomorphisms into a finite group");
  add_knot_options(homs_cmd);
  add_format(homs_cmd);
  homs_cmd->add_option("--target", homs.target, "a5, 2i or c:<d>")->required();
  homs_cmd->add_flag("--surjective", homs.surjective, "only surjections");
  homs_cmd->add_flag("--exact-count", homs.exact_count, "cross-check by full enumeration");
  homs_cmd->add_option("--jobs", homs.jobs, "worker threads")->check(CLI::Range(1U, 256U));
  homs_cmd->add_option("--bound", homs.bound, "largest target order accepted");
  homs_cmd->add_option("--max-list", homs.max_list, "homomorphisms shown in text output");

  auto* certify_cmd = app.add_subcommand("certify", "issue a quotient-dimension certificate");
  certify_cmd->add_option("kind", certify.kind, "2 (family) or 3 (A5 criterion)")->required();
  certify_cmd->add_option("knot", knot.knot, "knot p/q for kind 3");
  certify_cmd->add_option("--presentation", knot.presentation, "explicit presentation for kind 3");
  certify_cmd->add_option("--surgery", knot.surgery, "not accepted; certify 3 uses the knot group");
  certify_cmd->add_option("--family", certify.family, "family index N >= 0 for kind 2");
  certify_cmd->add_option("--k", certify.k, "k with 10k - 1 divisible by 7, for kind 2");
  certify_cmd->add_option("--json", certify.json_path, "write the JSON certificate here ('-' = stdout)");
  certify_cmd->add_option("--jobs", certify.jobs, "worker threads")->check(CLI::Range(1U, 256U));

  auto* table = app.add_subcommand("table", "check the A5-nonsurjection table of knots");
  table->add_flag("--with-control", with_control, "append K(27,13), which does map onto A5");
  table->add_option("--jobs", table_jobs, "worker threads")->check(CLI::Range(1U, 256U));
  add_format(table);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in consistency checks");
  add_format(selfcheck);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    const Format format = parse_format(format_name);
    if (*present) return cmd_present(knot, format, out);
    if (*homs_cmd) return cmd_homs(knot, homs, format, out);
    if (*certify_cmd) return cmd_certify(certify, knot, out);
    if (*table) return cmd_table(with_control, table_jobs, format, out);
    if (*selfcheck) return cmd_selfcheck(format, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitInput;
}

}  // namespace qdim::cli
