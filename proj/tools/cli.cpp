#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "surjtop/classify.hpp"
#include "surjtop/coeffsys.hpp"
#include "surjtop/families.hpp"
#include "surjtop/foxcalc.hpp"
#include "surjtop/intlinalg.hpp"
#include "surjtop/presentation.hpp"
#include "surjtop/report.hpp"

namespace surjtop::cli {

  namespace {

    // Thrown for input problems that map to exit_invalid.
    class InputError : public Error {
     public:
      using Error::Error;
    };

    bool is_inline(std::string const& input) {
      auto pos = input.find_first_not_of(" \t\r\n");
      return pos != std::string::npos && input[pos] == '<';
    }

    Presentation load_presentation(std::string const& input, std::string& source) {
      if (is_inline(input)) {
        source = input;
        return parse_presentation(input);
      }
      std::ifstream file(input, std::ios::binary);
      if (!file) {
        throw InputError("cannot read presentation file \"" + input + "\"");
      }
      source.assign(std::istreambuf_iterator<char>(file),
                    std::istreambuf_iterator<char>());
      return parse_presentation_document(source);
    }

    void report_parse_error(ParseDiagnostic const& d,
                            std::string const&     source,
                            std::ostream&          err) {
      err << "error: " << to_string(d.kind) << " at offset " << d.position << ": "
          << d.message << '\n';
      std::size_t const at    = std::min(d.position, source.size());
      std::size_t       begin = 0;
      if (at > 0) {
        auto nl = source.rfind('\n', at - 1);
        begin   = nl == std::string::npos ? 0 : nl + 1;
      }
      std::size_t end = source.find('\n', begin);
      end             = end == std::string::npos ? source.size() : end;
      err << "  " << source.substr(begin, end - begin) << '\n'
          << "  " << std::string(at - begin, ' ') << "^\n";
    }

    Json generators_json(GeneratorSet const& g) {
      Json names = Json::array();
      for (auto const& n : g.names()) {
        names.push_back(n);
      }
      return names;
    }

    std::string matrix_rows(IntMatrix const& m, std::string const& indent) {
      if (m.rows() == 0) {
        return indent + "(no rows)\n";
      }
      std::string out;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent + "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
          out += (j == 0 ? "" : ", ") + m(i, j).get_str();
        }
        out += "]\n";
      }
      return out;
    }

    std::string label_or_null(CoefficientSystem const& s) {
      return s.label() ? *s.label() : std::string("-");
    }

    Json label_json(CoefficientSystem const& s) {
      return s.label() ? Json(*s.label()) : Json(nullptr);
    }

    // ---- parse --------------------------------------------------------------

    std::string render_parse(Presentation const& p, Format format) {
      IntMatrix const delta = exponent_matrix(p);
      if (format == Format::json) {
        Json relators = Json::array();
        for (auto const& r : p.relators()) {
          relators.push_back(to_string(r));
        }
        Json out;
        out["presentation"]    = format_presentation(p);
        out["generators"]      = generators_json(p.generators());
        out["relators"]        = std::move(relators);
        out["exponent_matrix"] = to_json(delta);
        return out.dump(2) + "\n";
      }
      std::ostringstream os;
      os << "presentation:    " << format_presentation(p) << '\n'
         << "generators:      " << p.num_generators() << '\n'
         << "relators:        " << p.num_relators() << '\n'
         << "exponent matrix:\n"
         << matrix_rows(delta, "  ");
      return os.str();
    }

    // ---- h2 -----------------------------------------------------------------

    std::string render_h2(Presentation const& p, std::string const& alpha, Format format) {
      SignAssignment const signs  = parse_sign_assignment(p.generators(), alpha);
      CoefficientSystem const sys = CoefficientSystem::make(p, signs);
      IntMatrix const delta       = exponent_matrix(p);
      IntMatrix const twisted     = twisted_matrix(p, sys.signs());
      SmithForm const snf         = smith_normal_form(twisted);
      AbelianGroup const h2       = cokernel(twisted);
      auto const order            = group_order(h2);
      if (format == Format::json) {
        Json diag = Json::array();
        for (auto const& d : snf.diagonal) {
          diag.push_back(to_json(d));
        }
        Json out;
        out["presentation"]    = format_presentation(p);
        out["signs"]           = signs_to_json(p.generators(), sys.signs());
        out["label"]           = label_json(sys);
        out["exponent_matrix"] = to_json(delta);
        out["delta_alpha"]     = to_json(twisted);
        out["smith_diagonal"]  = std::move(diag);
        out["h2"]              = to_json(h2);
        out["order"]           = order ? to_json(*order) : Json(nullptr);
        return out.dump(2) + "\n";
      }
      std::ostringstream os;
      os << "presentation:    " << format_presentation(p) << '\n'
         << "coefficients:    " << format_sign_assignment(p.generators(), sys.signs())
         << (sys.label() ? " (" + *sys.label() + ")" : std::string()) << '\n'
         << "exponent matrix:\n"
         << matrix_rows(delta, "  ") << "twisted matrix:\n"
         << matrix_rows(twisted, "  ") << "smith diagonal:  ";
      if (snf.diagonal.empty()) {
        os << "(none)";
      }
      for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        os << (i == 0 ? "" : ", ") << snf.diagonal[i].get_str();
      }
      os << '\n'
         << "H2:              " << to_string(h2) << '\n'
         << "order:           " << (order ? order->get_str() : "infinite") << '\n';
      return os.str();
    }

    // ---- systems ------------------------------------------------------------

    std::string render_systems(Presentation const& p, Format format) {
      auto const systems = enumerate_systems(p);
      std::size_t const rank2 = rank_mod2(exponent_matrix(p));
      if (format == Format::json) {
        Json list = Json::array();
        for (auto const& s : systems) {
          Json e;
          e["signs"] = signs_to_json(p.generators(), s.signs());
          e["label"] = label_json(s);
          list.push_back(std::move(e));
        }
        Json out;
        out["presentation"] = format_presentation(p);
        out["rank_mod2"]    = rank2;
        out["count"]        = systems.size();
        out["systems"]      = std::move(list);
        return out.dump(2) + "\n";
      }
      std::ostringstream os;
      os << "presentation: " << format_presentation(p) << '\n'
         << "systems:      " << systems.size() << " (2^" << p.num_generators() - rank2
         << ")\n";
      for (auto const& s : systems) {
        os << "  " << std::left << std::setw(9) << label_or_null(s)
           << format_sign_assignment(p.generators(), s.signs()) << '\n';
      }
      return os.str();
    }

    // ---- classify -----------------------------------------------------------

    std::string render_classify(Presentation const&         p,
                                ClassificationReport const& report,
                                Format                      format) {
      if (format == Format::json) {
        return to_json(report, p.generators()).dump(2) + "\n";
      }
      std::ostringstream os;
      os << "presentation: " << report.presentation << '\n'
         << "untwisted H2: " << to_string(report.h2_untwisted) << '\n';
      if (!report.hypothesis_ok) {
        os << "hypothesis:   failed (" << report.reason << ")\n";
        return os.str();
      }
      os << "hypothesis:   ok (finite of odd order)\n\n";
      os << std::left << std::setw(10) << "system" << std::setw(22) << "signs"
         << std::setw(14) << "H2" << std::setw(8) << "c*" << std::setw(8) << "c"
         << "strongly surjective\n";
      for (auto const& a : report.reports) {
        os << std::left << std::setw(10) << label_or_null(a.system) << std::setw(22)
           << format_sign_assignment(p.generators(), a.system.signs()) << std::setw(14)
           << to_string(a.h2) << std::setw(8) << a.c_star.get_str() << std::setw(8)
           << a.c_free.get_str() << a.strongly_surjective.get_str() << '\n';
      }
      os << "\ntotals: " << report.total_free_classes.get_str() << " free classes, "
         << report.total_strongly_surjective.get_str() << " strongly surjective\n"
         << "in each system the class that is not strongly surjective is the "
         << non_surjective_witness << '\n';
      return os.str();
    }

    // ---- families -----------------------------------------------------------

    std::optional<std::string> find_param(CliConfig const& c, std::string const& name) {
      for (auto const& [k, v] : c.params) {
        if (k == name) {
          return v;
        }
      }
      return std::nullopt;
    }

    FamilyParams single_params(CliConfig const& c) {
      FamilyParams params;
      std::map<std::string, Integer*> slots{{"k", &params.k}, {"l", &params.l},
                                            {"p", &params.p}, {"q", &params.q},
                                            {"j", &params.j}, {"n", &params.n}};
      for (auto& [name, slot] : slots) {
        if (auto v = find_param(c, name)) {
          *slot = parse_integer(*v);
        }
      }
      return params;
    }

    std::vector<std::string> family_param_names(Family f) {
      switch (f) {
        case Family::example_k1:
          return {"k"};
        case Family::example_k2:
          return {"k", "l"};
        case Family::case1:
        case Family::case2:
          return {"p", "q", "j"};
        case Family::case3:
          return {"p", "q", "n"};
      }
      return {};
    }

    Integer param_value(FamilyParams const& params, std::string const& name) {
      if (name == "k") return params.k;
      if (name == "l") return params.l;
      if (name == "p") return params.p;
      if (name == "q") return params.q;
      if (name == "j") return params.j;
      return params.n;
    }

    struct FamilyOutcome {
      std::string label;
      Integer     a, b;
      Integer     predicted;
      std::optional<Integer> computed;  // nullopt: system not admissible or infinite
      bool        match = false;
    };

    FamilyOutcome evaluate(Presentation const& pres, std::string const& label,
                           Integer const& predicted) {
      FamilyOutcome o;
      o.label             = label;
      o.predicted         = predicted;
      IntMatrix const delta = exponent_matrix(pres);
      o.a = delta(0, 0);
      o.b = delta(0, 1);
      for (auto const& s : enumerate_systems(pres)) {
        if (s.label() == label) {
          o.computed = group_order(cokernel(twisted_matrix(pres, s.signs())));
        }
      }
      o.match = o.computed && *o.computed == predicted
                && check_hypothesis(pres).ok;
      return o;
    }

    Json params_json(std::vector<std::string> const& names, FamilyParams const& params) {
      Json out = Json::object();
      for (auto const& n : names) {
        out[n] = to_json(param_value(params, n));
      }
      return out;
    }

    std::string render_family(CliConfig const& c, bool& verified) {
      Family const       family = parse_family(c.family);
      FamilyParams const params = single_params(c);
      Presentation const pres   = build_family(family, params);
      auto const         pred   = predict_family(family, params);
      FamilyOutcome const o     = evaluate(pres, pred.label, pred.order);
      verified                  = o.match;
      auto const names          = family_param_names(family);
      if (c.format == Format::json) {
        Json out;
        out["family"]          = std::string(to_string(family));
        out["params"]          = params_json(names, params);
        out["presentation"]    = format_presentation(pres);
        out["a"]               = to_json(o.a);
        out["b"]               = to_json(o.b);
        out["system"]          = pred.label;
        out["predicted_order"] = to_json(o.predicted);
        out["computed_order"]  = o.computed ? to_json(*o.computed) : Json(nullptr);
        out["verified"]        = o.match;
        return out.dump(2) + "\n";
      }
      std::ostringstream os;
      os << "family:        " << to_string(family);
      for (auto const& n : names) {
        os << ' ' << n << '=' << param_value(params, n).get_str();
      }
      os << '\n'
         << "presentation:  " << format_presentation(pres) << '\n'
         << "(a, b):        (" << o.a.get_str() << ", " << o.b.get_str() << ")\n"
         << "predicted:     order " << o.predicted.get_str() << " under " << pred.label
         << '\n'
         << "computed:      "
         << (o.computed ? "order " + o.computed->get_str() : std::string("n/a")) << ", "
         << (o.match ? "verified" : "MISMATCH") << '\n';
      return os.str();
    }

    std::string render_realize(CliConfig const& c) {
      auto get = [&](char const* name) {
        auto v = find_param(c, name);
        if (!v) {
          throw InputError(std::string("realize requires --") + name);
        }
        return parse_integer(*v);
      };
      Integer const     a = get("a");
      Integer const     b = get("b");
      Integer const     cc = get("c");
      Realization const r  = realize_order(a, b, cc);
      std::string const label = display_name(r.presentation.generators(), r.system);
      auto const names = family_param_names(r.family);
      if (c.format == Format::json) {
        Json out;
        out["presentation"] = format_presentation(r.presentation);
        out["a"]            = to_json(a);
        out["b"]            = to_json(b);
        out["c"]            = to_json(cc);
        out["family"]       = std::string(to_string(r.family));
        out["params"]       = params_json(names, r.params);
        out["system"]       = label;
        out["order"]        = to_json(r.order);
        out["verified"]     = true;
        return out.dump(2) + "\n";
      }
      std::ostringstream os;
      os << format_presentation(r.presentation) << '\n'
         << "order " << r.order.get_str() << " under " << label << ", verified ("
         << to_string(r.family);
      for (auto const& n : names) {
        os << ' ' << n << '=' << param_value(r.params, n).get_str();
      }
      os << ")\n";
      return os.str();
    }

    // ---- sweep --------------------------------------------------------------

    std::pair<long, long> parse_range(std::string const& name, std::string const& text) {
      auto const dots = text.find("..");
      Integer    lo, hi;
      if (dots == std::string::npos) {
        lo = hi = parse_integer(text);
      } else {
        lo = parse_integer(text.substr(0, dots));
        hi = parse_integer(text.substr(dots + 2));
      }
      if (!lo.fits_slong_p() || !hi.fits_slong_p() || lo > hi) {
        throw InputError("invalid range for --" + name + ": \"" + text + "\"");
      }
      return {lo.get_si(), hi.get_si()};
    }

    struct SweepRow {
      std::vector<std::pair<std::string, long>> params;
      FamilyOutcome                             outcome;
    };

    std::vector<std::vector<std::pair<std::string, long>>> cartesian(
        std::vector<std::string> const& names,
        CliConfig const&                c,
        std::map<std::string, long> const& defaults) {
      std::vector<std::vector<std::pair<std::string, long>>> tuples{{}};
      for (auto const& name : names) {
        std::pair<long, long> range;
        if (auto v = find_param(c, name)) {
          range = parse_range(name, *v);
        } else if (auto d = defaults.find(name); d != defaults.end()) {
          range = {d->second, d->second};
        } else {
          throw InputError("sweep requires --" + name);
        }
        if (range.second - range.first > 100'000) {
          throw InputError("range for --" + name + " is too large");
        }
        std::vector<std::vector<std::pair<std::string, long>>> next;
        for (auto const& t : tuples) {
          for (long v = range.first; v <= range.second; ++v) {
            auto u = t;
            u.emplace_back(name, v);
            next.push_back(std::move(u));
          }
        }
        tuples = std::move(next);
      }
      return tuples;
    }

    // Returns nullopt for tuples outside the family's parameter domain.
    std::optional<FamilyOutcome> sweep_one(std::string const& family,
                                           std::vector<std::pair<std::string, long>> const& t) {
      auto value = [&](std::string const& n) {
        for (auto const& [k, v] : t) {
          if (k == n) {
            return Integer(v);
          }
        }
        return Integer(0);
      };
      if (family == "realize") {
        Integer const a = value("a"), b = value("b"), c = value("c");
        if (a < 2 || b < 2 || gcd(a, b) != 1 || sgn(c) <= 0 || is_even(c)) {
          return std::nullopt;
        }
        FamilyOutcome o;
        try {
          Realization r = realize_order(a, b, c);
          o = evaluate(r.presentation, *r.system.label(), c);
          o.match = o.match && o.a == a && o.b == b;
        } catch (InternalError const&) {
          o.a = a;
          o.b = b;
          o.predicted = c;
          o.match = false;
        }
        return o;
      }
      Family const f = parse_family(family);
      FamilyParams params;
      for (auto const& [k, v] : t) {
        if (k == "k") params.k = v;
        if (k == "l") params.l = v;
        if (k == "p") params.p = v;
        if (k == "q") params.q = v;
        if (k == "j") params.j = v;
        if (k == "n") params.n = v;
      }
      std::optional<Presentation> pres;
      try {
        pres = build_family(f, params);
      } catch (InternalError const&) {
        throw;
      } catch (Error const&) {
        return std::nullopt;
      }
      auto const pred = predict_family(f, params);
      return evaluate(*pres, pred.label, pred.order);
    }

    std::string render_sweep(CliConfig const& c, bool& all_match) {
      if (c.family.empty()) {
        throw InputError("sweep requires --family");
      }
      std::vector<std::string> names;
      std::map<std::string, long> defaults{{"k", 1}, {"l", 0}, {"p", 0},
                                           {"q", 0}, {"j", 0}, {"n", 1}};
      if (c.family == "realize") {
        names = {"a", "b", "c"};
      } else {
        names = family_param_names(parse_family(c.family));
      }
      auto const tuples = cartesian(names, c, defaults);

      std::vector<std::optional<FamilyOutcome>> slots(tuples.size());
      std::size_t const workers = std::clamp<std::size_t>(
          std::thread::hardware_concurrency(), 1, std::max<std::size_t>(tuples.size(), 1));
      std::vector<std::future<void>> pending;
      for (std::size_t w = 0; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t i = w; i < tuples.size(); i += workers) {
            slots[i] = sweep_one(c.family, tuples[i]);
          }
        }));
      }
      for (auto& f : pending) {
        f.get();
      }

      std::vector<SweepRow> rows;
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (slots[i]) {
          rows.push_back({tuples[i], *slots[i]});
        }
      }
      all_match = std::all_of(rows.begin(), rows.end(),
                              [](SweepRow const& r) { return r.outcome.match; });

      if (c.format == Format::json) {
        Json list = Json::array();
        for (auto const& r : rows) {
          Json e;
          Json params = Json::object();
          for (auto const& [k, v] : r.params) {
            params[k] = v;
          }
          e["params"]    = std::move(params);
          e["a"]         = to_json(r.outcome.a);
          e["b"]         = to_json(r.outcome.b);
          e["system"]    = r.outcome.label;
          e["predicted"] = to_json(r.outcome.predicted);
          e["computed"]  = r.outcome.computed ? to_json(*r.outcome.computed) : Json(nullptr);
          e["match"]     = r.outcome.match;
          list.push_back(std::move(e));
        }
        Json out;
        out["family"] = c.family;
        out["rows"]   = std::move(list);
        out["all_match"] = all_match;
        return out.dump(2) + "\n";
      }
      std::ostringstream os;
      os << std::left << std::setw(24) << "params" << std::setw(10) << "(a,b)"
         << std::setw(8) << "system" << std::setw(11) << "predicted" << std::setw(10)
         << "computed" << "match\n";
      for (auto const& r : rows) {
        std::string p;
        for (auto const& [k, v] : r.params) {
          p += (p.empty() ? "" : " ") + k + "=" + std::to_string(v);
        }
        os << std::left << std::setw(24) << p << std::setw(10)
           << "(" + r.outcome.a.get_str() + "," + r.outcome.b.get_str() + ")"
           << std::setw(8) << r.outcome.label << std::setw(11)
           << r.outcome.predicted.get_str() << std::setw(10)
           << (r.outcome.computed ? r.outcome.computed->get_str() : "-")
           << (r.outcome.match ? "true" : "false") << '\n';
      }
      os << rows.size() << " rows, " << (all_match ? "all match" : "MISMATCH") << '\n';
      return os.str();
    }

    int emit(CliConfig const& c, std::string const& text, std::ostream& out,
             std::ostream& err) {
      if (c.out_path.empty()) {
        out << text;
        out.flush();
        return exit_ok;
      }
      std::ofstream file(c.out_path, std::ios::binary);
      if (!file || !(file << text)) {
        err << "error: cannot write " << c.out_path << '\n';
        return exit_usage;
      }
      return exit_ok;
    }

  }  // namespace

  int run(CliConfig const& c, std::ostream& out, std::ostream& err) {
    std::string source;
    try {
      std::string text;
      int         code = exit_ok;
      switch (c.command) {
        case Command::parse:
          text = render_parse(load_presentation(c.input, source), c.format);
          break;
        case Command::h2:
          text = render_h2(load_presentation(c.input, source), c.alpha, c.format);
          break;
        case Command::systems:
          text = render_systems(load_presentation(c.input, source), c.format);
          break;
        case Command::classify: {
          Presentation const p = load_presentation(c.input, source);
          ClassificationReport const report =
              classify_presentation(p, ClassifyOptions{c.paranoid});
          text = render_classify(p, report, c.format);
          if (!report.hypothesis_ok) {
            err << "hypothesis failed: " << report.reason << '\n';
            code = exit_hypothesis;
          }
          break;
        }
        case Command::family: {
          bool verified = false;
          text          = render_family(c, verified);
          code          = verified ? exit_ok : exit_internal;
          break;
        }
        case Command::realize:
          text = render_realize(c);
          break;
        case Command::sweep: {
          bool all_match = false;
          text           = render_sweep(c, all_match);
          if (!all_match) {
            err << "error: sweep found rows whose computed order differs from "
                   "the prediction\n";
            code = exit_internal;
          }
          break;
        }
      }
      int const written = emit(c, text, out, err);
      return written != exit_ok ? written : code;
    } catch (ParseError const& e) {
      report_parse_error(e.diagnostic(), source, err);
      return exit_invalid;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_internal;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_invalid;
    }
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err,
          Environment const&              env) {
    CLI::App app{"Twisted cohomology of presentation complexes and maps into RP^2",
                 "surjtop"};
    app.require_subcommand(1, 1);

    CliConfig   config;
    std::string format;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", config.out_path, "Write output to this file");
    app.add_flag("--paranoid", config.paranoid,
                 "Cross-check every coefficient system independently");
    app.add_option("--alpha", config.alpha,
                   "Sign assignment, e.g. \"x=-1, y=+1\"; omitted generators are +1");

    std::map<std::string, std::string> raw_params;
    auto add_params = [&](CLI::App* sub, std::vector<std::string> const& names) {
      for (auto const& n : names) {
        sub->add_option("--" + n, raw_params[n]);
      }
    };

    auto* parse = app.add_subcommand("parse", "Canonical form and exponent matrix");
    auto* h2    = app.add_subcommand("h2", "Twisted second cohomology for one system");
    auto* sys   = app.add_subcommand("systems", "Enumerate coefficient systems");
    auto* cls   = app.add_subcommand("classify", "Classify maps into RP^2");
    for (auto* sub : {parse, h2, sys, cls}) {
      sub->add_option("input", config.input,
                      "Inline presentation \"< x | x^2 >\" or a file path")
          ->required();
      sub->fallthrough();
    }
    auto* fam = app.add_subcommand("family", "Emit a member of a word family");
    fam->add_option("name", config.family, "example-k1, example-k2, case1, case2, case3");
    fam->add_option("--family", config.family, "Family name");
    add_params(fam, {"k", "l", "p", "q", "j", "n"});
    fam->fallthrough();

    auto* real = app.add_subcommand("realize", "Word with exponent sums (a,b) and order c");
    add_params(real, {"a", "b", "c"});
    real->fallthrough();

    auto* sweep = app.add_subcommand("sweep", "Check a family over parameter ranges");
    sweep->add_option("--family", config.family,
                      "example-k1, example-k2, case1, case2, case3 or realize")
        ->required();
    add_params(sweep, {"k", "l", "p", "q", "j", "n", "a", "b", "c"});
    sweep->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    std::map<CLI::App*, Command> commands{
        {parse, Command::parse},     {h2, Command::h2},   {sys, Command::systems},
        {cls, Command::classify},    {fam, Command::family}, {real, Command::realize},
        {sweep, Command::sweep}};
    config.command = commands.at(app.get_subcommands().front());

    if (config.command == Command::family && config.family.empty()) {
      err << "error: family requires a family name\n";
      return exit_usage;
    }

    for (auto const& [name, value] : raw_params) {
      if (!value.empty()) {
        config.params.emplace_back(name, value);
      }
    }

    if (!format.empty()) {
      config.format = format == "json" ? Format::json : Format::table;
    } else if (env.format_variable && !env.format_variable->empty()) {
      if (*env.format_variable == "json") {
        config.format = Format::json;
      } else if (*env.format_variable == "table") {
        config.format = Format::table;
      } else {
        err << "error: SURJTOP_FORMAT must be json or table\n";
        return exit_usage;
      }
    } else {
      config.format = env.stdout_is_terminal && config.out_path.empty() ? Format::table
                                                                         : Format::json;
    }
    return run(config, out, err);
  }

}  // namespace surjtop::cli
