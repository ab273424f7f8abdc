#pragma once

// The hyperkit command-line surface. Exit codes: 0 success, 1 a property
// failed, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hyperkit/hyperkit.hpp>

namespace hyperkit::cli {

  enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsage = 2 };

  namespace detail {

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot open " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    inline Structure load(std::string const& path) {
      try {
        return parse_structure(read_file(path));
      } catch (ParseError const& e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":"
                         + std::to_string(e.column()) + ": " + e.message());
      }
    }

    inline void write_output(std::string const& path, std::string const& text,
                             std::ostream& out) {
      if (path.empty()) {
        out << text;
        return;
      }
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        throw UsageError("cannot write " + path);
      }
      f << text;
    }

    inline Neutrality mode(bool strict) {
      return strict ? Neutrality::strict : Neutrality::weak;
    }

    inline char const* kind_name(Structure const& s) {
      return std::holds_alternative<BJoinSemilattice>(s) ? "bjoin" : "lmosaic";
    }

    inline nlohmann::ordered_json document_json(BJoinSemilattice const& s) {
      return nlohmann::ordered_json::parse(serialize_structure(s));
    }

    struct Options {
      std::string file;
      std::string output;
      std::string kind;
      std::string axiom;
      std::string out_dir;
      std::size_t n             = 0;
      bool        json          = false;
      bool        strict        = false;
      bool        count_only    = false;
      bool        general_rho   = false;
      bool        all           = false;
    };

    inline int check(Options const& o, std::ostream& out) {
      auto const  s      = load(o.file);
      auto const  report = std::holds_alternative<BJoinSemilattice>(s)
                               ? check_bjoin(std::get<BJoinSemilattice>(s))
                               : check_lmosaic(std::get<LMosaic>(s),
                                               mode(o.strict));
      if (o.json) {
        nlohmann::ordered_json j = {{"kind", kind_name(s)}};
        j.update(to_json(report));
        out << j.dump(2) << "\n";
      } else {
        out << kind_name(s) << ": " << (report.passed() ? "PASS" : "FAIL")
            << "\n"
            << to_string(report);
      }
      return report.passed() ? kOk : kPropertyFailure;
    }

    inline int nakano_cmd(Options const& o, std::ostream& out) {
      auto const s = load(o.file);
      if (!std::holds_alternative<BJoinSemilattice>(s)) {
        throw UsageError("nakano expects a bjoin document");
      }
      write_output(o.output,
                   serialize_structure(nakano(std::get<BJoinSemilattice>(s))),
                   out);
      return kOk;
    }

    inline int extract_cmd(Options const& o, std::ostream& out) {
      auto const s = load(o.file);
      if (!std::holds_alternative<LMosaic>(s)) {
        throw UsageError("extract expects an lmosaic document");
      }
      write_output(
          o.output,
          serialize_structure(extract_bjoin(std::get<LMosaic>(s), mode(o.strict))),
          out);
      return kOk;
    }

    inline int roundtrip_cmd(Options const& o, std::ostream& out) {
      auto const s = load(o.file);
      auto const d = std::holds_alternative<BJoinSemilattice>(s)
                         ? roundtrip_bjoin(std::get<BJoinSemilattice>(s))
                         : roundtrip_lmosaic(std::get<LMosaic>(s), mode(o.strict));
      if (o.json) {
        out << to_json(d).dump(2) << "\n";
      } else {
        out << d.kind() << "\n";
        for (auto const& x : d.details) {
          out << "  " << x.field;
          for (auto a : x.at) {
            out << " " << a;
          }
          out << ": expected " << x.expected << ", actual " << x.actual
              << "\n";
        }
      }
      return d.identical() ? kOk : kPropertyFailure;
    }

    inline int enumerate_cmd(Options const& o, std::ostream& out) {
      auto const           bounds = enumeration_bounds();
      std::vector<Structure> found;
      if (o.kind == "bjoin") {
        if (o.general_rho) {
          throw UsageError("--general-rho applies to lmosaic enumeration");
        }
        for (auto& s : enumerate_bjoin(o.n, bounds)) {
          found.emplace_back(std::move(s));
        }
      } else if (o.kind == "lmosaic") {
        for (auto& m : enumerate_lmosaic(o.n, bounds, o.general_rho)) {
          found.emplace_back(std::move(m));
        }
      } else {
        throw UsageError("enumerate expects bjoin or lmosaic, found \""
                         + o.kind + "\"");
      }
      if (o.count_only) {
        out << found.size() << "\n";
        return kOk;
      }
      if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        for (auto const& s : found) {
          auto const hash = std::visit(
              [](auto const& x) { return canonical_form(x).short_hash(); }, s);
          auto const path
              = (std::filesystem::path(o.out_dir) / (hash + ".hstruct"))
                    .string();
          write_output(path, serialize_structure(s), out);
          out << path << "\n";
        }
        return kOk;
      }
      for (std::size_t i = 0; i < found.size(); ++i) {
        out << (i == 0 ? "" : "\n") << serialize_structure(found[i]);
      }
      return kOk;
    }

    inline int verify_family_cmd(Options const& o, std::ostream& out) {
      auto const sum = verify_family(o.n);
      if (o.json) {
        out << to_json(sum).dump(2) << "\n";
      } else {
        out << "size " << sum.size << "\n"
            << "  semilattices        " << sum.semilattices << "\n"
            << "  nakano valid        " << sum.nakano_valid << "\n"
            << "  order/lub valid     " << sum.order_valid << "\n"
            << "  bjoin round trips   " << sum.bjoin_roundtrips << "\n";
        if (sum.lmosaics_enumerated) {
          out << "  L-mosaics           " << sum.lmosaics << "\n"
              << "  extract valid       " << sum.extract_valid << "\n"
              << "  lmosaic round trips " << sum.lmosaic_roundtrips << "\n"
              << "  bijection           "
              << (*sum.bijection ? "yes" : "no") << "\n";
        } else {
          out << "  L-mosaics           not enumerated (above bound)\n";
        }
        out << "  failures            " << sum.failures.size() << "\n";
        for (auto const& f : sum.failures) {
          out << "    " << f << "\n";
        }
      }
      return sum.ok() ? kOk : kPropertyFailure;
    }

    inline int ablate_cmd(Options const& o, std::ostream& out) {
      auto const                  axiom = parse_axiom(o.axiom);
      std::vector<AblationResult> results;
      if (o.all) {
        results = ablate_all(o.n, axiom, enumeration_bounds());
      } else if (auto r = ablate(o.n, axiom, enumeration_bounds())) {
        results.push_back(std::move(*r));
      }
      if (o.json) {
        auto arr = nlohmann::ordered_json::array();
        for (auto const& r : results) {
          arr.push_back(to_json(r));
        }
        out << (o.all ? arr
                      : (results.empty() ? nlohmann::ordered_json(nullptr)
                                         : arr[0]))
                   .dump(2)
            << "\n";
        return kOk;
      }
      if (results.empty()) {
        out << "none\n";
        return kOk;
      }
      for (auto const& r : results) {
        out << "dropped " << name(r.dropped) << "\n"
            << serialize_structure(r.structure) << "broken:\n";
        for (auto const& b : r.broken) {
          out << "  " << b.property << " " << to_string(b.witness) << "\n";
        }
      }
      return kOk;
    }

    inline int assoc_scan_cmd(Options const& o, std::ostream& out) {
      auto const bounds = enumeration_bounds();
      hyperkit::detail::check_bound(o.n, bounds.bjoin, "assoc-scan");
      for (std::size_t k = 1; k <= o.n; ++k) {
        for (auto const& s : enumerate_bjoin(k, bounds)) {
          auto const w = hyper_assoc_witness(nakano(s));
          if (!w) {
            continue;
          }
          auto const hash = canonical_form(s).short_hash();
          if (o.json) {
            nlohmann::ordered_json j = {{"size", k},
                                        {"class", hash},
                                        {"triple", *w},
                                        {"semilattice", document_json(s)}};
            out << j.dump(2) << "\n";
          } else {
            out << "size " << k << " class " << hash << " triple ("
                << (*w)[0] << "," << (*w)[1] << "," << (*w)[2] << ")\n"
                << serialize_structure(s);
          }
          return kOk;
        }
      }
      out << (o.json ? "null" : "none") << "\n";
      return kOk;
    }

    inline int hasse_cmd(Options const& o, std::ostream& out) {
      auto const s   = load(o.file);
      auto const dot = std::holds_alternative<BJoinSemilattice>(s)
                           ? emit_hasse(std::get<BJoinSemilattice>(s))
                           : emit_hasse(std::get<LMosaic>(s), mode(o.strict));
      write_output(o.output, dot, out);
      return kOk;
    }

  }  // namespace detail

  // args excludes the program name.
  inline int run(std::vector<std::string> const& args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Finite L-mosaics and bounded join-semilattices", "hyperkit"};
    app.require_subcommand(1);
    detail::Options o;

    auto* check = app.add_subcommand("check", "check the axioms of a structure");
    check->add_option("file", o.file)->required();
    check->add_flag("--strict-neutral", o.strict);
    check->add_flag("--json", o.json);

    auto* nak = app.add_subcommand("nakano", "semilattice -> L-mosaic");
    nak->add_option("file", o.file)->required();
    nak->add_option("-o,--output", o.output);

    auto* ext = app.add_subcommand("extract", "L-mosaic -> semilattice");
    ext->add_option("file", o.file)->required();
    ext->add_option("-o,--output", o.output);
    ext->add_flag("--strict-neutral", o.strict);

    auto* rt = app.add_subcommand("roundtrip", "compare a round trip");
    rt->add_option("file", o.file)->required();
    rt->add_flag("--strict-neutral", o.strict);
    rt->add_flag("--json", o.json);

    auto* en = app.add_subcommand("enumerate", "structures up to isomorphism");
    en->add_option("kind", o.kind)->required();
    en->add_option("n", o.n)->required();
    en->add_flag("--count-only", o.count_only);
    en->add_option("--out-dir", o.out_dir);
    en->add_flag("--general-rho", o.general_rho);

    auto* vf = app.add_subcommand("verify-family",
                                  "check both constructions over size n");
    vf->add_option("n", o.n)->required();
    vf->add_flag("--json", o.json);

    auto* ab = app.add_subcommand("ablate", "drop one L-mosaic axiom");
    ab->add_option("n", o.n)->required();
    ab->add_option("axiom", o.axiom)->required();
    ab->add_flag("--all", o.all);
    ab->add_flag("--json", o.json);

    auto* as = app.add_subcommand(
        "assoc-scan", "first non-associative Nakano structure up to size n");
    as->add_option("n", o.n)->required();
    as->add_flag("--json", o.json);

    auto* ha = app.add_subcommand("hasse", "Hasse diagram as DOT");
    ha->add_option("file", o.file)->required();
    ha->add_option("-o,--output", o.output);
    ha->add_flag("--strict-neutral", o.strict);

    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
      if (check->parsed()) {
        return detail::check(o, out);
      }
      if (nak->parsed()) {
        return detail::nakano_cmd(o, out);
      }
      if (ext->parsed()) {
        return detail::extract_cmd(o, out);
      }
      if (rt->parsed()) {
        return detail::roundtrip_cmd(o, out);
      }
      if (en->parsed()) {
        return detail::enumerate_cmd(o, out);
      }
      if (vf->parsed()) {
        return detail::verify_family_cmd(o, out);
      }
      if (ab->parsed()) {
        return detail::ablate_cmd(o, out);
      }
      if (as->parsed()) {
        return detail::assoc_scan_cmd(o, out);
      }
      return detail::hasse_cmd(o, out);
    } catch (AxiomViolation const& e) {
      err << e.what() << "\n" << to_string(e.report());
      return kPropertyFailure;
    } catch (JoinWitnessError const& e) {
      err << e.what() << "\n";
      return kPropertyFailure;
    } catch (PostconditionViolation const& e) {
      err << e.what() << "\n";
      return kPropertyFailure;
    } catch (Error const& e) {
      // usage, parse and shape errors
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

}  // namespace hyperkit::cli
