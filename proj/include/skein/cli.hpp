#pragma once

#include "golden.hpp"

#include <CLI11.hpp>

#include <regex>

namespace skein {

namespace cli_detail {

enum class Format { Text, Json, Csv };

inline bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

inline std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ValidationError("--d expects A..B, got '" + s + "'");
  int a = std::stoi(m[1]), b = m[2].matched ? std::stoi(m[2]) : a;
  if (a < 1 || b < a) throw ValidationError("--d range must satisfy 1 <= A <= B, got '" + s + "'");
  if (b > 100000) throw ValidationError("--d upper bound too large");
  return {a, b};
}

inline void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

inline void emit_invariant(std::ostream& out, Format f, const TVInvariant<CycloElem>& z, const std::string& knot) {
  if (f == Format::Json) {
    auto j = to_json(z);
    j["knot"] = knot;
    emit_json(out, j);
  } else if (f == Format::Csv) {
    out << "field,value\n";
    out << "knot," << knot << "\n";
    out << "p," << z.p << "\n";
    out << "gamma,\"" << poly_text(z.gamma) << "\"\n";
    out << "D,\"" << ring_text(z.D) << "\"\n";
    out << "flatRank," << z.flat_rank << "\n";
    out << "period," << (z.period ? std::to_string(*z.period) : std::string("none")) << "\n";
  } else {
    out << "knot = " << knot << "\n" << to_text(z);
  }
}

struct Options {
  std::string format = "text";
  std::string file;
  std::optional<int> p;
  std::string J = "U", left, right, suite, d, word;
  int k = 0, c = 0, color = 0, level = 0;
  bool branched = false;
};

}  // namespace cli_detail

// Runs the command line; returns the process exit code.
// 0 success, 1 failed golden checks, 2 validation error, 3 unsupported specialization.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  Options o;
  CLI::App app{"Exact skein-theoretic TQFT invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a closed diagram (.sw or .pd)");
  bracket_cmd->add_option("file", o.file)->required();

  auto* tangle_cmd = app.add_subcommand("tangle", "tangle invariants of a slice word in S1xS2");
  tangle_cmd->add_option("file", o.file)->required();
  tangle_cmd->add_option("--p", o.p, "specialization level");

  auto* double_cmd = app.add_subcommand("double", "invariant of the k-twisted double of J");
  double_cmd->add_option("--J", o.J, "companion knot")->required();
  double_cmd->add_option("--k", o.k, "twist")->required();
  double_cmd->add_option("--p", o.level, "level")->required();
  double_cmd->add_option("--color", o.color, "color");

  auto* covers_cmd = app.add_subcommand("covers", "cyclic or branched cyclic cover values of D(k,J)");
  covers_cmd->add_option("--J", o.J, "companion knot")->required();
  covers_cmd->add_option("--k", o.k, "twist")->required();
  covers_cmd->add_option("--p", o.level, "level")->required();
  covers_cmd->add_option("--d", o.d, "cover degrees A..B")->required();
  covers_cmd->add_flag("--branched", o.branched, "branched covers");

  auto* sum_cmd = app.add_subcommand("sum", "invariant of a connected sum");
  sum_cmd->add_option("--left", o.left)->required();
  sum_cmd->add_option("--right", o.right)->required();
  sum_cmd->add_option("--p", o.level)->required();

  auto* bries_cmd = app.add_subcommand("brieskorn", "quantum invariant of the Brieskorn sphere Sigma(2,3,c)");
  bries_cmd->add_option("--c", o.c)->required();
  bries_cmd->add_option("--p", o.level)->required();

  auto* check_cmd = app.add_subcommand("check", "run a golden suite");
  check_cmd->add_option("--suite", o.suite)->required();
  check_cmd->add_option("--word", o.word, "slice word file for the example45 suite");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Format f = o.format == "json" ? Format::Json : o.format == "csv" ? Format::Csv : Format::Text;
  try {
    worker_count();
    if (*bracket_cmd) {
      std::string text = read_file(o.file);
      LaurentPoly b;
      std::string kind;
      if (has_suffix(o.file, ".pd")) {
        b = network_bracket(PDCode::parse(text));
        kind = "pd";
      } else {
        b = bracket(SliceWord::parse(text));
        kind = "sw";
      }
      if (f == Format::Json)
        emit_json(out, {{"input", kind}, {"bracket", b.str()}});
      else if (f == Format::Csv)
        out << "field,value\nbracket,\"" << b.str() << "\"\n";
      else
        out << "bracket = " << b.str() << "\n";
    } else if (*tangle_cmd) {
      if (!has_suffix(o.file, ".sw")) throw ValidationError("tangle needs a .sw slice word file");
      auto t = tangle_invariant(SliceWord::parse(read_file(o.file)), o.p);
      if (f == Format::Json)
        emit_json(out, to_json(t));
      else if (f == Format::Csv)
        out << "field,value\nD,\"" << t.D.str() << "\"\ngamma,\"" << poly_text(t.gamma) << "\"\nwrapping,"
            << (t.wrapping ? std::to_string(*t.wrapping) : std::string("unknown")) << "\n";
      else
        out << to_text(t);
    } else if (*double_cmd) {
      auto J = KnotRef::parse(o.J);
      auto z = o.color == 0 ? double_invariant(*J, o.k, o.level) : colored_double_invariant(*J, o.k, o.level, o.color);
      std::string name = KnotRef::twisted_double(o.k, J)->str();
      if (o.color) name += " color " + std::to_string(o.color);
      emit_invariant(out, f, z, name);
    } else if (*covers_cmd) {
      auto [a, b] = parse_range(o.d);
      auto K = KnotRef::twisted_double(o.k, KnotRef::parse(o.J));
      std::vector<CycloElem> s =
          o.branched ? branched_series(*K, o.level, b) : cover_series(knot_invariant(*K, o.level), b);
      std::string label = o.branched ? "eta^-1 <K_d>" : "<S3(K)_d>";
      if (f == Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (int d = a; d <= b; ++d) rows.push_back({{"d", d}, {"value", ring_text(s[static_cast<std::size_t>(d)])}});
        emit_json(out, {{"knot", K->str()}, {"p", o.level}, {"branched", o.branched}, {"covers", rows}});
      } else if (f == Format::Csv) {
        out << "d,value\n";
        for (int d = a; d <= b; ++d) out << d << ",\"" << ring_text(s[static_cast<std::size_t>(d)]) << "\"\n";
      } else {
        out << "knot = " << K->str() << "\np = " << o.level << "\n";
        for (int d = a; d <= b; ++d) out << label << " d=" << d << ": " << ring_text(s[static_cast<std::size_t>(d)]) << "\n";
      }
    } else if (*sum_cmd) {
      auto K = KnotRef::sum(KnotRef::parse(o.left), KnotRef::parse(o.right));
      emit_invariant(out, f, knot_invariant(*K, o.level), K->str());
    } else if (*bries_cmd) {
      if (o.c < 1) throw ValidationError("--c must be positive");
      auto v = brieskorn_value(o.c, o.level);
      if (f == Format::Json)
        emit_json(out, {{"c", o.c}, {"p", o.level}, {"value", ring_text(v)}});
      else if (f == Format::Csv)
        out << "c,value\n" << o.c << ",\"" << ring_text(v) << "\"\n";
      else
        out << "<Sigma(2,3," << o.c << ")>_" << o.level << " = " << ring_text(v) << "\n";
    } else if (*check_cmd) {
      std::optional<SliceWord> w;
      if (!o.word.empty()) w = SliceWord::parse(read_file(o.word));
      auto checks = golden_suite(o.suite, w);
      std::size_t passed = 0;
      if (f == Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (auto& c : checks) {
          passed += c.pass;
          rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        emit_json(out, {{"suite", o.suite}, {"passed", passed}, {"total", checks.size()}, {"checks", rows}});
      } else if (f == Format::Csv) {
        out << "name,pass\n";
        for (auto& c : checks) {
          passed += c.pass;
          out << "\"" << c.name << "\"," << (c.pass ? "true" : "false") << "\n";
        }
      } else {
        for (auto& c : checks) {
          passed += c.pass;
          out << (c.pass ? "PASS " : "FAIL ") << c.name;
          if (!c.pass && !c.detail.empty()) out << ": " << c.detail;
          out << "\n";
        }
        out << o.suite << ": " << passed << "/" << checks.size() << " passed\n";
      }
      return passed == checks.size() ? 0 : 1;
    }
  } catch (const UnsupportedSpecialization& e) {
    err << "unsupported specialization: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace skein
