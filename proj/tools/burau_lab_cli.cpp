// burau-lab: command-line front end.
//
//   generators  Schreier generators of R_n or of a window of R_0
//   rewrite     Reidemeister rewriting (and abelianization) of a word
//   burau       Burau matrix of a braid over Z[t,t^-1]
//   reduced     the same with t -> companion matrix of 1 + x + ... + x^{n-1}
//   eigen       the same with t -> x^nu in Z[x]/(1 + x + ... + x^{n-1})
//   proell      pro-l Burau matrix of (N, w_i) data
//   verify      property suites
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burau_lab/burau_lab.hpp"
#include "burau_lab/json.hpp"

namespace bl = burau_lab;

namespace {

  constexpr int exit_ok      = 0;
  constexpr int exit_failure = 1;
  constexpr int exit_usage   = 2;

  std::pair<std::int64_t, std::int64_t> parse_window(std::string const& text) {
    auto const colon = text.find(':');
    if (colon == std::string::npos) {
      throw bl::ParseError("window must look like lo:hi, got '" + text + "'");
    }
    try {
      std::size_t  a = 0, b = 0;
      std::int64_t lo = std::stoll(text.substr(0, colon), &a);
      std::int64_t hi = std::stoll(text.substr(colon + 1), &b);
      if (a != colon || b != text.size() - colon - 1) {
        throw bl::ParseError("");
      }
      return {lo, hi};
    } catch (std::exception const&) {
      throw bl::ParseError("window must look like lo:hi, got '" + text + "'");
    }
  }

  bl::Transversal make_transversal(int s, std::optional<std::int64_t> n,
                                   std::optional<std::string> const& window) {
    if (n.has_value() == window.has_value()) {
      throw bl::ParseError("give exactly one of --n and --window");
    }
    if (n) {
      return bl::Transversal::finite_cyclic(s, *n);
    }
    auto [lo, hi] = parse_window(*window);
    return bl::Transversal::window(s, lo, hi);
  }

  std::string transversal_name(bl::Transversal const& t) {
    if (t.is_finite()) {
      return "finite_cyclic(" + std::to_string(t.n()) + ")";
    }
    return "window(" + std::to_string(t.lo()) + ":" + std::to_string(t.hi()) + ")";
  }

  template <typename R>
  void print_matrix(bl::Matrix<R> const& m) {
    std::cout << bl::format_matrix(m, [](R const& x) { return bl::to_string(x); });
  }

  void print_json(bl::json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  //////////////////////////////////////////////////////////////////////

  struct GeneratorsOpts {
    int                         s = 3;
    std::optional<std::int64_t> n;
    std::optional<std::string>  window;
    bool                        json = false;
  };

  int run_generators(GeneratorsOpts const& o) {
    auto const t    = make_transversal(o.s, o.n, o.window);
    auto const gens = bl::schreier_generators(t);
    if (o.json) {
      bl::json list = bl::json::array();
      for (auto const& g : gens) {
        list.push_back({{"name", g.name()}, {"word", to_string(g.expansion())}});
      }
      print_json({{"kind", "generators"},
                  {"s", o.s},
                  {"transversal", transversal_name(t)},
                  {"count", gens.size()},
                  {"generators", list}});
    } else {
      for (auto const& g : gens) {
        std::cout << g.expansion() << '\n';
      }
    }
    return exit_ok;
  }

  struct RewriteOpts {
    int                         s = 3;
    std::string                 word;
    std::optional<std::int64_t> n;
    std::optional<std::string>  window;
    bool                        abelianize = false;
    bool                        json       = false;
  };

  int run_rewrite(RewriteOpts const& o) {
    auto const w     = bl::parse_word(o.word, o.s);
    auto const t     = make_transversal(o.s, o.n, o.window);
    auto const terms = bl::rewrite(w, t);

    bl::json ab;
    std::string ab_text;
    if (o.abelianize) {
      if (t.is_finite()) {
        auto v  = bl::abelianize_Rn(w, t.n());
        ab      = {{"coords", v.coords}, {"extra", bl::integer_to_json(*v.extra)}};
        ab_text = bl::format_vector(v, [](auto const& x) { return to_string(x); });
      } else {
        auto v  = bl::abelianize_R0(w, t);
        ab      = {{"coords", v.coords}};
        ab_text = bl::format_vector(v, [](auto const& x) { return to_string(x); });
      }
    }
    if (o.json) {
      bl::json list = bl::json::array();
      for (auto const& term : terms) {
        list.push_back({{"generator", term.generator.name()},
                        {"word", to_string(term.generator.expansion())},
                        {"sign", term.sign}});
      }
      bl::json out{{"kind", "rewrite"},
                   {"s", o.s},
                   {"word", to_string(w)},
                   {"transversal", transversal_name(t)},
                   {"terms", list}};
      if (o.abelianize) {
        out["abelianization"] = ab;
      }
      print_json(out);
    } else {
      for (auto const& term : terms) {
        std::cout << term.generator.name() << (term.sign > 0 ? "" : "^-1") << "  "
                  << term.generator.expansion() << '\n';
      }
      if (o.abelianize) {
        std::cout << "abelianization " << ab_text << '\n';
      }
    }
    return exit_ok;
  }

  struct BurauOpts {
    int                         s = 4;
    std::string                 braid;
    std::optional<std::int64_t> reduce_n;
    std::optional<std::int64_t> eigen;
    bool                        oracle      = false;
    bool                        vandermonde = false;
    bool                        json        = false;
  };

  int run_burau(BurauOpts const& o) {
    auto const b = bl::parse_braid(o.braid);
    bl::json   out{{"kind", "burau"}, {"s", o.s}, {"braid", to_string(b)}};
    int        status = exit_ok;

    if (o.eigen && !o.reduce_n) {
      throw bl::ParseError("--eigen needs --reduce-n");
    }
    if (o.vandermonde && !o.reduce_n) {
      throw bl::ParseError("--vandermonde needs --reduce-n");
    }
    if (o.eigen) {
      auto const m = bl::eigen_specialize(b, *o.reduce_n, o.s, *o.eigen);
      out["ring"]  = "cyclotomic";
      out["n"]     = *o.reduce_n;
      out["nu"]    = *o.eigen;
      out["matrix"] = bl::matrix_to_json(m);
      if (!o.json) {
        print_matrix(m);
      }
    } else if (o.reduce_n) {
      auto const m  = bl::reduced_burau(b, *o.reduce_n, o.s);
      out["ring"]   = "integer";
      out["n"]      = *o.reduce_n;
      out["matrix"] = bl::matrix_to_json(m);
      if (!o.json) {
        print_matrix(m);
      }
      if (o.oracle) {
        bool const same = m == bl::reduced_burau_oracle(b, *o.reduce_n, o.s);
        out["oracle_agrees"] = same;
        status               = same ? exit_ok : exit_failure;
        if (!o.json) {
          std::cout << "oracle " << (same ? "agrees" : "DISAGREES") << '\n';
        }
      }
    } else {
      auto const m  = bl::burau_of_braid(b, o.s);
      out["ring"]   = "laurent";
      out["matrix"] = bl::matrix_to_json(m);
      if (!o.json) {
        print_matrix(m);
      }
      if (o.oracle) {
        bool const same = m == bl::burau_oracle_of(b, o.s);
        out["oracle_agrees"] = same;
        status               = same ? exit_ok : exit_failure;
        if (!o.json) {
          std::cout << "oracle " << (same ? "agrees" : "DISAGREES") << '\n';
        }
      }
    }
    if (o.vandermonde) {
      double const dev       = bl::vandermonde_deviation(b, *o.reduce_n, o.s);
      bool const   ok        = dev <= bl::vandermonde_tolerance;
      out["vandermonde"]     = {{"deviation", dev}, {"tolerance", bl::vandermonde_tolerance}, {"pass", ok}};
      if (!ok) {
        status = exit_failure;
      }
      if (!o.json) {
        std::cout << "vandermonde deviation " << dev << (ok ? " (ok)" : " (FAIL)") << '\n';
      }
    }
    if (o.json) {
      print_json(out);
    }
    return status;
  }

  struct ProellOpts {
    int                      s = 3;
    std::int64_t             l = 3;
    int                      K = 2;
    int                      M = 2;
    std::string              N = "1";
    std::vector<std::string> w;
    bool                     oracle = false;
    bool                     json   = false;
  };

  bl::GaloisElemData make_data(ProellOpts const& o) {
    bl::TruncationParams const p(o.l, o.K, o.M);
    std::vector<bl::Word>      words(static_cast<std::size_t>(o.s - 2), bl::Word(o.s));
    std::optional<bl::Word>    w1;
    for (auto const& spec : o.w) {
      auto const colon = spec.find(':');
      if (colon == std::string::npos) {
        throw bl::ParseError("--w takes i:word, got '" + spec + "'");
      }
      int i = 0;
      try {
        std::size_t used = 0;
        i                = std::stoi(spec.substr(0, colon), &used);
        if (used != colon) {
          throw bl::ParseError("");
        }
      } catch (std::exception const&) {
        throw bl::ParseError("bad generator index in --w '" + spec + "'");
      }
      if (i < 1 || i > o.s - 1) {
        throw bl::ParseError("--w index must lie in 1.." + std::to_string(o.s - 1));
      }
      auto const word = bl::parse_word(spec.substr(colon + 1), o.s);
      if (i == 1) {
        w1 = word;
      } else {
        words[static_cast<std::size_t>(i - 2)] = word;
      }
    }
    bl::Integer N;
    try {
      N = bl::Integer(o.N);
    } catch (std::exception const&) {
      throw bl::ParseError("--N must be an integer, got '" + o.N + "'");
    }
    return bl::GaloisElemData(o.s, p, N, std::move(words), w1);
  }

  int run_proell(ProellOpts const& o) {
    auto const d = make_data(o);
    auto const m = bl::assemble_matburau(d);
    bl::json   wj = bl::json::object();
    for (int i = 2; i <= o.s - 1; ++i) {
      wj[std::to_string(i)] = to_string(d.w(i));
    }
    bl::json out{{"kind", "proell"},
                 {"s", o.s},
                 {"l", o.l},
                 {"K", o.K},
                 {"M", o.M},
                 {"N", d.N().value()},
                 {"w", wj},
                 {"matrix", bl::matrix_to_json(m)}};
    int status = exit_ok;
    if (!o.json) {
      print_matrix(m);
    }
    if (o.oracle) {
      bool const same       = m == bl::direct_oracle(d);
      out["oracle_agrees"] = same;
      status               = same ? exit_ok : exit_failure;
      if (!o.json) {
        std::cout << "oracle " << (same ? "agrees" : "DISAGREES") << '\n';
      }
    }
    if (o.json) {
      print_json(out);
    }
    return status;
  }

  struct VerifyOpts {
    std::string      suite = "all";
    bl::VerifyBounds bounds;
    bool             json = false;
  };

  int run_verify_cmd(VerifyOpts const& o) {
    auto const report = bl::run_verify(o.suite, o.bounds);
    if (o.json) {
      bl::json list = bl::json::array();
      for (auto const& c : report.checks) {
        bl::json e{{"name", c.name}, {"params", c.params}, {"pass", c.pass}};
        if (!c.pass) {
          e["witness"] = c.witness;
        }
        list.push_back(e);
      }
      print_json({{"kind", "verify"},
                  {"suite", report.suite},
                  {"seed", o.bounds.seed},
                  {"checks", list},
                  {"failures", report.failures()}});
    } else {
      for (auto const& c : report.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.params.empty()) {
          std::cout << " [" << c.params << "]";
        }
        std::cout << '\n';
        if (!c.pass) {
          std::cout << "  witness: " << c.witness << '\n';
        }
      }
      std::cout << report.checks.size() - report.failures() << "/" << report.checks.size()
                << " checks passed\n";
    }
    return report.passed() ? exit_ok : exit_failure;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-group and pro-l Burau computations on cyclic covers of the line"};
  app.require_subcommand(1);

  GeneratorsOpts gen;
  auto*          gen_cmd = app.add_subcommand("generators", "Schreier generators of R_n or R_0");
  gen_cmd->add_option("--s", gen.s, "number of punctures (s >= 3)")->required();
  gen_cmd->add_option("--n", gen.n, "cover degree n >= 2 (finite cyclic transversal)");
  gen_cmd->add_option("--window", gen.window, "lo:hi slice of the infinite transversal");
  gen_cmd->add_flag("--json", gen.json);

  RewriteOpts rw;
  auto*       rw_cmd = app.add_subcommand("rewrite", "Rewrite a subgroup element in Schreier generators");
  rw_cmd->add_option("--s", rw.s)->required();
  rw_cmd->add_option("--word", rw.word, "word such as \"x1 x2^-1\"")->required();
  rw_cmd->add_option("--n", rw.n);
  rw_cmd->add_option("--window", rw.window);
  rw_cmd->add_flag("--abelianize", rw.abelianize, "also print the homology class");
  rw_cmd->add_flag("--json", rw.json);

  BurauOpts bu;
  auto*     bu_cmd = app.add_subcommand("burau", "Burau matrix of a braid");
  bu_cmd->add_option("--s", bu.s)->required();
  bu_cmd->add_option("--braid", bu.braid, "braid such as \"s1 s2^-1\"")->required();
  bu_cmd->add_option("--reduce-n", bu.reduce_n, "substitute the companion matrix for t");
  bu_cmd->add_option("--eigen", bu.eigen, "specialize t -> x^nu (needs --reduce-n)");
  bu_cmd->add_flag("--oracle", bu.oracle, "compare with the word-rewriting oracle");
  bu_cmd->add_flag("--vandermonde", bu.vandermonde,
                   "floating-point diagonalization diagnostic, tolerance 1e-9");
  bu_cmd->add_flag("--json", bu.json);

  BurauOpts red;
  auto*     red_cmd = app.add_subcommand("reduced", "Reduced Burau matrix on J^(s-2)");
  std::int64_t red_n = 2;
  red_cmd->add_option("--s", red.s)->required();
  red_cmd->add_option("--braid", red.braid)->required();
  red_cmd->add_option("--n", red_n)->required();
  red_cmd->add_flag("--oracle", red.oracle);
  red_cmd->add_flag("--vandermonde", red.vandermonde);
  red_cmd->add_flag("--json", red.json);

  BurauOpts    eig;
  auto*        eig_cmd = app.add_subcommand("eigen", "Burau matrix specialized at t -> x^nu");
  std::int64_t eig_n = 2, eig_nu = 1;
  eig_cmd->add_option("--s", eig.s)->required();
  eig_cmd->add_option("--braid", eig.braid)->required();
  eig_cmd->add_option("--n", eig_n)->required();
  eig_cmd->add_option("--nu", eig_nu)->required();
  eig_cmd->add_flag("--json", eig.json);

  ProellOpts pr;
  auto*      pr_cmd = app.add_subcommand("proell", "Pro-l Burau matrix of (N, w_i) data");
  pr_cmd->add_option("--s", pr.s)->required();
  pr_cmd->add_option("--l", pr.l, "prime l")->capture_default_str();
  pr_cmd->add_option("--K", pr.K, "coefficient precision")->capture_default_str();
  pr_cmd->add_option("--M", pr.M, "group precision")->capture_default_str();
  pr_cmd->add_option("--N", pr.N, "cyclotomic character value, a unit mod l")->capture_default_str();
  pr_cmd->add_option("--w", pr.w, "i:word, repeatable; 1:word normalizes by w_1^-1");
  pr_cmd->add_flag("--oracle", pr.oracle, "compare with the word oracle");
  pr_cmd->add_flag("--json", pr.json);

  VerifyOpts vf;
  auto*      vf_cmd = app.add_subcommand("verify", "Run property suites");
  std::string suites;
  for (auto const& n : bl::suite_names()) {
    suites += (suites.empty() ? "" : ", ") + n;
  }
  vf_cmd->add_option("--suite", vf.suite, "one of: " + suites)->capture_default_str();
  vf_cmd->add_option("--s-max", vf.bounds.s_max)->capture_default_str();
  vf_cmd->add_option("--n-max", vf.bounds.n_max)->capture_default_str();
  vf_cmd->add_option("--l", vf.bounds.l)->capture_default_str();
  vf_cmd->add_option("--K", vf.bounds.K)->capture_default_str();
  vf_cmd->add_option("--M", vf.bounds.M)->capture_default_str();
  vf_cmd->add_option("--seed", vf.bounds.seed)->capture_default_str();
  vf_cmd->add_flag("--json", vf.json);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*gen_cmd) {
      return run_generators(gen);
    }
    if (*rw_cmd) {
      return run_rewrite(rw);
    }
    if (*bu_cmd) {
      return run_burau(bu);
    }
    if (*red_cmd) {
      red.reduce_n = red_n;
      return run_burau(red);
    }
    if (*eig_cmd) {
      eig.reduce_n = eig_n;
      eig.eigen    = eig_nu;
      return run_burau(eig);
    }
    if (*pr_cmd) {
      return run_proell(pr);
    }
    if (*vf_cmd) {
      return run_verify_cmd(vf);
    }
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::domain_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::out_of_range const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}
