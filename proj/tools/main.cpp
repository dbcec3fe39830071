#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "pathres/betti.hpp"
#include "pathres/counting.hpp"
#include "pathres/covering.hpp"
#include "pathres/errors.hpp"
#include "pathres/homology.hpp"
#include "pathres/ideals.hpp"
#include "pathres/morse.hpp"
#include "pathres/staircase.hpp"

namespace {

using namespace pathres;

// Verification checks report failure through the exit code, not exceptions.
struct VerifyFailure {};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot open output file: " + out_path);
  f << text;
}

std::string edge_str(int a) {
  return std::to_string(a) + "-" + std::to_string(a + 1);
}

std::string face_str(const std::vector<int>& face) {
  std::string s = "{";
  for (size_t k = 0; k < face.size(); ++k) {
    if (k) s += ',';
    s += edge_str(face[k]);
  }
  return s + "}";
}

int run_gens(int n, int d, const std::string& out) {
  GeneratorSet gs = power_gens(edge_ideal_gens(Graph::path(n)), d);
  std::string text;
  for (const auto& m : gs.gens) text += m.str() + "\n";
  emit(text, out);
  return 0;
}

int run_complex(int n, int d, const std::string& format,
                const std::string& method, const std::string& out) {
  ComplexYdn X = ComplexYdn::enumerate(n, d);
  if (format == "json") {
    // Plain JSON export is the complex itself; with --method morse it is
    // the assembled matching instead.
    if (method == "morse") {
      emit(matching_to_json(assemble_matching(X)), out);
    } else if (method.empty()) {
      emit(X.to_json(), out);
    } else {
      throw InputError("complex --format json supports only --method morse");
    }
    return 0;
  }
  if (format != "text")
    throw InputError("complex supports --format text or json");
  std::string text;
  text += "n: " + std::to_string(X.n()) + "\n";
  text += "d: " + std::to_string(X.d()) + "\n";
  text += "cells: " + std::to_string(X.size()) + "\n";
  std::string fvec;
  long long euler = 0;
  const auto f = X.f_vector();
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) fvec += " ";
    fvec += std::to_string(f[k]);
    euler += (k % 2 == 0 ? 1 : -1) * f[k];
  }
  text += "f-vector: " + fvec + "\n";
  text += "euler: " + std::to_string(euler) + "\n";
  emit(text, out);
  return 0;
}

int run_cov(int n, const std::string& out) {
  FamilyMatching fm = cov_path_matching(n);
  std::string text;
  text += "Cov(P_" + std::to_string(n) + "): " +
          std::to_string(fm.family.faces.size()) + " faces\n";
  for (const auto& face : fm.family.faces) text += face_str(face) + "\n";
  if (fm.critical.empty()) {
    text += "critical: none\n";
  } else {
    text += "critical:";
    for (int c : fm.critical) text += " " + face_str(fm.family.faces[c]);
    text += "\n";
  }
  emit(text, out);
  return 0;
}

int run_betti(int n, int d, const std::string& method,
              const std::string& format, uint32_t prime,
              const std::string& out) {
  const std::string m = method.empty() ? "closed-form" : method;
  BettiTable t = betti_table(n, d, parse_method(m), prime);
  emit(format_table(t, format), out);
  return 0;
}

bool check_lattice(int n, int d, std::string& line) {
  LatticeReport rep = verify_lattice_generators(Graph::path(n), d);
  line = "lattice: " + std::string(rep.ok ? "PASS" : "FAIL") + " (" +
         std::to_string(rep.lattice_points) + " lattice points, " +
         std::to_string(rep.generators) + " generators)";
  return rep.ok;
}

bool check_supports(const ComplexYdn& X, uint32_t prime, std::string& line) {
  SupportReport rep = verify_supports_resolution(X, PrimeField(prime));
  if (rep.ok) {
    line = "supports: PASS (" + std::to_string(rep.alphas_checked) +
           " multidegrees, reduced homology zero)";
  } else {
    line = "supports: FAIL (nonzero reduced homology at " +
           rep.failures.front().str() + ")";
  }
  return rep.ok;
}

bool check_acyclic(const ComplexYdn& X, std::string& line) {
  Matching m = assemble_matching(X);  // audited on assembly
  line = "acyclic: PASS (" + std::to_string(m.pairs.size()) + " pairs, " +
         std::to_string(m.critical.size()) + " critical cells)";
  return true;
}

bool check_minimal(const ComplexYdn& X, std::string& line) {
  Matching m = assemble_matching(X);
  auto diff = morse_boundary(X, m);
  long long nonzero = 0;
  for (const auto& [tau, terms] : diff)
    for (auto [sigma, coeff] : terms) {
      if (coeff == 0) continue;
      ++nonzero;
      if (X.label(sigma) == X.label(tau)) {
        line = "minimal: FAIL (equal-label coefficient between cells " +
               std::to_string(sigma) + " and " + std::to_string(tau) + ")";
        return false;
      }
      if (!X.label(sigma).divides(X.label(tau))) {
        line = "minimal: FAIL (label of cell " + std::to_string(sigma) +
               " does not divide label of cell " + std::to_string(tau) + ")";
        return false;
      }
    }
  line = "minimal: PASS (" + std::to_string(nonzero) +
         " nonzero coefficients, all strictly label-increasing)";
  return true;
}

bool check_agree(int n, int d, uint32_t prime, std::string& line) {
  const BettiTable a = betti_table(n, d, BettiMethod::ClosedForm);
  const BettiTable b = betti_table(n, d, BettiMethod::Strings);
  const BettiTable c = betti_table(n, d, BettiMethod::Morse);
  const BettiTable e = betti_table(n, d, BettiMethod::Oracle, prime);
  if (a.entries == b.entries && a.entries == c.entries &&
      a.entries == e.entries) {
    line = "agree: PASS (closed-form == strings == morse == oracle, " +
           std::to_string(a.entries.size()) + " entries)";
    return true;
  }
  line = "agree: FAIL (methods disagree)";
  return false;
}

int run_verify(int n, int d, const std::string& checks, uint32_t prime,
               const std::string& out) {
  std::vector<std::string> wanted;
  const std::vector<std::string> known = {"lattice", "supports", "acyclic",
                                          "minimal", "agree"};
  if (checks == "all") {
    wanted = known;
  } else {
    std::string item;
    for (char ch : checks + ",") {
      if (ch != ',') {
        item += ch;
        continue;
      }
      if (item.empty()) continue;
      if (std::find(known.begin(), known.end(), item) == known.end())
        throw InputError("unknown check: " + item);
      if (std::find(wanted.begin(), wanted.end(), item) == wanted.end())
        wanted.push_back(item);
      item.clear();
    }
    if (wanted.empty()) throw InputError("no checks selected");
    // Run in canonical order regardless of how they were listed.
    std::vector<std::string> ordered;
    for (const auto& k : known)
      if (std::find(wanted.begin(), wanted.end(), k) != wanted.end())
        ordered.push_back(k);
    wanted = ordered;
  }

  bool needs_complex = false;
  for (const auto& k : wanted)
    if (k == "supports" || k == "acyclic" || k == "minimal")
      needs_complex = true;

  std::string text;
  bool all_ok = true;
  ComplexYdn X;
  if (needs_complex) X = ComplexYdn::enumerate(n, d);
  for (const auto& k : wanted) {
    std::string line;
    bool ok = false;
    if (k == "lattice") ok = check_lattice(n, d, line);
    if (k == "supports") ok = check_supports(X, prime, line);
    if (k == "acyclic") ok = check_acyclic(X, line);
    if (k == "minimal") ok = check_minimal(X, line);
    if (k == "agree") ok = check_agree(n, d, prime, line);
    text += line + "\n";
    all_ok = all_ok && ok;
  }
  text += all_ok ? "result: PASS\n" : "result: FAIL\n";
  emit(text, out);
  if (!all_ok) throw VerifyFailure{};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal cellular resolutions of powers of path edge ideals"};
  app.require_subcommand(1);

  int n = 0, d = 1;
  std::string format = "text", method, checks = "all", out;
  uint32_t prime = 32003;

  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "Number of path vertices (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1000000));
  };
  auto add_d = [&](CLI::App* cmd) {
    cmd->add_option("--d", d, "Power of the edge ideal (>= 1)")
        ->check(CLI::Range(1, 1000000));
  };

  CLI::App* gens = app.add_subcommand("gens", "Print the minimal generators of I(P_n)^d");
  add_n(gens);
  add_d(gens);
  gens->add_option("--out", out, "Write output to a file instead of stdout");

  CLI::App* complex = app.add_subcommand("complex", "Print stats of Y^d_n or export it as JSON");
  add_n(complex);
  add_d(complex);
  complex->add_option("--format", format, "text or json");
  complex->add_option("--method", method, "With --format json: morse exports the matching");
  complex->add_option("--out", out, "Write output to a file instead of stdout");

  CLI::App* cov = app.add_subcommand("cov", "Print the covering complex Cov(P_n) and its critical cell");
  add_n(cov);
  cov->add_option("--out", out, "Write output to a file instead of stdout");

  CLI::App* betti = app.add_subcommand("betti", "Print the graded Betti table of S/I(P_n)^d");
  add_n(betti);
  add_d(betti);
  betti->add_option("--method", method,
                    "closed-form (default), strings, morse or oracle");
  betti->add_option("--format", format, "text, json or csv");
  betti->add_option("--prime", prime, "Field characteristic for the oracle method");
  betti->add_option("--out", out, "Write output to a file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Run consistency checks for one (n, d)");
  add_n(verify);
  add_d(verify);
  verify->add_option("--checks", checks,
                     "Comma list of lattice,supports,acyclic,minimal,agree, or all");
  verify->add_option("--prime", prime, "Field characteristic for homology checks");
  verify->add_option("--out", out, "Write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gens->parsed()) return run_gens(n, d, out);
    if (complex->parsed()) return run_complex(n, d, format, method, out);
    if (cov->parsed()) return run_cov(n, out);
    if (betti->parsed()) return run_betti(n, d, method, format, prime, out);
    if (verify->parsed()) return run_verify(n, d, checks, prime, out);
  } catch (const VerifyFailure&) {
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
