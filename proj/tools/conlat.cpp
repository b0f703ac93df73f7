// conlat command line: formal contexts, concept lattices, Galois connections
// and the law-verification battery over them.
//
// Exit codes: 0 success, 1 validation failure (witness JSON on stdout),
// 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conlat/formats.hpp"
#include "conlat/verify.hpp"

namespace {

using namespace conlat;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::BadInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(Err::BadInput, "cannot write '" + out_path + "'");
  out << text;
}

// A context file is either Burmeister CXT or a JSON object.
Classification load_context(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Err::BadInput, "invalid JSON in '" + path + "'");
    return io::context_from_json(j);
  }
  return io::parse_cxt(text);
}

nlohmann::json load_json(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(slurp(path), nullptr, false);
  if (j.is_discarded()) fail(Err::BadInput, "invalid JSON in '" + path + "'");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Galois connections, formal contexts and concept lattices"};
  app.require_subcommand(1);

  std::string input, output;
  std::uint64_t seed = 0;
  int cases = 100;
  std::string format = "json";

  auto add_io = [&](CLI::App* cmd, bool need_input) {
    if (need_input) cmd->add_option("input", input, "input file")->required();
    cmd->add_option("--out", output, "output path (default stdout)");
    return cmd;
  };

  auto* cmd_concepts = add_io(app.add_subcommand("concepts", "list the formal concepts"), true);
  auto* cmd_dot = add_io(app.add_subcommand("lattice-dot", "Hasse diagram in DOT"), true);
  auto* cmd_clg = add_io(app.add_subcommand("clg", "concept lattice as JSON"), true);
  auto* cmd_clsn = add_io(app.add_subcommand("clsn", "classification of a lattice JSON"), true);
  cmd_clsn->add_option("--format", format, "output format: json or cxt")
      ->check(CLI::IsMember({"json", "cxt"}));
  auto* cmd_round = add_io(app.add_subcommand("roundtrip", "check the lattice round trip"), true);
  auto* cmd_theories = add_io(app.add_subcommand("theories", "theory closure table"), true);
  auto* cmd_chkinfo = add_io(app.add_subcommand("check-info", "validate an infomorphism bundle"), true);
  auto* cmd_chkgal = add_io(app.add_subcommand("check-galois", "validate a Galois connection bundle"), true);
  auto* cmd_fact = add_io(app.add_subcommand("factorize", "polar factorization of a connection"), true);
  auto* cmd_verify = app.add_subcommand("verify", "run the law battery");
  cmd_verify->add_option("input", input, "context file (otherwise seeded cases)");
  cmd_verify->add_option("--seed", seed, "seed for generated cases");
  cmd_verify->add_option("--cases", cases, "number of generated cases");
  cmd_verify->add_option("--out", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_concepts->parsed()) {
      write_out(output, io::concepts_to_json(clg(load_context(input))).dump(2) + "\n");
    } else if (cmd_dot->parsed()) {
      write_out(output, io::emit_dot(clg(load_context(input))));
    } else if (cmd_clg->parsed()) {
      write_out(output, io::lattice_to_json(clg(load_context(input))).dump(2) + "\n");
    } else if (cmd_clsn->parsed()) {
      const ConceptLattice l = io::lattice_from_json(load_json(input));
      if (!l.order.is_poset()) fail(Err::NotPoset, "concept order is not a poset");
      if (!density_check(l).ok())
        fail(Err::LawViolated, "embedding images are not dense");
      const Classification a = clsn(l);
      write_out(output, format == "cxt" ? io::emit_cxt(a)
                                        : io::context_to_json(a).dump(2) + "\n");
    } else if (cmd_round->parsed()) {
      const Classification a = load_context(input);
      const ConceptLattice l = clg(a);
      if (!(clsn(l) == a)) fail(Err::LawViolated, "clsn(clg(A)) differs from A");
      const RoundTrip rt = roundtrip_iso(l);
      nlohmann::json j{{"concepts", l.size()},
                       {"classification_restored", true},
                       {"order_isomorphic", true},
                       {"forward", rt.forward},
                       {"backward", rt.backward}};
      write_out(output, j.dump(2) + "\n");
    } else if (cmd_theories->parsed()) {
      const TheoryLattice t = theories(clg(load_context(input)));
      write_out(output, io::theories_to_json(t).dump(2) + "\n");
    } else if (cmd_chkinfo->parsed()) {
      io::infomorphism_from_json(load_json(input));
      write_out(output, "{\"valid\":true}\n");
    } else if (cmd_chkgal->parsed()) {
      io::galois_from_json(load_json(input));
      write_out(output, "{\"valid\":true}\n");
    } else if (cmd_fact->parsed()) {
      const PolarFactorization pf = polar_factorize(io::galois_from_json(load_json(input)));
      write_out(output, io::polar_to_json(pf).dump(2) + "\n");
    } else if (cmd_verify->parsed()) {
      const VerifyReport rep = input.empty()
                                   ? verify_seeded(seed, cases)
                                   : verify_context(load_context(input));
      write_out(output, rep.to_text());
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    const bool usage = e.kind() == Err::BadInput;
    std::cout << e.to_json().dump() << "\n";
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
