#pragma once

// Command-line front end. `run` is the whole program; tools/ade.cpp only
// forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 domain error, 2 parse or usage error.

#include <ade/embed.hpp>
#include <ade/io.hpp>
#include <ade/roots.hpp>
#include <ade/spectra.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace ade::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

struct Options {
  std::string input;
  std::string output;
  bool json = false;
  bool isometry = false;
  bool diagram = false;
};

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

template <typename Fn>
auto with_input(const std::string& path, Fn&& fn) {
  if (path == "-") return fn(std::cin);
  std::ifstream in(path);
  if (!in) throw CommandError(kUsageError, "cannot open input '" + path + "'");
  return fn(in);
}

inline VectorSetFile load_vectors(const std::string& path) {
  auto f = with_input(path, [](std::istream& in) { return read_vector_set(in); });
  if (f.vectors.empty()) throw CommandError(kUsageError, "input '" + path + "' contains no vectors");
  return f;
}

inline SignedGraph load_graph(const std::string& path) {
  return with_input(path, [](std::istream& in) { return read_signed_graph(in); });
}

/// Reflection closure of the vectors in a file; precondition failures are
/// reported against source lines.
inline RootSet close_file(const std::string& path) {
  const VectorSetFile f = load_vectors(path);
  const Space space = Space::ambient(f.vectors.front().size());
  std::vector<RootVector> gens;
  for (const auto& v : f.vectors) gens.emplace_back(space, v);
  try {
    return closure(gens);
  } catch (const PreconditionError& e) {
    std::string msg = "vectors do not generate a root system";
    for (const auto& v : e.violations()) {
      msg += "\n  line " + std::to_string(f.lines[v.first]);
      if (v.second) msg += " and line " + std::to_string(f.lines[*v.second]);
      msg += ": " + v.what;
    }
    throw CommandError(kDomainError, msg);
  }
}

inline std::vector<RatVector> coords_of(const std::vector<RootVector>& vs) {
  std::vector<RatVector> out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

inline std::vector<RatVector> coords_of(const RootSet& s) { return coords_of(s.elements()); }

inline std::string dot_diagram(const std::string& name, const std::vector<RootVector>& base) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < base.size(); ++i) {
    os << "  v" << i << " [label=\"";
    const auto& c = base[i].coords();
    for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << to_string(c[j]);
    os << "\"];\n";
  }
  const SignedGraph g = graph_of(base);
  for (const auto& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << ";\n";
  os << "}\n";
  return os.str();
}

inline void cmd_gen(const std::string& label, std::ostream& out) {
  const auto type = parse_type(label);
  if (!type) throw CommandError(kUsageError, "unsupported root system label '" + label + "'");
  write_vector_set(out, coords_of(gen(*type)));
}

inline void cmd_close(const Options& o, std::ostream& out) { write_vector_set(out, coords_of(close_file(o.input))); }

inline void cmd_classify(const Options& o, bool base_only, std::ostream& out) {
  const RootSet phi = close_file(o.input);
  const auto comps = analyze(phi);

  if (o.json) {
    Json doc;
    doc["components"] = Json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& c = comps[i];
      Json jc;
      jc["type"] = c.type.label();
      jc["rank"] = c.type.rank();
      jc["root_count"] = c.roots.size();
      Json base = Json::array();
      for (const auto& v : c.base) base.push_back(to_json(v.coords()));
      jc["base"] = std::move(base);
      if (o.isometry && !base_only) jc["isometry"] = to_json(isometry_to_canonical(c.roots).isometry.matrix);
      if (o.diagram) jc["diagram"] = dot_diagram("component" + std::to_string(i), c.base);
      doc["components"].push_back(std::move(jc));
    }
    out << doc.dump(2) << '\n';
    return;
  }

  if (base_only) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      out << "# component " << i << ": " << comps[i].type.label() << '\n';
      write_vector_set(out, coords_of(comps[i].base));
    }
  } else {
    ReducibleType types;
    for (const auto& c : comps) types.push_back(c.type);
    std::sort(types.begin(), types.end());
    out << "type: " << label(types) << '\n';
    out << "components: " << comps.size() << '\n';
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& c = comps[i];
      out << "component " << i << ": " << c.type.label() << ", rank " << c.type.rank() << ", "
          << c.roots.size() << " roots\n";
      out << "base:\n";
      write_vector_set(out, coords_of(c.base));
      if (o.isometry) {
        out << "isometry:\n";
        const auto q = isometry_to_canonical(c.roots).isometry.matrix;
        for (std::size_t r = 0; r < q.rows(); ++r) write_vector(out, q.row(r));
      }
    }
  }
  if (o.diagram)
    for (std::size_t i = 0; i < comps.size(); ++i)
      out << dot_diagram("component" + std::to_string(i), comps[i].base);
}

inline void cmd_embed(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.input);
  const EmbeddingCertificate cert = [&] {
    try {
      return embed(g);
    } catch (const DomainError& e) {
      throw CommandError(kDomainError, e.what());
    }
  }();
  const bool ok = verify_certificate(g, cert);
  if (o.json) {
    Json doc;
    doc["intrinsic_type"] = cert.intrinsic.label();
    doc["ambient_type"] = cert.ambient.label();
    doc["root_count"] = cert.root_count;
    Json vs = Json::array();
    for (const auto& v : cert.vectors) vs.push_back(to_json(v));
    doc["vectors"] = std::move(vs);
    doc["gram_check"] = ok ? "pass" : "fail";
    out << doc.dump(2) << '\n';
  } else {
    out << "intrinsic_type: " << cert.intrinsic.label() << '\n'
        << "ambient_type: " << cert.ambient.label() << '\n'
        << "root_count: " << cert.root_count << '\n'
        << "gram_check: " << (ok ? "pass" : "fail") << '\n'
        << "vectors:\n";
    write_vector_set(out, cert.vectors);
  }
  if (!ok) throw CommandError(kDomainError, "certificate failed verification");
}

inline void cmd_smith(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o.input);
  if (!g.is_connected()) throw CommandError(kDomainError, "graph is not connected");
  if (!g.is_unsigned()) throw CommandError(kDomainError, "graph has negative edges; smith expects an unsigned graph");
  const SmithType t = smith_classify(g);
  if (o.json) {
    Json doc;
    doc["class"] = to_string(t.cls);
    if (t.cls != SmithClass::Exceeds) doc["type"] = t.label();
    if (t.cls == SmithClass::Affine) {
      Json m = Json::array();
      for (const auto& x : t.marks) m.push_back(x.get_si());
      doc["marks"] = std::move(m);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << to_string(t.cls);
  if (t.cls != SmithClass::Exceeds) out << ' ' << t.label();
  if (t.cls == SmithClass::Affine) {
    out << " marks";
    for (const auto& x : t.marks) out << ' ' << x.get_str();
  }
  out << '\n';
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simply laced root systems: generate, close, find bases, classify, embed signed graphs", "ade"};
  app.require_subcommand(1);

  Options o;
  std::string label;
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", o.output, "Write the result to this file"); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit a single JSON document"); };

  auto* gen_cmd = app.add_subcommand("gen", "Write the canonical roots of a type (A1.., D2.., E6, E7, E8)");
  gen_cmd->add_option("label", label, "Type label")->required();
  add_output(gen_cmd);

  auto* close_cmd = app.add_subcommand("close", "Reflection closure of a vector set");
  close_cmd->add_option("input", o.input, "Vector set file ('-' for stdin)")->required();
  add_output(close_cmd);

  auto* base_cmd = app.add_subcommand("base", "Base of the root system generated by a vector set");
  base_cmd->add_option("input", o.input, "Vector set file ('-' for stdin)")->required();
  add_json(base_cmd);
  base_cmd->add_flag("--diagram", o.diagram, "Print each base's Dynkin graph as DOT");
  add_output(base_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Type of the root system generated by a vector set");
  classify_cmd->add_option("input", o.input, "Vector set file ('-' for stdin)")->required();
  add_json(classify_cmd);
  classify_cmd->add_flag("--isometry", o.isometry, "Include the map onto canonical coordinates");
  classify_cmd->add_flag("--diagram", o.diagram, "Print each base's Dynkin graph as DOT");
  add_output(classify_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "Embed a signed graph with least eigenvalue >= -2 into D_m or E_8");
  embed_cmd->add_option("input", o.input, "Signed graph file ('-' for stdin)")->required();
  add_json(embed_cmd);
  add_output(embed_cmd);

  auto* smith_cmd = app.add_subcommand("smith", "Place a connected graph relative to the Smith graphs");
  smith_cmd->add_option("input", o.input, "Graph file ('-' for stdin)")->required();
  add_json(smith_cmd);
  add_output(smith_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream buffer;
  try {
    if (gen_cmd->parsed()) detail::cmd_gen(label, buffer);
    else if (close_cmd->parsed()) detail::cmd_close(o, buffer);
    else if (base_cmd->parsed()) detail::cmd_classify(o, true, buffer);
    else if (classify_cmd->parsed()) detail::cmd_classify(o, false, buffer);
    else if (embed_cmd->parsed()) detail::cmd_embed(o, buffer);
    else if (smith_cmd->parsed()) detail::cmd_smith(o, buffer);
  } catch (const CommandError& e) {
    if (e.code() == kDomainError) out << buffer.str();
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f || !(f << buffer.str())) {
      err << "error: cannot write '" << o.output << "'\n";
      return kUsageError;
    }
  }
  return kSuccess;
}

}  // namespace ade::cli
