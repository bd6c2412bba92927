#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "quivermag/euler_magnitude.hpp"
#include "quivermag/linalg.hpp"
#include "quivermag/quiver_io.hpp"
#include "quivermag/report_json.hpp"

namespace quivermag::cli {

namespace {

using nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::optional<std::size_t> max_degree;
  std::string file;
  std::string matrix_file;
  std::string from;
  std::string to;
  bool count_only = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sha256_hex(const std::string& content) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(content.data(), content.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int k = 0; k < length; ++k) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return "sha256:" + hex.str();
}

struct Envelope {
  std::string command;
  std::string input_digest;
  ordered_json result;
  std::vector<std::string> warnings;
  std::string text;  // human-readable rendering of `result`
};

void emit(const Envelope& envelope, const Options& opts, std::ostream& out) {
  if (opts.json) {
    ordered_json doc;
    doc["command"] = envelope.command;
    doc["input_digest"] = envelope.input_digest;
    doc["result"] = envelope.result;
    doc["warnings"] = envelope.warnings;
    out << doc.dump(2) << "\n";
    return;
  }
  out << envelope.text;
  for (const auto& w : envelope.warnings) out << "warning: " << w << "\n";
}

std::string vertex_header(const Quiver& q) {
  std::string out = "vertex order:";
  for (const auto& v : q.vertices()) out += " " + v;
  return out + "\n";
}

struct LoadedQuiver {
  BoundQuiver bq;
  std::string digest;
};

LoadedQuiver load(const Options& opts) {
  const std::string content = read_file(opts.file);
  return {load_quiver(content), sha256_hex(content)};
}

int cmd_parse(const Options& opts, std::ostream& out) {
  const auto [bq, digest] = load(opts);
  Envelope env{"parse", digest, quiver_to_json(bq), {}, serialize_quiver(bq, QuiverFormat::text)};
  emit(env, opts, out);
  return kOk;
}

int cmd_cartan(const Options& opts, std::ostream& out) {
  const auto [bq, digest] = load(opts);
  const Algebra algebra(bq);
  const Rational det = determinant(algebra.cartan());
  Envelope env{"cartan", digest, {}, {}, {}};
  env.result["vertices"] = bq.quiver().vertices();
  env.result["dimension"] = algebra.dimension();
  env.result["cartan"] = to_json(algebra.cartan());
  env.result["determinant"] = to_string(det);
  env.text = vertex_header(bq.quiver()) + "dim A = " + std::to_string(algebra.dimension()) +
             "\nCartan matrix Z:\n" + to_string(algebra.cartan()) + "det Z = " + to_string(det) + "\n";
  emit(env, opts, out);
  return kOk;
}

std::string unresolved_warning(const ExtTable& ext) {
  return "global dimension unresolved: some simple has no finite resolution within degree bound " +
         std::to_string(ext.degree_bound);
}

int cmd_ext(const Options& opts, std::ostream& out) {
  const auto [bq, digest] = load(opts);
  const Algebra algebra(bq);
  const ExtTable ext = ext_table(algebra, opts.max_degree);
  Envelope env{"ext", digest, to_json(ext), {}, vertex_header(bq.quiver())};
  env.result["vertices"] = bq.quiver().vertices();
  for (std::size_t d = 0; d < ext.num_degrees(); ++d) {
    env.text += "Ext^" + std::to_string(d) + "(S_i, S_j):\n";
    for (std::size_t i = 0; i < ext.num_vertices; ++i) {
      for (std::size_t j = 0; j < ext.num_vertices; ++j) env.text += (j ? " " : "") + std::to_string(ext.dim(d, i, j));
      env.text += "\n";
    }
  }
  if (ext.complete()) {
    env.text += "global dimension = " + std::to_string(*ext.global_dimension) + "\n";
  } else {
    env.text += "global dimension >= " + std::to_string(ext.degree_bound) + "\n";
    env.warnings.push_back(unresolved_warning(ext));
  }
  emit(env, opts, out);
  return kOk;
}

std::string magnitude_text(const MagnitudeResult& m) {
  if (!m.value) return "magnitude undefined: " + m.reason + "\n";
  return "magnitude = " + to_string(*m.value) + " (" + to_string(m.status) + ")\n";
}

int cmd_magnitude(const Options& opts, std::ostream& out) {
  const auto [bq, digest] = load(opts);
  const Algebra algebra(bq);
  const MagnitudeResult mag = magnitude(algebra.cartan());
  const ExtTable ext = ext_table(algebra, opts.max_degree);

  Envelope env{"magnitude", digest, {}, {}, magnitude_text(mag)};
  env.result["magnitude"] = to_json(mag);
  if (ext.complete()) {
    const GrothClass s{std::vector<long>(algebra.num_vertices(), 1)};
    const long chi = euler_form(s, s, ext);
    env.result["euler_characteristic"] = std::to_string(chi);
    env.text += "chi(S, S) = " + std::to_string(chi) + "\n";
  } else {
    env.result["euler_characteristic"] = nullptr;
    env.warnings.push_back(unresolved_warning(ext));
  }
  if (mag.status == MagnitudeStatus::weighted) env.warnings.push_back("Cartan matrix is singular; magnitude taken from a weighting/coweighting pair");
  emit(env, opts, out);
  return kOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
  const auto [bq, digest] = load(opts);
  const Algebra algebra(bq);
  Envelope env{"verify", digest, {}, {}, {}};
  Matrix z = algebra.cartan();
  if (!opts.matrix_file.empty()) {
    try {
      z = parse_matrix(read_file(opts.matrix_file));
    } catch (const std::invalid_argument& e) {
      throw InputError(opts.matrix_file + ": " + e.what());
    }
    if (z.rows() != algebra.num_vertices() || z.cols() != algebra.num_vertices()) {
      throw InputError(opts.matrix_file + ": expected a " + std::to_string(algebra.num_vertices()) + "x" +
                       std::to_string(algebra.num_vertices()) + " matrix");
    }
    env.warnings.push_back("Cartan matrix replaced by the contents of " + opts.matrix_file);
  }
  const VerificationReport report = verify(algebra, z, opts.max_degree);
  env.result = to_json(report);

  for (const auto& c : report.checks) env.text += std::string(to_string(c.outcome)) + "  " + c.name + ": " + c.detail + "\n";
  env.text += magnitude_text(report.magnitude);

  int code = kOk;
  if (report.any_failed()) {
    code = kCheckFailed;
  } else if (report.any_skipped()) {
    code = kUnresolvedGlobalDimension;
    env.warnings.push_back("global dimension unresolved within degree bound " + std::to_string(report.degree_bound));
  }
  env.result["exit_code"] = code;
  emit(env, opts, out);
  return code;
}

std::size_t vertex_arg(const Quiver& q, const std::string& id) {
  const auto v = q.vertex_index(id);
  if (!v) throw InputError("unknown vertex " + id);
  return *v;
}

int cmd_paths(const Options& opts, std::ostream& out) {
  const auto [bq, digest] = load(opts);
  const Quiver& q = bq.quiver();
  const PathBasis basis = enumerate_paths(bq);

  std::vector<std::size_t> sources, targets;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    sources.push_back(v);
    targets.push_back(v);
  }
  if (!opts.from.empty()) sources = {vertex_arg(q, opts.from)};
  if (!opts.to.empty()) targets = {vertex_arg(q, opts.to)};

  Envelope env{"paths", digest, {}, {}, {}};
  ordered_json pairs = ordered_json::array();
  for (std::size_t i : sources) {
    for (std::size_t j : targets) {
      const auto& list = basis.paths(i, j);
      ordered_json entry;
      entry["source"] = q.vertices()[i];
      entry["target"] = q.vertices()[j];
      entry["count"] = list.size();
      env.text += q.vertices()[i] + " -> " + q.vertices()[j] + ": ";
      if (opts.count_only) {
        env.text += std::to_string(list.size());
      } else {
        entry["paths"] = ordered_json::array();
        for (std::size_t k = 0; k < list.size(); ++k) {
          const std::string p = format_path(q, list[k]);
          entry["paths"].push_back(p);
          env.text += (k ? ", " : "") + p;
        }
        if (list.empty()) env.text += "(none)";
      }
      env.text += "\n";
      pairs.push_back(std::move(entry));
    }
  }
  env.result["dimension"] = basis.total_dim();
  env.result["pairs"] = std::move(pairs);
  emit(env, opts, out);
  return kOk;
}

int cmd_matrix_magnitude(const Options& opts, std::ostream& out) {
  const std::string content = read_file(opts.matrix_file);
  Matrix z;
  try {
    z = parse_matrix(content);
  } catch (const std::invalid_argument& e) {
    throw InputError(opts.matrix_file + ": " + e.what());
  }
  if (!z.is_square() || z.rows() == 0) throw InputError(opts.matrix_file + ": matrix must be square and nonempty");
  const MagnitudeResult mag = magnitude(z);
  Envelope env{"matrix-magnitude", sha256_hex(content), {}, {}, magnitude_text(mag)};
  env.result["matrix"] = to_json(z);
  env.result["magnitude"] = to_json(mag);
  if (mag.status == MagnitudeStatus::weighted) env.warnings.push_back("matrix is singular; magnitude taken from a weighting/coweighting pair");
  emit(env, opts, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magnitude and Euler form of bound quiver algebras, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_flag("--json", opts.json, "Emit a JSON envelope instead of text");
  app.add_option("--max-degree", opts.max_degree, "Degree bound for resolutions (default: dim A)");

  auto with_file = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opts.file, "Quiver file (text or JSON)")->required();
    return sub;
  };
  CLI::App* parse = with_file("parse", "Validate and echo the normalized quiver");
  CLI::App* cartan = with_file("cartan", "Cartan matrix and its determinant");
  CLI::App* ext = with_file("ext", "Ext dimensions between simples and the global dimension");
  CLI::App* mag = with_file("magnitude", "Magnitude of the category of indecomposable projectives");
  CLI::App* ver = with_file("verify", "Check Z^-1 = E, magnitude = chi(S,S) and det Z = +-1");
  ver->add_option("--matrix", opts.matrix_file, "Use this matrix in place of the computed Cartan matrix");
  CLI::App* paths = with_file("paths", "List the nonzero paths of the algebra");
  paths->add_option("--from", opts.from, "Source vertex");
  paths->add_option("--to", opts.to, "Target vertex");
  paths->add_flag("--count-only", opts.count_only, "Only report path counts");
  CLI::App* raw = app.add_subcommand("matrix-magnitude", "Magnitude of a raw square rational matrix");
  raw->add_option("--matrix", opts.matrix_file, "Matrix file, one row per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (parse->parsed()) return cmd_parse(opts, out);
    if (cartan->parsed()) return cmd_cartan(opts, out);
    if (ext->parsed()) return cmd_ext(opts, out);
    if (mag->parsed()) return cmd_magnitude(opts, out);
    if (ver->parsed()) return cmd_verify(opts, out);
    if (paths->parsed()) return cmd_paths(opts, out);
    if (raw->parsed()) return cmd_matrix_magnitude(opts, out);
  } catch (const InfiniteDimensionalError& e) {
    err << "error: " << e.what() << "\n";
    return kInfiniteDimensional;
  } catch (const QuiverError& e) {
    err << "error: " << opts.file << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace quivermag::cli
