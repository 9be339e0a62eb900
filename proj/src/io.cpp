#include "msteinitz/io.hpp"

#include <openssl/sha.h>

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace msteinitz::io {

namespace {

std::size_t positive_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() <= 0) {
    throw ValidationError(std::string("field '") + key + "' must be a positive integer");
  }
  return j.at(key).get<std::size_t>();
}

Vector number_array(const json& j, std::size_t expected, const std::string& where) {
  if (!j.is_array() || j.size() != expected) {
    throw ValidationError(where + ": expected an array of " + std::to_string(expected) +
                          " numbers");
  }
  Vector v;
  v.reserve(expected);
  for (const auto& x : j) {
    if (!x.is_number()) throw ValidationError(where + ": non-numeric coordinate");
    v.push_back(x.get<double>());
  }
  return v;
}

}  // namespace

json norm_to_json(const NormSpec& spec) {
  json j{{"kind", std::string(to_string(spec.kind()))}};
  if (!spec.facets().empty()) j["facets"] = spec.facets();
  return j;
}

NormSpec norm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ValidationError("norm must be an object with a string 'kind'");
  }
  const NormKind kind = parse_norm_kind(j.at("kind").get<std::string>());
  switch (kind) {
    case NormKind::L1: return NormSpec::l1();
    case NormKind::L2: return NormSpec::l2();
    case NormKind::Linf: return NormSpec::linf();
    case NormKind::SymPolytope:
    case NormKind::Seminorm: break;
  }
  if (!j.contains("facets") || !j.at("facets").is_array() || j.at("facets").empty()) {
    throw ValidationError("polytope norms need a non-empty 'facets' array");
  }
  const auto& fj = j.at("facets");
  const std::size_t d = fj.front().is_array() ? fj.front().size() : 0;
  std::vector<Vector> facets;
  for (std::size_t f = 0; f < fj.size(); ++f) {
    facets.push_back(number_array(fj[f], d, "facet " + std::to_string(f)));
  }
  return kind == NormKind::Seminorm ? NormSpec::seminorm(std::move(facets))
                                    : NormSpec::sym_polytope(std::move(facets));
}

json instance_to_json(const Instance& inst) {
  const auto& a = inst.matrix;
  json entries = json::array();
  for (std::size_t j = 0; j < a.rows(); ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < a.cols(); ++i) row.push_back(a.entry(j, i));
    entries.push_back(std::move(row));
  }
  return json{{"d", a.dim()},
              {"k", a.rows()},
              {"n", a.cols()},
              {"norm", norm_to_json(inst.norm)},
              {"entries", std::move(entries)}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  const std::size_t d = positive_size(j, "d");
  const std::size_t k = positive_size(j, "k");
  const std::size_t n = positive_size(j, "n");
  if (!j.contains("norm")) throw ValidationError("instance lacks 'norm'");
  NormSpec norm = norm_from_json(j.at("norm"));
  if (auto nd = norm.dim(); nd && *nd != d) {
    throw ValidationError("norm facets have dimension " + std::to_string(*nd) +
                          ", instance has d = " + std::to_string(d));
  }
  if (!j.contains("entries") || !j.at("entries").is_array() || j.at("entries").size() != k) {
    throw ValidationError("'entries' must hold k rows");
  }
  VectorMatrix a(d, k, n);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& row = j.at("entries")[r];
    if (!row.is_array() || row.size() != n) {
      throw ValidationError("row " + std::to_string(r) + " must hold n entries");
    }
    for (std::size_t i = 0; i < n; ++i) {
      a.set(r, i, number_array(row[i], d,
                               "entry (" + std::to_string(r) + "," + std::to_string(i) + ")"));
    }
  }
  return {std::move(a), std::move(norm)};
}

std::string instance_digest(const Instance& inst) {
  const std::string canonical = instance_to_json(inst).dump();
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(canonical.data()), canonical.size(), md);
  std::string out = "sha256:";
  for (unsigned char byte : md) out += fmt::format("{:02x}", byte);
  return out;
}

json report_to_json(const RearrangementReport& report, const Instance& inst) {
  json passes = json::array();
  for (const auto& p : report.per_pass) {
    passes.push_back({{"input_max_prefix", p.input_max_prefix},
                      {"achieved_v", p.achieved_v},
                      {"output_max_prefix", p.output_max_prefix}});
  }
  return json{{"instance_digest", instance_digest(inst)},
              {"d", inst.matrix.dim()},
              {"k", inst.matrix.rows()},
              {"n", inst.matrix.cols()},
              {"method", std::string(to_string(report.method))},
              {"selected", std::string(to_string(report.selected))},
              {"iterations", report.iterations},
              {"per_pass", std::move(passes)},
              {"initial_max_prefix", report.initial_max_prefix},
              {"final_max_prefix", report.final_max_prefix},
              {"bound_used", report.bound_used},
              {"target_slack", report.target_slack},
              {"permutations", report.permutations.perms()}};
}

RearrangementReport report_from_json(const json& j) {
  try {
    RearrangementReport r;
    r.method = parse_method(j.at("method").get<std::string>());
    r.selected = parse_method(j.at("selected").get<std::string>());
    r.iterations = j.at("iterations").get<std::size_t>();
    for (const auto& p : j.at("per_pass")) {
      r.per_pass.push_back({p.at("input_max_prefix").get<double>(),
                            p.at("achieved_v").get<double>(),
                            p.at("output_max_prefix").get<double>()});
    }
    r.initial_max_prefix = j.at("initial_max_prefix").get<double>();
    r.final_max_prefix = j.at("final_max_prefix").get<double>();
    r.bound_used = j.at("bound_used").get<double>();
    r.target_slack = j.at("target_slack").get<double>();
    r.permutations = RowPermutations(
        j.at("permutations").get<std::vector<std::vector<std::size_t>>>());
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

std::string format_double(double x) { return fmt::format("{}", x); }

std::string prefix_trace_csv(const VectorMatrix& c, const NormSpec& spec) {
  std::string out = "m,prefix_norm\n";
  const auto sums = prefix_column_sums(c);
  for (std::size_t m = 1; m < sums.size(); ++m) {
    out += fmt::format("{},{}\n", m, spec.eval(sums[m]));
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
  if (!out) throw ValidationError("failed writing " + path.string());
}

json read_json(const std::filesystem::path& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace msteinitz::io
