#include "ddg/descriptor.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ddg/error.hpp"

namespace ddg {

using nlohmann::json;

const char* to_string(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::Construction1: return "construction1";
    case DescriptorKind::PartialComplement: return "partial_complement";
    case DescriptorKind::Symplectic: return "symplectic";
    case DescriptorKind::Sporadic28: return "sporadic28";
  }
  return "?";
}

namespace {

template <typename E>
using Names = std::vector<std::pair<E, const char*>>;

const Names<DescriptorKind> kKinds = {{DescriptorKind::Construction1, "construction1"},
                                      {DescriptorKind::PartialComplement, "partial_complement"},
                                      {DescriptorKind::Symplectic, "symplectic"},
                                      {DescriptorKind::Sporadic28, "sporadic28"}};
const Names<DesignSource::Kind> kDesignKinds = {
    {DesignSource::Kind::Ag, "ag"}, {DesignSource::Kind::Hadamard, "hadamard"}, {DesignSource::Kind::File, "file"}};
const Names<HadamardMethod> kMethods = {{HadamardMethod::Sylvester, "sylvester"}, {HadamardMethod::Paley, "paley"}};
const Names<SymmetricSource::Kind> kSymKinds = {{SymmetricSource::Kind::Fano, "fano"},
                                                {SymmetricSource::Kind::AllOnes, "all_ones"},
                                                {SymmetricSource::Kind::JMinusI, "j_minus_i"},
                                                {SymmetricSource::Kind::NullPolarity, "null_polarity"},
                                                {SymmetricSource::Kind::DifferenceSet, "difference_set"},
                                                {SymmetricSource::Kind::File, "file"}};
const Names<DescriptorLabeling> kLabelings = {{DescriptorLabeling::Canonical, "canonical"},
                                              {DescriptorLabeling::Seeded, "seeded"},
                                              {DescriptorLabeling::Explicit, "explicit"},
                                              {DescriptorLabeling::Symmetric, "symmetric"},
                                              {DescriptorLabeling::Polarity, "polarity"}};
const Names<SigmaStrategy> kSigmas = {{SigmaStrategy::Identity, "identity"}, {SigmaStrategy::Seeded, "seeded"}};
const Names<RingKind> kRings = {{RingKind::IntegersModPSquared, "integers_mod_p_squared"},
                                {RingKind::PolynomialsModXSquared, "polynomials_mod_x_squared"}};
const Names<SymplecticVariant> kGraphs = {{SymplecticVariant::X, "X"}, {SymplecticVariant::Y, "Y"}};

template <typename E>
const char* name_of(const Names<E>& names, E value) {
  for (const auto& [v, n] : names) {
    if (v == value) return n;
  }
  throw Error("value has no descriptor spelling");
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error("descriptor " + (path.empty() ? std::string("/") : path) + ": " + message);
}

// Typed access to one JSON object with a fixed key vocabulary.
class Node {
 public:
  Node(const json& j, std::string path, std::set<std::string> allowed) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
    for (const auto& item : j_.items()) {
      if (!allowed.count(item.key())) fail(path_ + "/" + item.key(), "unknown key");
    }
  }

  const std::string& path() const { return path_; }
  bool has(const std::string& key) const { return j_.contains(key); }
  std::string at(const std::string& key) const { return path_ + "/" + key; }

  const json& get(const std::string& key) const {
    if (!j_.contains(key)) fail(at(key), "missing required key");
    return j_.at(key);
  }

  std::string str(const std::string& key) const {
    const auto& v = get(key);
    if (!v.is_string()) fail(at(key), "expected a string");
    return v.get<std::string>();
  }

  std::int64_t integer(const std::string& key, std::int64_t lo, std::int64_t hi) const {
    const auto& v = get(key);
    if (!v.is_number_integer()) fail(at(key), "expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      fail(at(key), "integer out of range");
    }
    const auto x = v.get<std::int64_t>();
    if (x < lo || x > hi) {
      fail(at(key), "expected a value in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(x));
    }
    return x;
  }

  std::uint64_t seed(const std::string& key) const {
    if (!has(key)) return 0;
    const auto& v = get(key);
    if (!v.is_number_unsigned()) fail(at(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  template <typename E>
  E choice(const std::string& key, const Names<E>& names) const {
    const auto s = str(key);
    std::string options;
    for (const auto& [v, n] : names) {
      if (s == n) return v;
      options += (options.empty() ? "" : ", ") + std::string(n);
    }
    fail(at(key), "unknown value \"" + s + "\" (expected one of " + options + ")");
  }

  std::vector<int> int_list(const std::string& key) const {
    const auto& v = get(key);
    if (!v.is_array()) fail(at(key), "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer()) fail(at(key) + "/" + std::to_string(i), "expected an integer");
      const auto x = v[i].get<std::int64_t>();
      if (x < INT32_MIN || x > INT32_MAX) fail(at(key) + "/" + std::to_string(i), "integer out of range");
      out.push_back(static_cast<int>(x));
    }
    return out;
  }

 private:
  const json& j_;
  std::string path_;
};

DesignSource parse_design(const json& j, const std::string& path) {
  DesignSource d;
  const Node probe(j, path, {"source", "q", "d", "order", "method", "path"});
  d.kind = probe.choice("source", kDesignKinds);
  switch (d.kind) {
    case DesignSource::Kind::Ag: {
      const Node n(j, path, {"source", "q", "d"});
      d.q = n.integer("q", 2, 1 << 16);
      d.d = static_cast<int>(n.integer("d", 2, 64));
      break;
    }
    case DesignSource::Kind::Hadamard: {
      const Node n(j, path, {"source", "order", "method"});
      d.order = static_cast<int>(n.integer("order", 8, 1 << 12));
      d.method = n.choice("method", kMethods);
      break;
    }
    case DesignSource::Kind::File: {
      const Node n(j, path, {"source", "path"});
      d.path = n.str("path");
      break;
    }
  }
  return d;
}

json emit_design(const DesignSource& d) {
  json j;
  j["source"] = name_of(kDesignKinds, d.kind);
  switch (d.kind) {
    case DesignSource::Kind::Ag:
      j["q"] = d.q;
      j["d"] = d.d;
      break;
    case DesignSource::Kind::Hadamard:
      j["order"] = d.order;
      j["method"] = name_of(kMethods, d.method);
      break;
    case DesignSource::Kind::File: j["path"] = d.path; break;
  }
  return j;
}

SymmetricSource parse_symmetric(const json& j, const std::string& path) {
  SymmetricSource s;
  const Node probe(j, path, {"source", "m", "e", "q", "set", "path"});
  s.kind = probe.choice("source", kSymKinds);
  switch (s.kind) {
    case SymmetricSource::Kind::Fano: Node(j, path, {"source"}); break;
    case SymmetricSource::Kind::AllOnes:
    case SymmetricSource::Kind::JMinusI: {
      const Node n(j, path, {"source", "m"});
      s.m = static_cast<int>(n.integer("m", 1, 1 << 16));
      break;
    }
    case SymmetricSource::Kind::NullPolarity: {
      const Node n(j, path, {"source", "e", "q"});
      s.e = static_cast<int>(n.integer("e", 1, 64));
      s.q = n.integer("q", 2, 1 << 16);
      break;
    }
    case SymmetricSource::Kind::DifferenceSet: {
      const Node n(j, path, {"source", "m", "set"});
      s.m = static_cast<int>(n.integer("m", 1, 1 << 16));
      s.set = n.int_list("set");
      break;
    }
    case SymmetricSource::Kind::File: {
      const Node n(j, path, {"source", "path"});
      s.path = n.str("path");
      break;
    }
  }
  return s;
}

json emit_symmetric(const SymmetricSource& s) {
  json j;
  j["source"] = name_of(kSymKinds, s.kind);
  switch (s.kind) {
    case SymmetricSource::Kind::Fano: break;
    case SymmetricSource::Kind::AllOnes:
    case SymmetricSource::Kind::JMinusI: j["m"] = s.m; break;
    case SymmetricSource::Kind::NullPolarity:
      j["e"] = s.e;
      j["q"] = s.q;
      break;
    case SymmetricSource::Kind::DifferenceSet:
      j["m"] = s.m;
      j["set"] = s.set;
      break;
    case SymmetricSource::Kind::File: j["path"] = s.path; break;
  }
  return j;
}

// Parser callback state: rejects a key repeated within one object, naming it
// and its location.
class DuplicateKeyGuard {
 public:
  bool operator()(int depth, json::parse_event_t event, json& parsed) {
    (void)depth;
    switch (event) {
      case json::parse_event_t::object_start: frames_.push_back({false, 0, "", {}}); break;
      case json::parse_event_t::array_start: frames_.push_back({true, 0, "", {}}); break;
      case json::parse_event_t::key: {
        auto& f = frames_.back();
        f.key = parsed.get<std::string>();
        if (!f.seen.insert(f.key).second) {
          fail(path(), "duplicate key \"" + f.key + "\"");
        }
        break;
      }
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        frames_.pop_back();
        element_done();
        break;
      case json::parse_event_t::value: element_done(); break;
    }
    return true;
  }

 private:
  struct Frame {
    bool array;
    int index;
    std::string key;
    std::set<std::string> seen;
  };

  void element_done() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }

  std::string path() const {
    std::string p;
    for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : f.key);
    return p;
  }

  std::vector<Frame> frames_;
};

json to_json(const ConstructionDescriptor& d) {
  json j;
  j["kind"] = to_string(d.kind);
  switch (d.kind) {
    case DescriptorKind::Construction1:
    case DescriptorKind::PartialComplement: {
      j["symmetric_design"] = emit_symmetric(d.symmetric);
      if (d.shared_design) {
        if (d.designs.size() != 1) throw Error("a shared design needs exactly one design source");
        j["designs"]["shared"] = emit_design(d.designs.front());
      } else {
        json list = json::array();
        for (const auto& s : d.designs) list.push_back(emit_design(s));
        j["designs"]["per_class"] = std::move(list);
      }
      j["labeling"]["strategy"] = name_of(kLabelings, d.labeling);
      j["labeling"]["seed"] = d.labeling_seed;
      if (d.labeling == DescriptorLabeling::Explicit) j["labeling"]["matrix"] = d.labels;
      j["sigma"]["strategy"] = name_of(kSigmas, d.sigma);
      j["sigma"]["seed"] = d.sigma_seed;
      break;
    }
    case DescriptorKind::Symplectic:
      j["ring"]["kind"] = name_of(kRings, d.ring);
      j["ring"]["q"] = d.q;
      j["ring"]["e"] = d.e;
      j["graph"] = name_of(kGraphs, d.graph);
      break;
    case DescriptorKind::Sporadic28: break;
  }
  return j;
}

}  // namespace

ConstructionDescriptor descriptor_parse(std::string_view text) {
  json root;
  DuplicateKeyGuard guard;
  try {
    root = json::parse(text.begin(), text.end(), std::ref(guard));
  } catch (const json::exception& e) {
    throw Error(std::string("descriptor is not valid JSON: ") + e.what());
  }
  ConstructionDescriptor d;
  const Node probe(root, "", {"kind", "symmetric_design", "designs", "labeling", "sigma", "ring", "graph"});
  d.kind = probe.choice("kind", kKinds);
  switch (d.kind) {
    case DescriptorKind::Construction1:
    case DescriptorKind::PartialComplement: {
      const Node top(root, "", {"kind", "symmetric_design", "designs", "labeling", "sigma"});
      d.symmetric = parse_symmetric(top.get("symmetric_design"), "/symmetric_design");
      const Node designs(top.get("designs"), "/designs", {"shared", "per_class"});
      if (designs.has("shared") == designs.has("per_class")) {
        fail("/designs", "expected exactly one of \"shared\" or \"per_class\"");
      }
      d.designs.clear();
      if (designs.has("shared")) {
        d.shared_design = true;
        d.designs.push_back(parse_design(designs.get("shared"), "/designs/shared"));
      } else {
        d.shared_design = false;
        const auto& list = designs.get("per_class");
        if (!list.is_array() || list.empty()) fail("/designs/per_class", "expected a non-empty array");
        for (std::size_t i = 0; i < list.size(); ++i) {
          d.designs.push_back(parse_design(list[i], "/designs/per_class/" + std::to_string(i)));
        }
      }
      if (top.has("labeling")) {
        const Node l(top.get("labeling"), "/labeling", {"strategy", "seed", "matrix"});
        d.labeling = l.choice("strategy", kLabelings);
        d.labeling_seed = l.seed("seed");
        if (d.labeling == DescriptorLabeling::Explicit) {
          const auto& rows = l.get("matrix");
          if (!rows.is_array()) fail(l.at("matrix"), "expected an array of rows");
          for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string row_path = l.at("matrix") + "/" + std::to_string(i);
            if (!rows[i].is_array()) fail(row_path, "expected an array");
            std::vector<int> row;
            for (std::size_t c = 0; c < rows[i].size(); ++c) {
              if (!rows[i][c].is_number_unsigned() || rows[i][c].get<std::uint64_t>() > 1u << 20) {
                fail(row_path + "/" + std::to_string(c), "expected a non-negative label");
              }
              row.push_back(rows[i][c].get<int>());
            }
            d.labels.push_back(std::move(row));
          }
        } else if (l.has("matrix")) {
          fail(l.at("matrix"), "only allowed with the explicit strategy");
        }
      }
      if (top.has("sigma")) {
        const Node s(top.get("sigma"), "/sigma", {"strategy", "seed"});
        d.sigma = s.choice("strategy", kSigmas);
        d.sigma_seed = s.seed("seed");
      }
      break;
    }
    case DescriptorKind::Symplectic: {
      const Node top(root, "", {"kind", "ring", "graph"});
      const Node ring(top.get("ring"), "/ring", {"kind", "q", "e"});
      d.ring = ring.choice("kind", kRings);
      d.q = ring.integer("q", 2, 1 << 8);
      d.e = static_cast<int>(ring.integer("e", 1, 16));
      d.graph = top.choice("graph", kGraphs);
      break;
    }
    case DescriptorKind::Sporadic28: Node(root, "", {"kind"}); break;
  }
  return d;
}

std::string descriptor_emit(const ConstructionDescriptor& d) { return to_json(d).dump(2) + "\n"; }

DesignCandidate read_design_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open design file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("design file " + path.string() + ": " + e.what());
  }
  const std::string where = "design file " + path.string();
  if (!j.is_object() || !j.contains("points") || !j.contains("blocks") || !j.contains("classes")) {
    throw Error(where + ": expected an object with points, blocks and classes");
  }
  for (const auto& item : j.items()) {
    if (item.key() != "points" && item.key() != "blocks" && item.key() != "classes") {
      throw Error(where + ": unknown key /" + item.key());
    }
  }
  DesignCandidate c;
  try {
    c.point_count = j.at("points").get<int>();
    c.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    c.classes = j.at("classes").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw Error(where + ": " + e.what());
  }
  return c;
}

BinaryMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file " + path.string());
  BinaryMatrix rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<int> row;
    for (char c : line) {
      if (c == '0' || c == '1') {
        row.push_back(c - '0');
      } else if (c != ' ' && c != '\t' && c != '\r' && c != ',') {
        throw Error("matrix file " + path.string() + " line " + std::to_string(line_no) + ": unexpected character '" +
                    std::string(1, c) + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::filesystem::path resolve(const std::string& p, const BuildOptions& options) {
  const std::filesystem::path path(p);
  return path.is_absolute() || options.base_dir.empty() ? path : options.base_dir / path;
}

SymmetricDesignMatrix build_symmetric(const SymmetricSource& s, const BuildOptions& options) {
  switch (s.kind) {
    case SymmetricSource::Kind::Fano: return symdesign_fano();
    case SymmetricSource::Kind::AllOnes: return symdesign_trivial(TrivialVariant::AllOnes, s.m);
    case SymmetricSource::Kind::JMinusI: return symdesign_trivial(TrivialVariant::AllOnesMinusIdentity, s.m);
    case SymmetricSource::Kind::NullPolarity: return symdesign_null_polarity(s.e, s.q, options.limits);
    case SymmetricSource::Kind::DifferenceSet: return symdesign_difference_set(s.m, s.set);
    case SymmetricSource::Kind::File: return SymmetricDesignMatrix(read_matrix_file(resolve(s.path, options)), s.path);
  }
  throw Error("unknown symmetric design source");
}

ResolvableDesign build_design(const DesignSource& s, const BuildOptions& options) {
  switch (s.kind) {
    case DesignSource::Kind::Ag: return affine_from_ag(s.q, s.d, options.limits);
    case DesignSource::Kind::Hadamard: return affine_from_hadamard(hadamard_matrix(s.order, s.method));
    case DesignSource::Kind::File:
      return ResolvableDesign::from_candidate(read_design_file(resolve(s.path, options)), s.path);
  }
  throw Error("unknown design source");
}

DdgInstance build_construction(const ConstructionDescriptor& d, const BuildOptions& options) {
  const auto a = build_symmetric(d.symmetric, options);
  if (d.designs.empty()) throw Error("descriptor has no design source");
  std::vector<ResolvableDesign> designs;
  if (d.shared_design) {
    designs.assign(static_cast<std::size_t>(a.m()), build_design(d.designs.front(), options));
  } else {
    if (static_cast<int>(d.designs.size()) != a.m()) {
      throw Error("per_class lists " + std::to_string(d.designs.size()) + " designs, the symmetric design has " +
                  std::to_string(a.m()) + " rows");
    }
    for (const auto& s : d.designs) designs.push_back(build_design(s, options));
  }

  std::optional<LabeledMatrix> labels;
  if (d.labeling == DescriptorLabeling::Polarity) {
    const auto& normals = designs.front().normals();
    for (const auto& design : designs) {
      if (design.normals().empty() || design.normals() != normals) {
        throw Error("polarity labeling needs one AG design shared by every class");
      }
    }
    labels.emplace(label_polarity(a, normals));
  } else {
    LabelRequest request;
    request.seed = d.labeling_seed;
    request.explicit_labels = d.labels;
    switch (d.labeling) {
      case DescriptorLabeling::Canonical: request.strategy = LabelStrategy::Canonical; break;
      case DescriptorLabeling::Seeded: request.strategy = LabelStrategy::Seeded; break;
      case DescriptorLabeling::Explicit: request.strategy = LabelStrategy::Explicit; break;
      case DescriptorLabeling::Symmetric: request.strategy = LabelStrategy::Symmetric; break;
      case DescriptorLabeling::Polarity: break;
    }
    labels.emplace(label_assign(a, request));
  }
  SigmaRequest sigma;
  sigma.strategy = d.sigma;
  sigma.seed = d.sigma_seed;
  auto out = construct1(*labels, designs, sigma_family_make(*labels, designs, sigma));
  if (d.kind == DescriptorKind::PartialComplement) out = partial_complement(out);
  return out;
}

DdgInstance build_symplectic(const ConstructionDescriptor& d, const BuildOptions& options) {
  const LocalRing ring(d.ring, d.q, options.limits);
  const SymplecticGraph s(d.graph, d.e, ring, options.limits);
  DdgInstance out;
  out.graph = s.graph();
  const auto discovery = partitions_discover(out.graph, options.limits);
  const auto proper = discovery.proper();
  const DiscoveredPartition* chosen = !proper.empty() ? proper.front()
                                      : discovery.partitions.empty() ? nullptr
                                                                     : &discovery.partitions.front();
  if (chosen) {
    out.partition = chosen->partition;
    out.params = chosen->params;
    out.source = ParamsSource::BruteForce;
  } else {
    out.partition = Partition(std::vector<int>(static_cast<std::size_t>(out.graph.order()), 0));
  }
  return out;
}

}  // namespace

DdgInstance descriptor_build(const ConstructionDescriptor& d, const BuildOptions& options) {
  DdgInstance out;
  switch (d.kind) {
    case DescriptorKind::Construction1:
    case DescriptorKind::PartialComplement: out = build_construction(d, options); break;
    case DescriptorKind::Symplectic: out = build_symplectic(d, options); break;
    case DescriptorKind::Sporadic28: out = sporadic28(); break;
  }
  out.provenance = to_json(d).dump();
  return out;
}

}  // namespace ddg
