#include "ddg/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <thread>

#include <json.hpp>

#include "ddg/error.hpp"
#include "ddg/graph6.hpp"
#include "ddg/verify.hpp"

namespace ddg {

using nlohmann::json;

std::string Fingerprint::str() const {
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(refinement_digest));
  std::string s = "v=" + std::to_string(v) + " k=" + std::to_string(k) + " pairs=";
  for (std::size_t i = 0; i < pair_histogram.size(); ++i) {
    const auto& [key, count] = pair_histogram[i];
    s += (i ? "," : "") + std::string(key.first ? "a" : "n") + std::to_string(key.second) + ":" + std::to_string(count);
  }
  return s + " digest=" + digest;
}

Fingerprint fingerprint(const Graph& g) {
  Fingerprint f;
  f.v = g.order();
  const PairCounts counts(g);
  if (f.v > 0) {
    f.k = counts(0, 0);
    for (int x = 1; x < f.v; ++x) {
      if (counts(x, x) != f.k) {
        f.k = -1;
        break;
      }
    }
  }
  std::map<std::pair<int, int>, std::int64_t> hist;
  for (int x = 0; x < f.v; ++x) {
    for (int y = x + 1; y < f.v; ++y) ++hist[{g.adjacent(x, y) ? 1 : 0, counts(x, y)}];
  }
  f.pair_histogram.assign(hist.begin(), hist.end());
  f.refinement_digest = refine_colours(g).digest;
  return f;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

struct Built {
  bool ok = false;
  std::string error;
  std::string canonical;
  DdgInstance instance;
  DdgReport verification;
  Fingerprint fingerprint;
  std::string graph6;
};

Built build_one(const std::string& text, const CatalogOptions& options) {
  Built b;
  try {
    const auto d = descriptor_parse(text);
    b.canonical = descriptor_emit(d);
    BuildOptions bo;
    bo.limits = options.limits;
    bo.base_dir = options.base_dir;
    b.instance = descriptor_build(d, bo);
    b.verification = ddg_verify(b.instance.graph, b.instance.partition);
    b.fingerprint = fingerprint(b.instance.graph);
    b.graph6 = graph6_encode(b.instance.graph);
    b.ok = true;
  } catch (const std::exception& e) {
    b.error = e.what();
  }
  return b;
}

std::string entry_name(int id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", id);
  return buf;
}

json params_json(const DdgParams& p) {
  return json{{"v", p.v}, {"k", p.k}, {"lambda1", p.lambda1}, {"lambda2", p.lambda2}, {"m", p.m}, {"n", p.n}};
}

std::string report_text(const Built& b, const CatalogEntry& e) {
  json r;
  r["descriptor"] = json::parse(b.canonical);
  r["partition"] = b.instance.partition.labels();
  r["verification"]["ok"] = b.verification.ok;
  r["verification"]["method"] = "brute_force";
  if (b.verification.ok) {
    r["verification"]["params"] = params_json(b.verification.params);
    r["verification"]["proper"] = b.verification.params.proper();
    const auto id = identity_check(b.verification.params);
    r["verification"]["counting_identity"] = id.str();
  } else {
    r["verification"]["failure"] = to_string(b.verification.failure);
    r["verification"]["message"] = b.verification.message;
  }
  if (b.instance.params) {
    r["declared"]["params"] = params_json(*b.instance.params);
    r["declared"]["source"] = to_string(b.instance.source);
    r["declared"]["matches"] = b.verification.ok && *b.instance.params == b.verification.params;
  }
  for (const auto& t : b.instance.theorem2) {
    r["theorem2"][to_string(t.variant)] = {{"params", params_json(t.params)}, {"counting_identity", t.identity.str()}};
  }
  r["fingerprint"] = e.fingerprint.str();
  r["sources"] = e.sources;
  r["possibly_isomorphic_to"] = e.possibly_isomorphic_to;
  return r.dump(2) + "\n";
}

}  // namespace

CatalogIndex run_catalog(const std::vector<std::string>& descriptors, const std::filesystem::path& out_dir,
                         const CatalogOptions& options) {
  std::filesystem::create_directories(out_dir);

  std::vector<Built> built(descriptors.size());
  {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(options.threads > 0 ? static_cast<unsigned>(options.threads) : hw,
                                                static_cast<unsigned>(std::max<std::size_t>(1, descriptors.size())));
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < descriptors.size();) built[i] = build_one(descriptors[i], options);
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
  }

  // Deduplication and numbering follow stream order, so the output does not
  // depend on scheduling.
  CatalogIndex index;
  std::vector<const Built*> kept;
  IsoOptions iso;
  iso.budget = options.iso_budget;
  iso.limits = options.limits;
  for (std::size_t i = 0; i < built.size(); ++i) {
    const auto& b = built[i];
    const int source = static_cast<int>(i);
    if (!b.ok) {
      index.failures.push_back({source, b.error});
      continue;
    }
    if (!b.verification.ok) {
      index.failures.push_back({source, "brute-force verification failed: " + b.verification.message});
      continue;
    }
    bool merged = false;
    std::vector<int> unresolved;
    for (std::size_t e = 0; e < kept.size() && !merged; ++e) {
      if (!(kept[e]->fingerprint == b.fingerprint)) continue;
      if (kept[e]->graph6 == b.graph6) {
        merged = true;
      } else {
        try {
          const auto r = iso_check(b.instance.graph, kept[e]->instance.graph, iso);
          if (r.status == IsoStatus::Isomorphic) {
            merged = true;
          } else if (r.status == IsoStatus::Unknown) {
            unresolved.push_back(index.entries[e].id);
          }
        } catch (const BoundError&) {
          unresolved.push_back(index.entries[e].id);
        }
      }
      if (merged) {
        index.entries[e].sources.push_back(source);
        ++index.merged;
      }
    }
    if (merged) continue;
    CatalogEntry entry;
    entry.id = static_cast<int>(index.entries.size());
    entry.descriptor = b.canonical;
    entry.sources = {source};
    entry.params = b.verification.params;
    entry.fingerprint = b.fingerprint;
    entry.graph_file = entry_name(entry.id) + ".g6";
    entry.report_file = entry_name(entry.id) + ".report";
    entry.possibly_isomorphic_to = unresolved;
    for (int other : unresolved) index.entries[static_cast<std::size_t>(other)].possibly_isomorphic_to.push_back(entry.id);
    index.entries.push_back(std::move(entry));
    kept.push_back(&b);
  }

  for (std::size_t e = 0; e < index.entries.size(); ++e) {
    const auto& entry = index.entries[e];
    write_file_atomic(out_dir / entry.graph_file, kept[e]->graph6 + "\n");
    write_file_atomic(out_dir / entry.report_file, report_text(*kept[e], entry));
  }

  json idx;
  idx["entries"] = json::array();
  idx["by_params"] = json::object();
  for (const auto& entry : index.entries) {
    json e;
    e["id"] = entry_name(entry.id);
    e["graph"] = entry.graph_file;
    e["report"] = entry.report_file;
    e["params"] = entry.params ? entry.params->str() : "";
    e["fingerprint"] = entry.fingerprint.str();
    e["sources"] = entry.sources;
    if (!entry.possibly_isomorphic_to.empty()) {
      json others = json::array();
      for (int o : entry.possibly_isomorphic_to) others.push_back(entry_name(o));
      e["possibly_isomorphic"] = others;
    }
    idx["entries"].push_back(e);
    idx["by_params"][e["params"].get<std::string>()].push_back(entry_name(entry.id));
  }
  idx["failures"] = json::array();
  for (const auto& f : index.failures) idx["failures"].push_back({{"source", f.source}, {"message", f.message}});
  idx["merged"] = index.merged;
  write_file_atomic(out_dir / "index", idx.dump(2) + "\n");
  return index;
}

}  // namespace ddg
