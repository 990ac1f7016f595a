#include "cactus/io.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace cactus {

Json perm_to_json(const Permutation& p) { return Json(p.images()); }

Permutation perm_from_json(const Json& j) {
  return Permutation(j.get<std::vector<int>>());
}

Json setpart_to_json(const SetPartition& sp) { return Json(sp.blocks()); }

SetPartition setpart_from_json(const Json& j, int n) {
  return SetPartition(n, j.get<std::vector<std::vector<int>>>());
}

Json factorization_to_json(const Factorization& f) {
  Json j;
  j["n"] = f.n;
  j["r"] = f.r();
  Json alphas = Json::array();
  for (const Permutation& a : f.alphas) alphas.push_back(perm_to_json(a));
  j["alphas"] = alphas;
  return j;
}

Factorization factorization_from_json(const Json& j) {
  Factorization f;
  f.n = j.at("n").get<int>();
  for (const Json& a : j.at("alphas")) f.alphas.push_back(perm_from_json(a));
  if (j.contains("r") && j.at("r").get<int>() != f.r())
    throw std::invalid_argument("factorization: r does not match alphas");
  for (const Permutation& a : f.alphas)
    if (a.size() != f.n) throw std::invalid_argument("factorization: permutation size != n");
  return f;
}

Json pc_to_json(const PartitionedCactus& pc) {
  Json j = factorization_to_json(pc.cactus);
  Json parts = Json::array();
  for (const SetPartition& sp : pc.partitions) parts.push_back(setpart_to_json(sp));
  j["partitions"] = parts;
  return j;
}

PartitionedCactus pc_from_json(const Json& j) {
  PartitionedCactus pc;
  pc.cactus = factorization_from_json(j);
  for (const Json& sp : j.at("partitions"))
    pc.partitions.push_back(setpart_from_json(sp, pc.cactus.n));
  if (static_cast<int>(pc.partitions.size()) != pc.cactus.r())
    throw std::invalid_argument("partitioned cactus: expected one partition per factor");
  return pc;
}

Json tree_to_json(const CactusTree& t) {
  Json j;
  j["r"] = t.r;
  j["root"] = t.root;
  Json vs = Json::array();
  for (size_t i = 0; i < t.vertices.size(); ++i) {
    Json v;
    v["id"] = i;
    v["color"] = t.vertices[i].color;
    v["children"] = t.vertices[i].children;
    vs.push_back(v);
  }
  j["vertices"] = vs;
  Json ps = Json::array();
  for (size_t i = 0; i < t.polygons.size(); ++i) {
    Json p;
    p["id"] = i;
    p["arity"] = t.polygons[i].arity;
    p["attach"] = t.polygons[i].attach;
    p["descendants"] = t.polygons[i].descendants;
    p["symbol"] = t.polygons[i].symbol;
    ps.push_back(p);
  }
  j["polygons"] = ps;
  return j;
}

CactusTree tree_from_json(const Json& j) {
  CactusTree t;
  t.r = j.at("r").get<int>();
  std::map<long long, int> vid, pid;  // stored id -> dense index
  for (const Json& v : j.at("vertices")) {
    long long id = v.at("id").get<long long>();
    if (!vid.emplace(id, static_cast<int>(t.vertices.size())).second)
      throw TreeError("tree json: duplicate vertex id");
    TreeVertex tv;
    tv.color = v.at("color").get<int>();
    t.vertices.push_back(tv);
  }
  for (const Json& p : j.at("polygons")) {
    long long id = p.at("id").get<long long>();
    if (!pid.emplace(id, static_cast<int>(t.polygons.size())).second)
      throw TreeError("tree json: duplicate polygon id");
    t.polygons.push_back({});
  }
  auto vref = [&](long long id) {
    auto it = vid.find(id);
    if (it == vid.end()) throw TreeError("tree json: dangling vertex id " + std::to_string(id));
    return it->second;
  };
  auto pref = [&](long long id) {
    auto it = pid.find(id);
    if (it == pid.end()) throw TreeError("tree json: dangling polygon id " + std::to_string(id));
    return it->second;
  };
  {
    size_t i = 0;
    for (const Json& v : j.at("vertices")) {
      for (const Json& c : v.at("children"))
        t.vertices[i].children.push_back(pref(c.get<long long>()));
      ++i;
    }
    i = 0;
    for (const Json& p : j.at("polygons")) {
      TreePolygon& tp = t.polygons[i++];
      tp.arity = p.at("arity").get<int>();
      tp.attach = vref(p.at("attach").get<long long>());
      for (const Json& d : p.at("descendants")) tp.descendants.push_back(vref(d.get<long long>()));
      tp.symbol = p.at("symbol").get<int>();
    }
  }
  t.root = vref(j.at("root").get<long long>());
  return t;
}

Json avector_to_json(const AVector& a) {
  Json j = Json::object();
  for (auto& [mask, cnt] : a.counts) j[subset_label(mask, a.r)] = cnt;
  return j;
}

AVector avector_from_json(const Json& j, int r) {
  AVector a;
  a.r = r;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int cnt = it.value().get<int>();
    if (cnt < 0) throw std::invalid_argument("avector: negative count");
    if (cnt > 0) a.counts[subset_from_label(it.key(), r)] += cnt;
  }
  return a;
}

void write_jsonl(std::ostream& os, const std::vector<Factorization>& records) {
  for (const Factorization& f : records) os << factorization_to_json(f).dump() << '\n';
}

std::vector<Factorization> read_jsonl(std::istream& is) {
  std::vector<Factorization> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(factorization_from_json(Json::parse(line)));
  }
  return out;
}

std::string count_table_to_csv(const CountTable& t, const std::string& key_name) {
  std::ostringstream os;
  if (t.empty()) return "";
  const size_t r = t.begin()->first.size();
  for (size_t i = 1; i <= r; ++i) os << key_name << "_" << i << ",";
  os << "value\n";
  for (auto& [k, v] : t) {
    for (int ki : k) os << ki << ",";
    os << v << "\n";
  }
  return os.str();
}

Json count_table_to_json(const CountTable& t, const std::string& key_name) {
  Json rows = Json::array();
  for (auto& [k, v] : t) {
    Json row;
    row[key_name] = k;
    row["value"] = v.str();
    rows.push_back(row);
  }
  return rows;
}

std::string type_table_to_csv(const TypeTable& t) {
  std::ostringstream os;
  if (t.empty()) return "";
  const size_t r = t.begin()->first.size();
  for (size_t i = 1; i <= r; ++i) os << "lambda_" << i << ",";
  os << "value\n";
  for (auto& [k, v] : t) {
    for (auto& parts : k) {
      for (size_t i = 0; i < parts.size(); ++i) os << (i ? "." : "") << parts[i];
      os << ",";
    }
    os << v << "\n";
  }
  return os.str();
}

Json type_table_to_json(const TypeTable& t) {
  Json rows = Json::array();
  for (auto& [k, v] : t) {
    Json row;
    row["lambda"] = k;
    row["value"] = v.str();
    rows.push_back(row);
  }
  return rows;
}

Json theorem2_report_to_json(const Theorem2Report& rep) {
  Json j;
  j["status"] = rep.ok ? "pass" : "fail";
  if (rep.ok) {
    j["first_mismatch"] = nullptr;
  } else {
    Json m;
    m["monomial"] = rep.witness;
    m["lhs"] = rep.lhs.str();
    m["rhs"] = rep.rhs.str();
    j["first_mismatch"] = m;
  }
  return j;
}

std::string tree_to_dot(const CactusTree& t) {
  std::ostringstream os;
  os << "digraph cactus_tree {\n  rankdir=TB;\n";
  for (size_t i = 0; i < t.vertices.size(); ++i)
    os << "  v" << i << " [shape=circle,label=\"c" << t.vertices[i].color
       << (static_cast<int>(i) == t.root ? "*" : "") << "\"];\n";
  for (size_t i = 0; i < t.polygons.size(); ++i)
    os << "  p" << i << " [shape=box,label=\"" << t.polygons[i].arity << "-gon s"
       << t.polygons[i].symbol << "\"];\n";
  for (size_t i = 0; i < t.vertices.size(); ++i)
    for (int pid : t.vertices[i].children) os << "  v" << i << " -> p" << pid << ";\n";
  for (size_t i = 0; i < t.polygons.size(); ++i)
    for (int d : t.polygons[i].descendants) os << "  p" << i << " -> v" << d << ";\n";
  os << "}\n";
  return os.str();
}

std::string cactus_to_dot(const Factorization& f) {
  std::ostringstream os;
  os << "graph cactus {\n";
  const int r = f.r();
  for (int i = 1; i <= r; ++i) {
    const auto cyc = f.alphas[i - 1].cycles();
    for (size_t k = 0; k < cyc.size(); ++k) {
      os << "  c" << i << "_" << k << " [shape=circle,label=\"a" << i << ":(";
      for (size_t x = 0; x < cyc[k].size(); ++x) os << (x ? " " : "") << cyc[k][x];
      os << ")\"];\n";
    }
  }
  for (int g = 1; g <= f.n; ++g) {
    os << "  g" << g << " [shape=box,label=\"" << g << "\"];\n";
    for (int i = 1; i <= r; ++i) {
      const auto cyc = f.alphas[i - 1].cycles();
      for (size_t k = 0; k < cyc.size(); ++k)
        if (std::find(cyc[k].begin(), cyc[k].end(), g) != cyc[k].end())
          os << "  g" << g << " -- c" << i << "_" << k << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cactus
